"""Exact verification of q-analogues of the MSW formula and its Schur-type extension."""
