"""
Harmonic q-sums and their flat counterparts
===========================================

Walks through the linear sums: the Bradley-Zhao sum, the q-flat sum, the two
star sums, and their values at q = 1.  Run with ``python3 notebooks/01_harmonic_sums.py``.
"""

from qmsw.combinat import indices_up_to
from qmsw.exactq import specialize_q1
from qmsw.sums import SumKind, classical_oracle, zeta_bz, zeta_bz_star, zeta_qflat, zeta_qstar_flat

# Depth one: 1/[1] + 1/[2] on one side, 1/[2] + 1/[1] on the other.
print("zeta_bz((1), 3)    =", zeta_bz((1,), 3))
print("zeta_qflat((1), 3) =", zeta_qflat((1,), 3))

# A flat sum whose region has a single point (1, 2, 2).
print("zeta_qflat((1,2), 3) =", zeta_qflat((1, 2), 3))

# The star pair on the row (1, 2): different-looking sums, one value.
bz_star = zeta_bz_star((1, 2), 3)
flat_star = zeta_qstar_flat((1, 2), 3)
print("star sums:", bz_star, "|", flat_star, "| difference:", bz_star - flat_star)

# A small sweep: every composition of weight <= 4 and every N <= 6.
count = 0
for k in indices_up_to(4):
    for N in range(1, 7):
        assert zeta_bz(k, N) == zeta_qflat(k, N)
        count += 1
print(f"bz = qflat on {count} instances")

# At q = 1 the sums become ordinary harmonic sums.
k, N = (2,), 4
print("q = 1 value of zeta_bz((2), 4):", specialize_q1(zeta_bz(k, N)), "=", classical_oracle(SumKind.BZ, k, N))
