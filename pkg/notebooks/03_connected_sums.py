"""
Connected sums and transport chains
===================================

A connected sum glues a Bradley-Zhao part to a flat part through a connector.
Moving the cut one step at a time gives a chain of values from one boundary
sum to the other; the identity holds because every step preserves the value.
"""

from qmsw.combinat import DiagIndex, SkewShape
from qmsw.connect import (
    ConnectorKind,
    RegionVariant,
    connector,
    resolve_variant,
    transport_chain_linear,
    transport_chain_schur,
)

print("C(1, 2) with N = 3:", connector(ConnectorKind.SEC2, 1, 2, 3))

for label, value in transport_chain_linear((1, 2), 4):
    print(f"{label:>16} = {value}")

# Of the three candidate regions for the linear connected sum only one
# keeps every chain constant.
tally = resolve_variant([(1,), (2,), (1, 1), (1, 2), (2, 1), (1, 1, 1)], range(1, 6))
print({v.value: n for v, n in tally.items()})
assert tally[RegionVariant.SHIFTED] == 0

corner = DiagIndex.constant(SkewShape([(1, 2), (2, 1), (2, 2)]), 1)
for a, value in transport_chain_schur(corner, 4):
    print(f"Z(K; {a:>2}) = {value}")
