"""
Schur-type sums on skew shapes
==============================

Skew shapes, diagonally constant weights, semi-standard fillings and the
Schur flat sums.  Also shows why the first flat layer carries no q-power.
"""

from qmsw.combinat import DiagIndex, SkewShape, enumerate_ssyt
from qmsw.connect import transport_check_schur
from qmsw.sums import Reading, schur_bz, schur_qflat

corner = SkewShape([(1, 2), (2, 1), (2, 2)])
print(corner.picture())
print("diagonals:", corner.diagonals())
print("fillings below 3:", list(enumerate_ssyt(corner, 3)))

K = DiagIndex(corner, {-1: 1, 0: 2, 1: 1})
for N in range(2, 6):
    assert schur_bz(K, N) == schur_qflat(K, N)
print("schur_bz = schur_qflat on the weighted corner for N = 2..5")

# One column is the linear sum, one row is the star sum.
print(schur_bz(DiagIndex.column((1, 2)), 4), "|", schur_bz(DiagIndex.row((1, 2)), 4))

# The numerator reading matters as soon as a diagonal has two cells.
square = DiagIndex.constant(SkewShape.skew((2, 2)), 1)
for reading in Reading:
    chain = transport_check_schur(square, 3, reading)
    constant = all(eq for _, _, eq in chain)
    print(f"{reading.value:>13}: flat value {schur_qflat(square, 3, reading)}, chain constant: {constant}")
