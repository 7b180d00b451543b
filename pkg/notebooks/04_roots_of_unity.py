"""
Values at roots of unity
========================

At a primitive N-th root of unity each block head 1/[N - n] turns into
-zeta^n/[n], which gives a direct formula for the common value.
"""

from qmsw.combinat import indices_up_to
from qmsw.exactq import to_cyclo
from qmsw.roots import DualityInstance, bz_at_root, galois_check, hessami_rhs, reflection_suite, verify_duality
from qmsw.sums import zeta_bz

print("zeta_bz((1), 3) at zeta_3:", bz_at_root((1,), 3))
print("direct right-hand side:  ", hessami_rhs((1,), 3))

checked = 0
for k in indices_up_to(3):
    for N in range(2, 8):
        assert verify_duality(DualityInstance(k, N))
        checked += 1
print(f"three-way equality on {checked} instances")

assert all(ok for _, _, ok in reflection_suite(10))
assert galois_check((2, 1), 7, 3)
print("reflection and Galois checks pass")

# Past the level the sum has a pole: [3] vanishes at a cube root of unity.
try:
    to_cyclo(zeta_bz((1,), 4), 3)
except ArithmeticError as exc:
    print("pole:", exc)
