"""Evaluating Euler's factorial series p-adically with certified tails.

The series sum n! t^n diverges over the reals but converges at every
finite place once t is an algebraic integer: v_p(n!) grows without bound.
Each evaluation below returns a residue mod p^N together with an exact
lower bound on the valuation of everything that was cut off.
"""

from fractions import Fraction

from eulerpade import (
    QuadraticField,
    euler_eval_certified,
    genfact_eval,
    hensel_sqrt,
    places_above,
)

Q = QuadraticField()
K5 = QuadraticField(5)
phi = K5(Fraction(1, 2), Fraction(1, 2))

print("== F(1) = sum n! at small primes ==")
for p in (2, 3, 5, 7):
    (v,) = places_above(Q, p)
    cv = euler_eval_certified(v, 1, 4)
    print(f"p = {p}: residue {cv.value.a} mod {p}^4, "
          f"tail valuation >= {cv.tail_valuation_bound}, {cv.terms_used} terms")

print("\n== the same value is consistent across precisions (Cauchy) ==")
(v2,) = places_above(Q, 2)
for n in (4, 8, 16):
    cv = euler_eval_certified(v2, 1, n)
    print(f"N = {n:>2}: residue {cv.value.a} mod 2^{n}")

print("\n== F(phi) at the inert place of Q(sqrt(5)) over 2 ==")
(inert2,) = places_above(K5, 2)
cv = euler_eval_certified(inert2, phi, 5)
u, w = cv.value.sqrt_coordinates()
print(f"residue = {u} + {w} * sqrt(5) mod 2^5 "
      f"(half-integer coordinates are fine: the local ring is Z_2[phi])")
print(f"JSON form: {cv.to_json()}")

print("\n== split places embed sqrt(d) through its canonical p-adic root ==")
r = hensel_sqrt(5, 11, 4)
print(f"sqrt(5) in Z_11 to 4 digits: {r} (check: r^2 - 5 = {(r * r - 5) % 11**4} mod 11^4)")
v1, _ = places_above(K5, 11)
cv11 = euler_eval_certified(v1, phi, 3)
print(f"F(phi) at split_1 over 11: residue {cv11.value.a} mod 11^3")

print("\n== generalised factorial series: odd double factorials ==")
# P(x) = 1 + 2x gives [P]_n = 1 * 3 * 5 * ... = (2n-1)!!
(v3,) = places_above(Q, 3)
cv3 = genfact_eval(v3, 1, 2, 1, 4, 1000)
print(f"sum (2n-1)!! at p = 3: residue {cv3.value.a} mod 3^4, "
      f"tail >= {cv3.tail_valuation_bound}")
same = genfact_eval(v2, 1, 1, 1, 6, 1000)
direct = euler_eval_certified(v2, 1, 6)
print(f"P(x) = 1 + x reproduces Euler's series bit-exactly: "
      f"{same.value == direct.value}")
