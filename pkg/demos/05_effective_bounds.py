"""The effective side: growth constants, decay evidence, and the bound chain.

For heights log H >= s e^s the library evaluates the explicit margin
function N(l), finds its last nonnegative integer ell, and emits a prime
interval plus a lower-bound exponent, all in floating point but with the
bracket N(ell) >= 0 > N(ell+1) checked exactly as stated.
"""

import math

from eulerpade import (
    QuadraticField,
    ValuationSetDescriptor,
    constants_c1_c2,
    limsup_sequence,
    mertens_sum,
    monotone_decrease_onset,
    residue_condition,
    effective_bounds,
    z_inverse,
)

Q = QuadraticField()
V = ValuationSetDescriptor.all_places()

print("== growth constants of a point configuration ==")
c1, c2 = constants_c1_c2(Q, [1, -1], V)
print(f"alpha = (1, -1) over Q: c1 = {c1}, c2 = {c2}")

print("\n== decay evidence for the pigeonhole sequence (not a proof) ==")
values = limsup_sequence(Q, [1, -1], V, 24)
onset = monotone_decrease_onset(values)
for l in (1, 4, 8, 16, 24):
    print(f"  l = {l:>2}: log value {values[l - 1]:+9.3f}")
print(f"strictly decreasing from l = {onset}; factorials win in the end")

print("\n== the explicit bound chain at log H = 17 e^17 ==")
log_h = 17 * math.exp(17)
report = effective_bounds(1, 1, 2.0, log_h)
print(f"s = {report.s}, ell = {report.ell}")
print(f"N(ell) = {report.n_ell:.4f} >= 0 > N(ell+1) = {report.n_ell_plus_1:.4f}")
print(f"some prime in ]{report.interval_lo:.4f}, {report.interval_hi:.6g}[ carries a place where")
print(f"the linear form exceeds H^(-{report.exponent:.6f})")

print("\n== the inverse of z log z, squeezed by nested logarithms ==")
z, iterates = z_inverse(log_h)
print(f"z(log H) = {z:.6g} after {len(iterates)} iterates; "
      f"z log z / log H = {z * math.log(z) / log_h:.12f}")

print("\n== prime sums that control the factorial corrections ==")
for x in (10, 100, 10_000):
    total, ok = mertens_sum(x)
    print(f"  sum_(p<={x}) log p/(p-1) = {total:.4f}; Rosser check holds: {ok}")

print("\n== how many residue classes force non-vanishing ==")
for n, r, m in [(4, 2, 1), (3, 1, 1), (5, 3, 2), (8, 4, 3)]:
    ok, slope = residue_condition(n, r, m)
    verdict = "sufficient" if ok else "not sufficient"
    print(f"  r = {r} classes mod {n}, m = {m}: {verdict} (l log l slope {slope:+.3f})")
