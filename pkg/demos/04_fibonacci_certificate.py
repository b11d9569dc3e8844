"""A finite computation showing sum_n n! f_n is not 1 (Fibonacci weights).

The recurrence f_n = f_{n-1} + f_{n-2} reduces the series to the linear
form 5a - b sqrt(5) F(phi) + b sqrt(5) F(psi) over Q(sqrt(5)).  At the
inert place over 2 the truncated form has 2-adic valuation exactly 1 while
every discarded term provably has valuation >= 4: no tail can rescue a
vanishing total, so the series differs from a/b = 1.
"""

import json

from eulerpade import (
    certify_nonvanishing,
    certificate_from_json,
    fibonacci_linear_form,
    recurrence_to_linear_form,
    verify_certificate,
)

def pretty(e):
    if e.y == 0:
        return str(e.x)
    return f"{e.x} + {e.y}*sqrt(5)" if e.x else f"{e.y}*sqrt(5)"


print("== reducing the recurrence ==")
alphas, weights, d = recurrence_to_linear_form((1, 1), (0, 1))
print(f"characteristic roots: {pretty(alphas[0])} and {pretty(alphas[1])}  (phi, psi)")
print(f"weights b_i with d = {d}: {[pretty(b) for b in weights]}")
print(f"so {d} * sum n! f_n = ({pretty(weights[0])}) F(phi) + ({pretty(weights[1])}) F(psi)")

print("\n== the linear form for target value 1 ==")
K, lambdas, points = fibonacci_linear_form(1, 1)
print(f"field: {K}")
print(f"lambda = {[str(c) for c in lambdas]} at alpha = {[str(a) for a in points]}")

print("\n== scanning primes up to 50 ==")
cert = certify_nonvanishing(K, lambdas, points, 2, 50)
print(f"status: {cert.status}")
print(f"place: {cert.place} at precision 2^{cert.precision}")
print(f"partial valuation {cert.partial_valuation} < tail bound {cert.tail_valuation_bound}")

print("\n== the certificate is a self-contained JSON record ==")
payload = json.dumps(cert.to_json(), indent=2)
print(payload)
reloaded = certificate_from_json(json.loads(payload))
print(f"independent re-verification at higher precision: {verify_certificate(reloaded)}")

print("\nBy-hand check: f_0..f_3 = 0,1,1,2 give sum_(n<=3) n! f_n = 15, and")
print("5(1 - 15) = -70 = -2 * 5 * 7 has 2-adic valuation exactly 1, while")
print("v_2(n!) >= 4 for n >= 6: the remaining terms cannot reach that low.")
