"""Integer and rational helpers shared across the package.

Everything here is exact: primality, sieves, p-adic orders of integers
and fractions, and square roots modulo prime powers (the base step for
embedding quadratic irrationals into Z_p).
"""

from __future__ import annotations

from fractions import Fraction

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24, far past desk scale)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(n: int) -> list[int]:
    """All primes <= n by a byte sieve."""
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[0:2] = b"\x00\x00"
    p = 2
    while p * p <= n:
        if sieve[p]:
            start = p * p
            sieve[start ::p] = b"\x00" * ((n - start) // p + 1)
        p += 1
    return [i for i, flag in enumerate(sieve) if flag]


def prime_range(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi."""
    return [p for p in primes_upto(hi) if p >= lo]


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| by trial division (inputs are norm-sized)."""
    n = abs(n)
    out: dict[int, int] = {}
    if n <= 1:
        return out
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_part(n: int) -> int:
    """The squarefree s with n = s * f^2 (sign carried by s)."""
    if n == 0:
        return 0
    s = -1 if n < 0 else 1
    for p, e in factorize(n).items():
        if e % 2 == 1:
            s *= p
    return s


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for e in factorize(n).values())


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def padic_ord_int(n: int, p: int) -> int:
    """v_p(n) for a nonzero integer."""
    if n == 0:
        raise ValueError("v_p(0) is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_ord(q: Fraction | int, p: int) -> int:
    """v_p of a nonzero rational."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("v_p(0) is undefined")
    return padic_ord_int(q.numerator, p) - padic_ord_int(q.denominator, p)


def legendre_symbol(a: int, p: int) -> int:
    """(a|p) in {-1, 0, 1} for an odd prime p."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _tonelli_shanks(a: int, p: int) -> int:
    """A square root of a mod an odd prime p; requires (a|p) = 1."""
    a %= p
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p-1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre_symbol(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def canonical_sqrt_mod(d: int, p: int, n: int) -> int:
    """The canonical square root r of d mod p^n.

    For odd p the canonical root is the Hensel lift of min(r0, p - r0)
    where r0 is a root mod p; for p = 2 (requires d = 1 mod 8, n arbitrary)
    it is the root congruent to 1 mod 4.  The choice is compatible under
    reduction, so raising n refines the same p-adic root.
    """
    if n < 1:
        raise ValueError("precision must be >= 1")
    if p == 2:
        if d % 8 != 1:
            raise ValueError("d must be 1 mod 8 for a 2-adic square root")
        if n <= 2:
            return 1 % (1 << n)
        # lift one level past n and reduce: of the four roots mod 2^(n+1),
        # the two congruent to 1 mod 4 agree mod 2^n, so the reduction is
        # the unique 2-adic root r = 1 mod 4, consistent across precisions
        r, k = 1, 3
        while k <= n:
            if (r * r - d) % (1 << (k + 1)) != 0:
                r += 1 << (k - 1)
            k += 1
        return r % (1 << n)
    if d % p == 0 or legendre_symbol(d, p) != 1:
        raise ValueError("d is not an invertible square mod p")
    r0 = _tonelli_shanks(d, p)
    r = min(r0, p - r0)
    k = 1
    while k < n:
        k = min(2 * k, n)
        mod = p**k
        # Newton step: r <- r - (r^2 - d) / (2r)
        r = (r - (r * r - d) * pow(2 * r, -1, mod)) % mod
    return r
