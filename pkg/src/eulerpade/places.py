"""Non-Archimedean places of Q and of quadratic fields, with exact valuations.

Valuations w_v are normalized so that w_v(p) = 1; at a ramified place the
uniformizer then has w_v = 1/2, so values live in (1/2)Z.  Absolute values
are only ever materialized in log-space: ||x||_v = p^(-coefficient) with an
exact rational coefficient w_v(x) * kappa_v / kappa, which keeps the
non-Archimedean side of the product formula exactly checkable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    canonical_sqrt_mod,
    factorize,
    is_prime,
    legendre_symbol,
    padic_ord,
    padic_ord_int,
)
from .errors import InvalidPrimeError, PrecisionCapError, ZeroElementError
from .numfield import FieldElement, QuadraticField, arch_abs_normalized

RATIONAL = "rational"
SPLIT_1 = "split_1"
SPLIT_2 = "split_2"
INERT = "inert"
RAMIFIED = "ramified"

#: precision cap (in p-adic digits) for deciding split-place valuations
SPLIT_VALUATION_CAP = 256


@dataclass(frozen=True)
class Place:
    """A non-Archimedean place v|p of Q(sqrt(d)) (or of Q itself)."""

    p: int
    splitting: str
    d: int | None

    @property
    def e(self) -> int:
        return 2 if self.splitting == RAMIFIED else 1

    @property
    def f(self) -> int:
        return 2 if self.splitting == INERT else 1

    @property
    def kappa_v(self) -> int:
        return self.e * self.f

    @property
    def kappa(self) -> int:
        return 1 if self.d is None else 2

    def hensel_root(self, n: int) -> int:
        """The split embedding of sqrt(d): the canonical root of d mod p^n.

        split_1 uses the canonical root, split_2 its negative.
        """
        if self.splitting not in (SPLIT_1, SPLIT_2):
            raise ValueError(f"{self.splitting} place has no split embedding")
        r = canonical_sqrt_mod(self.d, self.p, n)
        return r if self.splitting == SPLIT_1 else (self.p**n - r) % self.p**n

    def to_json(self) -> dict:
        return {"p": self.p, "splitting": self.splitting, "e": self.e, "f": self.f}

    def __str__(self) -> str:
        return f"{self.splitting}@{self.p}"


@dataclass(frozen=True)
class LogAbs:
    """log-space absolute value: the element has ||x||_v = p^(-coefficient)."""

    coefficient: Fraction

    def ln(self, p: int) -> float:
        return -float(self.coefficient) * math.log(p)


def places_above(K: QuadraticField, p: int) -> list[Place]:
    """All places of K above the prime p, in canonical order.

    For odd p the splitting is read off the Legendre symbol (d|p); for
    p = 2 the maximal-order convention applies: d = 1 mod 8 splits,
    d = 5 mod 8 is inert, anything else ramifies.
    """
    if not is_prime(p):
        raise InvalidPrimeError(f"{p} is not prime")
    if K.d is None:
        return [Place(p, RATIONAL, None)]
    d = K.d
    if p == 2:
        if d % 8 == 1:
            return [Place(2, SPLIT_1, d), Place(2, SPLIT_2, d)]
        if d % 8 == 5:
            return [Place(2, INERT, d)]
        return [Place(2, RAMIFIED, d)]
    if d % p == 0:
        return [Place(p, RAMIFIED, d)]
    if legendre_symbol(d, p) == 1:
        return [Place(p, SPLIT_1, d), Place(p, SPLIT_2, d)]
    return [Place(p, INERT, d)]


def _split_valuation(v: Place, a: FieldElement) -> Fraction:
    """w_v at a split place via the embedding sqrt(d) -> canonical root."""
    p = v.p
    # write a = (A + B*sqrt(d)) / c with integers A, B and c > 0
    c = math.lcm(a.x.denominator, a.y.denominator)
    A = int(a.x * c)
    B = int(a.y * c)
    shift = padic_ord_int(c, p)
    n = 8
    while True:
        r = v.hensel_root(n + shift)
        image = (A + B * r) % p ** (n + shift)
        if image != 0:
            return Fraction(padic_ord_int(image, p) - shift)
        if n >= SPLIT_VALUATION_CAP:
            raise PrecisionCapError(
                f"split valuation of {a} at {v} not settled within {SPLIT_VALUATION_CAP} digits"
            )
        n *= 2


def valuation(v: Place, a: FieldElement) -> Fraction:
    """Exact w_v(a), normalized so w_v(p) = 1."""
    if isinstance(a, (int, Fraction)):
        a = FieldElement(Fraction(a), Fraction(0), v.d)
    if not a:
        raise ZeroElementError("w_v(0) is undefined")
    if a.d != v.d:
        if a.y != 0:
            raise ValueError(f"element of Q(sqrt({a.d})) at a place of Q(sqrt({v.d}))")
        a = FieldElement(a.x, Fraction(0), v.d)
    if v.splitting == RATIONAL:
        return Fraction(padic_ord(a.x, v.p))
    if v.splitting in (SPLIT_1, SPLIT_2):
        return _split_valuation(v, a)
    # inert and ramified places: w_v(a) = v_p(norm(a)) / 2, with e = 2
    # making half-integers possible only in the ramified case
    return Fraction(padic_ord(a.norm(), v.p), 2)


def normalized_abs_log(v: Place, a: FieldElement) -> LogAbs:
    """||a||_v = p^(-coefficient) with coefficient = w_v(a) * kappa_v / kappa."""
    return LogAbs(valuation(v, a) * Fraction(v.kappa_v, v.kappa))


def factorial_valuation(p: int, n: int) -> int:
    """v_p(n!) by Legendre's formula sum_i floor(n / p^i)."""
    if not is_prime(p):
        raise InvalidPrimeError(f"{p} is not prime")
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def contributing_primes(K: QuadraticField, a: FieldElement) -> list[int]:
    """Primes p where some place above p can see a: p | num or den of norm(a)."""
    n = a.norm()
    ps = set(factorize(n.numerator)) | set(factorize(n.denominator))
    return sorted(ps)


def product_formula_defect(K: QuadraticField, a: FieldElement) -> float:
    """|sum_v ln||a||_v| over all places; exactly 0 in theory.

    Non-Archimedean contributions are exact rationals times ln p (only the
    primes dividing the norm's numerator or denominator contribute); the
    Archimedean contributions are floats, so the defect is float roundoff.
    """
    if not a:
        raise ZeroElementError("the product formula needs a nonzero element")
    total = 0.0
    for _, val in arch_abs_normalized(K, a):
        total += math.log(val)
    for p in contributing_primes(K, a):
        coeff = Fraction(0)
        for v in places_above(K, p):
            coeff += valuation(v, a) * Fraction(v.kappa_v, v.kappa)
        total -= float(coeff) * math.log(p)
    return abs(total)


def nonarch_log_coefficients(K: QuadraticField, a: FieldElement) -> dict[int, Fraction]:
    """Per-prime exact coefficients c_p with prod_{v|p} ||a||_v = p^(-c_p)."""
    out: dict[int, Fraction] = {}
    for p in contributing_primes(K, a):
        out[p] = sum(
            (valuation(v, a) * Fraction(v.kappa_v, v.kappa) for v in places_above(K, p)),
            Fraction(0),
        )
    return out
