"""Finite-precision arithmetic in completions and certified series evaluation.

A completion element is a residue modulo p^N of an element of the valuation
ring at a place v.  Rational and split places use plain integer residues
(split places embed sqrt(d) through its canonical p-adic root); inert and
ramified places use coordinate pairs in the quotient of the local ring of
integers.  At the places where the local ring is Z_p[sqrt(d)] the pair
(u, w) means u + w*sqrt(d); the one exception is p = 2 with d = 5 mod 8,
where sqrt(d)-coordinates of integral elements can carry denominator 2, so
the pair is kept in the basis (1, (1+sqrt(d))/2) internally and converted
back to sqrt(d)-coordinates (then possibly half-integral) for output.

Series are summed with exact tail control: a term is dropped only once its
valuation, and by monotonicity every later term's, provably reaches the
target precision.  The resulting CertifiedValue pins the series sum mod p^N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime, legendre_symbol, canonical_sqrt_mod, padic_ord_int
from .errors import (
    DegeneratePolynomialError,
    NoConvergenceError,
    NotSplitError,
    PrecisionCapError,
)
from .numfield import FieldElement
from .places import INERT, RATIONAL, SPLIT_1, SPLIT_2, Place, valuation

#: hard ceiling on the requested residue precision N
PRECISION_CAP = 4096

_INT = "int"
_SQRT = "sqrt"
_OMEGA = "omega"


def hensel_sqrt(d: int, p: int, n: int) -> int:
    """The canonical square root of d mod p^n for an odd prime p.

    Requires d to be an invertible quadratic residue mod p.  The canonical
    choice is the Hensel lift of min(r0, p - r0), so the value is stable
    across precisions; the other root is p^n - r.
    """
    if n < 1:
        raise ValueError("precision must be >= 1")
    if p == 2 or not is_prime(p):
        raise NotSplitError(f"p = {p} is not an admissible odd prime")
    if d % p == 0 or legendre_symbol(d, p) != 1:
        raise NotSplitError(f"{d} is not an invertible square mod {p}")
    return canonical_sqrt_mod(d, p, n)


def _basis_for(place: Place) -> str:
    if place.splitting in (RATIONAL, SPLIT_1, SPLIT_2):
        return _INT
    if place.p == 2 and place.d is not None and place.d % 4 == 1:
        return _OMEGA
    return _SQRT


def _frac_mod(q: Fraction, p: int, mod: int) -> int:
    """q reduced mod p^N; requires p not to divide the denominator."""
    if q.denominator % p == 0:
        raise ValueError(f"{q} is not p-integral at p = {p}")
    return q.numerator * pow(q.denominator, -1, mod) % mod


@dataclass(frozen=True)
class CompletionElement:
    """A residue mod p^N in the valuation ring at a place."""

    place: Place
    n: int
    basis: str
    a: int
    b: int = 0

    @property
    def modulus(self) -> int:
        return self.place.p**self.n

    @classmethod
    def zero(cls, place: Place, n: int) -> CompletionElement:
        return cls(place, n, _basis_for(place), 0, 0)

    @classmethod
    def one(cls, place: Place, n: int) -> CompletionElement:
        return cls(place, n, _basis_for(place), 1 % place.p**n, 0)

    @classmethod
    def from_field_element(cls, place: Place, n: int, value) -> CompletionElement:
        """Reduce an exact element with w_v >= 0 to its residue mod p^N."""
        if isinstance(value, (int, Fraction)):
            value = FieldElement(Fraction(value), Fraction(0), place.d)
        if value.d != place.d:
            if value.y != 0:
                raise ValueError("element belongs to a different field")
            value = FieldElement(value.x, Fraction(0), place.d)
        p = place.p
        mod = p**n
        basis = _basis_for(place)
        if basis == _INT:
            if place.splitting == RATIONAL:
                return cls(place, n, basis, _frac_mod(value.x, p, mod))
            c = math.lcm(value.x.denominator, value.y.denominator)
            A = int(value.x * c)
            B = int(value.y * c)
            k = padic_ord_int(c, p)
            r = place.hensel_root(n + k)
            num = (A + B * r) % p ** (n + k)
            if num % p**k != 0:
                raise ValueError(f"{value} has negative valuation at {place}")
            image = (num // p**k) * pow(c // p**k, -1, mod) % mod
            return cls(place, n, basis, image)
        if basis == _SQRT:
            return cls(place, n, basis, _frac_mod(value.x, p, mod), _frac_mod(value.y, p, mod))
        # omega basis: x + y*sqrt(d) = (x - y) + 2y * omega
        return cls(
            place, n, basis,
            _frac_mod(value.x - value.y, p, mod),
            _frac_mod(2 * value.y, p, mod),
        )

    def _compat(self, other: CompletionElement) -> None:
        if self.place != other.place or self.n != other.n:
            raise ValueError("mismatched place or precision")

    def _wrap(self, a: int, b: int) -> CompletionElement:
        mod = self.modulus
        return CompletionElement(self.place, self.n, self.basis, a % mod, b % mod)

    def __add__(self, other) -> CompletionElement:
        other = self._lift(other)
        self._compat(other)
        return self._wrap(self.a + other.a, self.b + other.b)

    def __sub__(self, other) -> CompletionElement:
        other = self._lift(other)
        self._compat(other)
        return self._wrap(self.a - other.a, self.b - other.b)

    def __neg__(self) -> CompletionElement:
        return self._wrap(-self.a, -self.b)

    def _lift(self, other) -> CompletionElement:
        if isinstance(other, CompletionElement):
            return other
        if isinstance(other, int):
            return CompletionElement(self.place, self.n, self.basis, other % self.modulus)
        if isinstance(other, (Fraction, FieldElement)):
            return CompletionElement.from_field_element(self.place, self.n, other)
        raise TypeError(f"cannot combine CompletionElement with {type(other)!r}")

    def __mul__(self, other) -> CompletionElement:
        other = self._lift(other)
        self._compat(other)
        if self.basis == _INT:
            return self._wrap(self.a * other.a, 0)
        if self.basis == _SQRT:
            d = self.place.d
            return self._wrap(
                self.a * other.a + d * self.b * other.b,
                self.a * other.b + self.b * other.a,
            )
        c = (self.place.d - 1) // 4
        return self._wrap(
            self.a * other.a + c * self.b * other.b,
            self.a * other.b + self.b * other.a + self.b * other.b,
        )

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def reduce_to(self, m: int) -> CompletionElement:
        """The same residue at a lower precision m <= N."""
        if m > self.n:
            raise ValueError("cannot raise precision of a residue")
        mod = self.place.p**m
        return CompletionElement(self.place, m, self.basis, self.a % mod, self.b % mod)

    def valuation_lower(self) -> Fraction | None:
        """The exact w_v of any element with this residue, when the residue
        pins it down; None when the residue leaves it undetermined.

        A zero residue is always undetermined (the element may sit anywhere
        at or above w = N).  At a 2-adic ramified place with d = 3 mod 4 the
        coordinates do not separate the uniformizer, so the valuation is
        read off the norm instead, at one fewer digit of certainty.
        """
        p = self.place.p
        if self.basis == _INT:
            return None if self.a == 0 else Fraction(padic_ord_int(self.a, p))
        if not self:
            return None
        if self.place.splitting == INERT:
            vals = [padic_ord_int(c, p) for c in (self.a, self.b) if c != 0]
            return Fraction(min(vals))
        # ramified places
        if p == 2 and self.place.d % 4 == 3:
            nrm = (self.a * self.a - self.place.d * self.b * self.b) % self.modulus
            if nrm == 0:
                return None
            return Fraction(padic_ord_int(nrm, 2), 2)
        vals = []
        if self.a != 0:
            vals.append(Fraction(padic_ord_int(self.a, p)))
        if self.b != 0:
            vals.append(Fraction(padic_ord_int(self.b, p)) + Fraction(1, 2))
        return min(vals)

    def sqrt_coordinates(self) -> tuple[Fraction, Fraction]:
        """Residue coordinates with respect to (1, sqrt(d)); Q gives (a, 0)."""
        if self.basis == _INT:
            return Fraction(self.a), Fraction(0)
        if self.basis == _SQRT:
            return Fraction(self.a), Fraction(self.b)
        return Fraction(self.a) + Fraction(self.b, 2), Fraction(self.b, 2)

    def residue_json(self):
        if self.basis == _INT:
            return self.a
        u, w = self.sqrt_coordinates()
        return [str(u), str(w)]


@dataclass(frozen=True)
class CertifiedValue:
    """A series value mod p^N together with a proven tail valuation bound."""

    value: CompletionElement
    tail_valuation_bound: Fraction
    terms_used: int

    def to_json(self) -> dict:
        v = self.value
        return {
            "p": v.place.p,
            "place": v.place.splitting,
            "N": v.n,
            "residue": v.residue_json(),
            "tail_valuation_bound": str(self.tail_valuation_bound),
            "terms_used": self.terms_used,
        }


def _check_precision(n: int) -> None:
    if n < 1:
        raise ValueError("precision must be >= 1")
    if n > PRECISION_CAP:
        raise PrecisionCapError(f"requested precision {n} exceeds cap {PRECISION_CAP}")


def _as_place_element(place: Place, value) -> FieldElement:
    if isinstance(value, (int, Fraction)):
        return FieldElement(Fraction(value), Fraction(0), place.d)
    if value.d != place.d:
        if value.y != 0:
            raise ValueError("element belongs to a different field")
        return FieldElement(value.x, Fraction(0), place.d)
    return value


def euler_eval_certified(v: Place, alpha, n_target: int) -> CertifiedValue:
    """Sum n! * alpha^n in the completion at v until the tail provably
    lies above w_v = n_target.

    alpha must be an algebraic integer, so every term has w_v >= 0 and
    v_p(n!) + n*w_v(alpha) is a nondecreasing exact lower bound for the
    term at index n; the first index whose bound reaches the target closes
    the sum, and the bound achieved there is reported.
    """
    _check_precision(n_target)
    alpha = _as_place_element(v, alpha)
    if not alpha.is_algebraic_integer():
        raise ValueError(f"{alpha} is not an algebraic integer")
    one = CompletionElement.one(v, n_target)
    if not alpha:
        return CertifiedValue(one, Fraction(n_target), 1)
    w_alpha = valuation(v, alpha)
    alpha_c = CompletionElement.from_field_element(v, n_target, alpha)
    acc = one
    term = one
    vp_factorial = 0
    n = 0
    while True:
        n += 1
        vp_factorial += padic_ord_int(n, v.p)
        bound = vp_factorial + n * w_alpha
        if bound >= n_target:
            return CertifiedValue(acc, Fraction(bound), n)
        term = term * alpha_c * n
        acc = acc + term


def genfact_eval(v: Place, p0, p1, t, n_target: int, n_max: int) -> CertifiedValue:
    """Sum prod_{k<n} (p0 + p1*k) * t^n in the completion at v.

    The factor products have nondecreasing valuation because every factor
    is an algebraic integer, so the term bound w([prod]_n) + n*w(t) is
    tracked exactly and the cut is sound as soon as one term clears the
    target.  If no term does so by n_max the evaluation refuses to answer.
    """
    _check_precision(n_target)
    p0 = _as_place_element(v, p0)
    p1 = _as_place_element(v, p1)
    t = _as_place_element(v, t)
    if not p1:
        raise DegeneratePolynomialError("the coefficient polynomial must have degree one")
    for name, val in (("p0", p0), ("p1", p1), ("t", t)):
        if not val.is_algebraic_integer():
            raise ValueError(f"{name} = {val} is not an algebraic integer")
    one = CompletionElement.one(v, n_target)
    if not t:
        return CertifiedValue(one, Fraction(n_target), 1)
    w_t = valuation(v, t)
    if w_t < 0:
        raise ValueError(f"t = {t} has negative valuation at {v}")
    t_c = CompletionElement.from_field_element(v, n_target, t)
    acc = one
    term = one
    w_prod = Fraction(0)
    n = 0
    while n < n_max:
        n += 1
        factor = p0 + p1 * (n - 1)
        if not factor:
            # the factor product vanishes from here on: the tail is exactly 0
            return CertifiedValue(acc, Fraction(max(n_target, 0)), n)
        w_prod += valuation(v, factor)
        bound = w_prod + n * w_t
        if bound >= n_target:
            return CertifiedValue(acc, bound, n)
        term = term * CompletionElement.from_field_element(v, n_target, factor) * t_c
        acc = acc + term
    raise NoConvergenceError(
        f"no term reached valuation {n_target} within {n_max} terms at {v}"
    )
