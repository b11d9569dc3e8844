"""Explicit Pade approximations to factorial-type power series.

The construction pivots on the expansion prod_j (beta_j - w)^{l_j}
= sum_i sigma_i w^i, whose coefficients annihilate sum_i sigma_i i^k beta_j^i
for every k < l_j.  Layering those annihilations produces, for the series
G(t) = sum_n [P]_n t^n with [P]_n = prod_{k<n} P(k) and deg P = 1,
polynomials A_0, A_j with

    A_0(t) G(beta_j t) - A_j(t) = R_j(t),    ord R_j >= L + mu + l_j,

where L = sum l_j and mu in {0..m} shifts the denominators.  For Euler's
series (P(x) = 1 + x, all l_j = l) everything is cleared by (ml + mu)! so
the polynomials B_* have algebraic-integer coefficients; the determinant of
the (m+1) x (m+1) matrix of the B's collapses to a single monomial whose
coefficient has a closed form, which is what guarantees a usable mu.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AllLambdaZeroError,
    CutoffTooSmallError,
    DegeneratePolynomialError,
    RepeatedAlphaError,
    ZeroAlphaError,
)
from .numfield import FieldElement
from .padics import CompletionElement, euler_eval_certified
from .places import Place
from .polys import Poly


def _as_elem(value, d) -> FieldElement:
    if isinstance(value, FieldElement):
        if value.d == d:
            return value
        if value.y == 0:
            return FieldElement(value.x, Fraction(0), d)
        raise ValueError("element belongs to a different field")
    return FieldElement(Fraction(value), Fraction(0), d)


def _common_field(elems) -> int | None:
    d = None
    for e in elems:
        if isinstance(e, FieldElement) and e.d is not None:
            if d is not None and e.d != d:
                raise ValueError("mixed quadratic fields")
            d = e.d
    return d


@dataclass(frozen=True)
class SigmaVector:
    """Coefficients sigma_0..sigma_L of prod_j (beta_j - w)^{l_j}."""

    l_vec: tuple[int, ...]
    beta: tuple[FieldElement, ...]
    coeffs: tuple[FieldElement, ...]

    @property
    def L(self) -> int:
        return sum(self.l_vec)


def sigma_coeffs(l_vec, beta) -> SigmaVector:
    """Expand prod_j (beta_j - w)^{l_j} exactly."""
    l_vec = tuple(int(l) for l in l_vec)
    if len(l_vec) != len(beta) or any(l < 1 for l in l_vec):
        raise ValueError("need one exponent l_j >= 1 per beta_j")
    d = _common_field(beta)
    beta = tuple(_as_elem(b, d) for b in beta)
    poly = Poly([1], d)
    for lj, bj in zip(l_vec, beta):
        factor = Poly([bj, -1], d)
        for _ in range(lj):
            poly = poly * factor
    return SigmaVector(l_vec, beta, poly.coeffs)


def sigma_annihilation_check(sv: SigmaVector, j: int, k: int) -> FieldElement:
    """sum_i sigma_i i^k beta_j^i, exactly; zero whenever k < l_j (j is 1-based)."""
    if not 1 <= j <= len(sv.beta):
        raise ValueError(f"j must be in 1..{len(sv.beta)}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    bj = sv.beta[j - 1]
    d = bj.d
    acc = _as_elem(0, d)
    power = _as_elem(1, d)
    for i, sig in enumerate(sv.coeffs):
        acc = acc + sig * (i**k) * power
        power = power * bj
    return acc


def operator_weights(n: int) -> list[int]:
    """Weights a_{n,1..n} with (x d/dx)^n = sum_i a_{n,i} x^i (d/dx)^i.

    Recursion: a_{n,1} = a_{n,n} = 1 and a_{n,i} = a_{n-1,i-1} + i*a_{n-1,i}.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    row = [1]
    for _ in range(n - 1):
        prev = row
        row = []
        for i in range(1, len(prev) + 2):
            left = prev[i - 2] if i >= 2 else 0
            right = prev[i - 1] if i <= len(prev) else 0
            row.append(left + i * right)
    return row


@dataclass(frozen=True)
class PadeSystem:
    """The cleared system B_0..B_m for Euler's series with equal l_j = l."""

    m: int
    l: int
    mu: int
    alpha: tuple[FieldElement, ...]
    sigma: SigmaVector
    B: tuple[Poly, ...]
    d: int | None

    @property
    def order_target(self) -> int:
        return (self.m + 1) * self.l + self.mu

    def b_values(self) -> tuple[FieldElement, ...]:
        """b_{l,mu,i} = B_i(1) for i = 0..m."""
        return tuple(B(1) for B in self.B)

    def remainder_coefficient(self, n: int, j: int) -> FieldElement:
        """Exact cleared product-series coefficient (ml+mu)! * r_{n,j} (j 1-based).

        r_{n,j} = sum_h sigma_{ml-h} (n-h)!/(ml-h+mu)! alpha_j^{n-h}; the
        Pade property makes this vanish for ml+mu <= n < (m+1)l+mu.
        """
        if not 1 <= j <= self.m:
            raise ValueError(f"j must be in 1..{self.m}")
        ml, mu = self.m * self.l, self.mu
        top = math.factorial(ml + mu)
        aj = self.alpha[j - 1]
        acc = _as_elem(0, self.d)
        for h in range(min(ml, n) + 1):
            scale = Fraction(top * math.factorial(n - h), math.factorial(ml - h + mu))
            acc = acc + self.sigma.coeffs[ml - h] * scale * aj ** (n - h)
        return acc

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "l": self.l,
            "mu": self.mu,
            "alphas": [str(a) for a in self.alpha],
            "B": [B.to_json() for B in self.B],
        }


def _validate_alpha(alpha, d) -> tuple[FieldElement, ...]:
    alpha = tuple(_as_elem(a, d) for a in alpha)
    if any(not a for a in alpha):
        raise ZeroAlphaError("evaluation points must be nonzero")
    if len({(a.x, a.y) for a in alpha}) != len(alpha):
        raise RepeatedAlphaError("evaluation points must be pairwise distinct")
    return alpha


def pade_construct(m: int, l: int, mu: int, alpha) -> PadeSystem:
    """Build the cleared Euler-series system for given m >= 1, l >= 1, 0 <= mu <= m.

    B_0(t) = sum_i sigma_i ((ml+mu)!/(i+mu)!) t^(ml-i) of degree ml, and
    B_j collects the product-series coefficients below t^(ml+mu); all
    coefficients are algebraic integers.
    """
    if m < 1 or l < 1 or not 0 <= mu <= m:
        raise ValueError("need m >= 1, l >= 1, 0 <= mu <= m")
    if len(alpha) != m:
        raise ValueError(f"expected {m} evaluation points")
    d = _common_field(a for a in alpha if isinstance(a, FieldElement))
    alpha = _validate_alpha(alpha, d)
    sv = sigma_coeffs([l] * m, alpha)
    ml = m * l
    top = math.factorial(ml + mu)
    b0 = [_as_elem(0, d)] * (ml + 1)
    for i, sig in enumerate(sv.coeffs):
        b0[ml - i] = sig * (top // math.factorial(i + mu))
    systems = [Poly(b0, d)]
    for j in range(1, m + 1):
        aj = alpha[j - 1]
        coeffs = []
        for n in range(ml + mu):
            acc = _as_elem(0, d)
            for h in range(min(ml, n) + 1):
                scale = top * math.factorial(n - h) // math.factorial(ml - h + mu)
                acc = acc + sv.coeffs[ml - h] * scale * aj ** (n - h)
            coeffs.append(acc)
        systems.append(Poly(coeffs, d))
    return PadeSystem(m, l, mu, alpha, sv, tuple(systems), d)


def _euler_series_poly(point: FieldElement, cutoff: int, d) -> Poly:
    coeffs = []
    term = _as_elem(1, d)
    for n in range(cutoff + 1):
        if n > 0:
            term = term * point * n
        coeffs.append(term)
    return Poly(coeffs, d)


def pade_order_check(system: PadeSystem, cutoff: int) -> int:
    """Minimal vanishing order over j of B_0(t) F(alpha_j t) - B_j(t).

    Multiplies B_0 by the exactly truncated series, subtracts B_j, and
    returns the smallest first-nonzero exponent across columns; it also
    confirms the cleared product-series coefficients vanish on the whole
    band ml+mu <= n < (m+1)l+mu.
    """
    target = system.order_target
    if cutoff < target + 5:
        raise CutoffTooSmallError(f"cutoff must be at least {target + 5}")
    for n in range(system.m * system.l + system.mu, target):
        for j in range(1, system.m + 1):
            if system.remainder_coefficient(n, j):
                raise RuntimeError(f"vanishing band violated at n={n}, j={j}")
    best = None
    for j in range(1, system.m + 1):
        series = _euler_series_poly(system.alpha[j - 1], cutoff, system.d)
        product = (system.B[0] * series).truncate(cutoff + 1)
        remainder = product - system.B[j].truncate(cutoff + 1)
        order = remainder.first_nonzero_exponent()
        if order is None:
            order = cutoff
        best = order if best is None else min(best, order)
    return best


@dataclass(frozen=True)
class GenericPadeSystem:
    """The uncleared system A_0..A_m over G(t) = sum [P]_n t^n, deg P = 1."""

    l_vec: tuple[int, ...]
    mu: int
    beta: tuple[FieldElement, ...]
    p0: FieldElement
    p1: FieldElement
    sigma: SigmaVector
    A: tuple[Poly, ...]
    d: int | None

    def factorial_product(self, n: int) -> FieldElement:
        """[P]_n = prod_{k<n} (p0 + p1 k)."""
        acc = _as_elem(1, self.d)
        for k in range(n):
            acc = acc * (self.p0 + self.p1 * k)
        return acc

    def remainder_coefficient(self, n: int, j: int) -> FieldElement:
        """Product-series coefficient r_{n,j} = sum_h sigma_{L-h} [P]_{n-h}/[P]_{L-h+mu} beta_j^{n-h}."""
        if not 1 <= j <= len(self.beta):
            raise ValueError(f"j must be in 1..{len(self.beta)}")
        L = self.sigma.L
        bj = self.beta[j - 1]
        acc = _as_elem(0, self.d)
        for h in range(min(L, n) + 1):
            ratio = self.factorial_product(n - h) / self.factorial_product(L - h + self.mu)
            acc = acc + self.sigma.coeffs[L - h] * ratio * bj ** (n - h)
        return acc

    def order_check(self, cutoff: int) -> list[int]:
        """First nonzero exponent of A_0(t) G(beta_j t) - A_j(t), per column."""
        L = self.sigma.L
        if cutoff < L + self.mu + max(self.l_vec) + 5:
            raise CutoffTooSmallError(
                f"cutoff must be at least {L + self.mu + max(self.l_vec) + 5}"
            )
        orders = []
        for j in range(1, len(self.beta) + 1):
            coeffs = []
            term = _as_elem(1, self.d)
            for n in range(cutoff + 1):
                if n > 0:
                    term = term * (self.p0 + self.p1 * (n - 1)) * self.beta[j - 1]
                coeffs.append(term)
            series = Poly(coeffs, self.d)
            product = (self.A[0] * series).truncate(cutoff + 1)
            remainder = product - self.A[j].truncate(cutoff + 1)
            order = remainder.first_nonzero_exponent()
            orders.append(cutoff if order is None else order)
        return orders


def pade_generic(l_vec, mu: int, beta, p0, p1) -> GenericPadeSystem:
    """Build A_0(t) = sum_i sigma_i/[P]_{i+mu} t^(L-i) and the matching A_j.

    The orders l_j may differ from column to column; the remainder in
    column j vanishes to order at least L + mu + l_j.
    """
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    d = _common_field(
        [e for e in (*beta, p0, p1) if isinstance(e, FieldElement)]
    )
    p0 = _as_elem(p0, d)
    p1 = _as_elem(p1, d)
    if not p1:
        raise DegeneratePolynomialError("P must have degree exactly one")
    sv = sigma_coeffs(l_vec, beta)
    L = sv.L

    def prod(n: int) -> FieldElement:
        acc = _as_elem(1, d)
        for k in range(n):
            acc = acc * (p0 + p1 * k)
        return acc

    products = [prod(n) for n in range(L + mu + 1)]
    if any(not q for q in products[mu:]):
        raise ZeroDivisionError("P vanishes at a nonnegative integer below L + mu")
    a0 = [_as_elem(0, d)] * (L + 1)
    for i, sig in enumerate(sv.coeffs):
        a0[L - i] = sig / products[i + mu]
    columns = [Poly(a0, d)]
    for j in range(1, len(sv.beta) + 1):
        bj = sv.beta[j - 1]
        coeffs = []
        for n in range(L + mu):
            acc = _as_elem(0, d)
            for h in range(min(L, n) + 1):
                ratio = products[n - h] / products[L - h + mu]
                acc = acc + sv.coeffs[L - h] * ratio * bj ** (n - h)
            coeffs.append(acc)
        columns.append(Poly(coeffs, d))
    return GenericPadeSystem(
        tuple(int(l) for l in l_vec), mu, sv.beta, p0, p1, sv, tuple(columns), d
    )


def _poly_det(matrix: list[list[Poly]], d) -> Poly:
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    acc = Poly.zero(d)
    for col in range(n):
        minor = [row[:col] + row[col + 1 :] for row in matrix[1:]]
        term = matrix[0][col] * _poly_det(minor, d)
        acc = acc + term if col % 2 == 0 else acc - term
    return acc


def pade_determinant(m: int, l: int, alpha) -> tuple[int, FieldElement, bool]:
    """The determinant of the (m+1) x (m+1) matrix of B_{l,mu,j} over mu, j.

    Returns (exponent, b, brute_force_equal): the determinant is the single
    monomial b * t^(m(m+1)l + m(m-1)/2) with

        b = (-1)^(ml) prod_{mu<m} (ml+mu)! prod_j alpha_j^l
            * prod_j (sum_i sigma_i i^l alpha_j^i) * prod_{i<j} (alpha_j - alpha_i)

    and the flag reports exact agreement with the directly expanded
    polynomial determinant.  (Expanding along the first column, the lowest
    order is attained at the row mu = m, whose cofactor sign (-1)^m cancels
    the (-1)^m coming from negating the m remainder columns; the remaining
    sign is sigma_ml = (-1)^(ml).)
    """
    systems = [pade_construct(m, l, mu, alpha) for mu in range(m + 1)]
    d = systems[0].d
    alpha = systems[0].alpha
    sv = systems[0].sigma
    exponent = m * (m + 1) * l + m * (m - 1) // 2

    sign = -1 if (m * l) % 2 else 1
    b = _as_elem(sign, d)
    for mu in range(m):
        b = b * math.factorial(m * l + mu)
    for aj in alpha:
        b = b * aj**l
    for j in range(1, m + 1):
        b = b * sigma_annihilation_check(sv, j, l)
    for i in range(m):
        for j in range(i + 1, m):
            b = b * (alpha[j] - alpha[i])

    matrix = [list(systems[mu].B) for mu in range(m + 1)]
    det = _poly_det(matrix, d)
    expected = Poly.monomial(b, exponent, d)
    return exponent, b, det == expected


def select_mu(l: int, lambda_vec, alpha) -> tuple[int, FieldElement]:
    """The least mu in {0..m} with W(l, mu) = sum_i lambda_i B_i(1) nonzero.

    Existence is guaranteed by the nonvanishing of the Pade determinant at
    t = 1.
    """
    m = len(alpha)
    if len(lambda_vec) != m + 1:
        raise ValueError(f"expected {m + 1} linear-form coefficients")
    d = _common_field(
        [e for e in (*lambda_vec, *alpha) if isinstance(e, FieldElement)]
    )
    lambdas = [_as_elem(c, d) for c in lambda_vec]
    if not any(lambdas):
        raise AllLambdaZeroError("the coefficient vector must not vanish")
    for mu in range(m + 1):
        system = pade_construct(m, l, mu, alpha)
        w = _as_elem(0, d)
        for lam, bi in zip(lambdas, system.b_values()):
            w = w + lam * bi
        if w:
            return mu, w
    raise RuntimeError("no mu produced a nonzero W; determinant nonvanishing violated")


def remainder_at_unity(system: PadeSystem, v: Place, j: int, precision: int) -> CompletionElement:
    """The residue mod p^precision of s_{l,mu,j} = B_0(1) F_v(alpha_j) - B_j(1).

    The infinite remainder series is never summed directly; the certified
    evaluation of F_v feeds the defining identity instead, and the listed
    precision is honest because B_0(1) is an algebraic integer.
    """
    if not 1 <= j <= system.m:
        raise ValueError(f"j must be in 1..{system.m}")
    b0, bj = system.B[0](1), system.B[j](1)
    fv = euler_eval_certified(v, system.alpha[j - 1], precision)
    b0_c = CompletionElement.from_field_element(v, precision, b0)
    bj_c = CompletionElement.from_field_element(v, precision, bj)
    return b0_c * fv.value - bj_c
