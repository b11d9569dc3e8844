"""Constants, effective bounds, and non-vanishing certificates.

Everything here sits on top of the exact layers below it: the growth
constants c1, c2 of a point configuration, the diagnostic sequence whose
decay drives the pigeonhole argument, the explicit bound chain (margin
function, its largest nonnegative integer, prime interval and exponent),
the inverse of z*log(z), prime sums, the residue-class decay condition,
reduction of order-<=2 linear recurrences to linear forms, and the
certificate search itself.

A certificate asserts only non-vanishing: the truncated linear form has a
residue whose valuation sits strictly below a proven tail bound, which no
continuation of the series can cancel.  Exhaustion of the search space is
reported as "undetermined", never as vanishing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import euler_phi, factorize, prime_range, primes_upto, squarefree_part
from .errors import (
    AllLambdaZeroError,
    HeightTooSmallError,
    InvalidModulusError,
    NonIntegralRootsError,
    OrderUnsupportedError,
    RepeatedAlphaError,
    RepeatedRootsError,
    UnsupportedDescriptorError,
    ZeroAlphaError,
)
from .numfield import FieldElement, QuadraticField, arch_abs_normalized
from .padics import CompletionElement, euler_eval_certified
from .places import Place, factorial_valuation, places_above, valuation


# ---------------------------------------------------------------------------
# valuation-set descriptors


@dataclass(frozen=True)
class ValuationSetDescriptor:
    """A collection V of non-Archimedean places: everything, everything
    except finitely many places, or the places over primes in given
    residue classes."""

    kind: str
    excluded: tuple[Place, ...] = ()
    modulus: int | None = None
    classes: frozenset[int] | None = None

    @classmethod
    def all_places(cls) -> ValuationSetDescriptor:
        return cls("all")

    @classmethod
    def cofinite(cls, excluded) -> ValuationSetDescriptor:
        excluded = tuple(excluded)
        if not all(isinstance(v, Place) for v in excluded):
            raise ValueError("cofinite exclusions must be places")
        return cls("cofinite", excluded)

    @classmethod
    def residue_classes(cls, n: int, classes) -> ValuationSetDescriptor:
        if n < 3:
            raise InvalidModulusError("the modulus must be at least 3")
        classes = frozenset(int(c) % n for c in classes)
        if not classes or any(math.gcd(c, n) != 1 for c in classes):
            raise ValueError("classes must be nonempty and prime to the modulus")
        return cls("residue_classes", (), n, classes)

    def excludes_place(self, place: Place) -> bool:
        if self.kind == "cofinite":
            return any(place.p == v.p and place.splitting == v.splitting for v in self.excluded)
        if self.kind == "residue_classes":
            return place.p % self.modulus not in self.classes
        return False


# ---------------------------------------------------------------------------
# growth constants


def _arch_value_table(K: QuadraticField, elems) -> list[list[float]]:
    """Rows: Archimedean places of K; columns: normalized values of elems."""
    per_elem = [arch_abs_normalized(K, e) for e in elems]
    n_places = len(per_elem[0])
    return [[per_elem[j][i][1] for j in range(len(elems))] for i in range(n_places)]


def _as_field(K: QuadraticField, value) -> FieldElement:
    if isinstance(value, FieldElement):
        if value.d == K.d:
            return value
        if value.y == 0:
            return K(value.x)
        raise ValueError("element belongs to a different field")
    return K(Fraction(value))


def _validated_alphas(K: QuadraticField, alpha_vec) -> tuple[FieldElement, ...]:
    alphas = tuple(_as_field(K, a) for a in alpha_vec)
    if any(not a for a in alphas):
        raise ZeroAlphaError("evaluation points must be nonzero")
    if len({(a.x, a.y) for a in alphas}) != len(alphas):
        raise RepeatedAlphaError("evaluation points must be pairwise distinct")
    for a in alphas:
        if not a.is_algebraic_integer():
            raise ValueError(f"{a} is not an algebraic integer")
    return alphas


def constants_c1_c2(
    K: QuadraticField, alpha_vec, V: ValuationSetDescriptor
) -> tuple[float, float]:
    """The Archimedean constant c1 of the points and c2 = c1 * prod_{v in V}
    max_j ||alpha_j||_v.

    Only places over primes dividing some norm(alpha_j) can push the
    non-Archimedean product below 1, so the product is finite.
    """
    alphas = _validated_alphas(K, alpha_vec)
    m = len(alphas)
    c1 = 1.0
    for row in _arch_value_table(K, alphas):
        big = max(1.0, max(row))
        c1 *= big**m
        for val in row:
            c1 *= val + big
    c2 = c1
    contributing: set[int] = set()
    for a in alphas:
        contributing |= set(factorize(int(a.norm())))
    for p in sorted(contributing):
        for v in places_above(K, p):
            if V.excludes_place(v):
                continue
            best = max(
                p ** -float(valuation(v, a) * Fraction(v.kappa_v, v.kappa)) for a in alphas
            )
            c2 *= best
    return c1, c2


def limsup_sequence(
    K: QuadraticField, alpha_vec, V: ValuationSetDescriptor, l_max: int
) -> list[float]:
    """log of c2^l (ml+m)^kappa (ml+m)! prod_{v in V} ||(ml)! l!||_v for l = 1..l_max.

    With V cofinite the product over V is rewritten through the product
    formula: the full product over all finite places is 1/((ml)! l!), and
    each excluded place gives back its exact factorial valuation.  The
    sequence is diagnostic evidence for the decay condition, not a proof.
    """
    if V.kind == "residue_classes":
        raise UnsupportedDescriptorError(
            "residue-class collections are judged by their decay slope instead"
        )
    alphas = _validated_alphas(K, alpha_vec)
    m = len(alphas)
    kappa = K.kappa
    _, c2 = constants_c1_c2(K, alpha_vec, V)
    out = []
    for l in range(1, l_max + 1):
        a_l = (
            l * math.log(c2)
            + kappa * math.log(m * l + m)
            + math.lgamma(m * l + m + 1)
            - math.lgamma(m * l + 1)
            - math.lgamma(l + 1)
        )
        for v in V.excluded:
            vp = factorial_valuation(v.p, m * l) + factorial_valuation(v.p, l)
            a_l += Fraction(v.kappa_v, kappa) * vp * math.log(v.p)
        out.append(a_l)
    return out


def monotone_decrease_onset(values: list[float]) -> int | None:
    """The first 1-based index from which the sequence strictly decreases."""
    onset = 1
    for k in range(1, len(values)):
        if values[k] >= values[k - 1]:
            onset = k + 1
    return onset if onset < len(values) else None


# ---------------------------------------------------------------------------
# the effective bound chain


def log_height_margin(l: int, m: int, kappa: int, c1: float, log_h: float) -> float:
    """The margin function N(l) whose last nonnegative integer drives the bound.

    N(l) = log H + (2(m+1) + 2m/l + log(c1)/loglog(l) + 1/loglog(l)
           + (kappa - 1/2) log(l)/(l loglog(l)) + kappa log(m)/(l loglog(l))
           + kappa log(m+1)/(l loglog(l)) + kappa/(l^2 loglog(l))) * l loglog(l)
           - l log(l)
    """
    if l < 2:
        raise ValueError("the margin function starts at l = 2")
    ll = math.log(l)
    lll = math.log(ll)
    bracket = (
        2 * (m + 1)
        + 2 * m / l
        + math.log(c1) / lll
        + 1 / lll
        + (kappa - 0.5) * ll / (l * lll)
        + kappa * math.log(m) / (l * lll)
        + kappa * math.log(m + 1) / (l * lll)
        + kappa / (l * l * lll)
    )
    return log_h + bracket * l * lll - l * ll


@dataclass(frozen=True)
class BoundReport:
    """Everything the explicit lower-bound chain pins down for one height."""

    m: int
    kappa: int
    c1: float
    s: float
    log_h: float
    ell: int
    n_ell: float
    n_ell_plus_1: float
    interval_lo: float
    interval_hi: float
    exponent: float

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "kappa": self.kappa,
            "c1": self.c1,
            "s": self.s,
            "logH": self.log_h,
            "ell": self.ell,
            "N_ell": self.n_ell,
            "N_ell_plus_1": self.n_ell_plus_1,
            "interval_lo": self.interval_lo,
            "interval_hi": self.interval_hi,
            "exponent": self.exponent,
        }


def effective_bounds(m: int, kappa: int, c1: float, log_h: float) -> BoundReport:
    """Evaluate the explicit bound chain at height log H.

    Computes s, scans for ell = max{l >= 2 : N(l) >= 0} (geometric bracket,
    then binary search on the decreasing flank), and emits the prime
    interval ]log(logH/loglogH), 17m logH/loglogH[ together with the
    exponent (m+1) + 114 m^2 logloglogH/loglogH.  The containment of
    [log(ell+1), m(ell+2)] in the interval is re-checked on every call.
    """
    if m < 1 or kappa < 1:
        raise ValueError("need m >= 1 and kappa >= 1")
    s = max(math.e**kappa + 1, c1 + 1, (m + 3) ** 2 + 1)
    if log_h < s * math.exp(s):
        raise HeightTooSmallError(f"log H must be at least s*e^s = {s * math.exp(s):.6g}")

    def margin(l: int) -> float:
        return log_height_margin(l, m, kappa, c1, log_h)

    if margin(2) < 0:
        raise HeightTooSmallError("the margin function is already negative at l = 2")
    lo, hi = 2, 4
    while margin(hi) >= 0:
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if margin(mid) >= 0:
            lo = mid
        else:
            hi = mid
    ell = lo

    loglog_h = math.log(log_h)
    interval_lo = math.log(log_h / loglog_h)
    interval_hi = 17 * m * log_h / loglog_h
    exponent = (m + 1) + 114 * m * m * math.log(loglog_h) / loglog_h
    if not (interval_lo < math.log(ell + 1) and m * (ell + 2) < interval_hi):
        raise RuntimeError("interval containment failed; bound chain inconsistent")
    return BoundReport(
        m, kappa, c1, s, log_h, ell, margin(ell), margin(ell + 1),
        interval_lo, interval_hi, exponent,
    )


def z_inverse(y: float, rel_tol: float = 1e-12, max_iter: int = 100000) -> tuple[float, list[float]]:
    """Invert z*log(z) = y for y >= e by the nested-logarithm iteration.

    z_0 = y, z_n = y / log(z_{n-1}); odd iterates climb from below and even
    iterates descend from above, squeezing the fixed point.  Returns the
    limit and the iterate list.
    """
    if y < math.e:
        raise ValueError("y must be at least e")
    iterates = [y]
    z = y
    for _ in range(max_iter):
        nz = y / math.log(z)
        iterates.append(nz)
        if abs(nz - z) <= rel_tol * abs(nz):
            z = nz
            break
        z = nz
    if abs(z * math.log(z) - y) > 1e-9 * abs(y):
        raise RuntimeError(f"iteration failed to invert z*log(z) = {y}")
    return z, iterates


def mertens_sum(x: float) -> tuple[float, bool]:
    """(sum_{p<=x} log(p)/(p-1), whether sum_{p<=x} log(p)/p < log(x))."""
    if x < 2:
        raise ValueError("x must be at least 2")
    total, check = 0.0, 0.0
    for p in primes_upto(int(math.floor(x))):
        total += math.log(p) / (p - 1)
        check += math.log(p) / p
    return total, check < math.log(x)


def residue_condition(n: int, r: int, m: int) -> tuple[bool, float]:
    """Whether r residue classes mod n force the decay, and the slope
    m - r(m+1)/phi(n) of the leading l*log(l) term (negative iff ok)."""
    if n < 3:
        raise InvalidModulusError("the modulus must be at least 3")
    phi = euler_phi(n)
    if not 1 <= r <= phi:
        raise ValueError(f"r must be within 1..phi({n}) = {phi}")
    ok = r * (m + 1) > m * phi
    slope = m - r * (m + 1) / phi
    return ok, slope


# ---------------------------------------------------------------------------
# linear recurrences


def _denominator_of(a: FieldElement) -> int:
    """The least positive integer n with n*a an algebraic integer."""
    cap = 2 * math.lcm(a.x.denominator, a.y.denominator)
    for n in sorted(k for k in range(1, cap + 1) if cap % k == 0):
        if (a * n).is_algebraic_integer():
            return n
    raise RuntimeError("unreachable: 2*lcm of coordinate denominators always works")


def recurrence_to_linear_form(c_vec, init) -> tuple[tuple[FieldElement, ...], tuple[FieldElement, ...], int]:
    """Reduce x_n = c_1 x_{n-1} + ... + c_k x_{n-k} (k <= 2, distinct roots)
    to sum_i b_i F(alpha_i) = d * sum_n n! x_n.

    The characteristic roots alpha_i are algebraic integers (the polynomial
    is monic with integer coefficients); the solution weights a_i are solved
    exactly, d clears their denominators, and b_i = d*a_i.
    """
    c_vec = tuple(int(c) for c in c_vec)
    init = tuple(int(x) for x in init)
    k = len(c_vec)
    if k > 2:
        raise OrderUnsupportedError("only recurrences of order <= 2 are reduced")
    if k == 0 or c_vec[-1] == 0:
        raise ValueError("the leading recurrence coefficient c_k must be nonzero")
    if len(init) != k:
        raise ValueError(f"expected {k} initial values")
    if k == 1:
        alpha = FieldElement(Fraction(c_vec[0]), Fraction(0), None)
        b = FieldElement(Fraction(init[0]), Fraction(0), None)
        return (alpha,), (b,), 1
    c1, c2 = c_vec
    disc = c1 * c1 + 4 * c2
    if disc == 0:
        raise RepeatedRootsError("the characteristic polynomial has a double root")
    s = squarefree_part(disc)
    f = math.isqrt(disc // s)
    if s == 1:
        d_field = None
        r1 = FieldElement(Fraction(c1 + f, 2), Fraction(0), None)
        r2 = FieldElement(Fraction(c1 - f, 2), Fraction(0), None)
    else:
        d_field = s
        r1 = FieldElement(Fraction(c1, 2), Fraction(f, 2), s)
        r2 = FieldElement(Fraction(c1, 2), Fraction(-f, 2), s)
    for r in (r1, r2):
        if not r.is_algebraic_integer():
            raise NonIntegralRootsError(f"characteristic root {r} is not integral")
    x0 = FieldElement(Fraction(init[0]), Fraction(0), d_field)
    x1 = FieldElement(Fraction(init[1]), Fraction(0), d_field)
    a1 = (x1 - x0 * r2) / (r1 - r2)
    a2 = x0 - a1
    d = math.lcm(_denominator_of(a1), _denominator_of(a2))
    return (r1, r2), (a1 * d, a2 * d), d


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class Certificate:
    """A machine-checkable non-vanishing record for one linear form.

    status "nonzero" means: at the recorded place and precision, the
    residue of the truncated linear form has valuation partial_valuation,
    strictly below both the precision and the proven tail bound, so the
    full value cannot vanish.  status "undetermined" carries no claim.
    """

    field_d: int | None
    lambdas: tuple[FieldElement, ...]
    alphas: tuple[FieldElement, ...]
    place: Place | None
    precision: int | None
    partial_valuation: Fraction | None
    tail_valuation_bound: Fraction | None
    status: str

    def to_json(self) -> dict:
        return {
            "field_d": self.field_d,
            "lambdas": [str(c) for c in self.lambdas],
            "alphas": [str(a) for a in self.alphas],
            "prime": None if self.place is None else self.place.p,
            "place": None if self.place is None else self.place.to_json(),
            "precision": self.precision,
            "partial_valuation": None if self.partial_valuation is None else str(self.partial_valuation),
            "tail_valuation_bound": None if self.tail_valuation_bound is None else str(self.tail_valuation_bound),
            "status": self.status,
        }


def certificate_from_json(obj: dict) -> Certificate:
    K = QuadraticField(obj["field_d"])
    lambdas = tuple(K.parse(s) for s in obj["lambdas"])
    alphas = tuple(K.parse(s) for s in obj["alphas"])
    place = None
    if obj["place"] is not None:
        place = Place(obj["place"]["p"], obj["place"]["splitting"], K.d)
    return Certificate(
        K.d,
        lambdas,
        alphas,
        place,
        obj["precision"],
        None if obj["partial_valuation"] is None else Fraction(obj["partial_valuation"]),
        None if obj["tail_valuation_bound"] is None else Fraction(obj["tail_valuation_bound"]),
        obj["status"],
    )


def linear_form_value(
    lambdas, alphas, v: Place, precision: int
) -> tuple[CompletionElement, Fraction]:
    """Residue mod p^precision of lambda_0 + sum_j lambda_j F_v(alpha_j),
    together with an exact lower bound on the valuation of what was cut.
    """
    acc = CompletionElement.from_field_element(v, precision, lambdas[0])
    tail: Fraction | None = None
    for lam, al in zip(lambdas[1:], alphas):
        if not lam:
            continue
        cv = euler_eval_certified(v, al, precision)
        lam_c = CompletionElement.from_field_element(v, precision, lam)
        acc = acc + lam_c * cv.value
        bound = cv.tail_valuation_bound + valuation(v, lam)
        tail = bound if tail is None else min(tail, bound)
    return acc, Fraction(precision) if tail is None else tail


def _validated_lambdas(K: QuadraticField, lambda_vec, m: int) -> tuple[FieldElement, ...]:
    lambdas = tuple(_as_field(K, c) for c in lambda_vec)
    if len(lambdas) != m + 1:
        raise ValueError(f"expected {m + 1} linear-form coefficients")
    if not any(lambdas):
        raise AllLambdaZeroError("the coefficient vector must not vanish")
    for c in lambdas:
        if not c.is_algebraic_integer():
            raise ValueError(f"coefficient {c} is not an algebraic integer")
    return lambdas


def certify_nonvanishing(
    K: QuadraticField,
    lambda_vec,
    alpha_vec,
    p_min: int,
    p_max: int,
    n_max: int = 64,
) -> Certificate:
    """Scan primes p_min..p_max for a place where the linear form provably
    does not vanish.

    Scan order is deterministic: ascending primes, places in the canonical
    order, precision doubling 4, 8, ..., n_max.  The first residue whose
    valuation drops strictly below both the precision and the tail bound is
    re-verified at four more digits and returned; running out of places
    yields an "undetermined" certificate, never a claim of vanishing.
    """
    alphas = _validated_alphas(K, alpha_vec)
    lambdas = _validated_lambdas(K, lambda_vec, len(alphas))
    if n_max < 4:
        raise ValueError("n_max must be at least 4")
    for p in prime_range(max(2, p_min), p_max):
        for v in places_above(K, p):
            n = 4
            while n <= n_max:
                value, tail = linear_form_value(lambdas, alphas, v, n)
                w = value.valuation_lower()
                if w is not None and w < tail and w < n:
                    cert = Certificate(
                        K.d, lambdas, alphas, v, n, w, tail, "nonzero"
                    )
                    if not verify_certificate(cert):
                        raise RuntimeError("re-verification failed; evaluator inconsistent")
                    return cert
                n *= 2
    return Certificate(K.d, lambdas, alphas, None, n_max, None, None, "undetermined")


def verify_certificate(cert: Certificate, extra_digits: int = 4) -> bool:
    """Independently recompute a nonzero certificate at higher precision.

    The valuation of the residue must reproduce exactly and still sit below
    the (now larger) tail bound.  Undetermined certificates claim nothing
    and verify vacuously.
    """
    if cert.status != "nonzero":
        return True
    v = cert.place
    precision = cert.precision + extra_digits
    value, tail = linear_form_value(cert.lambdas, cert.alphas, v, precision)
    w = value.valuation_lower()
    return (
        w is not None
        and w == cert.partial_valuation
        and w < tail
        and w < precision
        and tail >= cert.tail_valuation_bound
    )


# ---------------------------------------------------------------------------
# ready-made linear forms for the worked examples


def fibonacci_linear_form(a: int, b: int):
    """The linear form certifying sum_n n! f_n != a/b over Q(sqrt(5)).

    Reduces the Fibonacci recurrence to d * sum n! f_n = sum_i b_i F(alpha_i)
    with d = 5 and returns (K, lambdas, alphas) for lambda_0 = d*a,
    lambda_i = -b * b_i.
    """
    if b == 0:
        raise ValueError("the target denominator b must be nonzero")
    alphas, bs, d = recurrence_to_linear_form((1, 1), (0, 1))
    K = QuadraticField(alphas[0].d)
    lambdas = (K(d * a),) + tuple(-b * bi for bi in bs)
    return K, lambdas, alphas


def even_factorial_linear_form(a: int, b: int):
    """The linear form certifying sum_n (2n)! != a/b over Q.

    F(1) + F(-1) = 2 * sum (2n)!, so lambda = (2a, -b, -b) at alpha = (1, -1).
    """
    if b == 0:
        raise ValueError("the target denominator b must be nonzero")
    K = QuadraticField()
    return K, (K(2 * a), K(-b), K(-b)), (K(1), K(-1))
