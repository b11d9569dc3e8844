import math
import random
from fractions import Fraction

import pytest

from eulerpade.arith import legendre_symbol, primes_upto
from eulerpade.errors import NoConvergenceError, NotSplitError, PrecisionCapError
from eulerpade.numfield import QuadraticField
from eulerpade.padics import (
    PRECISION_CAP,
    CompletionElement,
    euler_eval_certified,
    genfact_eval,
    hensel_sqrt,
)
from eulerpade.places import places_above, valuation


def brute_force_sqrt(d, p, n):
    mod = p**n
    return sorted(r for r in range(mod) if (r * r - d) % mod == 0)


def test_hensel_sqrt_examples():
    # oracle: 48 is a root of x^2 = 5 mod 121 and 48 = 4 mod 11 with min(4, 7) = 4
    roots = brute_force_sqrt(5, 11, 2)
    assert 48 in roots
    assert hensel_sqrt(5, 11, 2) == 48
    assert hensel_sqrt(2, 7, 1) == 3
    with pytest.raises(NotSplitError):
        hensel_sqrt(5, 2, 1)
    with pytest.raises(NotSplitError):
        hensel_sqrt(3, 7, 1)  # 3 is not a QR mod 7
    with pytest.raises(NotSplitError):
        hensel_sqrt(25, 5, 2)  # p | d


def test_hensel_sqrt_random():
    rng = random.Random(7)
    odd_primes = [p for p in primes_upto(200) if p > 2]
    done = 0
    while done < 200:
        p = rng.choice(odd_primes)
        d = rng.randint(2, 10_000)
        if d % p == 0 or legendre_symbol(d, p) != 1:
            continue
        n = rng.randint(1, 64)
        r = hensel_sqrt(d, p, n)
        assert 0 < r < p**n
        assert (r * r - d) % p**n == 0
        # canonical choice: smaller residue mod p, stable under refinement
        assert r % p == min(r % p, p - r % p)
        assert hensel_sqrt(d, p, n + 3) % p**n == r
        done += 1


def test_two_adic_sqrt_chain_consistency():
    # the embedding at split places over 2 (d = 1 mod 8) must refine the
    # same 2-adic root at every precision: the mod-4-canonical roots mod 2^n
    # come in pairs differing by 2^(n-1), and only the reduction-consistent
    # member is acceptable
    from eulerpade.arith import canonical_sqrt_mod

    for d in (17, 33, 41, 73, 97):
        previous = None
        for n in range(1, 40):
            r = canonical_sqrt_mod(d, 2, n)
            assert (r * r - d) % (1 << n) == 0
            if previous is not None:
                assert r % (1 << (n - 1)) == previous
            previous = r


def test_euler_eval_frozen_values(KQ):
    (p2,) = places_above(KQ, 2)
    cv = euler_eval_certified(p2, 1, 2)
    assert cv.value.a == (1 + 1 + 2 + 6) % 4 == 2
    assert cv.tail_valuation_bound >= 3
    assert cv.terms_used == 4

    (p5,) = places_above(KQ, 5)
    cv5 = euler_eval_certified(p5, 1, 2)
    assert cv5.value.a == sum(math.factorial(n) for n in range(10)) % 25 == 14
    assert cv5.tail_valuation_bound >= 2


def test_euler_eval_zero_argument(KQ, K5):
    for K, p in ((KQ, 3), (K5, 2), (K5, 5)):
        for v in places_above(K, p):
            cv = euler_eval_certified(v, 0, 5)
            assert cv.value == CompletionElement.one(v, 5)
            assert cv.tail_valuation_bound >= 5


def test_euler_eval_rejects_non_integral(KQ, K5):
    (p2,) = places_above(KQ, 2)
    with pytest.raises(ValueError):
        euler_eval_certified(p2, Fraction(1, 2), 4)
    (v5,) = places_above(K5, 5)
    with pytest.raises(ValueError):
        euler_eval_certified(v5, K5(Fraction(1, 3), Fraction(1, 3)), 4)


def test_precision_cap(KQ):
    (p2,) = places_above(KQ, 2)
    with pytest.raises(PrecisionCapError):
        euler_eval_certified(p2, 1, PRECISION_CAP + 1)


def test_cauchy_consistency(K5):
    phi = K5(Fraction(1, 2), Fraction(1, 2))
    psi = phi.conjugate()
    for p in (2, 3, 5, 7, 11, 13):
        for v in places_above(K5, p):
            for alpha in (K5(1), K5(-1), phi, psi):
                previous = None
                for n in (4, 8, 16, 32):
                    cv = euler_eval_certified(v, alpha, n)
                    assert cv.tail_valuation_bound >= n
                    if previous is not None:
                        assert cv.value.reduce_to(previous.value.n) == previous.value
                    previous = cv


def test_tail_bound_soundness(K5, KQ):
    # adding 3 * terms_used more terms must not change the residue
    phi = K5(Fraction(1, 2), Fraction(1, 2))
    cases = [
        (places_above(KQ, 2)[0], KQ(1)),
        (places_above(KQ, 5)[0], KQ(-1)),
        (places_above(K5, 2)[0], phi),
        (places_above(K5, 5)[0], phi),
        (places_above(K5, 11)[0], K5(-1)),
    ]
    for v, alpha in cases:
        cv = euler_eval_certified(v, alpha, 6)
        n0 = cv.terms_used
        alpha_c = CompletionElement.from_field_element(v, 6, alpha)
        term = CompletionElement.one(v, 6)
        for n in range(1, n0):
            term = term * alpha_c * n
        extended = cv.value
        for n in range(n0, 4 * n0):
            term = term * alpha_c * n
            extended = extended + term
        assert extended == cv.value


def test_genfact_matches_euler(K5, KQ):
    phi = K5(Fraction(1, 2), Fraction(1, 2))
    for v, alpha in [
        (places_above(KQ, 2)[0], KQ(1)),
        (places_above(K5, 2)[0], phi),
        (places_above(K5, 11)[1], K5(2)),
        (places_above(K5, 5)[0], K5.sqrt_gen()),  # fractional w(t) = 1/2
    ]:
        direct = euler_eval_certified(v, alpha, 6)
        via_product = genfact_eval(v, 1, 1, alpha, 6, 10_000)
        assert via_product.value == direct.value
        assert via_product.tail_valuation_bound == direct.tail_valuation_bound
        assert via_product.terms_used == direct.terms_used


def test_genfact_odd_double_factorial(KQ):
    (p3,) = places_above(KQ, 3)
    cv = genfact_eval(p3, 1, 2, 1, 2, 1000)
    # oracle: 1 + 1 + 3 + 15 + 105 = 125 = 8 mod 9, and 945 has v_3 = 3
    assert cv.value.a == 125 % 9 == 8
    assert cv.terms_used == 5
    assert cv.tail_valuation_bound >= 2


def test_genfact_no_convergence(KQ):
    (p3,) = places_above(KQ, 3)
    with pytest.raises(NoConvergenceError):
        genfact_eval(p3, 1, 3, 1, 2, 500)  # every [P]_n is a 3-adic unit


def test_genfact_terminating_product(KQ):
    (p2,) = places_above(KQ, 2)
    # P(x) = 2 - x vanishes at x = 2, so [P]_n = 0 for n >= 3
    cv = genfact_eval(p2, 2, -1, 1, 4, 100)
    assert cv.value.a == (1 + 2 + 2) % 16
    assert cv.tail_valuation_bound >= 4


def test_residue_json_shapes(K5, KQ):
    (p2,) = places_above(KQ, 2)
    cv = euler_eval_certified(p2, 1, 3)
    js = cv.to_json()
    assert js["p"] == 2 and js["place"] == "rational" and js["N"] == 3
    assert isinstance(js["residue"], int)
    assert js["tail_valuation_bound"] == str(cv.tail_valuation_bound)

    (inert2,) = places_above(K5, 2)
    phi = K5(Fraction(1, 2), Fraction(1, 2))
    js2 = euler_eval_certified(inert2, phi, 3).to_json()
    assert isinstance(js2["residue"], list) and len(js2["residue"]) == 2
    u, w = (Fraction(part) for part in js2["residue"])
    # the pair is the residue in sqrt(5)-coordinates (half-integers allowed)
    assert u.denominator in (1, 2) and w.denominator in (1, 2)

    # ramified places produce half-integer tail bounds: at w(sqrt(5)) = 1/2
    # the first term clearing 3 is n = 5 with v_5(5!) + 5/2 = 7/2
    (ram5,) = places_above(K5, 5)
    js3 = euler_eval_certified(ram5, K5.sqrt_gen(), 3).to_json()
    assert js3["tail_valuation_bound"] == "7/2"
    assert js3["place"] == "ramified"


def test_reduction_is_ring_homomorphism(K5, Km1, KQ):
    # reduce(a) op reduce(b) == reduce(a op b) for + and * at every place kind
    rng = random.Random(8)
    from conftest import random_integral_element

    places = [
        places_above(KQ, 5)[0],
        places_above(K5, 11)[0],
        places_above(K5, 11)[1],
        places_above(K5, 3)[0],
        places_above(K5, 2)[0],
        places_above(K5, 5)[0],
        places_above(Km1, 2)[0],
        places_above(QuadraticField(17), 2)[0],
    ]
    for v in places:
        K = QuadraticField(v.d)
        for _ in range(40):
            a = random_integral_element(rng, K, -60, 60)
            b = random_integral_element(rng, K, -60, 60)
            ra = CompletionElement.from_field_element(v, 10, a)
            rb = CompletionElement.from_field_element(v, 10, b)
            assert ra + rb == CompletionElement.from_field_element(v, 10, a + b)
            assert ra * rb == CompletionElement.from_field_element(v, 10, a * b)
            assert ra - rb == CompletionElement.from_field_element(v, 10, a - b)


def test_completion_valuation_lower(K5, Km1, KQ):
    # the residue-read valuation agrees with the exact one on nonzero residues
    rng = random.Random(9)
    from conftest import random_integral_element

    places = [
        places_above(KQ, 3)[0],
        places_above(K5, 11)[0],
        places_above(K5, 2)[0],
        places_above(K5, 5)[0],
        places_above(Km1, 2)[0],
        places_above(QuadraticField(2), 2)[0],
    ]
    for v in places:
        K = QuadraticField(v.d)
        for _ in range(50):
            a = random_integral_element(rng, K, -40, 40)
            exact = valuation(v, a)
            got = CompletionElement.from_field_element(v, 12, a).valuation_lower()
            if got is None:
                assert exact >= 12
            else:
                assert got == exact
