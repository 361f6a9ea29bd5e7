import json
import random

import pytest

from cyclocat.arith import IntPolynomial
from cyclocat.quantum import (
    CycloIntegerElement,
    LaurentPolynomial2,
    QuotientElementXY,
    bezout_sides,
    bezout_witness,
    check_bezout_identity,
    check_crt_correspondence,
    check_product_identity,
    crt_exponents,
    cyclotomic,
    in_product_ideal,
    is_prime,
    quantum_integer,
    verify_main_theorem,
)
from oracles import bezout_brute, crt_brute, phi_by_quotient

PRIMES = [2, 3, 5, 7, 11, 13]
PAIRS = [(p, q) for p in PRIMES for q in PRIMES if p != q]


def test_quantum_integer():
    assert quantum_integer(1) == IntPolynomial([1])
    assert quantum_integer(3) == IntPolynomial([1, 1, 1])
    q15 = quantum_integer(15)
    assert q15.degree == 14 and set(q15.coeffs) == {1}
    with pytest.raises(ValueError):
        quantum_integer(0)


def test_cyclotomic_examples():
    assert cyclotomic(1) == IntPolynomial([-1, 1])
    assert cyclotomic(3) == quantum_integer(3)
    assert list(cyclotomic(15).coeffs) == [1, -1, 0, 1, -1, 1, 0, -1, 1]


@pytest.mark.parametrize("n,m", PAIRS)
def test_identities_for_small_primes(n, m):
    assert check_product_identity(n, m)
    assert check_bezout_identity(n, m)
    assert list(cyclotomic(n * m).coeffs) == phi_by_quotient(n, m)


def test_bezout_witness_examples():
    assert bezout_witness(3, 5) == (2, 1)
    assert bezout_witness(5, 3) == (2, 3)
    assert bezout_witness(3, 7) == (5, 2)
    for n, m in PAIRS:
        assert bezout_witness(n, m) == bezout_brute(n, m)
    with pytest.raises(ValueError):
        bezout_witness(3, 6)


def test_bezout_expansion_for_15():
    lhs, rhs = bezout_sides(3, 5)
    # (1 + q^3)(1 + q^5 + q^10) - q(1 + q^3 + q^6 + q^9 + q^12)
    a = IntPolynomial([1, 0, 0, 1]) * IntPolynomial([1] + [0] * 4 + [1] + [0] * 4 + [1])
    b = IntPolynomial.monomial(1) * IntPolynomial([1, 0, 0] * 4 + [1])
    assert rhs == a - b == lhs


def test_crt_exponents():
    assert crt_exponents(3, 5) == (10, 6)
    assert crt_exponents(3, 7) == (7, 15)
    assert crt_exponents(1, 7) == (0, 1)
    for n, m in PAIRS:
        assert crt_exponents(n, m) == crt_brute(n, m)
    with pytest.raises(ValueError):
        crt_exponents(4, 6)


def test_crt_correspondence():
    for n, m in PAIRS:
        assert check_crt_correspondence(n, m)
    alpha, beta = crt_exponents(3, 5)
    e = (2 * alpha + 3 * beta) % 15
    assert e == 8 and (e % 3, e % 5) == (2, 3)


def test_invalid_prime_inputs():
    for bad in ((3, 3), (4, 5), (1, 5)):
        with pytest.raises(ValueError):
            check_product_identity(*bad)
    with pytest.raises(ValueError, match="odd"):
        verify_main_theorem(2, 3)
    assert [k for k in range(20) if is_prime(k)] == [2, 3, 5, 7, 11, 13, 17, 19]


def _random_laurent(rng, lo=-4, hi=6):
    return LaurentPolynomial2({(rng.randint(lo, hi), rng.randint(lo, hi)): rng.randint(-5, 5) for _ in range(6)})


def test_laurent_arithmetic():
    x = LaurentPolynomial2.monomial(1, 0)
    y = LaurentPolynomial2.monomial(0, 1)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert str(p) == "-y^2 + x^2"
    assert x ** -2 * x ** 2 == LaurentPolynomial2.monomial(0, 0)
    one = LaurentPolynomial2.monomial(0, 0)
    assert (x ** -1 * y).clear_units() == one
    assert (x ** -1 * y + x ** 2 * y ** 3).clear_units() == one + x ** 3 * y ** 2
    with pytest.raises(ValueError):
        (x + y) ** -1


def test_normal_form_idempotent_and_multiplicative():
    rng = random.Random(3)
    for n, m in ((3, 5), (5, 7), (2, 3)):
        for _ in range(30):
            a, b = _random_laurent(rng), _random_laurent(rng)
            A, B = QuotientElementXY(n, m, a), QuotientElementXY(n, m, b)
            assert QuotientElementXY(n, m, A.rep) == A
            assert QuotientElementXY(n, m, a * b) == A * B
            assert QuotientElementXY(n, m, a + b) == A + B
            assert all(i < n - 1 and j < m - 1 and i >= 0 and j >= 0 for i, j in A.rep.terms)


def test_quotient_to_cyclotomic_on_monomials():
    n, m = 3, 5
    alpha, beta = crt_exponents(n, m)
    for a in range(-3, 6):
        for b in range(-3, 8):
            img = QuotientElementXY(n, m, LaurentPolynomial2.monomial(a, b)).to_cyclotomic()
            assert img == CycloIntegerElement.q_power(15, a * alpha + b * beta)


def test_cyclotomic_to_cyclotomic_is_homomorphism():
    rng = random.Random(8)
    for _ in range(20):
        a, b = _random_laurent(rng), _random_laurent(rng)
        A, B = QuotientElementXY(3, 5, a), QuotientElementXY(3, 5, b)
        assert (A * B).to_cyclotomic() == A.to_cyclotomic() * B.to_cyclotomic()


def test_product_ideal_membership():
    qn = LaurentPolynomial2.from_x(quantum_integer(3))
    qm = LaurentPolynomial2.from_y(quantum_integer(5))
    unit = LaurentPolynomial2.monomial(-2, 3)
    assert in_product_ideal(unit * qn * qm * (qn + 7), 3, 5)
    assert not in_product_ideal(qn, 3, 5)
    assert not in_product_ideal(qm, 3, 5)


def test_cyclo_integer_element():
    e = CycloIntegerElement(15, quantum_integer(15))
    assert e.is_zero()
    assert str(CycloIntegerElement(15, [0])) == "0 in Z[q]/Phi_15"


@pytest.mark.parametrize("n,m", [(3, 5), (3, 7), (5, 7)])
def test_verify_main_theorem(n, m):
    r = verify_main_theorem(n, m)
    assert r.passed
    lines = r.to_text().splitlines()
    assert [l.split(" ")[0] for l in lines if l.startswith("step")] == ["step1:", "step2:", "step3:", "step4:"]
    assert all(": PASS" in l for l in lines if l.startswith("step"))
    data = json.loads(r.to_json())
    assert data["passed"] and [s["passed"] for s in data["steps"]] == [True] * 4
