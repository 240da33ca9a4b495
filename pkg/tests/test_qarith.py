"""Exact field arithmetic, q-numbers, and the factorial splitting identity."""

import cmath
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pga.qarith import (
    CycloElement,
    cyclotomic_polynomial,
    embed,
    make_context,
    q_factorial,
    q_half_power,
    q_number,
    q_quarter_power,
)

small_fractions = st.fractions(
    min_value=-3, max_value=3, max_denominator=4
)


def elements(p):
    ctx = make_context(p)
    return st.lists(
        small_fractions, min_size=ctx.degree, max_size=ctx.degree
    ).map(lambda cs: CycloElement(ctx, cs))


# ---------------------------------------------------------------------------
# cyclotomic polynomials


def test_known_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_polynomial(16) == (1, 0, 0, 0, 0, 0, 0, 0, 1)


@pytest.mark.parametrize("n", [8, 12, 16, 20, 24, 28])
def test_cyclotomic_product_recovers_xn_minus_1(n):
    prod = [1]
    for d in range(1, n + 1):
        if n % d == 0:
            phi = cyclotomic_polynomial(d)
            out = [0] * (len(prod) + len(phi) - 1)
            for i, a in enumerate(prod):
                for j, b in enumerate(phi):
                    out[i + j] += a * b
            prod = out
    assert prod == [-1] + [0] * (n - 1) + [1]


@pytest.mark.parametrize("n", [8, 12, 16, 20, 24, 28])
def test_primitive_root_annihilates_modulus(n):
    w = cmath.exp(2j * cmath.pi / n)
    val = sum(c * w**k for k, c in enumerate(cyclotomic_polynomial(n)))
    assert abs(val) < 1e-9


# ---------------------------------------------------------------------------
# context and designated powers


def test_context_validation():
    with pytest.raises(ValueError):
        make_context(0)
    with pytest.raises(ValueError):
        make_context(3, root_index=2)  # gcd(2, 4) != 1
    ctx = make_context(4, root_index=3)
    assert abs(ctx.q.embed() - cmath.exp(2j * cmath.pi * 3 / 5)) < 1e-12


@pytest.mark.parametrize("p", range(1, 7))
def test_primitivity(p):
    ctx = make_context(p)
    assert ctx.q_power(p + 1) == 1
    for k in range(1, p + 1):
        assert ctx.q_power(k) != 1
        assert q_number(ctx, k)  # nonzero
    assert not q_number(ctx, p + 1)


def test_q_number_examples():
    assert q_number(make_context(2), 0) == 0
    ctx3 = make_context(3)
    assert q_number(ctx3, 2) == ctx3.one + ctx3.q
    assert abs(embed(ctx3, q_number(ctx3, 2)) - (1 + 1j)) < 1e-12
    assert q_number(ctx3, 4) == 0


def test_q_factorial_examples():
    ctx2 = make_context(2)
    assert q_factorial(ctx2, 0) == 1
    assert q_factorial(ctx2, 2) == ctx2.one + ctx2.q
    assert q_factorial(make_context(3), 4) == 0


@pytest.mark.parametrize("p", range(1, 7))
def test_q_number_against_closed_form(p):
    # independent route: (1 - q**n) / (1 - q) evaluated numerically
    ctx = make_context(p)
    qc = ctx.q.embed()
    for n in range(1, p + 1):
        expect = (1 - qc**n) / (1 - qc)
        assert abs(q_number(ctx, n).embed() - expect) < 1e-12


def test_half_and_quarter_powers():
    ctx1 = make_context(1)
    assert q_half_power(ctx1, 0) == 1
    assert abs(q_half_power(ctx1, 1).embed() - 1j) < 1e-12
    for p in (1, 2, 3, 5):
        ctx = make_context(p)
        assert q_half_power(ctx, 2) == ctx.q
        assert q_quarter_power(ctx, 4) == ctx.q
        assert q_quarter_power(ctx, 2) == q_half_power(ctx, 1)


def test_embed_examples():
    assert abs(embed(make_context(1), make_context(1).one) - 1) < 1e-15
    assert abs(embed(make_context(1), make_context(1).q) + 1) < 1e-12
    assert abs(embed(make_context(3), make_context(3).q) - 1j) < 1e-12


# ---------------------------------------------------------------------------
# the factorial splitting identity and the spin sum


@pytest.mark.parametrize("p", range(1, 7))
def test_factorial_splitting_identity(p):
    ctx = make_context(p)
    top = q_factorial(ctx, p)
    for n in range(p + 1):
        half = (n * (n + 1)) // 2  # n(n+1) is always even
        rhs = (
            (-1) ** n
            * ctx.q_power(-half)
            * q_factorial(ctx, n)
            * q_factorial(ctx, p - n)
        )
        assert top == rhs


@pytest.mark.parametrize("p", range(1, 7))
def test_geometric_spin_sum(p):
    ctx = make_context(p)
    for k in range(p + 1):
        acc = ctx.zero
        for sigma in range(p + 1):
            acc = acc + ctx.q_power(k * sigma)
        assert acc == (p + 1 if k == 0 else 0)


# ---------------------------------------------------------------------------
# field structure


@given(a=elements(2), b=elements(2))
def test_embed_is_additive_and_multiplicative(a, b):
    assert abs((a + b).embed() - (a.embed() + b.embed())) < 1e-12
    assert abs((a * b).embed() - (a.embed() * b.embed())) < 1e-12


@given(a=elements(3))
def test_inverse(a):
    if a:
        assert a * a.inverse() == 1


@given(a=elements(2), b=elements(2), c=elements(2))
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a * b == b * a


@given(a=elements(2))
def test_conjugation_is_an_involution(a):
    assert a.conjugate().conjugate() == a
    assert abs(a.conjugate().embed() - a.embed().conjugate()) < 1e-12


def test_rational_extraction():
    ctx = make_context(2)
    e = ctx.from_rational(Fraction(7, 3))
    assert e.is_rational() and e.to_rational() == Fraction(7, 3)
    with pytest.raises(ValueError):
        ctx.q.to_rational()


def test_json_roundtrip():
    ctx = make_context(2)
    e = ctx.q + ctx.from_rational(Fraction(1, 2))
    assert CycloElement.from_json(ctx, e.to_json()) == e
    blob = e.to_json()
    assert blob["order"] == 12
    assert all("/" in s for s in blob["coeffs"])
