from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from harmonic_index.errors import BadReversalBound, InexactDivision, UndefinedGcd, UndefinedValuation
from harmonic_index.poly import (
    NEG_INF,
    Poly,
    compose,
    divexact,
    divmod_poly,
    gcd,
    gcd_many,
    reverse,
    squarefree_decomposition,
    valuation_at_zero,
)
from harmonic_index.scalar import I, GaussianRational

from .strategies import gaussians, nonzero_polys, polys

z = Poly.z()


def P(*coeffs):
    return Poly(coeffs)


# -- ring operations ---------------------------------------------------------


def test_mul_difference_of_squares():
    assert (z + 1) * (z - 1) == z**2 - 1


def test_add_cancels_to_zero():
    s = z**2 + (-(z**2))
    assert s.is_zero()
    assert s.degree is NEG_INF


def test_imaginary_square():
    assert (z * I) * (z * I) == -(z**2)


def test_neg_inf_is_not_a_number():
    assert NEG_INF < 0 and NEG_INF < -(10**9)
    assert max(NEG_INF, 3) == 3
    with pytest.raises(TypeError):
        NEG_INF + 1


# -- derivative ----------------------------------------------------------------


@pytest.mark.parametrize(
    "p, expected",
    [(z**3, 3 * z**2), (Poly.constant(5), Poly()), (z + z**3, 1 + 3 * z**2)],
)
def test_derivative(p, expected):
    assert p.derivative() == expected


@given(polys(), polys(), gaussians)
def test_derivative_linear(p, q, c):
    assert (p + q.scale(c)).derivative() == p.derivative() + q.derivative().scale(c)


@given(polys(), polys())
def test_leibniz_rule(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@given(nonzero_polys)
def test_derivative_drops_degree_by_one(p):
    if p.degree >= 1:
        assert p.derivative().degree == p.degree - 1


# -- gcd -----------------------------------------------------------------------


def test_gcd_examples():
    assert gcd(z**2 - 1, z - 1) == z - 1
    assert gcd(z**2 + 1, z - I) == z - I
    # Euclid by hand: 1 + 3z^2 = (3/2 z)(2z) + 1, so the gcd is 1
    assert gcd(1 + 3 * z**2, 2 * z) == Poly.constant(1)


def test_gcd_with_zero_is_monic():
    assert gcd(3 * z**2 + 6, Poly()) == z**2 + 2
    with pytest.raises(UndefinedGcd):
        gcd(Poly(), Poly())
    with pytest.raises(UndefinedGcd):
        gcd_many([Poly(), Poly()])


@given(polys(4), polys(4), nonzero_polys)
def test_gcd_is_monic_common_divisor(a, b, c):
    p, q = a * c, b * c
    assume(not (p.is_zero() and q.is_zero()))
    g = gcd(p, q)
    assert g.leading() == 1
    divexact(p, g)
    divexact(q, g)
    # the planted factor divides the gcd
    divexact(g, c.monic())


# -- exact division ----------------------------------------------------------


def test_divexact_examples():
    assert divexact(z**2 - 1, z - 1) == z + 1
    for k in range(1, 7):
        assert divexact(k * z ** (3 * k - 1), z ** (k - 1)) == k * z ** (2 * k)
    with pytest.raises(InexactDivision):
        divexact(z**2, z**3)


@given(polys(), nonzero_polys)
def test_divmod_identity(p, q):
    quo, rem = divmod_poly(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


# -- composition / reversal / valuation ---------------------------------------


def test_compose_examples():
    for k in range(1, 6):
        assert compose(z**2, z**k) == z ** (2 * k)
    p = 1 + z - 3 * z**4
    assert compose(p, z) == p
    assert compose(z + z**3, z**2) == z**2 + z**6


@given(polys(3), polys(3), gaussians)
def test_compose_evaluates_consistently(p, q, x):
    assert compose(p, q)(x) == p(q(x))


def test_reverse_examples():
    assert reverse(1 + z + z**2, 2) == 1 + z + z**2
    assert reverse(z**2, 2) == Poly.constant(1)
    assert reverse(Poly.constant(1), 3) == z**3
    assert reverse(Poly(), 2).is_zero()
    with pytest.raises(BadReversalBound):
        reverse(z**3, 2)


@given(nonzero_polys, st.integers(0, 3))
def test_reverse_involution(p, extra):
    assume(valuation_at_zero(p) == 0)
    d = p.degree + extra
    assert reverse(reverse(p, d), d) == p


def test_valuation_examples():
    assert valuation_at_zero(z**3 + z**5) == 3
    assert valuation_at_zero(1 + z) == 0
    # flipped-chart Wronskian of [1, z + z^3, z^2]
    assert valuation_at_zero(2 * z * (3 - z**2)) == 1
    with pytest.raises(UndefinedValuation):
        valuation_at_zero(Poly())


# -- invariants ----------------------------------------------------------------


@given(nonzero_polys, nonzero_polys)
def test_degree_is_additive(p, q):
    assert (p * q).degree == p.degree + q.degree


@given(st.lists(nonzero_polys, min_size=1, max_size=4))
def test_squarefree_decomposition_reconstructs(factors):
    p = Poly.constant(1)
    for m, f in enumerate(factors, start=1):
        p = p * f**m
    parts = squarefree_decomposition(p)
    rebuilt = Poly.constant(1)
    for m, s in enumerate(parts, start=1):
        assert s.degree == 0 or gcd(s, s.derivative()).degree == 0
        rebuilt = rebuilt * s**m
    assert rebuilt == p.monic()


@given(st.lists(st.tuples(st.sampled_from("+-*"), polys(2)), min_size=5, max_size=25), polys(2))
def test_long_op_chains_stay_exact(ops, start):
    acc = start
    for op, p in ops:
        acc = {"+": acc + p, "-": acc - p, "*": acc * p if acc.degree < 12 else acc}[op]
    for c in acc.coeffs:
        assert isinstance(c.re, Fraction) and isinstance(c.im, Fraction)
        assert c.re.denominator > 0 and c.im.denominator > 0


def test_string_rendering():
    assert str(1 + 3 * z**2) == "1 + 3*z^2"
    assert str(z**2 - z**4) == "z^2 - z^4"
    assert str(P(GaussianRational(1, 2), 0, I)) == "(1+2*i) + i*z^2"
