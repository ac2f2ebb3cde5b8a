from dataclasses import replace
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings

from harmonic_index.curve import RationalSelfMap, chart_flip, make_curve, precompose, rational_normal_curve
from harmonic_index.errors import BadLevel, NotFull
from harmonic_index.poly import Poly
from harmonic_index.sequence import (
    SequenceInvariants,
    associated_degree,
    common_zero_degree,
    invariants,
    level_minors,
    ramification_by_points,
    ramification_indices,
    verify_plucker,
)

from .strategies import full_curves, full_gaussian_curves

z = Poly.z()
VERONESE = make_curve(2, [1, z, z**2])
CUBIC = make_curve(2, [1, z + z**3, z**2])
X = sympy.Symbol("z")


# -- independent sympy oracle ------------------------------------------------


def to_sympy(p: Poly):
    return sum(
        (sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator))
        * X**k
        for k, c in enumerate(p.coeffs)
    )


def sympy_minors(c, k):
    F = [to_sympy(p) for p in c.components]
    M = sympy.Matrix([[sympy.diff(f, X, j) for j in range(k + 1)] for f in F])
    return [sympy.expand(M.extract(list(rows), list(range(k + 1))).det()) for rows in combinations(range(c.n + 1), k + 1)]


def sympy_reduced_degree(c, k):
    minors = [m for m in sympy_minors(c, k) if m != 0]
    g = minors[0]
    for m in minors[1:]:
        g = sympy.gcd(g, m)
    return max(sympy.degree(sympy.cancel(m / g), X) for m in minors)


# -- level minors ----------------------------------------------------------------


def test_level_minors_examples():
    assert level_minors(VERONESE, 1) == (Poly.constant(1), 2 * z, z**2)
    assert level_minors(CUBIC, 1) == (1 + 3 * z**2, 2 * z, z**2 - z**4)
    assert level_minors(CUBIC, 2) == (2 - 6 * z**2,)
    assert level_minors(CUBIC, 0) == CUBIC.components


def test_level_minor_errors():
    with pytest.raises(BadLevel):
        level_minors(CUBIC, 3)
    with pytest.raises(BadLevel):
        common_zero_degree(CUBIC, 0)
    with pytest.raises(NotFull):
        level_minors(make_curve(2, [1, z, 1 + z]), 1)


@settings(max_examples=25)
@given(full_curves)
def test_minors_match_sympy(c):
    for k in range(c.n + 1):
        ours = [to_sympy(p) for p in level_minors(c, k)]
        assert [sympy.expand(a - b) for a, b in zip(ours, sympy_minors(c, k))] == [0] * len(ours)


# -- common zeros, associated degrees, ramification ------------------------------


def test_common_zero_degree_examples():
    assert common_zero_degree(VERONESE, 1) == 0
    for k in range(1, 6):
        assert common_zero_degree(precompose(VERONESE, RationalSelfMap.power(k)), 1) == 2 * (k - 1)
    # 2 - 6z^2 has two finite zeros; the flipped Wronskian 2w(3 - w^2) vanishes once at w = 0
    assert common_zero_degree(CUBIC, 2) == 3


def test_associated_degree_examples():
    assert associated_degree(VERONESE, 1) == 2
    assert associated_degree(CUBIC, 1) == 4
    for c in (VERONESE, CUBIC, rational_normal_curve(4)):
        assert associated_degree(c, c.n) == 0
        assert associated_degree(c, 0) == c.d


@settings(max_examples=20)
@given(full_curves)
def test_associated_degrees_match_sympy(c):
    for k in range(c.n + 1):
        assert associated_degree(c, k) == sympy_reduced_degree(c, k)


def test_ramification_examples():
    assert ramification_indices(VERONESE) == [0, 0]
    assert ramification_indices(CUBIC) == [0, 3]
    for k in range(1, 6):
        assert ramification_indices(precompose(VERONESE, RationalSelfMap.power(k))) == [2 * (k - 1)] * 2


# -- full invariants ----------------------------------------------------------------


def test_invariants_veronese():
    inv = invariants(VERONESE)
    assert (inv.deg_f, inv.d, inv.r, inv.map_deg) == (2, (2, 2, 0), (0, 0), (2, 0, -2))


def test_invariants_cubic():
    inv = invariants(CUBIC)
    assert (inv.deg_f, inv.d, inv.r, inv.map_deg) == (3, (3, 4, 0), (0, 3), (3, 1, -4))
    assert inv.G == (0, 0, 3)


def test_invariants_twisted_cubic():
    # brute-force minors: d_1 = deg [1, 2z, 3z^2, z^2, 2z^3, z^4] = 4, d_2 = deg [2, 6z, 6z^2, 2z^3] = 3
    inv = invariants(rational_normal_curve(3))
    assert (inv.d, inv.r, inv.map_deg) == ((3, 4, 3, 0), (0, 0, 0), (3, 1, -1, -3))


def test_not_full_rejected():
    with pytest.raises(NotFull):
        invariants(make_curve(2, [1, z, 1 + z]))


@settings(max_examples=40)
@given(full_curves)
def test_random_curves_satisfy_plucker(c):
    inv = invariants(c)
    rep = verify_plucker(inv)
    assert rep.passed, rep.to_dict()
    assert inv.map_deg[0] == inv.deg_f > 0
    assert inv.map_deg[-1] == -inv.d[-2] < 0


@settings(max_examples=30)
@given(full_curves)
def test_ramification_is_chart_independent(c):
    assert invariants(chart_flip(c)).r == invariants(c).r


@settings(max_examples=30)
@given(full_curves)
def test_point_oracle_agrees(c):
    assert ramification_by_points(c) == list(invariants(c).r)


@pytest.mark.parametrize("k", range(1, 6))
def test_veronese_power_oracle(k):
    c = precompose(VERONESE, RationalSelfMap.power(k))
    assert ramification_by_points(c) == [2 * (k - 1)] * 2 == ramification_indices(c)


def test_point_oracle_on_mixed_multiplicities():
    # z^2 branch point at 0 composed with a curve ramified elsewhere
    c = precompose(CUBIC, RationalSelfMap(z**2 + z, Poly.constant(1)))
    assert ramification_by_points(c) == ramification_indices(c)


# -- verification report -------------------------------------------------------------


def test_verify_examples():
    for c in (VERONESE, CUBIC):
        rep = verify_plucker(invariants(c))
        assert rep.passed
        assert rep.to_dict() == {
            "recursion_residuals": [0, 0],
            "ramrelation_residual": 0,
            "degree_residuals": [0, 0, 0],
            "pass": True,
        }


def test_verify_detects_tampering():
    inv = invariants(CUBIC)
    bad = replace(inv, r=(inv.r[0], inv.r[1] + 1))
    rep = verify_plucker(bad)
    assert not rep.passed
    assert rep.recursion_residuals == (0, -1)
    assert rep.ramrelation_residual == 1


def test_verify_shape_errors():
    rep = verify_plucker(SequenceInvariants(n=2, deg_f=2, d=(2, 0), r=(0, 0), map_deg=(2, 0, -2)))
    assert not rep.passed and rep.shape_errors


def test_abstract_genus_one_invariants():
    # torus directrix: deg 5, r = (4, 7); d from the Plücker recursion with g = 1
    inv = SequenceInvariants(n=2, g=1, deg_f=5, d=(5, 6, 0), r=(4, 7), map_deg=(5, 1, -6))
    assert verify_plucker(inv).passed


def test_invariants_dict_round_trip():
    inv = invariants(CUBIC)
    assert SequenceInvariants.from_dict(inv.to_dict()) == inv


@settings(max_examples=25)
@given(full_gaussian_curves)
def test_complex_coefficients(c):
    inv = invariants(c)
    assert verify_plucker(inv).passed
    assert ramification_by_points(c) == list(inv.r)
    conj = make_curve(c.n, [p.conjugate() for p in c.components])
    assert invariants(conj) == inv
