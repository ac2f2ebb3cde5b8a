import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from harmonic_index.bounds import (
    STABLE_NOTE,
    DirectrixInvariants,
    baseline_bound,
    bound_report,
    corollary_bound,
    cp2_bounds,
    deg_phi,
    improvement,
    ramrelation_check,
    theorem_bound,
)
from harmonic_index.errors import InvalidDirectrix, NotApplicable
from harmonic_index.sequence import invariants

from .strategies import full_curves


def D(n, g, deg_f, rho, r, r_full=None):
    return DirectrixInvariants(n, g, deg_f, rho, tuple(r), r_full)


def test_deg_phi_examples():
    assert deg_phi(D(2, 0, 2, 1, [0])) == 0
    assert deg_phi(D(2, 0, 3, 1, [0])) == 1
    for k in range(1, 6):
        assert deg_phi(D(2, 1, 5 * k, 1, [4 * k])) == k


def test_baseline_examples():
    assert baseline_bound(D(2, 0, 2, 1, [0])) == 2
    assert baseline_bound(D(2, 0, 3, 1, [0])) == 5
    assert baseline_bound(D(2, 1, 5, 1, [4])) == 3


@pytest.mark.parametrize("k", range(1, 6))
def test_theorem_and_corollary_families(k):
    assert theorem_bound(D(2, 0, 2 * k, 1, [2 * (k - 1)])) == 2 * k + 1
    assert theorem_bound(D(2, 0, 3 * k, 1, [2 * (k - 1)])) == 5 * k + 1
    assert theorem_bound(D(2, 1, 5 * k, 1, [4 * k])) == 7 * k
    assert corollary_bound(D(2, 0, 2 * k, 1, [2 * (k - 1)])) == 2 * k + 1
    assert corollary_bound(D(2, 0, 3 * k, 1, [2 * (k - 1)])) == 5 * k + 1
    assert corollary_bound(D(2, 1, 5 * k, 1, [4 * k])) == 7 * k


@pytest.mark.parametrize("r0", range(0, 8))
def test_improvement_sphere_and_torus(r0):
    assert improvement(D(2, 0, r0 + 2, 1, [r0]))[0] == r0 + 1
    assert improvement(D(2, 1, r0 + 1, 1, [r0]))[0] == r0


@pytest.mark.parametrize("g", [1, 2, 3, 4])
@pytest.mark.parametrize("k", [1, 2, 5])
def test_higher_genus_improves(g, k):
    r0 = 2 * k + 2 * g - 2
    inv = D(2, g, 3 * k, 1, [r0])
    assert deg_phi(inv) == k
    delta, improves = improvement(inv)
    assert improves and delta == r0 - (g - 1)


def test_ramrelation_examples():
    assert ramrelation_check(2, 0, 2, [0, 0])
    assert ramrelation_check(2, 0, 3, [0, 3])
    assert ramrelation_check(2, 1, 5, [4, 7])
    assert not ramrelation_check(2, 1, 5, [4, 6])
    with pytest.raises(InvalidDirectrix):
        ramrelation_check(2, 0, 2, [0])


def test_directrix_validation():
    with pytest.raises(InvalidDirectrix):
        D(2, 0, 2, 1, [])
    with pytest.raises(InvalidDirectrix):
        D(2, 0, 2, 3, [0, 0, 0])
    with pytest.raises(InvalidDirectrix):
        D(2, 0, 2, 1, [-1])
    with pytest.raises(InvalidDirectrix):
        D(2, 1, 5, 1, [4], (4, 6))
    with pytest.raises(InvalidDirectrix):
        D(2, 1, 5, 1, [3], (4, 7))
    assert D(2, 1, 5, 1, [4], (4, 7)).r_full == (4, 7)


def test_from_ramification_accepts_full_sequence():
    inv = DirectrixInvariants.from_ramification(2, 1, 5, 1, [4, 7])
    assert inv.r_prefix == (4,) and inv.r_full == (4, 7)


@pytest.mark.parametrize("rho", [0, 2])
def test_pm_holomorphic_not_applicable(rho):
    inv = D(2, 0, 2, rho, [0] * rho)
    for fn in (baseline_bound, theorem_bound, corollary_bound, improvement):
        with pytest.raises(NotApplicable):
            fn(inv)
    rep = bound_report(inv)
    assert not rep.applicable and rep.theorem is None
    assert STABLE_NOTE in rep.notes


def test_vacuous_bounds_are_flagged_not_clamped():
    rep = bound_report(D(3, 0, 3, 2, [5, 0]))
    assert rep.theorem <= 0 and rep.vacuous


def test_cp2_bounds():
    for k in range(1, 6):
        assert cp2_bounds(D(2, 0, 2 * k, 1, [2 * (k - 1)])).theorem == 2 * k + 1
        assert cp2_bounds(D(2, 0, 3 * k, 1, [2 * (k - 1)])).theorem == 5 * k + 1
        assert cp2_bounds(D(2, 1, 5 * k, 1, [4 * k])).theorem == 7 * k
    with pytest.raises(NotApplicable):
        cp2_bounds(D(2, 2, 9, 1, [8]))
    with pytest.raises(NotApplicable):
        cp2_bounds(D(3, 0, 3, 1, [0]))


def test_genus_two_note():
    rep = bound_report(D(2, 2, 9, 1, [8]))
    assert any("not certified" in note for note in rep.notes)


@st.composite
def directrices(draw):
    n = draw(st.integers(2, 6))
    rho = draw(st.integers(1, n - 1))
    g = draw(st.integers(0, 3))
    deg_f = draw(st.integers(1, 40))
    r = draw(st.lists(st.integers(0, 10), min_size=rho, max_size=rho))
    return D(n, g, deg_f, rho, r)


@given(directrices())
def test_theorem_equals_corollary(inv):
    assert theorem_bound(inv) == corollary_bound(inv)


@given(directrices())
def test_gain_identity(inv):
    gain = sum((a + 1) * r for a, r in enumerate(inv.r_prefix)) - inv.rho**2 * (inv.g - 1)
    assert theorem_bound(inv) - baseline_bound(inv) == gain
    assert improvement(inv) == (gain, gain > 0)


@given(directrices(), st.data())
def test_theorem_decreases_in_each_ramification(inv, data):
    inv = DirectrixInvariants(inv.n, 0, inv.deg_f, inv.rho, inv.r_prefix)
    a = data.draw(st.integers(0, inv.rho - 1))
    bumped = list(inv.r_prefix)
    bumped[a] += 1
    after = DirectrixInvariants(inv.n, 0, inv.deg_f, inv.rho, tuple(bumped))
    assert theorem_bound(inv) - theorem_bound(after) == inv.n - a


@settings(max_examples=30)
@given(full_curves)
def test_computed_invariants_feed_the_evaluators(c):
    inv = invariants(c)
    for rho in range(inv.n + 1):
        rep = bound_report(DirectrixInvariants.from_sequence(inv, rho))
        assert rep.applicable == (0 < rho < inv.n)
