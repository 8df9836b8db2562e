import numpy as np
import pytest
from hypothesis import example, given, settings
from hypothesis import strategies as st

from skinlab.complexalg import MobiusMap, chordal_distance, fixed_points, mobius_from_triples, trace_sq
from skinlab.reppath import (
    DELTA1,
    DELTA2,
    DELTAS,
    SYMMETRY_CHECKS,
    XI,
    GroupWord,
    RepPoint,
    evaluate_word,
    f_delta12,
    f_delta12_derivative_im,
    gen_a_matrix,
    limit_orbit,
    orbit_symmetry_defect,
    psi_map,
    rep_at,
    sign_resolved_trace,
    symmetry_report,
    triple_generators,
)

T_GRID = np.linspace(1 / 200, 1, 200)
words = st.text(alphabet="AaBb", max_size=8)


def test_word_reduction_and_inverse():
    assert GroupWord("AaB").letters == "B"
    assert GroupWord("abBA").letters == ""
    w = GroupWord("aBBAA")
    assert (w * w.inverse()).letters == ""
    with pytest.raises(ValueError):
        GroupWord("AC")


def test_xi_and_eta_words():
    assert XI.letters == "aaBAbA"
    assert (DELTAS[0] * DELTAS[1] * DELTAS[2] * DELTAS[3]).letters == ""


def test_rep_at_rejects_nonpositive():
    with pytest.raises(ValueError):
        rep_at(0)
    with pytest.raises(ValueError):
        rep_at(-0.5)


def test_generators_at_one():
    s = (1 + 1j) / 2
    rep = rep_at(1.0)
    assert rep.gen_a.equals_up_to_sign(MobiusMap(s, s, s * (1 + 2j), s), 1e-12)
    assert rep.gen_b.equals_up_to_sign(MobiusMap(-s * 1j, -s * (-1 + 2j), -s, -s * 1j), 1e-12)


@pytest.mark.parametrize("t", [0.5, 0.4, 1.0, 0.137])
def test_generators_match_triples(t):
    rep = rep_at(t)
    a, b = triple_generators(t)
    assert rep.gen_a.equals_up_to_sign(a, 1e-12)
    assert rep.gen_b.equals_up_to_sign(b, 1e-12)


def test_half_matches_explicit_triples():
    a = mobius_from_triples((-1, 0.5j, 0), (0, -0.5j, 1))
    assert rep_at(0.5).gen_a.equals_up_to_sign(a, 1e-12)


def test_empty_word_is_identity():
    assert evaluate_word(rep_at(0.3), GroupWord()).equals_up_to_sign(MobiusMap.identity())


@pytest.mark.parametrize("t", T_GRID)
def test_peripheral_words_parabolic(t):
    rep = rep_at(t)
    for d in DELTAS:
        assert abs(trace_sq(evaluate_word(rep, d)) - 4) < 1e-9


@pytest.mark.parametrize("t", np.linspace(0.01, 1, 50))
def test_trace_sq_of_a_closed_form(t):
    assert abs(trace_sq(gen_a_matrix(t)) - (2 * t / (t - 1j)) ** 2) < 1e-10


def test_delta12_trace_at_one():
    m = evaluate_word(rep_at(1.0), DELTA1 * DELTA2).normalized()
    assert abs(abs(m.trace()) - 7) < 1e-12
    assert f_delta12(1.0) == pytest.approx(-7 + 0j)


@pytest.mark.parametrize("t", T_GRID)
def test_f_closed_form_matches_matrix_trace(t):
    tr = evaluate_word(rep_at(t), DELTA1 * DELTA2).normalized().trace()
    f = f_delta12(t)
    assert min(abs(tr - f), abs(tr + f)) < 1e-9 * max(1, abs(f))
    # the lift as given needs no sign flip
    assert abs(evaluate_word(rep_at(t), DELTA1 * DELTA2).trace() - f) < 1e-9 * max(1, abs(f))


def test_im_f_negative_and_increasing():
    ts = np.linspace(0.001, 0.999, 1000)
    im = np.array([f_delta12(t).imag for t in ts])
    assert np.all(im < 0)
    assert np.all(np.diff(im) > 0)
    assert all(f_delta12_derivative_im(t) > 0 for t in ts)


def test_derivative_formula_matches_finite_difference():
    for t in (0.2, 0.5, 0.9):
        h = 1e-6
        fd = (f_delta12(t + h).imag - f_delta12(t - h).imag) / (2 * h)
        assert f_delta12_derivative_im(t) == pytest.approx(fd, rel=1e-6)


def test_sign_resolved_trace():
    assert sign_resolved_trace(MobiusMap(-2, 0, 0, -0.5)).real > 0
    assert sign_resolved_trace(MobiusMap(1j, 0, 0, 1j)).imag >= 0


@settings(max_examples=200, deadline=None)
@given(words, words, st.floats(min_value=0.05, max_value=1.0))
@example("AAABAAA", "BAAABAAA", 0.0625)
def test_evaluation_is_a_homomorphism(u, v, t):
    rep = rep_at(t)
    lhs = evaluate_word(rep, GroupWord(u) * GroupWord(v))
    rhs = evaluate_word(rep, GroupWord(u)) @ evaluate_word(rep, GroupWord(v))
    # compare raw entries: both sides are products of determinant-1 generators,
    # and renormalizing would add the cancellation error of ad - bc
    scale = max(1.0, max(abs(x) for x in rhs.entries()))
    plus = max(abs(x - y) for x, y in zip(lhs.entries(), rhs.entries()))
    minus = max(abs(x + y) for x, y in zip(lhs.entries(), rhs.entries()))
    assert min(plus, minus) <= 1e-12 * scale


@pytest.mark.parametrize("t", [1.0, 0.5, 0.3])
def test_symmetry_holds(t):
    report = symmetry_report(t)
    assert list(report) == list(SYMMETRY_CHECKS)
    assert all(report.values())


def test_symmetry_detects_perturbation():
    t = 0.5
    good = rep_at(t)
    a = good.gen_a
    bad = RepPoint(t, MobiusMap(a.a + 1e-3, a.b + 1e-3, a.c + 1e-3, a.d + 1e-3), good.gen_b)
    assert not all(symmetry_report(t, bad).values())


def test_orbit_depth_one_bound():
    pts = limit_orbit(rep_at(1.0), 1)
    assert 0 < len(pts) <= 10


def test_orbit_grows_with_depth():
    rep = rep_at(1.0)
    assert len(limit_orbit(rep, 8)) > len(limit_orbit(rep, 4))


def test_orbit_is_sorted_and_deterministic():
    rep = rep_at(0.6)
    a, b = limit_orbit(rep, 4), limit_orbit(rep, 4)
    assert np.array_equal(a, b)
    finite = a[~np.isinf(a)]
    keys = list(zip(finite.real, finite.imag))
    assert keys == sorted(keys)


def test_orbit_points_are_distinct_at_resolution():
    pts = limit_orbit(rep_at(1.0), 3)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            assert chordal_distance(pts[i], pts[j]) > 1e-7


@pytest.mark.parametrize("t", [1.0, 0.5])
def test_orbit_psi_symmetric(t):
    assert orbit_symmetry_defect(t, 3) < 1e-4


def test_psi_moves_seed_pair_by_three_letter_word():
    t = 0.7
    rep = rep_at(t)
    psi = psi_map(t)
    w = evaluate_word(rep, "bbA")
    for p in fixed_points(evaluate_word(rep, XI)):
        assert chordal_distance(psi(p), w(p)) < 1e-10
