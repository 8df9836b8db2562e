import cmath
import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import oracles
from skinlab.complexalg import (
    INF,
    AntiMobiusMap,
    DegenerateError,
    MobiusMap,
    anti_conjugate,
    chordal_distance,
    cross_ratio,
    fixed_points,
    mobius_apply,
    mobius_from_triples,
    trace_sq,
    translation_length,
)
from skinlab.reppath import XI, evaluate_word, gen_a_matrix, psi_map, rep_at

coord = st.floats(min_value=-5, max_value=5, allow_nan=False)
points = st.builds(complex, coord, coord)


def mobius_maps():
    return st.tuples(points, points, points, points).filter(
        lambda e: abs(e[0] * e[3] - e[1] * e[2]) > 1e-2
    ).map(lambda e: MobiusMap(*e))


def distinct(zs, gap=1e-2):
    return all(abs(a - b) > gap for i, a in enumerate(zs) for b in zs[i + 1 :])


def test_apply_identity_and_infinity():
    assert mobius_apply(MobiusMap.identity(), 3 + 1j) == 3 + 1j
    assert mobius_apply(MobiusMap(0, 1, 1, 0), INF) == 0
    m = MobiusMap(1, 2, 3, 4)
    assert mobius_apply(m, -4 / 3) == INF
    assert mobius_apply(m, INF) == pytest.approx(1 / 3)


def test_a1_sends_minus_one_to_zero():
    assert abs(mobius_apply(gen_a_matrix(1.0), -1)) < 1e-15


def test_singular_matrix_rejected():
    with pytest.raises(DegenerateError):
        MobiusMap(1, 2, 2, 4)


def test_triples_identity():
    m = mobius_from_triples((0, 1, INF), (0, 1, INF))
    assert m.equals_up_to_sign(MobiusMap.identity())


def test_triples_reproduce_generators_at_one():
    s = (1 + 1j) / 2
    a = MobiusMap(s, s, s * (1 + 2j), s)
    b = MobiusMap(-s * 1j, -s * (-1 + 2j), -s, -s * 1j)
    assert mobius_from_triples((-1, 1j, 0), (0, -1j, 1)).equals_up_to_sign(a)
    assert mobius_from_triples((-1, -1j, INF), (1, INF, 1j)).equals_up_to_sign(b)


def test_triples_reject_repeats():
    with pytest.raises(DegenerateError):
        mobius_from_triples((0, 0, 1), (0, 1, 2))
    with pytest.raises(DegenerateError):
        mobius_from_triples((0, 1, 2), (INF, 1, INF))


@settings(max_examples=1000, deadline=None)
@given(st.tuples(points, points, points), st.tuples(points, points, points))
def test_triples_map_v_to_w(v, w):
    assume(distinct(v) and distinct(w))
    m = mobius_from_triples(v, w)
    for a, b in zip(v, w):
        assert chordal_distance(m(a), b) < 1e-12 * max(1, abs(b)) * 1e3 or abs(m(a) - b) < 1e-9


def test_anti_conjugate_by_plain_conjugation_keeps_real_matrix():
    conj = AntiMobiusMap(MobiusMap.identity())
    m = MobiusMap(2, -1, 3, 0.5)
    assert anti_conjugate(conj, m).equals_up_to_sign(m)


@pytest.mark.parametrize("t", [0.25, 0.5, 1.0])
def test_psi_swaps_generators(t):
    rep = rep_at(t)
    psi = psi_map(t)
    assert anti_conjugate(psi, rep.gen_a).equals_up_to_sign(rep.gen_b)
    assert anti_conjugate(psi, rep.gen_b).equals_up_to_sign(rep.gen_a.inverse())


@settings(max_examples=200, deadline=None)
@given(mobius_maps(), mobius_maps())
def test_anti_conjugate_round_trip(p, m):
    psi = AntiMobiusMap(p)
    back = anti_conjugate(psi, anti_conjugate(psi.inverse(), m))
    assert back.equals_up_to_sign(m, 1e-7)


def test_trace_sq_examples():
    assert trace_sq(MobiusMap.identity()) == 4
    assert trace_sq(MobiusMap(1, 1, 0, 1)) == 4
    assert trace_sq(gen_a_matrix(1.0)) == pytest.approx(2j, abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(mobius_maps(), mobius_maps())
def test_trace_sq_conjugation_invariant(g, m):
    conj = g @ m @ g.inverse()
    assert abs(trace_sq(conj) - trace_sq(m)) < 1e-10 * max(1, abs(trace_sq(m))) * 1e2


def test_fixed_points_parabolic_and_identity():
    assert fixed_points(MobiusMap(1, 1, 0, 1)) == (INF, INF)
    with pytest.raises(DegenerateError):
        fixed_points(MobiusMap.identity())


def test_fixed_points_of_dilation():
    r = math.sqrt(2)
    pts = fixed_points(MobiusMap(r, 0, 0, 1 / r))
    assert set(pts) == {0, INF}


def test_fixed_points_of_xi_at_half():
    m = evaluate_word(rep_at(0.5), XI)
    for p in fixed_points(m):
        assert abs(mobius_apply(m, p) - p) < 1e-12


@settings(max_examples=300, deadline=None)
@given(mobius_maps())
def test_fixed_points_are_fixed(m):
    assume(not m.equals_up_to_sign(MobiusMap.identity(), 1e-6))
    for p in fixed_points(m):
        assert chordal_distance(mobius_apply(m, p), p) < 1e-7


def test_fixed_point_labels_swap_under_negation():
    m = evaluate_word(rep_at(0.5), XI)
    neg = MobiusMap(-m.a, -m.b, -m.c, -m.d)
    p, q = fixed_points(m)
    p2, q2 = fixed_points(neg)
    assert abs(p - q2) < 1e-12 and abs(q - p2) < 1e-12


def test_translation_length():
    half = 7 / 4
    m = MobiusMap(2 * half, -1, 1, 0)
    assert translation_length(m) == pytest.approx(oracles.FROZEN["translation_length_7_4"], abs=1e-12)
    with pytest.raises(ValueError):
        translation_length(MobiusMap(1, 1, 0, 1))
    xi = evaluate_word(rep_at(1.0), XI)
    assert translation_length(xi) == pytest.approx(oracles.FROZEN["two_acosh_7_2"], abs=1e-12)


def test_cross_ratio_examples():
    assert cross_ratio(0, 1, 2, 3) == pytest.approx(-3)
    assert cross_ratio(INF, 0, 1, 2) == pytest.approx((0 - 1) / (2 - 1))
    with pytest.raises(DegenerateError):
        cross_ratio(0, 0, 0, 1)


@settings(max_examples=300, deadline=None)
@given(st.tuples(points, points, points, points), mobius_maps())
def test_cross_ratio_mobius_invariant(pts, m):
    assume(distinct(pts, 0.1))
    images = [mobius_apply(m, z) for z in pts]
    assume(all(not cmath.isinf(z) and abs(z) < 1e4 for z in images))
    assume(distinct(images, 1e-3))
    a = cross_ratio(*pts)
    b = cross_ratio(*images)
    assert abs(a - b) < 1e-10 * max(1, abs(a)) * 1e3


def test_fixed_points_nearly_parabolic_tiny_c():
    # tr^2 - 4 rounds to 0 here; the roots are +-sqrt(b/c), far out
    m = MobiusMap(1, 1j, 1.424223418840382e-68j, 1)
    for p in fixed_points(m):
        assert chordal_distance(mobius_apply(m, p), p) < 1e-12
        assert abs(p) > 1e30
