"""Wall enumeration: criterion tables, movable cones, transport, candidates."""

from fractions import Fraction

import pytest

import frozen
from k3walls import (
    MukaiVector,
    SearchBounds,
    SurfaceParams,
    beauville_mukai_partner,
    candidate_walls,
    default_bounds,
    gamma_of_wall,
    hilbert_n_of,
    hilbert_vector,
    hilbert_walls,
    movable_cone,
    phi_pushforward,
    resolve_walls,
    transport_walls,
    wall_locus,
)

F = Fraction


@pytest.mark.parametrize("n", sorted(frozen.WALLS_BY_N))
def test_hilbert_wall_tables(n):
    search = hilbert_walls(n)
    assert search.mode == "hilbert"
    assert search.complete
    assert [frozen.record_tuple(rec) for rec in search.records] == frozen.WALLS_BY_N[n]


def test_hilbert_vector_helpers():
    assert hilbert_vector(10) == MukaiVector(1, 0, -9)
    assert hilbert_n_of(MukaiVector(1, 0, -9)) == 10
    assert hilbert_n_of(MukaiVector(0, 3, -1)) is None
    assert hilbert_n_of(MukaiVector(1, 0, 1)) is None
    with pytest.raises(ValueError):
        hilbert_vector(1)


@pytest.mark.parametrize("n, expected", sorted(frozen.GAMMA_MAX.items()))
def test_movable_cone_boundaries(n, expected):
    cone = movable_cone(n)
    assert cone.gamma_min == 0
    assert cone.gamma_max == expected
    assert cone.h_tilde == MukaiVector(0, -1, 0)
    assert cone.b == MukaiVector(-1, 0, 1 - n)


def test_gamma_circle_identity():
    """For every semicircular wall of S^[n]: center = -1/gamma and
    radius^2 = 1/gamma^2 - (n - 1)."""
    for n in (2, 3, 4, 8, 10):
        for rec in hilbert_walls(n).records:
            if rec.gamma == 0 or rec.curve is None:
                continue
            assert rec.curve.center_x == -1 / rec.gamma
            assert rec.curve.radius_sq == 1 / rec.gamma ** 2 - (n - 1)


def test_gamma_of_wall_matches_table():
    for gamma, a, _, _, _, _ in frozen.WALLS_N10:
        assert gamma_of_wall(10, MukaiVector(*a)) == gamma
    with pytest.raises(ValueError):
        gamma_of_wall(10, MukaiVector(1, 0, -9))


def test_wall_classes_solve_the_criterion():
    """Every emitted non-boundary wall class satisfies one clause on
    (a^2, <v,a>) and spans a hyperbolic plane with v."""
    for n in (2, 3, 4, 8, 10):
        v = hilbert_vector(n)
        for rec in hilbert_walls(n).records:
            if rec.wall_type == "boundary_lagrangian":
                assert rec.a_sq == 0 and rec.pairing_va == 0
                continue
            k, sq = rec.pairing_va, rec.a_sq
            divisorial_clause = (sq, k) in ((-2, 0), (0, 1), (0, 2))
            flopping_clause = (
                (sq == -2 and 1 <= k <= n - 1)
                or (sq == 0 and 3 <= k <= n - 1)
                or (sq >= 2 and sq % 2 == 0 and 2 * sq < n - 1 and 2 * sq + 1 <= k <= n - 1)
            )
            assert divisorial_clause or flopping_clause
            # span(v, a) is hyperbolic: <v,a>^2 - v^2 a^2 > 0
            assert k * k - 2 * (n - 1) * sq > 0


def test_doubling_stabilization():
    for n in (2, 3, 4, 8, 10):
        base = hilbert_walls(n)
        doubled = hilbert_walls(n, SearchBounds(r_max=2 * default_bounds(n).r_max))
        assert [frozen.record_tuple(r) for r in base.records] == [
            frozen.record_tuple(r) for r in doubled.records
        ]
        assert base.complete and doubled.complete


def test_small_rmax_reports_incomplete():
    search = hilbert_walls(10, SearchBounds(r_max=1))
    assert not search.complete
    assert len(search.records) < 12


def test_transport_table():
    base = hilbert_walls(10)
    records = transport_walls(base.records, 3, base.vector)
    kept = [rec for rec in records if rec.gamma is not None and rec.gamma >= F(6, 19)]
    assert [frozen.record_tuple(rec) for rec in kept] == frozen.TRANSPORT_MIN_6_19
    # transport is a bijection preserving slope, square and pairing
    assert len(records) == len(base.records)
    for before, after in zip(base.records, records):
        assert (before.gamma, before.a_sq, before.pairing_va, before.wall_type) == (
            after.gamma,
            after.a_sq,
            after.pairing_va,
            after.wall_type,
        )
        assert after.a == phi_pushforward(before.a, 3)


def test_transport_of_empty_list():
    assert transport_walls([], 3, MukaiVector(1, 0, -9)) == []


def test_transported_circles_share_center():
    base = hilbert_walls(10)
    for rec in transport_walls(base.records, 3, base.vector):
        if rec.curve is not None:
            assert rec.curve.center_x == F(-1, 6)


@pytest.mark.parametrize("vec", sorted(frozen.CANDIDATES))
def test_candidate_tables(vec):
    search = candidate_walls(MukaiVector(*vec), SearchBounds(r_max=40))
    assert search.mode == "candidate"
    assert search.complete
    got = [(rec.a.as_tuple(), rec.a_sq, rec.pairing_va, rec.curve.radius_sq) for rec in search.records]
    assert got == frozen.CANDIDATES[vec]
    for rec in search.records:
        assert rec.gamma is None
        assert rec.wall_type == "candidate"


def test_candidates_cover_true_walls():
    """The candidate superset contains every true wall above the radius
    floor; truth for (0, 2, -1) comes from transporting the 5-point table
    through Phi_2."""
    base = hilbert_walls(5)
    true_radii = {
        rec.curve.radius_sq
        for rec in transport_walls(base.records, 2, base.vector)
        if rec.curve is not None
    }
    assert true_radii == frozen.TRUE_RADII_0_2_M1
    cand = candidate_walls(MukaiVector(0, 2, -1), SearchBounds(r_max=40))
    cand_radii = {rec.curve.radius_sq for rec in cand.records}
    assert {r for r in true_radii if r > 1} <= cand_radii

    bm = resolve_walls(MukaiVector(0, 3, -1))
    bm_radii = {rec.curve.radius_sq for rec in bm.records if rec.curve is not None and rec.curve.radius_sq > 1}
    cand_bm = candidate_walls(MukaiVector(0, 3, -1), SearchBounds(r_max=40))
    assert bm_radii <= {rec.curve.radius_sq for rec in cand_bm.records}


def test_candidate_walls_curves_match_locus():
    v = MukaiVector(0, 2, -1)
    for rec in candidate_walls(v, SearchBounds(r_max=40)).records:
        assert wall_locus(v, rec.a) == rec.curve


def test_candidate_errors_and_edges():
    with pytest.raises(ValueError):
        candidate_walls(MukaiVector(0, 0, 0))
    with pytest.raises(ValueError):
        candidate_walls(MukaiVector(1, 0, -9))
    # rank-zero vector with no H-component: every wall is vertical,
    # nothing has a radius
    empty = candidate_walls(MukaiVector(0, 0, 5))
    assert empty.records == () and empty.complete
    # sign-normalization: -v gives the same candidate circles
    plus = candidate_walls(MukaiVector(0, 2, -1), SearchBounds(r_max=20))
    minus = candidate_walls(MukaiVector(0, -2, 1), SearchBounds(r_max=20))
    assert [r.curve for r in plus.records] == [r.curve for r in minus.records]


def test_candidate_ymin_filter():
    loose = candidate_walls(MukaiVector(0, 2, -1), SearchBounds(r_max=20, y_min=F(1, 5)))
    strict = candidate_walls(MukaiVector(0, 2, -1), SearchBounds(r_max=20, y_min=F(3, 2)))
    loose_radii = {rec.curve.radius_sq for rec in loose.records}
    strict_radii = {rec.curve.radius_sq for rec in strict.records}
    assert strict_radii < loose_radii
    assert all(r > F(9, 4) for r in strict_radii)
    # with the floor below the smallest true radius, all five true
    # circles of (0, 2, -1) appear among the candidates
    assert frozen.TRUE_RADII_0_2_M1 <= loose_radii


def test_beauville_mukai_partner():
    assert beauville_mukai_partner(MukaiVector(0, 3, -1)) == (10, 3)
    assert beauville_mukai_partner(MukaiVector(0, 2, -1)) == (5, 2)
    assert beauville_mukai_partner(MukaiVector(0, 2, -1), SurfaceParams(d=2)) == (9, 2)
    assert beauville_mukai_partner(MukaiVector(0, 2, -2)) is None
    assert beauville_mukai_partner(MukaiVector(1, 0, -9)) is None


def test_resolve_dispatch():
    assert resolve_walls(MukaiVector(1, 0, -9)).mode == "hilbert"
    bm = resolve_walls(MukaiVector(0, 3, -1))
    assert bm.mode == "transport"
    assert bm.source_vector == MukaiVector(1, 0, -9)
    assert bm.m == 3 and bm.n == 10
    assert resolve_walls(MukaiVector(0, 2, -2)).mode == "candidate"
    assert resolve_walls(MukaiVector(0, 3, -1), force_candidates=True).mode == "candidate"
    with pytest.raises(ValueError):
        resolve_walls(MukaiVector(2, 0, 0))
    with pytest.raises(ValueError):
        resolve_walls(MukaiVector(1, 1, 1))


def test_transport_mode_matches_direct_transport():
    bm = resolve_walls(MukaiVector(0, 3, -1))
    base = hilbert_walls(10)
    direct = transport_walls(base.records, 3, base.vector)
    assert list(bm.records) == direct


def test_search_bounds_validation():
    with pytest.raises(ValueError):
        SearchBounds(r_max=0)
    with pytest.raises(ValueError):
        SearchBounds(r_max=10, parts_max=1)
    with pytest.raises(ValueError):
        SearchBounds(r_max=10, y_min=F(-1))


def test_degree_two_surface_walls():
    """d = 2: the 9-point Hilbert scheme pairs with (0, 2, -1); slopes and
    loci stay exact and the transported circles share center -1/8."""
    p2 = SurfaceParams(d=2)
    search = hilbert_walls(9, p=p2)
    assert search.complete
    assert search.records[0].curve.x0 == 0
    transported = transport_walls(search.records, 2, search.vector, p2)
    for rec in transported:
        if rec.curve is not None:
            assert rec.curve.center_x == F(-1, 8)
