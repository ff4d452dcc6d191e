"""Wall enumeration: criterion-driven for Hilbert schemes, transported for
Beauville-Mukai partners, and a candidate superset for other torsion vectors.

For v = (1, 0, 1-n) (the Hilbert scheme S^[n]) the totally semistable and
flopping walls inside the movable cone are cut out by classes a solving
one of finitely many clauses on (a^2, <v,a>):

  divisorial:  a^2 = -2, <v,a> = 0        (Brill-Noether / Hilbert-Chow type)
               a^2 =  0, <v,a> in {1, 2}  (Li-Qin / Lagrangian-fibration type)
  flopping:    a^2 = -2, 1 <= <v,a> <= n-1
               a^2 =  0, 3 <= <v,a> <= n-1
               a^2 = A even, 2 <= A < (n-1)/2, 2A+1 <= <v,a> <= n-1

Each wall is indexed by the slope 0 <= Gamma <= gamma_max of its image
in the movable cone (coordinates along theta(0,-1,0) and theta(-1,0,1-n)),
where gamma_max is the smallest positive slope of a divisorial class or
of an isotropic class orthogonal to v.  The boundary slope itself is a
wall when a divisorial class realizes it (n = 8 ends in one); when
n - 1 is d times a perfect square the boundary instead comes from an
isotropic class with <v,a> = 0 (the Lagrangian fibration), whose
numerical wall misses the upper half plane, so that record carries no
curve.

The enumeration is bounded by |rank(a)| <= r_max.  Completeness is
certified empirically: the search is repeated with the bound doubled and
the result is flagged incomplete when the two wall sets differ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .charge import Semicircle, WallCurve, wall_discriminant, wall_locus
from .lattice import (
    DEFAULT_SURFACE,
    MukaiVector,
    SurfaceParams,
    mukai_pairing,
    mukai_square,
    phi_pushforward,
)

WALL_TYPES = ("divisorial", "flopping", "boundary_lagrangian", "candidate")


@dataclass(frozen=True)
class WallRecord:
    """One wall: a representative class, its lattice data, slope and locus.

    gamma is None for candidate records (a generic torsion vector has no
    movable-cone slope) and curve is None for the Lagrangian boundary
    (its numerical locus misses the upper half plane).
    """

    a: MukaiVector
    a_sq: int
    pairing_va: int
    gamma: Optional[Fraction]
    curve: Optional[WallCurve]
    wall_type: str

    def __post_init__(self) -> None:
        if self.wall_type not in WALL_TYPES:
            raise ValueError(f"unknown wall type {self.wall_type!r}")


@dataclass(frozen=True)
class MovableCone:
    """Slope parametrization of the movable cone of the n-th Hilbert scheme.

    Rays are h_tilde + gamma * b in the coordinates theta(h_tilde),
    theta(b); walls live at slopes gamma_min <= gamma <= gamma_max.
    """

    n: int
    gamma_min: Fraction
    gamma_max: Fraction
    h_tilde: MukaiVector = field(default=MukaiVector(0, -1, 0))
    b: MukaiVector = field(default=None)  # set in __post_init__ from n

    def __post_init__(self) -> None:
        if self.b is None:
            object.__setattr__(self, "b", MukaiVector(-1, 0, 1 - self.n))


@dataclass(frozen=True)
class SearchBounds:
    r_max: int
    parts_max: int = 3
    y_min: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if self.r_max < 1:
            raise ValueError("r_max must be positive")
        if self.parts_max < 2:
            raise ValueError("parts_max must be at least 2")
        object.__setattr__(self, "y_min", Fraction(self.y_min))
        if self.y_min < 0:
            raise ValueError("y_min must be non-negative")


def default_bounds(n: Optional[int] = None) -> SearchBounds:
    """The stock search box: r_max = 4n for Hilbert input, 40 otherwise."""
    return SearchBounds(r_max=4 * n if n else 40)


@dataclass(frozen=True)
class WallSearch:
    """Result of a wall enumeration, with its completeness certificate."""

    vector: MukaiVector
    records: tuple[WallRecord, ...]
    complete: bool
    mode: str  # "hilbert" | "candidate" | "transport"
    n: Optional[int] = None
    m: Optional[int] = None
    source_vector: Optional[MukaiVector] = None


def hilbert_vector(n: int) -> MukaiVector:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return MukaiVector(1, 0, 1 - n)


def hilbert_n_of(v: MukaiVector) -> Optional[int]:
    """n with v = (1, 0, 1-n), if the vector has that shape."""
    if v.r == 1 and v.c == 0 and v.s <= -1:
        return 1 - v.s
    return None


def gamma_of_wall(n: int, a: MukaiVector, p: SurfaceParams = DEFAULT_SURFACE) -> Fraction:
    """Slope of the wall of (v, a) in the movable cone of S^[n].

    The wall's image is the ray through theta(w), where w spans the rank
    one lattice orthogonal to both v = (1, 0, 1-n) and a.
    """
    rw = 2 * p.d * a.c
    cw = a.r * (n - 1) + a.s
    if rw == 0 and cw == 0:
        raise ValueError(f"class {a} is proportional to (1, 0, {1 - n}); no wall")
    g = math.gcd(abs(rw), abs(cw))
    rw, cw = rw // g, cw // g
    if cw > 0:  # normalize so the h_tilde coordinate -cw is positive
        rw, cw = -rw, -cw
    if cw == 0:
        raise ValueError(f"wall of {a} does not meet the movable-cone chart")
    return Fraction(rw, -cw)


# ---------------------------------------------------------------------------
# criterion enumeration for v = (1, 0, 1-n)


def _clause_pairs(n: int) -> list[tuple[int, int, bool]]:
    """(a_sq, <v,a>, is_divisorial) triples allowed by the wall criterion."""
    pairs: list[tuple[int, int, bool]] = [(-2, 0, True), (0, 1, True), (0, 2, True)]
    pairs.extend((-2, k, False) for k in range(1, n))
    pairs.extend((0, k, False) for k in range(3, n))
    a_sq = 2
    while 2 * a_sq < n - 1:
        pairs.extend((a_sq, k, False) for k in range(2 * a_sq + 1, n))
        a_sq += 2
    return pairs


def _clause_classes(n: int, a_sq: int, k: int, r_max: int, p: SurfaceParams):
    """Primitive integral solutions of a^2 = a_sq, <v,a> = k with |r| <= r_max."""
    d = p.d
    for r in range(-r_max, r_max + 1):
        s = r * (n - 1) - k
        num = r * s + a_sq // 2
        if num < 0 or num % d != 0:
            continue
        c_sq = num // d
        c = math.isqrt(c_sq)
        if c * c != c_sq:
            continue
        for cc in ((c,) if c == 0 else (c, -c)):
            a = MukaiVector(r, cc, s)
            if a.is_zero() or not a.is_primitive():
                continue
            assert mukai_square(a, p) == a_sq
            assert mukai_pairing(hilbert_vector(n), a, p) == k
            yield a


_SIGN_KEY = {True: 0, False: 1}


def _representative_key(a: MukaiVector) -> tuple:
    first_nonzero = next((x for x in a.as_tuple() if x != 0), 0)
    return (abs(a.r), abs(a.c), abs(a.s), _SIGN_KEY[first_nonzero > 0], a.as_tuple())


def _lagrangian_class(n: int, p: SurfaceParams) -> Optional[MukaiVector]:
    """Primitive isotropic a with <v,a> = 0, when one exists: a = +-(1, -m, n-1)
    with d*m^2 = n - 1.  Returned in the sign (-1, m, 1-n)."""
    if (n - 1) % p.d != 0:
        return None
    m_sq = (n - 1) // p.d
    m = math.isqrt(m_sq)
    if m * m != m_sq or m == 0:
        return None
    return MukaiVector(-1, m, 1 - n)


def _positive_boundary_slopes(n: int, r_max: int, p: SurfaceParams) -> list[Fraction]:
    """Positive slopes of divisorial-clause classes and of the Lagrangian class."""
    slopes = []
    for a_sq, k, divisorial in _clause_pairs(n):
        if not divisorial:
            continue
        for a in _clause_classes(n, a_sq, k, r_max, p):
            gamma = gamma_of_wall(n, a, p)
            if gamma > 0:
                slopes.append(gamma)
    lag = _lagrangian_class(n, p)
    if lag is not None:
        slopes.append(gamma_of_wall(n, lag, p))
    return slopes


def movable_cone(n: int, bounds: Optional[SearchBounds] = None, p: SurfaceParams = DEFAULT_SURFACE) -> MovableCone:
    """Boundary slopes of the movable cone, searched within bounds."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    bounds = bounds or default_bounds(n)
    slopes = _positive_boundary_slopes(n, bounds.r_max, p)
    if not slopes:
        raise ValueError(
            f"no movable-cone boundary class found for n={n} within |r| <= {bounds.r_max}; increase r_max"
        )
    return MovableCone(n=n, gamma_min=Fraction(0), gamma_max=min(slopes))


def _wall_groups(n: int, r_max: int, p: SurfaceParams) -> tuple[Fraction, dict]:
    """gamma_max plus {gamma: [(class, divisorial_clause), ...]} for one bound."""
    slopes = _positive_boundary_slopes(n, r_max, p)
    if not slopes:
        raise ValueError(
            f"no movable-cone boundary class found for n={n} within |r| <= {r_max}; increase r_max"
        )
    gamma_max = min(slopes)
    groups: dict[Fraction, list[tuple[MukaiVector, bool]]] = {}
    for a_sq, k, divisorial in _clause_pairs(n):
        for a in _clause_classes(n, a_sq, k, r_max, p):
            gamma = gamma_of_wall(n, a, p)
            if 0 <= gamma <= gamma_max:
                groups.setdefault(gamma, []).append((a, divisorial))
    return gamma_max, groups


def hilbert_walls(
    n: int,
    bounds: Optional[SearchBounds] = None,
    p: SurfaceParams = DEFAULT_SURFACE,
) -> WallSearch:
    """All walls for v = (1, 0, 1-n), sorted by ascending slope.

    Walls sharing a slope are deduplicated; the representative class
    minimizes (|r|, |c|, |s|) with positive leading coordinate breaking
    exact ties.  A divisorial clause anywhere on the wall marks the whole
    wall divisorial.  The Lagrangian boundary record, when n-1 is a
    perfect square times d, is appended last with no curve.
    """
    v = hilbert_vector(n)
    bounds = bounds or default_bounds(n)
    gamma_max, groups = _wall_groups(n, bounds.r_max, p)
    gamma_max_2, groups_2 = _wall_groups(n, 2 * bounds.r_max, p)
    complete = gamma_max == gamma_max_2 and set(groups) == set(groups_2)

    records = []
    for gamma in sorted(groups):
        classes = groups[gamma]
        rep = min((a for a, _ in classes), key=_representative_key)
        divisorial = any(flag for _, flag in classes)
        try:
            curve = wall_locus(v, rep, p)
        except ValueError:
            # the plane of (v, rep) only touches the boundary of the
            # upper half plane (radius zero or imaginary): not a wall.
            # At gamma_max this is the Lagrangian boundary, appended below.
            continue
        records.append(
            WallRecord(
                a=rep,
                a_sq=mukai_square(rep, p),
                pairing_va=mukai_pairing(v, rep, p),
                gamma=gamma,
                curve=curve,
                wall_type="divisorial" if divisorial else "flopping",
            )
        )
    lag = _lagrangian_class(n, p)
    if lag is not None:
        gamma = gamma_of_wall(n, lag, p)
        assert gamma == gamma_max, "Lagrangian boundary must realize the cone boundary"
        records.append(
            WallRecord(
                a=lag,
                a_sq=0,
                pairing_va=0,
                gamma=gamma,
                curve=None,
                wall_type="boundary_lagrangian",
            )
        )
    return WallSearch(vector=v, records=tuple(records), complete=complete, mode="hilbert", n=n)


# ---------------------------------------------------------------------------
# transport through Phi_m


def transport_walls(
    records: Sequence[WallRecord],
    m: int,
    v: MukaiVector,
    p: SurfaceParams = DEFAULT_SURFACE,
) -> list[WallRecord]:
    """Map wall records through Phi_m, recomputing loci against Phi_m(v).

    Slopes, squares, pairings and wall types are carried over unchanged
    (Phi_m is a lattice isometry); only the curves move.  A record whose
    transported locus misses the upper half plane (the Lagrangian
    boundary) keeps curve None.
    """
    v_new = phi_pushforward(v, m, p)
    out = []
    for rec in records:
        a_new = phi_pushforward(rec.a, m, p)
        assert mukai_square(a_new, p) == rec.a_sq
        assert mukai_pairing(v_new, a_new, p) == rec.pairing_va
        try:
            curve = wall_locus(v_new, a_new, p)
        except ValueError:
            curve = None
        out.append(
            WallRecord(
                a=a_new,
                a_sq=rec.a_sq,
                pairing_va=rec.pairing_va,
                gamma=rec.gamma,
                curve=curve,
                wall_type=rec.wall_type,
            )
        )
    return out


# ---------------------------------------------------------------------------
# candidate superset for torsion vectors


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _candidate_buckets(w: MukaiVector, r_max: int, y_min: Fraction, p: SurfaceParams) -> dict:
    """{radius_sq: [classes]} for the torsion destabilizer search, w
    sign-normalized with w.c > 0.

    Every wall of w is centered at e = k/(2dm), and at its apex a
    destabilizing class must take an intermediate imaginary part:
    0 < c - r*e < m.  For each rank that window holds m consecutive
    values of c, and the s-interval is exactly what a^2 >= -2 and
    radius^2 > y_min^2 allow, so the scan is finite and misses no wall
    with a destabilizer of |rank| <= r_max.
    """
    m, k, d = w.c, w.s, p.d
    center = Fraction(k, 2 * d * m)
    t_min = y_min * y_min - center * center
    buckets: dict[Fraction, list[MukaiVector]] = {}
    for r in range(-r_max, r_max + 1):
        if r == 0:
            continue
        window = r * center
        for c in range(_floor(window) + 1, _ceil(window + m)):
            square_cap = Fraction(d * c * c + 1, r)  # from a^2 >= -2: s <= cap (r>0) / s >= cap (r<0)
            radius_cut = Fraction(t_min * d * r * m + c * k, m)
            if r > 0:
                s_lo, s_hi = _floor(radius_cut) + 1, _floor(square_cap)
            else:
                s_lo, s_hi = _ceil(square_cap), _ceil(radius_cut) - 1
            for s in range(s_lo, s_hi + 1):
                a = MukaiVector(r, c, s)
                if not a.is_primitive():
                    continue
                radius_sq = center * center + Fraction(m * s - c * k, d * r * m)
                assert radius_sq > y_min * y_min
                assert wall_discriminant(w, a, p) > 0
                buckets.setdefault(radius_sq, []).append(a)
    return buckets


def candidate_walls(
    v: MukaiVector,
    bounds: Optional[SearchBounds] = None,
    p: SurfaceParams = DEFAULT_SURFACE,
) -> WallSearch:
    """Superset of the walls of a rank-zero vector, sorted by descending radius.

    Every record is tagged candidate: the destabilizer window, square
    bound, hyperbolicity, and the radius filter are the only cuts, so
    pseudo-walls are expected and no semistability claim is made.
    Rank-nonzero vectors are rejected; Hilbert-type vectors have the
    exact criterion enumeration instead.  Non-primitive vectors are
    fine: the destabilizer window is taken relative to the vector as
    given.
    """
    v = MukaiVector.coerce(v)
    if v.is_zero():
        raise ValueError("candidate search needs a nonzero vector")
    if v.r != 0:
        raise ValueError(
            f"candidate search supports rank-zero vectors only; for {v} use the criterion enumeration"
        )
    bounds = bounds or default_bounds()
    if v.c == 0:
        # (0, 0, s): every numerical wall is a vertical line, so the
        # radius filter leaves nothing.
        return WallSearch(vector=v, records=(), complete=True, mode="candidate")
    w = v if v.c > 0 else -v
    buckets = _candidate_buckets(w, bounds.r_max, bounds.y_min, p)
    buckets_2 = _candidate_buckets(w, 2 * bounds.r_max, bounds.y_min, p)
    complete = set(buckets) == set(buckets_2)
    records = []
    for radius_sq in sorted(buckets, reverse=True):
        rep = min(buckets[radius_sq], key=_representative_key)
        curve = wall_locus(v, rep, p)
        assert isinstance(curve, Semicircle) and curve.radius_sq == radius_sq
        records.append(
            WallRecord(
                a=rep,
                a_sq=mukai_square(rep, p),
                pairing_va=mukai_pairing(v, rep, p),
                gamma=None,
                curve=curve,
                wall_type="candidate",
            )
        )
    return WallSearch(vector=v, records=tuple(records), complete=complete, mode="candidate")


# ---------------------------------------------------------------------------
# dispatch: the best available wall list for a vector


def beauville_mukai_partner(v: MukaiVector, p: SurfaceParams = DEFAULT_SURFACE) -> Optional[tuple[int, int]]:
    """(n, m) with v = Phi_m(1, 0, 1-n), for vectors of the shape (0, m, -1)."""
    if v.r == 0 and v.c >= 1 and v.s == -1:
        m = v.c
        return (p.d * m * m + 1, m)
    return None


def resolve_walls(
    v: MukaiVector,
    bounds: Optional[SearchBounds] = None,
    p: SurfaceParams = DEFAULT_SURFACE,
    force_candidates: bool = False,
) -> WallSearch:
    """Wall list for v: exact when the criterion or transport applies,
    a tagged candidate superset otherwise."""
    v = MukaiVector.coerce(v)
    if force_candidates:
        return candidate_walls(v, bounds, p)
    n = hilbert_n_of(v)
    if n is not None:
        return hilbert_walls(n, bounds, p)
    partner = beauville_mukai_partner(v, p)
    if partner is not None:
        n, m = partner
        base = hilbert_walls(n, bounds or default_bounds(n), p)
        records = transport_walls(base.records, m, base.vector, p)
        return WallSearch(
            vector=v,
            records=tuple(records),
            complete=base.complete,
            mode="transport",
            n=n,
            m=m,
            source_vector=base.vector,
        )
    if v.r == 0:
        return candidate_walls(v, bounds, p)
    raise ValueError(
        f"no wall enumeration available for {v}: expected (1, 0, 1-n), a rank-zero vector, "
        "or candidate mode"
    )
