"""Initialized ACM divisor classes: criterion, exhaustive enumeration, orbits, tables.

The numerical criterion is D = 0 or (D^2 = D.H - 2 and 0 < D.H <= H^2);
such nonzero classes are rational normal curves of degree D.H.  Enumeration
scans a proven-complete coefficient box and expands multiplicity multisets
into all distinct permutations; the closed-form catalog regenerates the
same classes from the explicit five-row table plus the zero and exceptional
classes, giving an independent oracle.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalError, PreconditionViolated, SurfaceMismatch, UnsupportedSurface
from .geometry import is_effective
from .picard import (
    BLOWUP,
    QUADRIC,
    DivisorClass,
    SurfaceModel,
    degree,
    from_multiplicities,
    hyperplane,
    multiplicities,
    self_intersection,
    zero_class,
)

# Enumeration box: 0 < a < 6 for non-exceptional classes, multiplicities in
# [-1, 3] (b = -1 only for exceptional divisors, b <= 2 in every table row,
# b = 3 excluded by the completeness argument).  The wider box is scanned as
# a guard and must contain no additional hits.
A_BOX = range(0, 6)
B_BOX = range(-1, 4)
WIDE_A_BOX = range(-1, 7)
WIDE_B_BOX = range(-2, 5)
QUADRIC_BOX = range(0, 5)
WIDE_QUADRIC_BOX = range(-1, 6)


def is_acm_initialized(D: DivisorClass) -> bool:
    """Numerical test for an initialized ACM class (either surface kind)."""
    if D.is_zero:
        return True
    d_h = degree(D)
    return self_intersection(D) == d_h - 2 and 0 < d_h <= D.surface.degree


def is_acm_initialized_quadric(D: DivisorClass) -> bool:
    """Quadric specialization: D = 0 or (a-1)(b-1) = 0 with 0 < 2a+2b <= 8."""
    if D.surface.kind != QUADRIC:
        raise SurfaceMismatch(f"quadric criterion applied to a class on {D.surface}")
    a, b = D.coeffs
    if a == 0 and b == 0:
        return True
    return (a - 1) * (b - 1) == 0 and 0 < 2 * a + 2 * b <= 8


# ---------------------------------------------------------------------------
# enumeration


def _criterion_raw(a: int, b: tuple[int, ...], surface_degree: int) -> bool:
    s1 = sum(b)
    d_h = 3 * a - s1
    return a * a - sum(x * x for x in b) == d_h - 2 and 0 < d_h <= surface_degree


def _blowup_hits(r: int, a: int, b_box: range) -> list[tuple[int, tuple[int, ...]]]:
    """Criterion hits with non-increasing multiplicity vector, for one a."""
    n = 9 - r
    values = sorted(b_box, reverse=True)
    return [
        (a, b)
        for b in itertools.combinations_with_replacement(values, r)
        if _criterion_raw(a, b, n)
    ]


def sort_key(D: DivisorClass) -> tuple:
    """Stable output order: degree, canonical writing, then the full vector."""
    if D.surface.kind == QUADRIC:
        canonical = tuple(sorted(D.coeffs, reverse=True))
    else:
        canonical = (D.coeffs[0],) + tuple(sorted(multiplicities(D), reverse=True))
    return (degree(D), canonical, D.coeffs)


def _expand(surface: SurfaceModel, a: int, b: tuple[int, ...]) -> list[DivisorClass]:
    return [
        from_multiplicities(surface, a, perm)
        for perm in sorted(set(itertools.permutations(b)))
    ]


def _enumerate_slice(surface: SurfaceModel, a: int) -> list[DivisorClass]:
    if surface.kind == QUADRIC:
        return [
            DivisorClass(surface, (a, b))
            for b in QUADRIC_BOX
            if 2 * a * b == (2 * a + 2 * b) - 2 and 0 < 2 * a + 2 * b <= 8
        ]
    return [
        cls
        for a_, b in _blowup_hits(surface.r, a, B_BOX)
        for cls in _expand(surface, a_, b)
    ]


@lru_cache(maxsize=None)
def _box_guard(surface: SurfaceModel) -> None:
    """Assert the widened box contributes no hits outside the primary box."""
    if surface.kind == QUADRIC:
        extra = [
            (a, b)
            for a in WIDE_QUADRIC_BOX
            for b in WIDE_QUADRIC_BOX
            if 2 * a * b == (2 * a + 2 * b) - 2
            and 0 < 2 * a + 2 * b <= 8
            and not (a in QUADRIC_BOX and b in QUADRIC_BOX)
        ]
    else:
        extra = [
            (a, b)
            for a in WIDE_A_BOX
            for a_, b in _blowup_hits(surface.r, a, WIDE_B_BOX)
            if not (a in A_BOX and all(x in B_BOX for x in b))
        ]
    if extra:
        raise InternalError(f"criterion hits outside the enumeration box on {surface}: {extra}")


@lru_cache(maxsize=None)
def _enumerate_cached(surface: SurfaceModel) -> tuple[DivisorClass, ...]:
    _box_guard(surface)
    slices = QUADRIC_BOX if surface.kind == QUADRIC else A_BOX
    hits = [zero_class(surface)]
    for a in slices:
        hits.extend(_enumerate_slice(surface, a))
    hits.sort(key=sort_key)
    if len(set(hits)) != len(hits):
        raise InternalError(f"duplicate classes enumerated on {surface}")
    return tuple(hits)


def enumerate_acm(surface: SurfaceModel, threads: int | None = None) -> list[DivisorClass]:
    """Every initialized ACM class on the surface, in the canonical order.

    ``threads`` > 1 partitions the scan over the leading coefficient; the
    merged, re-sorted result is identical to the sequential one.
    """
    if threads is not None and threads > 1:
        _box_guard(surface)
        slices = list(QUADRIC_BOX if surface.kind == QUADRIC else A_BOX)
        with ThreadPoolExecutor(max_workers=min(threads, len(slices))) as pool:
            parts = list(pool.map(lambda a: _enumerate_slice(surface, a), slices))
        hits = [zero_class(surface)]
        for part in parts:
            hits.extend(part)
        hits.sort(key=sort_key)
        return hits
    return list(_enumerate_cached(surface))


# ---------------------------------------------------------------------------
# canonical orbit records


FAMILY_ZERO = "zero"
FAMILY_EXCEPTIONAL = "exceptional"
FAMILY_L_CHAIN = "l-chain"
FAMILY_2L_CHAIN = "2l-chain"
FAMILY_3L_2E = "3l-2e"
FAMILY_4L_222 = "4l-222"
FAMILY_5L_2SIX = "5l-2^6"


@dataclass(frozen=True)
class AcmRecord:
    """Canonical representative of a permutation orbit of ACM classes."""

    canonical: DivisorClass
    degree: int
    orbit_count: int
    family_tag: str


def orbit_size(r: int, b: tuple[int, ...]) -> int:
    """Distinct vectors obtainable by permuting b: the multinomial r!/prod(mult!)."""
    count = math.factorial(r)
    for mult in Counter(b).values():
        count //= math.factorial(mult)
    return count


def _family_tag(r: int, a: int, b_sorted: tuple[int, ...]) -> str:
    ones = sum(1 for x in b_sorted if x == 1)
    twos = sum(1 for x in b_sorted if x == 2)
    zeros = sum(1 for x in b_sorted if x == 0)
    if a == 1 and twos == 0 and ones + zeros == r and ones <= min(2, r):
        return FAMILY_L_CHAIN
    if a == 2 and twos == 0 and ones + zeros == r and max(r - 3, 0) <= ones <= min(5, r):
        return FAMILY_2L_CHAIN
    if a == 3 and twos == 1 and ones + zeros == r - 1 and max(1, r - 1) <= ones + 1 <= r:
        return FAMILY_3L_2E
    if a == 4 and twos == 3 and ones == r - 3 and zeros == 0:
        return FAMILY_4L_222
    if a == 5 and twos == 6 and r == 6:
        return FAMILY_5L_2SIX
    raise InternalError(f"ACM class {a}l - {b_sorted} matches no catalog row")


def canonicalize(D: DivisorClass) -> AcmRecord:
    """Orbit record of an ACM class on a blow-up: sorted writing, count, row tag.

    Exceptional divisors canonicalize to the e1 slot; every other class is
    written with non-increasing multiplicities.
    """
    if D.surface.kind != BLOWUP:
        raise SurfaceMismatch("orbit canonicalization is defined on blow-ups only")
    if not is_acm_initialized(D):
        raise PreconditionViolated(f"{D} is not an initialized ACM class")
    surface = D.surface
    r = surface.r
    if D.is_zero:
        return AcmRecord(D, 0, 1, FAMILY_ZERO)
    a = D.coeffs[0]
    b = multiplicities(D)
    if a == 0:
        canonical = from_multiplicities(surface, 0, (-1,) + (0,) * (r - 1))
        return AcmRecord(canonical, 1, orbit_size(r, b), FAMILY_EXCEPTIONAL)
    b_sorted = tuple(sorted(b, reverse=True))
    canonical = from_multiplicities(surface, a, b_sorted)
    return AcmRecord(canonical, degree(D), orbit_size(r, b), _family_tag(r, a, b_sorted))


def expand_orbit(record: AcmRecord) -> list[DivisorClass]:
    """All distinct classes obtained by permuting the exceptional divisors."""
    surface = record.canonical.surface
    a = record.canonical.coeffs[0]
    return _expand(surface, a, multiplicities(record.canonical))


# ---------------------------------------------------------------------------
# closed-form catalog (independent of the box scan)


def closed_form_catalog(surface: SurfaceModel) -> list[AcmRecord]:
    """Catalog generated directly from the explicit table rows.

    Rows: l - e1..em (m <= min(2,r)); 2l - e1..em (max(r-3,0) <= m <= min(5,r));
    3l - 2e1 - e2..em (max(1,r-1) <= m <= r); 4l - 2e1 - 2e2 - 2e3 - e4..er
    (r >= 3); 5l - 2e1..2e6 (r = 6); plus the zero class and the exceptional
    divisors.
    """
    if surface.kind != BLOWUP:
        raise UnsupportedSurface("the closed-form catalog is stated for blow-ups")
    r = surface.r
    records = [AcmRecord(zero_class(surface), 0, 1, FAMILY_ZERO)]

    def add(a: int, b: tuple[int, ...], tag: str) -> None:
        records.append(
            AcmRecord(from_multiplicities(surface, a, b), 3 * a - sum(b), orbit_size(r, b), tag)
        )

    if r >= 1:
        add(0, (-1,) + (0,) * (r - 1), FAMILY_EXCEPTIONAL)
    for m in range(0, min(2, r) + 1):
        add(1, (1,) * m + (0,) * (r - m), FAMILY_L_CHAIN)
    for m in range(max(r - 3, 0), min(5, r) + 1):
        add(2, (1,) * m + (0,) * (r - m), FAMILY_2L_CHAIN)
    for m in range(max(1, r - 1), r + 1):
        add(3, (2,) + (1,) * (m - 1) + (0,) * (r - m), FAMILY_3L_2E)
    if r >= 3:
        add(4, (2, 2, 2) + (1,) * (r - 3), FAMILY_4L_222)
    if r == 6:
        add(5, (2,) * 6, FAMILY_5L_2SIX)
    records.sort(key=lambda rec: sort_key(rec.canonical))
    return records


def closed_form_quadric(surface: SurfaceModel) -> list[DivisorClass]:
    """The eight quadric classes listed by the classification: 0, h+bm, bh+m."""
    if surface.kind != QUADRIC:
        raise SurfaceMismatch("expected the quadric")
    classes = {zero_class(surface)}
    for b in range(0, 4):
        classes.add(DivisorClass(surface, (1, b)))
        classes.add(DivisorClass(surface, (b, 1)))
    return sorted(classes, key=sort_key)


def degree_count_table(surface: SurfaceModel) -> dict[int, int]:
    """Number of ACM classes per degree (orbit-expanded); absent degrees are 0."""
    counts = Counter(degree(D) for D in _enumerate_cached(surface))
    return dict(sorted(counts.items()))


# ---------------------------------------------------------------------------
# cohomological bookkeeping with closed forms


def h1_initialized_twist(D: DivisorClass) -> int:
    """h^1 of the first negative twist of an initialized effective class.

    Equals (D.H - D^2)/2 - 1, hence 0 exactly on classes with D^2 = D.H - 2.
    """
    if D.is_zero:
        raise PreconditionViolated("needs a nonzero class")
    if not is_effective(D):
        raise PreconditionViolated(f"{D} is not effective")
    if is_effective(D - hyperplane(D.surface)):
        raise PreconditionViolated(f"{D} is not initialized: {D - hyperplane(D.surface)} is effective")
    numerator = degree(D) - self_intersection(D)
    if numerator % 2 != 0:
        raise InternalError(f"odd parity of D.H - D^2 for {D}")
    return numerator // 2 - 1


def ambient_dimension(D: DivisorClass) -> int:
    """Dimension of the projective span of the rational normal curve: deg D."""
    if D.is_zero or not is_acm_initialized(D):
        raise PreconditionViolated(f"{D} is not a nonzero initialized ACM class")
    return degree(D)


def h0_hyperplane_residual(D: DivisorClass) -> int:
    """Independent hyperplanes through the curve: h^0(H - D) = H^2 - deg D."""
    c = ambient_dimension(D)
    n = D.surface.degree
    return n - c if c < n else 0
