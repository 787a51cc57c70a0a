"""(-1)-lines of a strong del Pezzo surface and the positivity tests built on them.

Covers: complete line enumeration, effectivity (closed forms on the plane,
the one-point blow-up and the quadric; line-monoid membership for r >= 2),
very-ampleness, existence of smooth members without line components, and
the alternative basis D_0..D_r of the Picard lattice with its divisor
decomposition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalError, PreconditionViolated, UnsupportedSurface
from .picard import (
    BLOWUP,
    QUADRIC,
    DivisorClass,
    SurfaceModel,
    canonical_class,
    degree,
    divisor,
    intersect,
)


@dataclass(frozen=True)
class LineClass:
    """A (-1)-line: self-intersection -1, degree 1, arithmetic genus 0."""

    label: str
    divisor: DivisorClass


def _unit(surface: SurfaceModel, index: int) -> DivisorClass:
    vec = [0] * surface.rank
    vec[index] = 1
    return DivisorClass(surface, tuple(vec))


@lru_cache(maxsize=None)
def enumerate_lines(surface: SurfaceModel) -> tuple[LineClass, ...]:
    """All (-1)-lines, in the fixed order E1..Er < F12 < F13 < ... < G/G1..G6.

    The plane and the quadric carry none; the blow-up of r points carries
    exactly r + C(r,2) + C(r,5) of them.
    """
    if surface.kind == QUADRIC or surface.r == 0:
        return ()
    r = surface.r
    l = _unit(surface, 0)
    e = [_unit(surface, i) for i in range(1, r + 1)]
    lines = [LineClass(f"E{i + 1}", e[i]) for i in range(r)]
    for i, j in itertools.combinations(range(r), 2):
        lines.append(LineClass(f"F{i + 1}{j + 1}", l - e[i] - e[j]))
    if r == 5:
        lines.append(LineClass("G", 2 * l - e[0] - e[1] - e[2] - e[3] - e[4]))
    if r == 6:
        for j in range(6):
            conic = 2 * l
            for i in range(6):
                if i != j:
                    conic = conic - e[i]
            lines.append(LineClass(f"G{j + 1}", conic))
    return tuple(lines)


# ---------------------------------------------------------------------------
# effectivity


def is_effective(D: DivisorClass) -> bool:
    """Whether the class contains an effective divisor.

    Closed forms: quadric a,b >= 0; plane a >= 0; X1 requires D.f >= 0 and
    D.l >= 0.  For r >= 2 the effective monoid is generated by the
    (-1)-lines, so membership is decided by a bounded exhaustive search for
    a nonnegative integer combination of line classes summing to D (every
    generator has degree 1, so coefficients are bounded by deg D).
    """
    surface = D.surface
    if surface.kind == QUADRIC:
        return D.coeffs[0] >= 0 and D.coeffs[1] >= 0
    if surface.r == 0:
        return D.coeffs[0] >= 0
    if surface.r == 1:
        a, c1 = D.coeffs
        return a >= 0 and a + c1 >= 0  # D.l >= 0 and D.f >= 0
    return _line_monoid_member(D)


def _line_monoid_member(D: DivisorClass) -> bool:
    if degree(D) < 0:
        return False
    if D.is_zero:
        return True
    # Generators with positive l-coefficient consume the l-coordinate; once
    # they are fixed the e_i coefficients of the combination are forced, so
    # only conics and F-lines are branched on.
    consuming = [
        L.divisor.coeffs
        for L in enumerate_lines(D.surface)
        if L.divisor.coeffs[0] > 0
    ]
    consuming.sort(key=lambda v: -v[0])
    failed: set[tuple[int, tuple[int, ...]]] = set()

    def search(idx: int, rest: tuple[int, ...]) -> bool:
        a = rest[0]
        if a < 0:
            return False
        if idx == len(consuming):
            # remainder must be a nonnegative sum of exceptional classes
            return a == 0 and all(c >= 0 for c in rest[1:])
        key = (idx, rest)
        if key in failed:
            return False
        vec = consuming[idx]
        for n in range(a // vec[0], -1, -1):
            nxt = tuple(x - n * v for x, v in zip(rest, vec))
            if search(idx + 1, nxt):
                return True
        failed.add(key)
        return False

    return search(0, D.coeffs)


# ---------------------------------------------------------------------------
# very ample / smooth members


def is_very_ample(D: DivisorClass) -> bool:
    """Positivity against every (-1)-line; on X1, against e1 and l-e1."""
    surface = D.surface
    if surface.kind != BLOWUP or surface.r == 0:
        raise UnsupportedSurface(
            f"the very-ampleness criterion is stated only for blow-ups of 1..6 points, not {surface}"
        )
    if surface.r == 1:
        e1 = _unit(surface, 1)
        f = divisor(surface, 1, -1)
        return intersect(D, e1) > 0 and intersect(D, f) > 0
    return all(intersect(D, L.divisor) > 0 for L in enumerate_lines(surface))


def has_smooth_nonline_member(D: DivisorClass) -> bool:
    """Whether |D| contains smooth curves with no (-1)-line as a component.

    True exactly when D meets every (-1)-line nonnegatively; such a class is
    also generated by global sections.  Requires a nonzero effective class.
    On the plane and the quadric there are no lines to obstruct, so every
    nonzero effective class qualifies.
    """
    if D.is_zero:
        raise PreconditionViolated("the smooth-member criterion needs a nonzero class")
    if not is_effective(D):
        raise PreconditionViolated(f"{D} is not effective")
    return all(intersect(D, L.divisor) >= 0 for L in enumerate_lines(D.surface))


# ---------------------------------------------------------------------------
# alternative base and decomposition

# l-coefficients of D_0..D_6: l, l-e1, 2l-e1-e2, ..., 3l-e1-..-e6
_BASE_L_COEFF = (1, 1, 2, 2, 2, 3, 3)


def _base_divisor(line_class: DivisorClass, exceptional: tuple[DivisorClass, ...], k: int) -> DivisorClass:
    out = _BASE_L_COEFF[k] * line_class
    for i in range(k):
        out = out - exceptional[i]
    return out


def alternative_base(surface: SurfaceModel) -> tuple[DivisorClass, ...]:
    """The base-point-free basis D_0 = l, D_1 = l-e1, ..., D_r of Pic."""
    if surface.kind != BLOWUP or not 2 <= surface.r <= 6:
        raise UnsupportedSurface(f"alternative base needs a blow-up of 2..6 points, not {surface}")
    l = _unit(surface, 0)
    e = tuple(_unit(surface, i) for i in range(1, surface.r + 1))
    return tuple(_base_divisor(l, e, k) for k in range(surface.r + 1))


@dataclass(frozen=True)
class BaseDecomposition:
    """Writing of a divisor as sum(alpha_k * D_k) in a chosen exceptional frame.

    ``exceptional`` holds the r mutually disjoint (-1)-lines used as the
    exceptional classes e_1', ..., e_r' of the frame; for r <= 4 they are a
    permutation of the standard e_i, for r = 5, 6 the minimising-line choice
    may involve F- or G-classes.  ``alphas`` has length r + 1 and
    alpha_1..alpha_{r-1} >= 0 with alpha_r = D.e_r'.
    """

    exceptional: tuple[DivisorClass, ...]
    alphas: tuple[int, ...]

    def line_class(self) -> DivisorClass:
        """The class l' of the frame, recovered from -K + sum(e_i') = 3l'."""
        surface = self.exceptional[0].surface
        total = -canonical_class(surface)
        for ec in self.exceptional:
            total = total + ec
        if any(c % 3 for c in total.coeffs):
            raise InternalError("exceptional frame does not blow down to the plane")
        return DivisorClass(surface, tuple(c // 3 for c in total.coeffs))

    def base_divisors(self) -> tuple[DivisorClass, ...]:
        lp = self.line_class()
        return tuple(_base_divisor(lp, self.exceptional, k) for k in range(len(self.exceptional) + 1))

    def reconstruct(self) -> DivisorClass:
        bases = self.base_divisors()
        out = self.alphas[0] * bases[0]
        for alpha, base in zip(self.alphas[1:], bases[1:]):
            out = out + alpha * base
        return out

    @property
    def permutation(self) -> tuple[int, ...] | None:
        """1-based relabeling of the standard e_i, when the frame is one."""
        surface = self.exceptional[0].surface
        standard = [_unit(surface, i) for i in range(1, surface.r + 1)]
        perm = []
        for ec in self.exceptional:
            if ec not in standard:
                return None
            perm.append(standard.index(ec) + 1)
        return tuple(perm)


def _complete_disjoint(
    chosen: list[DivisorClass], pool: list[DivisorClass], want: int
) -> list[DivisorClass] | None:
    if len(chosen) == want:
        return chosen
    for k, cand in enumerate(pool):
        if all(intersect(cand, c) == 0 for c in chosen):
            found = _complete_disjoint(chosen + [cand], pool[k + 1 :], want)
            if found is not None:
                return found
    return None


def decompose(D: DivisorClass) -> BaseDecomposition:
    """Decompose D over the alternative base of a suitable exceptional frame.

    For r <= 4 the standard exceptional classes are relabeled so the
    multiplicities are non-increasing.  For r = 5, 6 the frame's last two
    slots are lines minimising D.L (first over all lines, then over lines
    disjoint from the first), which makes alpha_0 >= 0; ties are broken by
    the canonical line order.
    """
    surface = D.surface
    if surface.kind != BLOWUP or not 2 <= surface.r <= 6:
        raise UnsupportedSurface(f"decomposition needs a blow-up of 2..6 points, not {surface}")
    r = surface.r
    if r <= 4:
        standard = [_unit(surface, i) for i in range(1, r + 1)]
        order = sorted(range(r), key=lambda i: (-intersect(D, standard[i]), i))
        frame = tuple(standard[i] for i in order)
    else:
        lines = [L.divisor for L in enumerate_lines(surface)]
        last = min(lines, key=lambda L: intersect(D, L))
        disjoint = [L for L in lines if L != last and intersect(L, last) == 0]
        second = min(disjoint, key=lambda L: intersect(D, L))
        completion = _complete_disjoint(
            [last, second], [L for L in lines if L not in (last, second)], r
        )
        if completion is None:
            raise InternalError("could not extend two skew lines to a full exceptional frame")
        others = sorted(
            completion[2:], key=lambda L: (-intersect(D, L), lines.index(L))
        )
        frame = tuple(others) + (second, last)

    decomposition = _assemble(D, frame)
    if decomposition.reconstruct() != D:
        raise InternalError(f"decomposition of {D} does not reconstruct")
    return decomposition


def _assemble(D: DivisorClass, frame: tuple[DivisorClass, ...]) -> BaseDecomposition:
    r = len(frame)
    shell = BaseDecomposition(frame, (0,) * (r + 1))
    a = intersect(D, shell.line_class())
    b = [intersect(D, ec) for ec in frame]
    if any(b[i] < b[i + 1] for i in range(r - 1)):
        raise InternalError("exceptional frame is not sorted by multiplicity")
    alpha0 = a - b[0] - b[1] if r <= 4 else a - b[0] - b[1] - b[4]
    alphas = (alpha0,) + tuple(b[i] - b[i + 1] for i in range(r - 1)) + (b[r - 1],)
    return BaseDecomposition(frame, alphas)
