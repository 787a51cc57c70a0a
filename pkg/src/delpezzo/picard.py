"""Exact integer model of the Picard lattice of a strong del Pezzo surface.

A surface is either the blow-up of r <= 6 general points of the projective
plane (degree 9 - r) or the smooth quadric P1 x P1 (degree 8).  Divisor
classes are integer vectors in the standard basis (l, e1, ..., er),
respectively (h, m), and every invariant (intersection number, degree,
self-intersection, arithmetic genus, Euler characteristic) is computed in
exact integer arithmetic.

Sign convention: a blow-up class is stored as a*l + sum(c_i * e_i).  The
traditional presentation a*l - sum(b_i * e_i) therefore has c_i = -b_i; the
b-vector is available through :func:`multiplicities` and is used by the
text formatter, which prints ``3l-2e1-e2`` style strings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisorParseError, InternalError, SurfaceMismatch

BLOWUP = "blowup"
QUADRIC = "quadric"

#: Surface names accepted on the command line and in golden-file names.
SURFACE_NAMES = ("X0", "X1", "X2", "X3", "X4", "X5", "X6", "Q")


@dataclass(frozen=True)
class SurfaceModel:
    """A strong del Pezzo surface: ``BlowUp`` of r points or the quadric."""

    kind: str
    r: int | None = None

    def __post_init__(self):
        if self.kind == BLOWUP:
            if self.r is None or not 0 <= self.r <= 6:
                raise ValueError(f"blow-up point count must be 0..6, got {self.r}")
        elif self.kind == QUADRIC:
            if self.r is not None:
                raise ValueError("the quadric has no blow-up point count")
        else:
            raise ValueError(f"unknown surface kind {self.kind!r}")

    @property
    def degree(self) -> int:
        """Anticanonical self-intersection H^2: 9 - r for blow-ups, 8 for P1xP1."""
        return 8 if self.kind == QUADRIC else 9 - self.r

    @property
    def rank(self) -> int:
        """Rank of the Picard lattice."""
        return 2 if self.kind == QUADRIC else self.r + 1

    @property
    def name(self) -> str:
        return "Q" if self.kind == QUADRIC else f"X{self.r}"

    def basis_symbols(self) -> tuple[str, ...]:
        if self.kind == QUADRIC:
            return ("h", "m")
        return ("l",) + tuple(f"e{i}" for i in range(1, self.r + 1))

    def __str__(self) -> str:
        return self.name


def blow_up(r: int) -> SurfaceModel:
    return SurfaceModel(BLOWUP, r)


def quadric() -> SurfaceModel:
    return SurfaceModel(QUADRIC)


def surface_from_name(text: str) -> SurfaceModel:
    """Parse ``P2``, ``X0`` .. ``X6`` or ``Q`` (``P2`` is a synonym of ``X0``)."""
    t = text.strip().upper()
    if t == "P2":
        return blow_up(0)
    if t == "Q":
        return quadric()
    if len(t) == 2 and t[0] == "X" and t[1].isdigit() and int(t[1]) <= 6:
        return blow_up(int(t[1]))
    raise ValueError(f"unknown surface {text!r} (expected P2, X0..X6 or Q)")


@dataclass(frozen=True)
class DivisorClass:
    """A linear-equivalence class of divisors, as an integer coefficient vector."""

    surface: SurfaceModel
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.surface.rank:
            raise ValueError(
                f"expected {self.surface.rank} coefficients on {self.surface}, "
                f"got {len(self.coeffs)}"
            )
        if not all(isinstance(c, int) for c in self.coeffs):
            raise ValueError("divisor coefficients must be integers")

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _require_same_surface(self, other: "DivisorClass") -> None:
        if self.surface != other.surface:
            raise SurfaceMismatch(
                f"classes live on different surfaces: {self.surface} vs {other.surface}"
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._require_same_surface(other)
        return DivisorClass(self.surface, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._require_same_surface(other)
        return DivisorClass(self.surface, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.surface, tuple(-a for a in self.coeffs))

    def __rmul__(self, n: int) -> "DivisorClass":
        if not isinstance(n, int):
            return NotImplemented
        return DivisorClass(self.surface, tuple(n * a for a in self.coeffs))

    def __str__(self) -> str:
        return format_divisor(self)


def divisor(surface: SurfaceModel, *coeffs: int) -> DivisorClass:
    """Build a class from raw basis coefficients (l, e1, ..) or (h, m)."""
    return DivisorClass(surface, tuple(coeffs))


def zero_class(surface: SurfaceModel) -> DivisorClass:
    return DivisorClass(surface, (0,) * surface.rank)


def from_multiplicities(surface: SurfaceModel, a: int, b: tuple[int, ...] | list[int]) -> DivisorClass:
    """Build ``a*l - sum(b_i * e_i)`` from the traditional multiplicity vector."""
    if surface.kind != BLOWUP:
        raise SurfaceMismatch("multiplicity vectors only make sense on blow-ups")
    if len(b) != surface.r:
        raise ValueError(f"expected {surface.r} multiplicities, got {len(b)}")
    return DivisorClass(surface, (a,) + tuple(-x for x in b))


def multiplicities(D: DivisorClass) -> tuple[int, ...]:
    """The b-vector of ``D = a*l - sum(b_i * e_i)``."""
    if D.surface.kind != BLOWUP:
        raise SurfaceMismatch("multiplicity vectors only make sense on blow-ups")
    return tuple(-c for c in D.coeffs[1:])


# ---------------------------------------------------------------------------
# intersection theory


def intersect(D: DivisorClass, E: DivisorClass) -> int:
    """Intersection number of two classes on the same surface.

    Blow-up basis: l^2 = 1, e_i^2 = -1, mixed products 0.  Quadric basis:
    h^2 = m^2 = 0, h.m = 1 (the unique form giving deg(a*h+b*m) = 2a+2b).
    """
    D._require_same_surface(E)
    if D.surface.kind == QUADRIC:
        return D.coeffs[0] * E.coeffs[1] + D.coeffs[1] * E.coeffs[0]
    return D.coeffs[0] * E.coeffs[0] - sum(c * d for c, d in zip(D.coeffs[1:], E.coeffs[1:]))


def canonical_class(surface: SurfaceModel) -> DivisorClass:
    """K = -3l + e1 + ... + er on blow-ups, -2h - 2m on the quadric."""
    if surface.kind == QUADRIC:
        return DivisorClass(surface, (-2, -2))
    return DivisorClass(surface, (-3,) + (1,) * surface.r)


def hyperplane(surface: SurfaceModel) -> DivisorClass:
    """The very ample anticanonical class H = -K embedding the surface."""
    return -canonical_class(surface)


def degree(D: DivisorClass) -> int:
    """Degree of D as a curve under the anticanonical embedding: D.H."""
    return intersect(D, hyperplane(D.surface))


def self_intersection(D: DivisorClass) -> int:
    return intersect(D, D)


def arithmetic_genus(D: DivisorClass) -> Fraction:
    """p_a(D) = (D^2 - deg D)/2 + 1; an integer for every lattice class."""
    return Fraction(self_intersection(D) - degree(D), 2) + 1


def euler_characteristic(D: DivisorClass) -> int:
    """Riemann-Roch value chi(D) = D.(D+H)/2 + 1."""
    twice = intersect(D, D + hyperplane(D.surface))
    if twice % 2 != 0:
        raise InternalError(f"odd Riemann-Roch numerator for {D}")
    return twice // 2 + 1


# ---------------------------------------------------------------------------
# ruled-surface coordinates on X1

_X1 = SurfaceModel(BLOWUP, 1)


@dataclass(frozen=True)
class RuledCoords:
    """Coordinates of an X1 class in the section/fibre basis C0, f.

    On the blow-up of one point, f = l - e1 and C0 = e1, so
    a*C0 + b*f = b*l - (b - a)*e1.
    """

    c0: int
    f: int


def to_ruled(D: DivisorClass) -> RuledCoords:
    if D.surface != _X1:
        raise SurfaceMismatch("the C0,f basis exists only on the one-point blow-up")
    a, c1 = D.coeffs
    return RuledCoords(c0=a + c1, f=a)


def from_ruled(coords: RuledCoords) -> DivisorClass:
    return DivisorClass(_X1, (coords.f, coords.c0 - coords.f))


# ---------------------------------------------------------------------------
# divisor text grammar: "3l-2e1-e2", "h+3m", "2C0+3f", "0"

_SYMBOL = re.compile(r"C0|e[0-9]+|l|f|h|m")


def _symbol_vector(surface: SurfaceModel, sym: str, pos: int) -> tuple[int, ...]:
    rank = surface.rank
    if surface.kind == QUADRIC:
        if sym == "h":
            return (1, 0)
        if sym == "m":
            return (0, 1)
    else:
        if sym == "l":
            return (1,) + (0,) * surface.r
        if sym.startswith("e") and sym != "e":
            k = int(sym[1:])
            if 1 <= k <= surface.r:
                vec = [0] * rank
                vec[k] = 1
                return tuple(vec)
        if surface.r == 1 and sym == "C0":
            return (0, 1)
        if surface.r == 1 and sym == "f":
            return (1, -1)
    raise DivisorParseError(f"unknown basis symbol {sym!r} on {surface}", pos)


def parse_divisor(surface: SurfaceModel, text: str) -> DivisorClass:
    """Parse divisor text into a class on ``surface``.

    Whitespace is ignored, terms may appear in any order and repeated basis
    symbols are summed.  Unknown symbols for the surface are errors, not
    zeros; errors carry the character position of the offending token.
    """
    coeffs = [0] * surface.rank
    i, n = 0, len(text)

    def skip_ws() -> None:
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    skip_ws()
    if i >= n:
        raise DivisorParseError("empty divisor text", i)

    first = True
    while True:
        sign = 1
        if text[i] == "+":
            i += 1
        elif text[i] == "-":
            sign = -1
            i += 1
        elif not first:
            raise DivisorParseError(f"expected '+' or '-' before {text[i]!r}", i)
        skip_ws()
        digit_start = i
        while i < n and text[i].isdigit():
            i += 1
        digits = text[digit_start:i]
        skip_ws()
        m = _SYMBOL.match(text, i)
        if m is None:
            if digits and int(digits) == 0:
                pass  # a bare 0 term contributes nothing
            elif digits:
                raise DivisorParseError(f"coefficient {digits} lacks a basis symbol", i)
            else:
                raise DivisorParseError("expected a term", digit_start)
        else:
            vec = _symbol_vector(surface, m.group(), i)
            i = m.end()
            coeff = sign * (int(digits) if digits else 1)
            for k, v in enumerate(vec):
                coeffs[k] += coeff * v
        first = False
        skip_ws()
        if i >= n:
            break
        if text[i] not in "+-":
            raise DivisorParseError(f"unexpected {text[i]!r} after term", i)
    return DivisorClass(surface, tuple(coeffs))


def format_divisor(D: DivisorClass) -> str:
    """Canonical text form, e.g. ``3l-2e1-e2``, ``h+3m`` or ``0``."""
    parts: list[str] = []
    for c, sym in zip(D.coeffs, D.surface.basis_symbols()):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        parts.append(f"{sign}{'' if mag == 1 else mag}{sym}")
    if not parts:
        return "0"
    out = "".join(parts)
    return out[1:] if out[0] == "+" else out
