"""Curve families with explicit one-point Riemann-Roch bases.

Two families are supported:

* ``rational``: the projective line over GF(q); affine points are x in GF(q)
  (y is carried as zero), genus 0, L(m P_inf) = polynomials of degree <= m.
* ``hermitian``: y^q0 + y = x^(q0+1) over GF(q0^2), genus q0(q0-1)/2,
  q0^3 affine points.  x has pole order q0 and y has pole order q0+1 at the
  unique point at infinity, so L(m P_inf) is spanned by x^a y^b with
  b < q0 and a*q0 + b*(q0+1) <= m.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import EvalAtInfinity, UnsupportedFamily
from .galois import FieldElement, FieldSpec

RATIONAL = "rational"
HERMITIAN = "hermitian"
FAMILIES = (RATIONAL, HERMITIAN)


@dataclass(frozen=True)
class Curve:
    family: str
    field: FieldSpec
    q0: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedFamily(f"unknown curve family {self.family!r}")
        if self.family == HERMITIAN:
            q0 = self.q0
            if q0 is None:
                q0 = math.isqrt(self.field.q)
                object.__setattr__(self, "q0", q0)
            if q0 * q0 != self.field.q or self.field.e % 2:
                raise UnsupportedFamily(f"Hermitian curve with q0={q0} needs GF(q0^2), got {self.field}")
        elif self.q0 is not None:
            raise UnsupportedFamily("q0 only applies to the Hermitian family")

    @property
    def genus(self) -> int:
        return genus(self)

    def contains(self, P: Point) -> bool:
        if P.is_infinity:
            return True
        if P.x.field != self.field or P.y.field != self.field:
            return False
        if self.family == RATIONAL:
            return P.y.index == 0
        q0 = self.q0
        return P.y**q0 + P.y == P.x ** (q0 + 1)

    def describe(self) -> dict:
        out = {"family": self.family}
        if self.family == HERMITIAN:
            out["q0"] = self.q0
        return out


@dataclass(frozen=True)
class Point:
    """An affine point (x, y), or the point at infinity when both are None."""

    x: FieldElement | None = None
    y: FieldElement | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def indices(self) -> tuple[int, int]:
        if self.is_infinity:
            raise EvalAtInfinity("the point at infinity has no affine coordinates")
        return self.x.index, self.y.index

    def __repr__(self) -> str:
        return "P_inf" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = Point()


@dataclass(frozen=True)
class Divisor:
    """Finite formal sum of points with integer multiplicities."""

    support: Mapping[Point, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "support", {P: k for P, k in dict(self.support).items() if k})

    @classmethod
    def of_points(cls, points: Iterable[Point]) -> Divisor:
        return cls(Counter(points))

    @property
    def degree(self) -> int:
        return sum(self.support.values())

    def __add__(self, other: Divisor) -> Divisor:
        c = Counter(self.support)
        c.update(other.support)
        return Divisor(c)

    def __neg__(self) -> Divisor:
        return Divisor({P: -k for P, k in self.support.items()})

    def __sub__(self, other: Divisor) -> Divisor:
        return self + (-other)

    def __rmul__(self, k: int) -> Divisor:
        return Divisor({P: k * v for P, v in self.support.items()})

    def __hash__(self):
        return hash(frozenset(self.support.items()))

    def is_effective(self) -> bool:
        return all(k > 0 for k in self.support.values())


@dataclass(frozen=True, order=True)
class RRFunction:
    """The monomial x^a y^b (b is always 0 on the rational curve)."""

    a: int
    b: int = 0

    def pole_order(self, curve: Curve) -> int:
        if curve.family == RATIONAL:
            return self.a
        return self.a * curve.q0 + self.b * (curve.q0 + 1)

    def __str__(self) -> str:
        parts = [s if k == 1 else f"{s}^{k}" for s, k in (("x", self.a), ("y", self.b)) if k]
        return "*".join(parts) or "1"


def genus(curve: Curve) -> int:
    if curve.family == RATIONAL:
        return 0
    return curve.q0 * (curve.q0 - 1) // 2


def rational_points(curve: Curve) -> list[Point]:
    """All affine rational points, ordered by x then y in field enumeration order."""
    F = curve.field
    if curve.family == RATIONAL:
        return [Point(x, F.zero) for x in F.enumerate()]
    q0 = curve.q0
    # y^q0 + y is the trace to GF(q0); bucket y by its trace value
    by_trace: dict[int, list[FieldElement]] = {}
    for y in F.enumerate():
        by_trace.setdefault((y**q0 + y).index, []).append(y)
    return [Point(x, y) for x in F.enumerate() for y in by_trace.get((x ** (q0 + 1)).index, [])]


def rr_basis(curve: Curve, m: int) -> list[RRFunction]:
    """Monomial basis of L(m P_inf), ordered by pole order."""
    if m < 0:
        return []
    if curve.family == RATIONAL:
        return [RRFunction(a) for a in range(m + 1)]
    if curve.family == HERMITIAN:
        q0 = curve.q0
        basis = [RRFunction(a, b) for b in range(q0) for a in range((m - b * (q0 + 1)) // q0 + 1) if b * (q0 + 1) <= m]
        return sorted(basis, key=lambda f: (f.pole_order(curve), f.a, f.b))
    raise UnsupportedFamily(curve.family)


def evaluate(f: RRFunction, P: Point) -> FieldElement:
    if P.is_infinity:
        raise EvalAtInfinity(f"{f} has a pole at infinity")
    val = P.x**f.a
    if f.b:
        val = val * P.y**f.b
    return val


def evaluation_rows(functions: Iterable[RRFunction], points: Iterable[Point]) -> list[list[int]]:
    """Index rows [f(P) for P in points] for each f."""
    points = list(points)
    return [[evaluate(f, P).index for P in points] for f in functions]
