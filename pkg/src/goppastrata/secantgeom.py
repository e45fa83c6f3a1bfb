"""Secant strata of the syndrome space.

A syndrome is a vector in F_q^{k*}; a nonzero one is read as a point of the
projective space in which the parity-check columns are the embedded curve
points.  Its secant height h is the least size of a set S of evaluation
positions whose columns span a subspace containing it.  Only reduced
divisors supported on D are searched, so for h > t the reported value is an
upper bound for the height over all effective divisors of the curve.  For
h <= t the two agree.

The rank-two bundle invariant is read off from the height as s = 2h - d;
bundles themselves are never built.
"""

from __future__ import annotations

import csv
import enum
import io
import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .agcode import GoppaCode
from .curves import RATIONAL
from .errors import HeightUnknown, LengthMismatch, TooLargeToExhaust
from .linalg import Matrix, rank_of_columns

DEFAULT_SPANNED_BUDGET = 10**6
DEFAULT_CENSUS_BUDGET = 10**6


class Stability(str, enum.Enum):
    UNSTABLE = "unstable"
    SEMISTABLE = "semistable"
    STABLE = "stable"


@dataclass(frozen=True)
class SyndromePoint:
    vector: tuple[int, ...]
    code: GoppaCode = field(repr=False, compare=False)

    @property
    def is_zero(self) -> bool:
        return not any(self.vector)

    def index(self) -> int:
        """Position in F_q^{k*} with coordinate j weighted by q^j."""
        q, out = self.code.q, 0
        for x in reversed(self.vector):
            out = out * q + x
        return out


@dataclass(frozen=True)
class StratumLabel:
    h: int | None
    s: int | None
    stability: Stability | None
    witnesses: tuple[tuple[int, ...], ...] = ()

    @property
    def known(self) -> bool:
        return self.h is not None


def syndrome(code: GoppaCode, y: Sequence[int]) -> SyndromePoint:
    if len(y) != code.n:
        raise LengthMismatch(f"word of length {len(y)} for n = {code.n}")
    return SyndromePoint(code.parity.apply([int(x) for x in y]), code)


def point_from_vector(code: GoppaCode, v: Sequence[int]) -> SyndromePoint:
    if len(v) != code.k_dual:
        raise LengthMismatch(f"syndrome of length {len(v)} for k* = {code.k_dual}")
    return SyndromePoint(tuple(int(x) for x in v), code)


class _Columns:
    """Parity columns of a code with memoized subset ranks."""

    def __init__(self, code: GoppaCode):
        self.field = code.field
        self.cols = code.parity.columns()
        self.ranks: dict[tuple[int, ...], int] = {(): 0}

    @classmethod
    def of(cls, code: GoppaCode) -> "_Columns":
        entry = code.__dict__.get("_columns")
        if entry is None:
            entry = cls(code)
            object.__setattr__(code, "_columns", entry)
        return entry

    def rank(self, S: tuple[int, ...]) -> int:
        r = self.ranks.get(S)
        if r is None:
            r = self.ranks[S] = rank_of_columns(self.field, [self.cols[i] for i in S])
        return r

    def contains(self, S: tuple[int, ...], v: tuple[int, ...]) -> bool:
        if not any(v):
            return True
        if not S:
            return False
        return rank_of_columns(self.field, [self.cols[i] for i in S] + [v]) == self.rank(S)


def span_contains(code: GoppaCode, S: Iterable[int], P: SyndromePoint) -> bool:
    """True iff P lies in the linear span of the parity columns indexed by S."""
    S = tuple(sorted(set(S)))
    if any(not 0 <= i < code.n for i in S):
        raise IndexError(f"positions {S} outside [0, {code.n})")
    return _Columns.of(code).contains(S, P.vector)


def s_invariant(label_or_h: StratumLabel | int, d: int) -> int:
    h = label_or_h.h if isinstance(label_or_h, StratumLabel) else label_or_h
    if h is None:
        raise HeightUnknown("secant height not determined within the search bound")
    return 2 * h - d


def classify_stability(s: int) -> Stability:
    if s < 0:
        return Stability.UNSTABLE
    if s == 0:
        return Stability.SEMISTABLE
    return Stability.STABLE


def secant_height(code: GoppaCode, P: SyndromePoint, bound: int | None = None) -> StratumLabel:
    """Least h <= bound with P in the span of some h columns, plus every such h-set."""
    bound = code.n if bound is None else min(bound, code.n)
    cols = _Columns.of(code)
    v = P.vector
    for h in range(bound + 1):
        witnesses = tuple(S for S in itertools.combinations(range(code.n), h) if cols.contains(S, v))
        if witnesses:
            s = 2 * h - code.d
            return StratumLabel(h, s, classify_stability(s), witnesses)
    return StratumLabel(None, None, None, ())


def uniqueness_check(code: GoppaCode, P: SyndromePoint, label: StratumLabel | None = None) -> bool:
    """True iff exactly one support set realizes the minimal height."""
    if label is None:
        label = secant_height(code, P)
    if not label.known:
        raise HeightUnknown("secant height not determined within the search bound")
    return len(label.witnesses) == 1


@dataclass(frozen=True)
class SpannednessReport:
    size: int
    checked: int
    passed: bool
    counterexample: tuple[int, ...] | None = None


def check_spanned(matrix: Matrix, size: int, budget: int = DEFAULT_SPANNED_BUDGET) -> SpannednessReport:
    """Verify every ``size`` columns of ``matrix`` are linearly independent."""
    total = comb(matrix.ncols, size)
    if total > budget:
        raise TooLargeToExhaust(f"{total} column subsets exceeds budget {budget}")
    cols = matrix.columns()
    checked = 0
    for S in itertools.combinations(range(matrix.ncols), size):
        checked += 1
        if rank_of_columns(matrix.field, [cols[i] for i in S]) != size:
            return SpannednessReport(size, checked, False, S)
    return SpannednessReport(size, checked, True)


def spannedness_check(code: GoppaCode, budget: int = DEFAULT_SPANNED_BUDGET) -> SpannednessReport:
    """All (d-1)-subsets of parity columns independent, i.e. the curve is (d-2)-spanned."""
    return check_spanned(code.parity, code.d - 1, budget)


@dataclass
class CensusRow:
    index: int
    vector: tuple[int, ...]
    h: int
    s: int
    stability: Stability
    witness_count: int


@dataclass
class Census:
    code: GoppaCode = field(repr=False)
    rows: list[CensusRow]

    def sizes(self) -> dict[int, int]:
        return dict(sorted(Counter(r.h for r in self.rows).items()))

    def stability_counts(self) -> dict[str, int]:
        c = Counter(r.stability.value for r in self.rows)
        return {s.value: c.get(s.value, 0) for s in Stability}

    def fraction_above_capacity(self) -> float:
        return sum(r.h > self.code.t for r in self.rows) / len(self.rows)

    def summary(self) -> dict:
        code = self.code
        out = {
            "params": code.params(),
            "total": len(self.rows),
            "height_kind": "h_D (reduced divisors supported on D)",
            "stratum_sizes": {str(h): n for h, n in self.sizes().items()},
            "stability_counts": self.stability_counts(),
            "multi_witness_points": sum(r.witness_count > 1 for r in self.rows),
            "fraction_h_above_t": self.fraction_above_capacity(),
        }
        if code.curve.family == RATIONAL and code.d % 2 == 1:
            # genus 0 with odd d: every bundle is unstable over the closure;
            # reported here for h_D, not asserted
            out["genus0_odd_d_all_within_t"] = out["fraction_h_above_t"] == 0.0
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["syndrome_index", "h_D", "s", "stability", "witness_count"])
        for r in self.rows:
            w.writerow([r.index, r.h, r.s, r.stability.value, r.witness_count])
        return buf.getvalue()


def all_vectors(q: int, length: int) -> Iterable[tuple[int, ...]]:
    """F_q^length in index order (coordinate j weighted by q^j)."""
    for tup in itertools.product(range(q), repeat=length):
        yield tup[::-1]


def stratify_all(code: GoppaCode, budget: int = DEFAULT_CENSUS_BUDGET) -> Census:
    """Secant height of every vector of F_q^{k*}.

    Raises AssertionError if two nonzero scalar multiples get different
    heights, since span membership is scale invariant.
    """
    total = code.q**code.k_dual
    if total > budget:
        raise TooLargeToExhaust(f"q^k* = {total} syndromes exceeds budget {budget}")
    F = code.field
    rows: list[CensusRow] = []
    by_vector: dict[tuple[int, ...], int] = {}
    for i, v in enumerate(all_vectors(code.q, code.k_dual)):
        lab = secant_height(code, SyndromePoint(v, code))
        rows.append(CensusRow(i, v, lab.h, lab.s, lab.stability, len(lab.witnesses)))
        by_vector[v] = lab.h
    mul = F.mul_table
    for r in rows:
        for c in range(2, F.q):
            w = tuple(mul[c][x] for x in r.vector)
            if by_vector[w] != r.h:
                raise AssertionError(f"height of {r.vector} changes under scaling by {c}")
    return Census(code, rows)
