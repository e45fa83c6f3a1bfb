"""Syndrome decoders.

``decode_geometric`` locates errors as the unique minimal set of parity
columns whose span contains the syndrome, searching heights 0..t.

``decode_toeplitz_g0`` is the classical genus-0 procedure: assume exactly w
errors for w = t, t-1, ..., 1, solve the w x w Toeplitz system in the
power-sum syndromes for the coefficients of the locator polynomial, and
accept the first w whose locator splits over the evaluation points and whose
recovered error reproduces the syndrome.

Both recover error values with the same linear solve against parity columns.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .agcode import GoppaCode
from .curves import RATIONAL
from .errors import CapacityZero, LengthMismatch, UnsupportedFamily
from .linalg import Matrix, column_submatrix, rank, solve
from .secantgeom import SyndromePoint, secant_height, syndrome


class Status(str, enum.Enum):
    CORRECTED = "corrected"
    DETECTED_BEYOND_CAPACITY = "detected_beyond_capacity"
    AMBIGUOUS = "ambiguous"
    FAIL = "fail"


@dataclass(frozen=True)
class DecodeResult:
    status: Status
    support: tuple[int, ...] = ()
    values: tuple[int, ...] = ()
    codeword: tuple[int, ...] | None = None
    height: int | None = None
    # elementary symmetric functions of the locators (Toeplitz decoder only)
    symmetric: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def corrected(self) -> bool:
        return self.status is Status.CORRECTED

    def to_json(self) -> dict:
        return {"status": self.status.value, "support": list(self.support), "values": list(self.values),
                "codeword": None if self.codeword is None else list(self.codeword), "h": self.height}


def _check(code: GoppaCode, y: Sequence[int]) -> None:
    if len(y) != code.n:
        raise LengthMismatch(f"word of length {len(y)} for n = {code.n}")
    if code.t < 1:
        raise CapacityZero(f"designed distance d = {code.d} gives t = 0")


def error_values(code: GoppaCode, support: Sequence[int], P: SyndromePoint) -> tuple[int, ...] | None:
    """Solve parity[:, support] . e = P; None if P is outside that span."""
    if not support:
        return () if P.is_zero else None
    return solve(column_submatrix(code.parity, support), P.vector)


def _correct(code: GoppaCode, y: Sequence[int], support: Sequence[int], values: Sequence[int]) -> tuple[int, ...]:
    sub = code.field.sub_table
    out = [int(x) for x in y]
    for i, e in zip(support, values):
        out[i] = sub[out[i]][e]
    return tuple(out)


def decode_geometric(code: GoppaCode, y: Sequence[int]) -> DecodeResult:
    _check(code, y)
    P = syndrome(code, y)
    label = secant_height(code, P, bound=code.t)
    if not label.known:
        return DecodeResult(Status.DETECTED_BEYOND_CAPACITY)
    if len(label.witnesses) != 1:
        return DecodeResult(Status.AMBIGUOUS, height=label.h)
    support = label.witnesses[0]
    values = error_values(code, support, P)
    if values is None or not all(values):
        return DecodeResult(Status.FAIL, height=label.h)
    return DecodeResult(Status.CORRECTED, support, values, _correct(code, y, support, values), label.h)


def toeplitz_system(code: GoppaCode, S: Sequence[int], w: int) -> tuple[Matrix, tuple[int, ...]]:
    """The w x w system T c = b with T[j][l] = S_{j+w-1-l} and b_j = -S_{j+w}.

    The solution gives the locator Lambda(z) = z^w + c_0 z^{w-1} + ... + c_{w-1},
    whose coefficients are the signed elementary symmetric functions of the
    error locators.  T is constant along diagonals.
    """
    F = code.field
    T = Matrix.from_rows(F, [[S[j + w - 1 - l] for l in range(w)] for j in range(w)], w)
    b = tuple(F.neg(S[j + w]) for j in range(w))
    return T, b


def _poly_eval(F, coeffs_high_first: Sequence[int], z: int) -> int:
    add, mul = F.add_table, F.mul_table
    acc = 0
    for c in coeffs_high_first:
        acc = add[mul[acc][z]][c]
    return acc


def decode_toeplitz_g0(code: GoppaCode, y: Sequence[int]) -> DecodeResult:
    if code.curve.family != RATIONAL:
        raise UnsupportedFamily("the Toeplitz decoder needs a genus 0 curve")
    _check(code, y)
    F = code.field
    P = syndrome(code, y)
    if P.is_zero:
        return DecodeResult(Status.CORRECTED, (), (), tuple(int(x) for x in y), 0, ())
    # parity row j is (x_i^j v_i)_i, so S_j = sum_i (e_i v_i) x_i^j: power sums
    # of the locators x_i weighted by e_i v_i; the multipliers only rescale values
    S = P.vector
    xs = [pt.x.index for pt in code.config.points]
    for w in range(code.t, 0, -1):
        T, b = toeplitz_system(code, S, w)
        if rank(T) < w:
            continue
        c = solve(T, b)
        locator = (1,) + c
        support = tuple(i for i, x in enumerate(xs) if _poly_eval(F, locator, x) == 0)
        if len(support) != w:
            continue
        values = error_values(code, support, P)
        if values is None or not all(values):
            continue
        symmetric = tuple(c[l] if l % 2 else F.neg(c[l]) for l in range(w))
        return DecodeResult(Status.CORRECTED, support, values, _correct(code, y, support, values), w, symmetric)
    return DecodeResult(Status.DETECTED_BEYOND_CAPACITY)


@dataclass
class CrossValidation:
    trials: int = 0
    disagreements: list[tuple[tuple[int, ...], DecodeResult, DecodeResult]] = field(default_factory=list)
    statuses: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def summary(self) -> dict:
        return {"trials": self.trials, "disagreements": len(self.disagreements),
                "statuses": {f"{a}|{b}": n for (a, b), n in sorted(self.statuses.items())}}


def _same(a: DecodeResult, b: DecodeResult) -> bool:
    return (a.status, a.support, a.values) == (b.status, b.support, b.values)


def cross_validate(code: GoppaCode, words: Iterable[Sequence[int]]) -> CrossValidation:
    """Run both decoders on each received word and collect disagreements."""
    if code.curve.family != RATIONAL:
        raise UnsupportedFamily("cross validation needs the genus 0 decoder")
    report = CrossValidation()
    for y in words:
        a, b = decode_geometric(code, y), decode_toeplitz_g0(code, y)
        report.trials += 1
        report.statuses[(a.status.value, b.status.value)] += 1
        if not _same(a, b):
            report.disagreements.append((tuple(y), a, b))
    return report
