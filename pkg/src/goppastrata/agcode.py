"""One-point AG codes C(D, m P_inf) and their evaluation-form parity checks.

The generator evaluates the monomial basis of L(m P_inf) at the points of D.
The parity-check matrix evaluates L(m* P_inf), with m* = n + 2g - 2 - m, and
scales column i by a nonzero multiplier v_i.  The multipliers stand in for
the residues of a differential with simple poles on D; they are found as a
kernel vector of the bilinear system  sum_i f(P_i) h(P_i) v_i = 0  rather
than from an explicit differential.  Columns of the parity matrix are then
literal images of the points P_i in the ambient projective space of
dimension d + g - 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .curves import Curve, Divisor, INFINITY, Point, RRFunction, evaluation_rows, genus, rr_basis
from .errors import DuplicatePoints, LengthMismatch, MultiplierNotFound, NotSAG, TooLargeToExhaust
from .linalg import Matrix, kernel, rank

DEFAULT_DISTANCE_BUDGET = 10**7
# kernel dimensions above this are not searched for an all-nonzero vector
_MULTIPLIER_SEARCH_LIMIT = 10**5


@dataclass(frozen=True)
class CodeConfig:
    curve: Curve
    points: tuple[Point, ...]
    m: int

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def D(self) -> Divisor:
        return Divisor.of_points(self.points)

    @property
    def G(self) -> Divisor:
        return self.m * Divisor({INFINITY: 1})

    @property
    def m_dual(self) -> int:
        return self.n + 2 * genus(self.curve) - 2 - self.m

    def validate(self) -> None:
        g = genus(self.curve)
        if len(set(self.points)) != len(self.points):
            raise DuplicatePoints("evaluation points must be distinct")
        for P in self.points:
            if P.is_infinity:
                raise ValueError("the point at infinity cannot be an evaluation point")
            if not self.curve.contains(P):
                raise ValueError(f"{P} is not on the curve")
        if not 2 * g - 2 < self.m < self.n:
            raise NotSAG(f"need 2g-2 < m < n, got g={g}, m={self.m}, n={self.n}")


@dataclass(frozen=True)
class GoppaCode:
    config: CodeConfig
    basis: tuple[RRFunction, ...]
    dual_basis: tuple[RRFunction, ...]
    generator: Matrix
    parity: Matrix
    multipliers: tuple[int, ...]

    @property
    def field(self):
        return self.config.curve.field

    @property
    def curve(self) -> Curve:
        return self.config.curve

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        return self.config.n

    @property
    def m(self) -> int:
        return self.config.m

    @property
    def g(self) -> int:
        return genus(self.config.curve)

    @property
    def k(self) -> int:
        return self.m + 1 - self.g

    @property
    def k_dual(self) -> int:
        return self.n - self.m + self.g - 1

    @property
    def d(self) -> int:
        """Designed minimum distance n - m."""
        return self.n - self.m

    @property
    def t(self) -> int:
        return (self.d - 1) // 2

    @property
    def ambient_dim(self) -> int:
        """Dimension of the projective space holding syndromes: d + g - 2."""
        return self.d + self.g - 2

    def params(self) -> dict:
        return {"q": self.q, "n": self.n, "m": self.m, "g": self.g, "k": self.k, "k_dual": self.k_dual,
                "d": self.d, "t": self.t, "m_dual": self.config.m_dual}


def _generator_rows(config: CodeConfig) -> tuple[list[RRFunction], list[list[int]]]:
    basis = rr_basis(config.curve, config.m)
    return basis, evaluation_rows(basis, config.points)


def dual_multipliers(config: CodeConfig) -> tuple[int, ...]:
    """Nonzero v with sum_i f(P_i) h(P_i) v_i = 0 for f in L(m P), h in L(m* P).

    Normalized so that v_0 = 1.  When the solution space has dimension > 1 the
    first all-nonzero combination in enumeration order is taken.
    """
    config.validate()
    F = config.curve.field
    _, gen = _generator_rows(config)
    dual = evaluation_rows(rr_basis(config.curve, config.m_dual), config.points)
    mul = F.mul_table
    constraints = {tuple(mul[a][b] for a, b in zip(f, h)) for f in gen for h in dual}
    if not constraints:
        # m* < 0: the dual code is zero and any multipliers do
        return (1,) * config.n
    A = Matrix.from_rows(F, sorted(constraints), config.n)
    K = kernel(A)
    if not K:
        raise MultiplierNotFound("constraint system has trivial kernel")
    if F.q ** len(K) > _MULTIPLIER_SEARCH_LIMIT:
        candidates = iter(K)
    else:
        candidates = _combinations(F, K)
    for v in candidates:
        if all(v):
            scale = F.inv(v[0])
            return tuple(mul[scale][x] for x in v)
    raise MultiplierNotFound(f"no all-nonzero vector in the {len(K)}-dimensional multiplier space")


def _combinations(F, K):
    add, mul = F.add_table, F.mul_table
    for coefs in itertools.product(range(F.q), repeat=len(K)):
        if not any(coefs):
            continue
        v = [0] * len(K[0])
        for c, b in zip(coefs, K):
            if c:
                v = [add[x][mul[c][y]] for x, y in zip(v, b)]
        yield tuple(v)


def parity_check_matrix(config: CodeConfig, multipliers: Sequence[int]) -> Matrix:
    """Entry (j, i) = h_j(P_i) v_i for h_j in the basis of L(m* P_inf)."""
    F = config.curve.field
    rows = evaluation_rows(rr_basis(config.curve, config.m_dual), config.points)
    mul = F.mul_table
    return Matrix.from_rows(F, [[mul[x][v] for x, v in zip(r, multipliers)] for r in rows], config.n)


def build_code(config: CodeConfig) -> GoppaCode:
    config.validate()
    F = config.curve.field
    basis, gen_rows = _generator_rows(config)
    generator = Matrix.from_rows(F, gen_rows, config.n)
    v = dual_multipliers(config)
    parity = parity_check_matrix(config, v)
    code = GoppaCode(config, tuple(basis), tuple(rr_basis(config.curve, config.m_dual)), generator, parity, v)
    _check_invariants(code)
    return code


def _check_invariants(code: GoppaCode) -> None:
    if code.k + code.k_dual != code.n:
        raise AssertionError("k + k* != n")
    if rank(code.generator) != code.k or code.generator.nrows != code.k:
        raise AssertionError(f"generator rank differs from k = {code.k}")
    if rank(code.parity) != code.k_dual or code.parity.nrows != code.k_dual:
        raise AssertionError(f"parity rank differs from k* = {code.k_dual}")
    if not (code.generator @ code.parity.transpose()).is_zero():
        raise MultiplierNotFound("generator and parity matrices are not orthogonal")
    if not all(code.multipliers):
        raise MultiplierNotFound("zero multiplier")


def encode(code: GoppaCode, message: Sequence[int]) -> tuple[int, ...]:
    """message^T . generator, with message given as element indices."""
    if len(message) != code.k:
        raise LengthMismatch(f"message length {len(message)} != k = {code.k}")
    return code.generator.transpose().apply([int(x) for x in message])


def _np_tables(F):
    return np.asarray(F.add_table, dtype=np.int32), np.asarray(F.mul_table, dtype=np.int32)


def iter_codewords(code: GoppaCode, budget: int = DEFAULT_DISTANCE_BUDGET, chunk: int = 1 << 15):
    """Yield arrays of codewords (rows of element indices), all q^k of them."""
    q, k = code.q, code.k
    if q**k > budget:
        raise TooLargeToExhaust(f"q^k = {q}^{k} codewords exceeds budget {budget}")
    add, mul = _np_tables(code.field)
    G = np.asarray(code.generator.rows, dtype=np.int32)
    total = q**k
    powers = q ** np.arange(k, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        msgs = (idx[:, None] // powers[None, :]) % q
        cw = np.zeros((len(idx), code.n), dtype=np.int32)
        for j in range(k):
            cw = add[cw, mul[msgs[:, j, None], G[j][None, :]]]
        yield cw


def true_min_distance(code: GoppaCode, budget: int = DEFAULT_DISTANCE_BUDGET) -> int:
    """Exact minimum weight of a nonzero codeword, by enumerating all of them."""
    best = code.n
    for cw in iter_codewords(code, budget):
        w = np.count_nonzero(cw, axis=1)
        w = w[w > 0]
        if w.size:
            best = min(best, int(w.min()))
    return best
