"""Channel simulation, experiment runs, and the invariant suite behind ``verify``."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Iterator

import numpy as np

from .agcode import GoppaCode, encode, true_min_distance
from .config import dumps, load_code
from .curves import RATIONAL, genus, rr_basis
from .decoder import Status, cross_validate, decode_geometric, decode_toeplitz_g0
from .errors import BudgetExceeded, TooLargeToExhaust
from .linalg import rank
from .secantgeom import Stability, secant_height, spannedness_check, syndrome

RNG_ALGORITHM = "numpy.random.PCG64"
DEFAULT_BUDGET = 10**6


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def count_errors(n: int, q: int, w: int) -> int:
    return comb(n, w) * (q - 1) ** w


def errors_of_weight(n: int, q: int, w: int) -> Iterator[tuple[int, ...]]:
    """Every error vector of Hamming weight exactly w, in lexicographic support order."""
    for support in itertools.combinations(range(n), w):
        for values in itertools.product(range(1, q), repeat=w):
            e = [0] * n
            for i, v in zip(support, values):
                e[i] = v
            yield tuple(e)


def errors_up_to(n: int, q: int, t: int, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    total = sum(count_errors(n, q, w) for w in range(t + 1))
    if total > budget:
        raise BudgetExceeded(f"{total} error vectors of weight <= {t} exceeds budget {budget}")
    return [e for w in range(t + 1) for e in errors_of_weight(n, q, w)]


def add_words(code: GoppaCode, x, e) -> tuple[int, ...]:
    add = code.field.add_table
    return tuple(add[a][b] for a, b in zip(x, e))


@dataclass(frozen=True)
class ChannelModel:
    """Injects exactly ``weight`` errors with uniform support and uniform nonzero values."""

    weight: int

    def sample(self, rng: np.random.Generator, n: int, q: int) -> tuple[int, ...]:
        e = [0] * n
        for i in sorted(rng.choice(n, size=self.weight, replace=False).tolist()):
            e[i] = int(rng.integers(1, q))
        return tuple(e)

    def transmit(self, code: GoppaCode, x, rng: np.random.Generator) -> tuple[tuple[int, ...], tuple[int, ...]]:
        e = self.sample(rng, code.n, code.q)
        return add_words(code, x, e), e


def random_message(code: GoppaCode, rng: np.random.Generator) -> tuple[int, ...]:
    return tuple(int(v) for v in rng.integers(0, code.q, size=code.k))


@dataclass
class ExperimentSpec:
    config: str
    weights: list[int]
    trials: int = 1000
    seed: int | None = None
    exhaustive: bool = False
    decoder: str = "both"
    budget: int = DEFAULT_BUDGET
    out: str | None = None

    def __post_init__(self):
        if not self.exhaustive and self.seed is None:
            raise ValueError("sampled mode needs a seed")
        if self.decoder not in ("geometric", "toeplitz", "both"):
            raise ValueError(f"unknown decoder {self.decoder!r}")


def _weight_cases(code: GoppaCode, spec: ExperimentSpec, w: int, rng):
    if spec.exhaustive:
        total = count_errors(code.n, code.q, w)
        if total > spec.budget:
            raise BudgetExceeded(f"{total} errors of weight {w} exceeds budget {spec.budget}")
        for e in errors_of_weight(code.n, code.q, w):
            x = encode(code, random_message(code, rng)) if rng is not None else (0,) * code.n
            yield x, e
    else:
        channel = ChannelModel(w)
        for _ in range(spec.trials):
            x = encode(code, random_message(code, rng))
            y, e = channel.transmit(code, x, rng)
            yield x, e


def simulate(spec: ExperimentSpec, code: GoppaCode | None = None) -> dict:
    """Per-weight decode outcomes and stratum statistics; deterministic per seed."""
    code = code or load_code(spec.config)
    rng = rng_for(spec.seed) if spec.seed is not None else None
    use_geo = spec.decoder in ("geometric", "both")
    use_toe = spec.decoder in ("toeplitz", "both") and code.curve.family == RATIONAL
    per_weight = {}
    for w in spec.weights:
        trials = 0
        statuses: Counter = Counter()
        success = Counter()
        heights: Counter = Counter()
        stability: Counter = Counter()
        agree = 0
        for x, e in _weight_cases(code, spec, w, rng):
            y = add_words(code, x, e)
            trials += 1
            lab = secant_height(code, syndrome(code, y), bound=code.k_dual)
            heights[lab.h] += 1
            stability[lab.stability.value] += 1
            results = {}
            if use_geo:
                results["geometric"] = decode_geometric(code, y)
            if use_toe:
                results["toeplitz"] = decode_toeplitz_g0(code, y)
            for name, r in results.items():
                statuses[(name, r.status.value)] += 1
                success[name] += r.corrected and r.codeword == tuple(x)
            if len(results) == 2:
                a, b = results["geometric"], results["toeplitz"]
                agree += (a.status, a.support, a.values) == (b.status, b.support, b.values)
        entry = {
            "trials": trials,
            "success_rate": {name: (success[name] / trials if trials else None) for name in sorted({k for k, _ in statuses})},
            "statuses": {f"{k}:{s}": n for (k, s), n in sorted(statuses.items())},
            "secant_heights": {str(h): n for h, n in sorted(heights.items())},
            "stability": dict(sorted(stability.items())),
        }
        if use_geo and use_toe:
            entry["decoder_agreements"] = agree
        per_weight[str(w)] = entry
    report = {
        "config": str(spec.config),
        "params": code.params(),
        "mode": "exhaustive" if spec.exhaustive else "sampled",
        "rng": RNG_ALGORITHM,
        "seed": spec.seed,
        "decoder": spec.decoder,
        "per_weight": per_weight,
    }
    if spec.out:
        Path(spec.out).write_text(dumps(report) + "\n")
    return report


# -- verification suite --------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": [c.__dict__ for c in self.checks]}


def check_riemann_roch(code: GoppaCode, upto: int = 50) -> tuple[bool, str]:
    g = genus(code.curve)
    bad = [m for m in range(2 * g - 1, upto + 1) if len(rr_basis(code.curve, m)) != m + 1 - g]
    ok = not bad and rank(code.generator) == code.k
    return ok, f"|L(mP)| = m+1-g for {2 * g - 1} <= m <= {upto}; generator rank {rank(code.generator)} = k {code.k}"


def check_heights(code: GoppaCode, errors) -> tuple[list[str], list[str]]:
    """Height exactness/uniqueness and instability of every error up to weight t."""
    height_bad, label_bad = [], []
    for e in errors:
        wt = sum(1 for x in e if x)
        lab = secant_height(code, syndrome(code, e), bound=code.t)
        supp = tuple(i for i, x in enumerate(e) if x)
        if lab.h != wt or lab.witnesses != (supp,):
            height_bad.append(f"{e}: h={lab.h} witnesses={lab.witnesses}")
        if lab.s != 2 * wt - code.d or lab.stability is not Stability.UNSTABLE:
            label_bad.append(f"{e}: s={lab.s} {lab.stability}")
    return height_bad, label_bad


def check_injectivity(code: GoppaCode, errors) -> int:
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    collisions = 0
    for e in errors:
        s = syndrome(code, e).vector
        if s in seen:
            collisions += 1
        seen[s] = e
    return collisions


def verify(code: GoppaCode, budget: int = DEFAULT_BUDGET, seed: int = 0) -> VerifyReport:
    """Run the invariant suite; raises TooLargeToExhaust when a check exceeds ``budget``."""
    rep = VerifyReport()
    rep.add("riemann_roch", *check_riemann_roch(code))
    rep.add("orthogonality", (code.generator @ code.parity.transpose()).is_zero(), "G . H^T = 0")
    rep.add("parity_rank", rank(code.parity) == code.k_dual, f"rank(H) = k* = {code.k_dual}")
    sp = spannedness_check(code, budget)
    rep.add("spannedness", sp.passed, f"{sp.checked} subsets of size {sp.size}; counterexample {sp.counterexample}")
    try:
        dmin = true_min_distance(code, budget)
        rep.add("min_distance", dmin >= code.d, f"true {dmin} >= designed {code.d}")
    except TooLargeToExhaust as exc:
        rep.add("min_distance", True, f"skipped: {exc}")
    if code.t < 1:
        rep.add("capacity", True, "t = 0: decoding checks skipped")
        return rep
    errors = errors_up_to(code.n, code.q, code.t, budget)
    collisions = check_injectivity(code, errors)
    rep.add("t_ball_injectivity", collisions == 0, f"{len(errors)} errors, {collisions} collisions")
    height_bad, label_bad = check_heights(code, errors)
    rep.add("height_exact_unique", not height_bad, "; ".join(height_bad[:3]) or f"{len(errors)} errors")
    split = secant_height(code, syndrome(code, (0,) * code.n))
    rep.add("unstable_labels", not label_bad and split.s == -code.d,
            "; ".join(label_bad[:3]) or f"all weight <= t syndromes unstable; split point s = {split.s}")
    rng = rng_for(seed)
    failures = 0
    for e in errors:
        x = encode(code, random_message(code, rng))
        r = decode_geometric(code, add_words(code, x, e))
        failures += not (r.status is Status.CORRECTED and r.codeword == x)
    rep.add("round_trip", failures == 0, f"{len(errors)} words, {failures} failures (seed {seed}, {RNG_ALGORITHM})")
    if code.curve.family == RATIONAL:
        cv = cross_validate(code, errors)
        rep.add("decoder_agreement", cv.ok, f"{cv.trials} words, {len(cv.disagreements)} disagreements")
    return rep
