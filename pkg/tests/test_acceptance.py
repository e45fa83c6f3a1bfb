"""Exit criteria, one test each; every test prints a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""

import itertools
import time

import pytest

from goppastrata.agcode import encode, true_min_distance
from goppastrata.cli import cli_run
from goppastrata.decoder import Status, cross_validate, decode_geometric
from goppastrata.harness import add_words, errors_up_to
from goppastrata.linalg import rank
from goppastrata.secantgeom import Stability, secant_height, spannedness_check, stratify_all, syndrome
from goppastrata.config import SHIPPED, load_code


def report(num, title, ok, detail, elapsed, limit):
    within = elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    print(f"\n[{status}] criterion {num:>2}: {title}: {detail} ({elapsed:.2f}s, limit {limit}s)")
    assert ok, detail
    assert within, f"took {elapsed:.2f}s, limit {limit}s"


def weight(e):
    return sum(1 for x in e if x)


def test_01_dimension(rs7, herm4):
    t0 = time.perf_counter()
    ranks = (rank(rs7.generator), rank(herm4.generator))
    ok = ranks == (4, 4) == (rs7.m + 1 - rs7.g, herm4.m + 1 - herm4.g)
    report(1, "generator rank = m+1-g", ok, f"ranks {ranks}", time.perf_counter() - t0, 1)


def test_02_duality():
    t0 = time.perf_counter()
    codes = {name: load_code(name) for name in SHIPPED}
    bad = [n for n, c in codes.items() if not (c.generator @ c.parity.transpose()).is_zero()]
    elapsed = time.perf_counter() - t0
    report(2, "generator . parity^T = 0", not bad, f"{len(codes)} configs, nonzero for {bad}", elapsed, 1)


def test_03_designed_distance(rs7, herm4):
    t0 = time.perf_counter()
    d_rs, d_h = true_min_distance(rs7), true_min_distance(herm4)
    report(3, "true minimum distance", d_rs == 4 and d_h >= 4, f"RS {d_rs} (want 4), Hermitian {d_h} (want >= 4)",
           time.perf_counter() - t0, 10)


def test_04_spannedness(rs7, herm4):
    t0 = time.perf_counter()
    a, b = spannedness_check(rs7), spannedness_check(herm4)
    ok = a.passed and b.passed and (a.checked, b.checked) == (35, 56)
    report(4, "(d-1)-subsets of parity columns independent", ok,
           f"{a.checked} + {b.checked} subsets, counterexamples {a.counterexample}, {b.counterexample}",
           time.perf_counter() - t0, 1)


def _height_exhaustion(code):
    height_bad, label_bad, n = [], [], 0
    for e in errors_up_to(code.n, code.q, code.t):
        n += 1
        lab = secant_height(code, syndrome(code, e))
        supp = tuple(i for i, x in enumerate(e) if x)
        if lab.h != weight(e) or lab.witnesses != (supp,):
            height_bad.append(e)
        if lab.stability is not Stability.UNSTABLE or lab.s != 2 * lab.h - code.d:
            label_bad.append(e)
    return n, height_bad, label_bad


def test_05_height_exact_unique(rs7, herm4):
    t0 = time.perf_counter()
    results = [_height_exhaustion(c) for c in (rs7, herm4)]
    bad = sum(len(r[1]) for r in results)
    report(5, "h(S(e)) = wt(e) with single witness supp(e)", bad == 0,
           f"{sum(r[0] for r in results)} errors, {bad} exceptions", time.perf_counter() - t0, 30)


def test_06_unstable(rs7, herm4):
    t0 = time.perf_counter()
    results = [_height_exhaustion(c) for c in (rs7, herm4)]
    bad = sum(len(r[2]) for r in results)
    split = [secant_height(c, syndrome(c, (0,) * c.n)).s == -c.d for c in (rs7, herm4)]
    report(6, "correctable syndromes unstable, s = 2h-d, split point s = -d", bad == 0 and all(split),
           f"{bad} exceptions, split-point checks {split}", time.perf_counter() - t0, 30)


def test_07_injectivity(rs7, herm4):
    t0 = time.perf_counter()
    collisions = 0
    total = 0
    for code in (rs7, herm4):
        seen = set()
        for e in errors_up_to(code.n, code.q, code.t):
            s = syndrome(code, e).vector
            collisions += s in seen
            seen.add(s)
            total += 1
    report(7, "syndrome injective on t-balls", collisions == 0, f"{total} errors, {collisions} collisions",
           time.perf_counter() - t0, 10)


def test_08_round_trip(rs7):
    t0 = time.perf_counter()
    errors = errors_up_to(7, 7, rs7.t)
    cases = ok = 0
    for msg in itertools.product(range(7), repeat=4):
        x = encode(rs7, msg)
        for e in errors:
            r = decode_geometric(rs7, add_words(rs7, x, e))
            cases += 1
            ok += r.status is Status.CORRECTED and r.codeword == x
    rate = ok / cases
    report(8, "geometric decoder round trip on GF(7) RS", rate == 1.0 and cases >= 10**4,
           f"{ok}/{cases} corrected, rate {rate}", time.perf_counter() - t0, 60)


def test_09_decoder_agreement(rs7, rs11):
    t0 = time.perf_counter()
    reps = [cross_validate(c, errors_up_to(c.n, c.q, c.t)) for c in (rs7, rs11)]
    dis = sum(len(r.disagreements) for r in reps)
    report(9, "Toeplitz and geometric decoders agree", dis == 0,
           f"{[r.trials for r in reps]} words, {dis} disagreements", time.perf_counter() - t0, 60)


def test_10_census(rs7, capsys, tmp_path):
    t0 = time.perf_counter()
    census = stratify_all(rs7)
    sizes = census.sizes()
    rc = cli_run(["strata", "--config", "rs_gf7_m3", "--out", str(tmp_path / "c.csv")])
    capsys.readouterr()
    elapsed = time.perf_counter() - t0
    ok = rc == 0 and len(census.rows) == 343 and sizes[0] == 1 and sizes[1] == 42 and sum(sizes.values()) == 343
    with capsys.disabled():
        report(10, "stratum census of GF(7) RS", ok, f"sizes {sizes}", elapsed, 10)
