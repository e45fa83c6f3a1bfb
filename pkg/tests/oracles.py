"""Brute-force reference computations, independent of the library's row reduction."""

from __future__ import annotations

import itertools
from collections import defaultdict


def vec_combination(F, cols, coefs):
    add, mul = F.add_table, F.mul_table
    out = [0] * len(cols[0])
    for c, col in zip(coefs, cols):
        if c:
            out = [add[a][mul[c][b]] for a, b in zip(out, col)]
    return tuple(out)


def span_set(F, cols):
    """Every vector in the span of ``cols``, by enumerating all coefficient tuples."""
    if not cols:
        return set()
    return {vec_combination(F, cols, coefs) for coefs in itertools.product(range(F.q), repeat=len(cols))}


def brute_rank(F, rows):
    """log_q of the size of the row span."""
    if not rows:
        return 0
    size = len(span_set(F, rows))
    r = 0
    while F.q**r < size:
        r += 1
    return r


def coset_leaders(F, H_cols, max_weight):
    """Map syndrome -> (minimal error weight, set of supports of minimal-weight errors).

    Errors are enumerated by increasing weight, as in a syndrome decoding table.
    """
    n = len(H_cols)
    table: dict[tuple[int, ...], tuple[int, set]] = {}
    for w in range(max_weight + 1):
        found = defaultdict(set)
        for supp in itertools.combinations(range(n), w):
            cols = [H_cols[i] for i in supp]
            for vals in itertools.product(range(1, F.q), repeat=w):
                s = vec_combination(F, cols, vals) if w else (0,) * len(H_cols[0])
                if s not in table:
                    found[s].add(supp)
        for s, supps in found.items():
            table[s] = (w, supps)
    return table


def naive_poly_mulmod(a, b, modulus, p):
    """Schoolbook product of coefficient lists reduced by a monic modulus."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    e = len(modulus) - 1
    for deg in range(len(prod) - 1, e - 1, -1):
        c = prod[deg]
        if c:
            for k in range(e + 1):
                prod[deg - e + k] = (prod[deg - e + k] - c * modulus[k]) % p
    out = (prod + [0] * e)[:e]
    return out
