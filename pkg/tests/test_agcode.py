import itertools

import pytest
from hypothesis import given, settings, strategies as st

from goppastrata.agcode import CodeConfig, build_code, dual_multipliers, encode, true_min_distance
from goppastrata.curves import Curve, evaluate, rational_points, rr_basis
from goppastrata.errors import DuplicatePoints, LengthMismatch, MultiplierNotFound, NotSAG, TooLargeToExhaust
from goppastrata.galois import field_build
from goppastrata.linalg import rank

GF7 = field_build(7)
GF8 = field_build(2, 3, [1, 1, 0, 1])
GF4 = field_build(2, 2, [1, 1, 1])


def rs_config(F, xs, m):
    C = Curve("rational", F)
    pts = rational_points(C)
    return CodeConfig(C, tuple(pts[x] for x in xs), m)


def brute_min_weight(code):
    best = code.n
    for msg in itertools.product(range(code.q), repeat=code.k):
        if any(msg):
            best = min(best, sum(1 for c in encode(code, msg) if c))
    return best


def test_parameters(rs7, herm4):
    assert (rs7.n, rs7.k, rs7.k_dual, rs7.d, rs7.t) == (7, 4, 3, 4, 1)
    # k* = n - k = 4 here
    assert (herm4.n, herm4.k, herm4.k_dual, herm4.d, herm4.t, herm4.g) == (8, 4, 4, 4, 1, 1)


def test_not_sag():
    with pytest.raises(NotSAG):
        build_code(rs_config(GF7, range(7), 7))
    C = Curve("hermitian", GF4)
    with pytest.raises(NotSAG):
        build_code(CodeConfig(C, tuple(rational_points(C)), 0))


def test_duplicate_points():
    with pytest.raises(DuplicatePoints):
        build_code(rs_config(GF7, [0, 1, 1, 2], 1))


def test_hermitian_multipliers_all_ones(herm4):
    cfg = herm4.config
    assert dual_multipliers(cfg) == (1,) * 8
    # direct bilinear check: sum_i f(P_i) h(P_i) = 0
    F = cfg.curve.field
    for f in rr_basis(cfg.curve, cfg.m):
        for h in rr_basis(cfg.curve, cfg.m_dual):
            total = F.zero
            for P in cfg.points:
                total = total + evaluate(f, P) * evaluate(h, P)
            assert total == F.zero


@pytest.mark.parametrize("xs,m", [(range(7), 3), ((1, 2, 4, 5, 6), 2), ((0, 3, 5, 6), 1)])
def test_rational_multipliers_lagrange(xs, m):
    cfg = rs_config(GF7, xs, m)
    v = dual_multipliers(cfg)
    pts = [P.x for P in cfg.points]
    lag = []
    for i, xi in enumerate(pts):
        prod = GF7.one
        for j, xj in enumerate(pts):
            if j != i:
                prod = prod * (xi - xj)
        lag.append(prod.inv())
    scale = lag[0].inv()
    assert v == tuple((l * scale).index for l in lag)


def test_multiplier_not_found():
    C = Curve("hermitian", GF4)
    pts = rational_points(C)
    with pytest.raises(MultiplierNotFound):
        build_code(CodeConfig(C, tuple(pts[:3]), 1))


def test_parity_shape_and_orthogonality(rs7, herm4):
    for code in (rs7, herm4):
        assert code.parity.shape == (code.k_dual, code.n)
        assert rank(code.parity) == code.k_dual
        assert rank(code.generator) == code.k
        assert (code.generator @ code.parity.transpose()).is_zero()
        assert all(any(col) for col in code.parity.columns())


def test_encode_linear(rs7):
    F = rs7.field
    assert encode(rs7, (0,) * 4) == (0,) * 7
    for j in range(4):
        unit = tuple(int(i == j) for i in range(4))
        assert encode(rs7, unit) == rs7.generator.rows[j]
    a, b = (1, 2, 3, 4), (6, 0, 5, 1)
    s = tuple(F.add(x, y) for x, y in zip(a, b))
    assert encode(rs7, s) == tuple(F.add(x, y) for x, y in zip(encode(rs7, a), encode(rs7, b)))
    with pytest.raises(LengthMismatch):
        encode(rs7, (1, 2))


def test_min_distance(rs7, herm4):
    assert true_min_distance(rs7) == 4 == brute_min_weight(rs7)
    dh = true_min_distance(herm4)
    assert dh >= 4 and dh == brute_min_weight(herm4)
    with pytest.raises(TooLargeToExhaust):
        true_min_distance(rs7, budget=100)


@settings(max_examples=40, derandomize=True, deadline=None)
@given(st.sampled_from([GF7, GF8]), st.data())
def test_rational_subsets_build(F, data):
    xs = data.draw(st.lists(st.integers(0, F.q - 1), min_size=3, max_size=F.q, unique=True))
    m = data.draw(st.integers(0, len(xs) - 1))
    code = build_code(rs_config(F, sorted(xs), m))
    assert code.k + code.k_dual == code.n
    assert (code.generator @ code.parity.transpose()).is_zero()
    assert rank(code.parity) == code.k_dual
    if code.q**code.k <= 5000:
        # rational codes are MDS
        assert true_min_distance(code) == code.d
