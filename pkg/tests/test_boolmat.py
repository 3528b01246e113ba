import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from covrough.boolmat import (
    BoolMatrix,
    BoolVector,
    ShapeError,
    bool_dot,
    bool_matvec,
    bool_vecmat,
    circle_dot,
    circle_matvec,
    count_work,
    replace_col,
    replace_row,
    rows_containing,
    transpose,
)
from oracles import bool_matrices, circle_ref, circle_ref_unclamped, dot_ref, random_bits

M_FOUR = [[1, 1, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
M_FOUR_REVISED = [[1, 1, 0], [0, 1, 0], [1, 1, 0], [1, 1, 1]]


def bm(rows):
    return BoolMatrix.from_bits(rows)


def bv(bits):
    return BoolVector.from_bits(bits)


def test_dot_golden():
    m = bm(M_FOUR)
    assert bool_dot(m, transpose(m)).bits().tolist() == [[1, 1, 0, 1], [1, 1, 0, 1], [0, 0, 1, 1], [1, 1, 1, 1]]


def test_circle_golden():
    m = bm(M_FOUR)
    assert circle_dot(m, transpose(m)).bits().tolist() == [[1, 0, 0, 1], [1, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]]


def test_transpose_golden():
    assert transpose(bm(M_FOUR_REVISED)).bits().tolist() == [[1, 0, 1, 1], [1, 1, 1, 1], [0, 0, 0, 1]]


def test_dot_with_zero_is_zero():
    a = bm(random_bits(np.random.default_rng(1), 5, 4))
    assert bool_dot(a, BoolMatrix.zeros(4, 3)) == BoolMatrix.zeros(5, 3)


def test_circle_with_ones_is_ones():
    a = bm(random_bits(np.random.default_rng(2), 5, 4))
    assert circle_dot(a, BoolMatrix.ones(4, 6)) == BoolMatrix.ones(5, 6)


@pytest.mark.parametrize("seed", range(20))
def test_products_random_6x4_4x6(seed):
    rng = np.random.default_rng(seed)
    a, b = random_bits(rng, 6, 4).tolist(), random_bits(rng, 4, 6).tolist()
    assert bool_dot(bm(a), bm(b)).bits().tolist() == dot_ref(a, b)
    assert circle_dot(bm(a), bm(b)).bits().tolist() == circle_ref(a, b)


def _all_matrices(r, c):
    for cells in itertools.product((0, 1), repeat=r * c):
        yield [list(cells[i * c:(i + 1) * c]) for i in range(r)]


SMALL_SHAPES = [(n, m, p) for n in range(1, 4) for m in range(1, 4) for p in range(1, 4) if n * m + m * p <= 10]


@pytest.mark.parametrize("n,m,p", SMALL_SHAPES)
def test_products_exhaustive_small(n, m, p):
    for a in _all_matrices(n, m):
        A = bm(a)
        for b in _all_matrices(m, p):
            B = bm(b)
            assert bool_dot(A, B).bits().tolist() == dot_ref(a, b)
            assert circle_dot(A, B).bits().tolist() == circle_ref(a, b)


@given(bool_matrices(), st.data())
def test_products_match_quantifiers(a, data):
    p = data.draw(st.integers(1, 8))
    b = data.draw(st.lists(st.lists(st.integers(0, 1), min_size=p, max_size=p), min_size=len(a[0]), max_size=len(a[0])))
    assert bool_dot(bm(a), bm(b)).bits().tolist() == dot_ref(a, b)
    assert circle_dot(bm(a), bm(b)).bits().tolist() == circle_ref(a, b)


@given(bool_matrices())
def test_clamp_only_matters_for_empty_rows(a):
    b = transpose(bm(a)).bits().tolist()
    raw = circle_ref_unclamped(a, b)
    for i, row in enumerate(raw):
        if any(a[i]):
            assert max(row) <= 1
    assert circle_dot(bm(a), bm(b)).bits().tolist() == [[min(v, 1) for v in row] for row in raw]


def test_wide_matrices_cross_word_boundaries():
    rng = np.random.default_rng(7)
    a, b = random_bits(rng, 9, 130).tolist(), random_bits(rng, 130, 70, p=0.97).tolist()
    assert bool_dot(bm(a), bm(b)).bits().tolist() == dot_ref(a, b)
    assert circle_dot(bm(a), bm(b)).bits().tolist() == circle_ref(a, b)


@given(bool_matrices())
def test_gram_symmetric_and_reflexive(a):
    m = bm(a)
    g = bool_dot(m, transpose(m))
    assert g == transpose(g)
    pi = circle_dot(m, transpose(m))
    for i, row in enumerate(a):
        if any(row):
            assert pi[i, i] == 1


@given(bool_matrices())
def test_transpose_involution(a):
    m = bm(a)
    t = transpose(m)
    assert transpose(t) == m
    assert all(t[j, i] == a[i][j] for i in range(len(a)) for j in range(len(a[0])))


def test_matvec_goldens():
    x = bv([0, 0, 1, 1])
    ones = BoolMatrix.ones(4, 4)
    assert bool_matvec(ones, x) == BoolVector.ones(4)
    assert circle_matvec(ones, x) == BoolVector.zeros(4)
    pi_new = bm([[1, 0, 1, 1], [1, 1, 1, 1], [1, 0, 1, 1], [0, 0, 0, 1]])
    assert bool_matvec(pi_new, x) == BoolVector.ones(4)
    assert circle_matvec(pi_new, x) == bv([0, 0, 0, 1])


@given(st.lists(st.integers(0, 1), min_size=1, max_size=80))
def test_identity_matvec(bits):
    v = bv(bits)
    assert bool_matvec(BoolMatrix.identity(len(bits)), v) == v
    assert circle_matvec(BoolMatrix.ones(3, len(bits)), BoolVector.ones(len(bits))) == BoolVector.ones(3)


@given(bool_matrices(), st.data())
def test_vector_kernels_match_products(a, data):
    n, m = len(a), len(a[0])
    v = data.draw(st.lists(st.integers(0, 1), min_size=m, max_size=m))
    col = [[x] for x in v]
    assert bool_matvec(bm(a), bv(v)).bits().tolist() == [r[0] for r in dot_ref(a, col)]
    assert circle_matvec(bm(a), bv(v)).bits().tolist() == [r[0] for r in circle_ref(a, col)]
    at = transpose(bm(a)).bits().tolist()
    assert rows_containing(bm(a), bv(v)).bits().tolist() == circle_ref([v], at)[0]
    w = data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    assert bool_vecmat(bv(w), bm(a)).bits().tolist() == dot_ref([w], a)[0]


def test_shape_errors():
    a = BoolMatrix.zeros(3, 4)
    with pytest.raises(ShapeError):
        bool_dot(a, a)
    with pytest.raises(ShapeError):
        circle_dot(a, BoolMatrix.zeros(3, 2))
    with pytest.raises(ShapeError):
        bool_matvec(a, BoolVector.zeros(3))
    with pytest.raises(ShapeError):
        circle_matvec(a, BoolVector.zeros(5))
    with pytest.raises(ShapeError):
        BoolMatrix.from_bits([[1, 0], [1]])


def test_cells_must_be_boolean():
    with pytest.raises(ValueError):
        BoolMatrix.from_bits([[0, 2]])
    with pytest.raises(ValueError):
        BoolVector.from_bits([1, -1])
    with pytest.raises(ShapeError):
        BoolMatrix.from_bits(np.zeros((0, 3)))


def test_replace_row_and_col_golden():
    gamma = bm([[1, 1, 0, 1], [1, 1, 0, 1], [0, 0, 1, 1], [1, 1, 1, 1]])
    out = replace_col(replace_row(gamma, 2, BoolVector.ones(4)), 2, BoolVector.ones(4))
    assert out == BoolMatrix.ones(4, 4)
    pi = bm([[1, 0, 0, 1], [1, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]])
    out = replace_col(replace_row(pi, 2, bv([1, 0, 1, 1])), 2, bv([1, 1, 1, 0]))
    assert out.bits().tolist() == [[1, 0, 1, 1], [1, 1, 1, 1], [1, 0, 1, 1], [0, 0, 0, 1]]


def test_replace_is_pure():
    a = bm([[0, 1], [1, 0]])
    replace_row(a, 0, bv([1, 1]))
    replace_col(a, 0, bv([1, 1]))
    assert a.bits().tolist() == [[0, 1], [1, 0]]


@given(bool_matrices(), st.data())
def test_replace_touches_only_target_line(a, data):
    m = bm(a)
    n, c = m.shape
    k = data.draw(st.integers(0, n - 1))
    r = data.draw(st.lists(st.integers(0, 1), min_size=c, max_size=c))
    out = replace_row(m, k, bv(r)).bits()
    assert out[k].tolist() == r
    assert np.array_equal(np.delete(out, k, axis=0), np.delete(m.bits(), k, axis=0))
    assert replace_row(m, k, m.row(k)) == m

    j = data.draw(st.integers(0, c - 1))
    col = data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    out = replace_col(m, j, bv(col)).bits()
    assert out[:, j].tolist() == col
    assert np.array_equal(np.delete(out, j, axis=1), np.delete(m.bits(), j, axis=1))
    assert replace_col(m, j, m.col(j)) == m


def test_replace_bounds():
    a = BoolMatrix.zeros(2, 3)
    with pytest.raises(IndexError):
        replace_row(a, 2, BoolVector.zeros(3))
    with pytest.raises(IndexError):
        replace_col(a, -1, BoolVector.zeros(2))
    with pytest.raises(ShapeError):
        replace_row(a, 0, BoolVector.zeros(2))


def test_vector_helpers():
    v = BoolVector.from_indices([0, 69], 70)
    assert v.indices() == [0, 69]
    assert v.count() == 2
    assert v.complement().count() == 68
    assert v.complement().complement() == v
    with pytest.raises(IndexError):
        BoolVector.from_indices([70], 70)


def test_work_counter():
    a, b = BoolMatrix.zeros(5, 3), BoolMatrix.zeros(3, 7)
    with count_work() as w:
        bool_dot(a, b)
        circle_matvec(a, BoolVector.zeros(3))
        replace_col(a, 1, BoolVector.zeros(5))
    assert w.cell_ops == 5 * 3 * 7 + 5 * 3
    assert w.cell_writes == 5
    with count_work() as outer:
        with count_work() as inner:
            transpose(a)
        assert inner.cell_ops == 15
    assert outer.cell_ops == 15
