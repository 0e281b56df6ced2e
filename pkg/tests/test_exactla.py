from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import dense_rank
from schurspecht.exactla import (ImageReducer, SparseMatrix, image_contains, random_prime, rank,
                                 reduce_mod_image)
from schurspecht.exalg import MapDescriptor, build_map


def test_rank_examples():
    assert rank(SparseMatrix.from_dense([[1, 2], [2, 4]])) == 1
    assert rank(SparseMatrix(3, 4)) == 0
    theta = build_map(MapDescriptor("theta", a=3, b=1, t=1), 4)
    assert rank(theta.matrix) == 16


def test_rank_of_vector_list_and_fractions():
    vecs = [{0: Fraction(1, 2), 1: Fraction(1, 3)}, {0: 3, 1: 2}, {2: Fraction(5, 7)}]
    assert rank(vecs) == 2
    assert rank(vecs, "modular") == 2


def test_unknown_method():
    with pytest.raises(ValueError):
        rank([], "floating")


matrices = st.integers(1, 12).flatmap(lambda m: st.integers(1, 12).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=m, max_size=m)))


@given(matrices)
def test_rank_against_dense_oracle(rows):
    m = SparseMatrix.from_dense(rows)
    expected = dense_rank(rows)
    assert rank(m) == expected
    assert rank(m.transpose()) == expected
    assert rank(m, "modular", certify=True) == expected


@settings(max_examples=5, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_rank_transpose_large_sparse(seed):
    import random
    rng = random.Random(seed)
    n = rng.randint(100, 200)
    entries = {(rng.randrange(n), rng.randrange(n)): rng.randint(-5, 5) for _ in range(3 * n)}
    m = SparseMatrix.from_entries(n, n, entries)
    assert rank(m) == rank(m.transpose()) == rank(m, "modular")


def test_certify_detects_nothing_on_integer_matrix():
    m = SparseMatrix.from_dense([[2, 4, 6], [1, 2, 3], [0, 1, 1]])
    assert rank(m, "modular", certify=True) == 2


def test_modular_rank_can_undershoot_small_prime():
    # rank over GF(3) drops, which is why a 62-bit prime is used and certified
    m = SparseMatrix.from_dense([[3, 0], [0, 1]])
    assert rank(m, "modular", prime=3) == 1
    assert rank(m) == 2


def test_random_prime_is_deterministic_and_sized():
    p = random_prime()
    assert p == random_prime()
    assert p.bit_length() == 62


def test_image_contains_examples():
    ident = SparseMatrix.from_dense([[1, 0], [0, 1]])
    other = SparseMatrix.from_dense([[3, 5], [7, 11]])
    assert image_contains(ident, other)
    assert not image_contains(SparseMatrix(2, 2), other)
    theta = build_map(MapDescriptor("theta", a=3, b=1, t=1), 4).matrix
    gamma = build_map(MapDescriptor("gamma", a=2, b=2, k=1), 4).matrix
    assert image_contains(theta, gamma)
    with pytest.raises(ValueError):
        image_contains(ident, SparseMatrix(3, 1))


def test_reduce_mod_image_examples():
    theta = build_map(MapDescriptor("theta", a=2, b=0, t=1), 2)
    # e2 ⊗ e1 is e1 ⊗ e2 modulo the image of theta_1
    target = theta.target_index
    v = {target[((2,), (1,))]: 1}
    assert reduce_mod_image(theta.matrix, v) == {target[((1,), (2,))]: 1}
    a = SparseMatrix.from_dense([[1, 0], [1, 1], [0, 1]])
    assert reduce_mod_image(a, {0: 2, 1: 5, 2: 3}) == {}
    assert reduce_mod_image(SparseMatrix(3, 1), {1: 4}) == {1: 4}
    with pytest.raises(ValueError):
        reduce_mod_image(a, {7: 1})


@given(matrices, st.lists(st.integers(-4, 4), min_size=12, max_size=12),
       st.lists(st.integers(-4, 4), min_size=12, max_size=12))
def test_reduction_idempotent_linear_and_kernel(rows, xs, ys):
    a = SparseMatrix.from_dense(rows)
    red = ImageReducer(a)
    m = a.nrows
    v = {i: x for i, x in enumerate(xs[:m]) if x}
    w = {i: y for i, y in enumerate(ys[:m]) if y}
    rv, rw = red.reduce(v), red.reduce(w)
    assert red.reduce(rv) == rv
    vw = {i: v.get(i, 0) + 2 * w.get(i, 0) for i in set(v) | set(w)}
    combo = {i: rv.get(i, 0) + 2 * rw.get(i, 0) for i in set(rv) | set(rw)}
    assert red.reduce(vw) == {i: x for i, x in combo.items() if x}
    # every column reduces to zero; v - red(v) lies in the image
    for col in a.columns:
        assert red.reduce(col) == {}
    diff = {i: v.get(i, 0) - rv.get(i, 0) for i in set(v) | set(rv)}
    assert image_contains(a, [diff])
    assert red.rank == rank(a)


def test_matrix_arithmetic():
    a = SparseMatrix.from_dense([[1, 2], [3, 4]])
    b = SparseMatrix.from_dense([[0, 1], [1, 0]])
    assert (a @ b).to_dense() == [[2, 1], [4, 3]]
    assert (a - a).to_dense() == [[0, 0], [0, 0]]
    assert a.transpose().transpose() == a
    with pytest.raises(ValueError):
        a @ SparseMatrix(3, 1)
