import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from twisted_rham.opmatrix import OperatorMatrix, bareiss_rank, block_indices, rank

from oracles import dense_matmul, sympy_rank

F = Fraction


def random_dense(rng, rows, cols, density=0.5, rank_cap=None):
    m = [[F(rng.randint(-6, 6), rng.randint(1, 4)) if rng.random() < density else F(0)
          for _ in range(cols)] for _ in range(rows)]
    if rank_cap is not None:
        # force low rank: rows become combinations of the first rank_cap rows
        basis = m[:rank_cap]
        for r in range(rank_cap, rows):
            coeffs = [F(rng.randint(-3, 3)) for _ in basis]
            m[r] = [sum(c * b[j] for c, b in zip(coeffs, basis)) for j in range(cols)]
    return m


def test_bareiss_small_cases():
    assert bareiss_rank([]) == 0
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[F(1, 2), F(1, 3)], [F(1, 3), F(1, 4)]]) == 2
    assert bareiss_rank([[0, 1, 0], [0, 0, 1], [0, 1, 1]]) == 2


@pytest.mark.parametrize("seed", range(12))
def test_bareiss_matches_sympy(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 14), rng.randint(1, 14)
    cap = rng.choice([None, 1, 2, 4])
    if cap is not None:
        cap = min(cap, rows)
    m = random_dense(rng, rows, cols, density=rng.choice([0.2, 0.6, 1.0]), rank_cap=cap)
    assert bareiss_rank(m) == sympy_rank(m)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=7))
def test_bareiss_matches_sympy_integer_matrices(m):
    assert bareiss_rank(m) == sympy_rank(m)


def test_composition_matches_dense_product():
    rng = random.Random(0)
    a = random_dense(rng, 8, 8, 0.4)
    b = random_dense(rng, 8, 8, 0.4)
    A, B = OperatorMatrix.from_dense(a), OperatorMatrix.from_dense(b)
    assert (A @ B).to_dense() == dense_matmul(a, b)
    assert (A + B).to_dense() == [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]
    assert A.transpose().to_dense() == [list(col) for col in zip(*a)]
    assert (A - A).is_zero()
    assert (3 * A)[1, 2] == 3 * a[1][2]


def test_parity_inference_and_check():
    assert OperatorMatrix.identity(2).parity == "even"
    flip = OperatorMatrix(1, [{1: 1}, {0: 1}])
    assert flip.parity == "odd"
    mixed = OperatorMatrix(1, [{0: 1, 1: 1}, {}])
    assert mixed.parity == "mixed"
    with pytest.raises(ValueError):
        OperatorMatrix(1, [{1: 1}, {0: 1}], parity="even")
    assert OperatorMatrix(1, [{}, {}], parity="odd").parity == "odd"


def test_shape_errors():
    with pytest.raises(ValueError):
        OperatorMatrix(2, [{}])
    with pytest.raises(IndexError):
        OperatorMatrix(1, [{5: 1}, {}])
    with pytest.raises(ValueError):
        OperatorMatrix.from_dense([[1, 2, 3]] * 3)
    with pytest.raises(ValueError):
        OperatorMatrix.identity(2) + OperatorMatrix.identity(3)


def test_block_rank():
    m = OperatorMatrix.from_dense([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 2], [3, 0, 0, 0]])
    assert block_indices(2, 0) == [0, 3]
    assert block_indices(2, 1) == [1, 2]
    assert rank(m) == 3
    assert rank(m, [0, 3], [0, 3]) == 1
    assert rank(m, [0, 3], [1, 2]) == 1
