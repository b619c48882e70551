import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieposet import _elim_py, exactla
from lieposet.exactla import SparseMat

try:
    from lieposet import _elim_cy

    BACKENDS = [_elim_py, _elim_cy]
except ImportError:
    BACKENDS = [_elim_py]


def dense_rank_oracle(rows):
    """Naive dense Gaussian elimination, written independently of the
    sparse kernel, used as the rank oracle."""
    m = [[Fraction(v) for v in r] for r in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    rank = 0
    for col in range(n_cols):
        piv = None
        for r in range(rank, n_rows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(n_rows):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def random_dense(rng, n_rows, n_cols, bound=5):
    return [
        [Fraction(rng.randint(-bound, bound)) for _ in range(n_cols)]
        for _ in range(n_rows)
    ]


class TestRank:
    def test_identity(self):
        assert exactla.rank(SparseMat.identity(3)) == 3

    def test_skew_block(self):
        M = SparseMat.from_rows(
            [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
        )
        assert exactla.rank(M) == 4

    def test_zero(self):
        assert exactla.rank(SparseMat(2, 3)) == 0

    def test_against_dense_oracle(self):
        rng = random.Random(20240811)
        for _ in range(40):
            rows = random_dense(rng, rng.randint(1, 7), rng.randint(1, 7))
            M = SparseMat.from_rows(rows)
            assert exactla.rank(M) == dense_rank_oracle(rows)

    def test_skew_rank_is_even(self):
        rng = random.Random(99)
        for _ in range(25):
            n = rng.randint(1, 7)
            ents = {}
            for i in range(n):
                for j in range(i + 1, n):
                    v = Fraction(rng.randint(-3, 3))
                    if v:
                        ents[(i, j)] = v
                        ents[(j, i)] = -v
            M = SparseMat(n, n, ents)
            assert M.is_skew_symmetric()
            assert exactla.rank(M) % 2 == 0


class TestKernel:
    def test_zero_matrix(self):
        assert len(exactla.kernel_basis(SparseMat(2, 3))) == 3

    def test_identity(self):
        assert exactla.kernel_basis(SparseMat.identity(3)) == []

    def test_hand_example(self):
        M = SparseMat.from_rows([[1, 1, 0], [0, 0, 0], [0, 0, 0]])
        basis = exactla.kernel_basis(M)
        assert len(basis) == 2
        for v in basis:
            assert all(x == 0 for x in M.mat_vec(list(v)))

    def test_rank_nullity(self):
        rng = random.Random(7)
        for _ in range(30):
            rows = random_dense(rng, rng.randint(1, 6), rng.randint(1, 6))
            M = SparseMat.from_rows(rows)
            basis = exactla.kernel_basis(M)
            assert exactla.rank(M) + len(basis) == M.n_cols
            for v in basis:
                assert all(x == 0 for x in M.mat_vec(list(v)))


class TestSolve:
    def test_identity(self):
        b = [Fraction(3), Fraction(-2)]
        assert exactla.solve(SparseMat.identity(2), b) == b

    def test_inconsistent(self):
        A = SparseMat.from_rows([[0, 1], [0, 0]])
        assert exactla.solve(A, [0, 1]) is None

    def test_diagonal(self):
        A = SparseMat.from_rows([[2, 0], [0, 3]])
        assert exactla.solve(A, [1, 1]) == [Fraction(1, 2), Fraction(1, 3)]

    def test_dimension_mismatch(self):
        with pytest.raises(exactla.DimensionError):
            exactla.solve(SparseMat.identity(2), [1, 2, 3])

    def test_random_consistent_systems(self):
        rng = random.Random(13)
        for _ in range(25):
            rows = random_dense(rng, rng.randint(1, 6), rng.randint(1, 6))
            A = SparseMat.from_rows(rows)
            x_true = [Fraction(rng.randint(-4, 4)) for _ in range(A.n_cols)]
            b = A.mat_vec(x_true)
            x = exactla.solve(A, b)
            assert x is not None
            assert A.mat_vec(x) == b


class TestInvert:
    def test_round_trip(self):
        rng = random.Random(5)
        found = 0
        while found < 10:
            rows = random_dense(rng, 4, 4)
            M = SparseMat.from_rows(rows)
            if exactla.rank(M) < 4:
                continue
            found += 1
            assert M.matmul(exactla.invert(M)) == SparseMat.identity(4)

    def test_singular(self):
        with pytest.raises(exactla.SingularMatrixError):
            exactla.invert(SparseMat(2, 2))


class TestCharPoly:
    def test_zero_matrix(self):
        # x^3
        assert exactla.char_poly(SparseMat(3, 3)) == [0, 0, 0, 1]

    def test_nilpotent(self):
        M = SparseMat.from_rows([[0, 1], [0, 0]])
        assert exactla.char_poly(M) == [0, 0, 1]

    def test_diagonal(self):
        M = SparseMat.from_rows([[2, 0], [0, 3]])
        # (x-2)(x-3) = 6 - 5x + x^2
        assert exactla.char_poly(M) == [6, -5, 1]

    def test_non_square(self):
        with pytest.raises(exactla.DimensionError):
            exactla.char_poly(SparseMat(2, 3))

    def test_factor_binary(self):
        # x^2 (x-1)^2 = x^4 - 2x^3 + x^2
        a, b, res = exactla.factor_binary([0, 0, 1, -2, 1])
        assert (a, b) == (2, 2)
        assert res == [1]

    def test_factor_binary_residual(self):
        # x (x-2)
        a, b, res = exactla.factor_binary([0, -2, 1])
        assert (a, b) == (1, 0)
        assert res == [-2, 1]


rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * (1 / a) == 1


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 5),
    st.integers(1, 5),
    st.integers(0, 2**30 - 1),
)
def test_backends_agree(n_rows, n_cols, seed):
    rng = random.Random(seed)
    rows = random_dense(rng, n_rows, n_cols, bound=4)
    results = []
    for backend in BACKENDS:
        dict_rows = [
            {j: v for j, v in enumerate(r) if v} for r in rows
        ]
        pivots, red = backend.eliminate(dict_rows, n_cols, reduce_full=True)
        results.append((pivots, {p: dict(r) for p, r in red.items()}))
    first = results[0]
    for other in results[1:]:
        assert other == first
    assert len(first[0]) == dense_rank_oracle(rows)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda m: m.__name__)
def test_augmented_column_never_pivots(backend):
    rows = [{0: Fraction(0), 2: Fraction(1)}, {1: Fraction(2), 2: Fraction(4)}]
    rows[0].pop(0)
    pivots, red = backend.eliminate(rows, 3, pivot_limit=2, reduce_full=True)
    assert pivots == [1]
    assert red[1] == {1: Fraction(1), 2: Fraction(2)}
