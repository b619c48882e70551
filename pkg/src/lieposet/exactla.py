"""Exact rational linear algebra: sparse matrices, rank, kernels, solves,
and characteristic polynomials.

Scalars are ``fractions.Fraction`` throughout (canonical reduced form,
positive denominator), so every rank and dimension below is exact; there
is no floating point anywhere in this package.

The elimination kernel is selected at import: the compiled Cython backend
when available, otherwise the pure-Python one.  Both expose the same
``eliminate`` contract and are cross-checked in the test suite.
"""

from fractions import Fraction

try:
    from . import _elim_cy as _elim

    BACKEND = "cython"
except ImportError:  # extension not built
    from . import _elim_py as _elim

    BACKEND = "python"

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


def _rat(v):
    return v if isinstance(v, Fraction) else Fraction(v)


class SparseMat:
    """Immutable sparse matrix over the rationals.

    ``entries`` maps (row, col) -> nonzero Fraction; zero values are
    dropped at construction, indices are range-checked.
    """

    __slots__ = ("n_rows", "n_cols", "entries")

    def __init__(self, n_rows, n_cols, entries=None):
        if n_rows < 0 or n_cols < 0:
            raise DimensionError("negative matrix dimension")
        ents = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < n_rows and 0 <= j < n_cols):
                raise DimensionError(f"entry ({i},{j}) outside {n_rows}x{n_cols}")
            v = _rat(v)
            if v:
                ents[(i, j)] = v
        object.__setattr__(self, "n_rows", n_rows)
        object.__setattr__(self, "n_cols", n_cols)
        object.__setattr__(self, "entries", ents)

    def __setattr__(self, name, value):
        raise AttributeError("SparseMat is immutable")

    @classmethod
    def from_rows(cls, rows):
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        ents = {}
        for i, r in enumerate(rows):
            if len(r) != n_cols:
                raise DimensionError("ragged rows")
            for j, v in enumerate(r):
                if v:
                    ents[(i, j)] = _rat(v)
        return cls(n_rows, n_cols, ents)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): ONE for i in range(n)})

    def __getitem__(self, key):
        return self.entries.get(key, ZERO)

    def __eq__(self, other):
        return (
            isinstance(other, SparseMat)
            and self.n_rows == other.n_rows
            and self.n_cols == other.n_cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.n_rows, self.n_cols, frozenset(self.entries.items())))

    def __repr__(self):
        return f"SparseMat({self.n_rows}x{self.n_cols}, {len(self.entries)} entries)"

    def row_dicts(self):
        rows = [dict() for _ in range(self.n_rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def transpose(self):
        return SparseMat(
            self.n_cols, self.n_rows, {(j, i): v for (i, j), v in self.entries.items()}
        )

    def mat_vec(self, v):
        if len(v) != self.n_cols:
            raise DimensionError("vector length mismatch")
        out = [ZERO] * self.n_rows
        for (i, j), a in self.entries.items():
            if v[j]:
                out[i] += a * v[j]
        return out

    def matmul(self, other):
        if self.n_cols != other.n_rows:
            raise DimensionError("inner dimension mismatch")
        by_row = other.row_dicts()
        ents = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row[k].items():
                key = (i, j)
                s = ents.get(key, ZERO) + a * b
                if s:
                    ents[key] = s
                else:
                    ents.pop(key, None)
        return SparseMat(self.n_rows, other.n_cols, ents)

    def add(self, other, scale=ONE):
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise DimensionError("shape mismatch")
        ents = dict(self.entries)
        for key, v in other.entries.items():
            s = ents.get(key, ZERO) + scale * v
            if s:
                ents[key] = s
            else:
                ents.pop(key, None)
        return SparseMat(self.n_rows, self.n_cols, ents)

    def scaled(self, c):
        c = _rat(c)
        return SparseMat(
            self.n_rows, self.n_cols, {k: c * v for k, v in self.entries.items()}
        )

    def is_skew_symmetric(self):
        for (i, j), v in self.entries.items():
            if self.entries.get((j, i), ZERO) != -v:
                return False
        return True

    def to_dense(self):
        rows = [[ZERO] * self.n_cols for _ in range(self.n_rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows


def rank(M):
    """Exact rank over the rationals."""
    pivots, _ = _elim.eliminate(M.row_dicts(), M.n_cols)
    return len(pivots)


def kernel_basis(M):
    """Basis of the right null space; each vector satisfies M*v = 0.

    Returns one tuple of Fractions per free column, with a 1 in that
    column, so len(result) = n_cols - rank(M).
    """
    pivots, rows = _elim.eliminate(M.row_dicts(), M.n_cols, reduce_full=True)
    pivot_set = set(pivots)
    basis = []
    for j in range(M.n_cols):
        if j in pivot_set:
            continue
        v = [ZERO] * M.n_cols
        v[j] = ONE
        for p in pivots:
            c = rows[p].get(j)
            if c:
                v[p] = -c
        basis.append(tuple(v))
    return basis


def solve(A, b):
    """Some exact solution x of A*x = b, or None when none exists."""
    if len(b) != A.n_rows:
        raise DimensionError("rhs length mismatch")
    aug = A.n_cols
    rows = A.row_dicts()
    for i, v in enumerate(b):
        v = _rat(v)
        if v:
            rows[i][aug] = v
    pivots, red = _elim.eliminate(rows, aug + 1, pivot_limit=aug, reduce_full=True)
    x = [ZERO] * A.n_cols
    for p in pivots:
        x[p] = red[p].get(aug, ZERO)
    # Verify: cheap relative to elimination, and catches the inconsistent
    # case where the contradiction row was discarded as pivotless.
    if A.mat_vec(x) != [_rat(v) for v in b]:
        return None
    return x


def invert(M):
    """Exact inverse of a square matrix; raises SingularMatrixError."""
    if M.n_rows != M.n_cols:
        raise DimensionError("inverse of non-square matrix")
    n = M.n_rows
    rows = M.row_dicts()
    for i in range(n):
        rows[i][n + i] = ONE
    pivots, red = _elim.eliminate(rows, 2 * n, pivot_limit=n, reduce_full=True)
    if len(pivots) != n:
        raise SingularMatrixError("matrix is singular")
    ents = {}
    for p in pivots:
        for c, v in red[p].items():
            if c >= n:
                ents[(p, c - n)] = v
    return SparseMat(n, n, ents)


# ---------------------------------------------------------------------------
# Polynomials (lists of Fractions, lowest degree first)


def poly_normalize(coeffs):
    c = [_rat(v) for v in coeffs]
    while c and not c[-1]:
        c.pop()
    return c


def poly_eval(coeffs, x):
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_divide_linear(coeffs, r):
    """Divide by (x - r); returns (quotient, remainder) by synthetic division."""
    if not coeffs:
        return [], ZERO
    q = [ZERO] * (len(coeffs) - 1)
    acc = ZERO
    for k in range(len(coeffs) - 1, -1, -1):
        acc = acc * r + coeffs[k]
        if k:
            q[k - 1] = acc
    return q, acc


def factor_binary(coeffs):
    """Split p = x^a (x-1)^b * residual; returns (a, b, residual)."""
    p = poly_normalize(coeffs)
    a = b = 0
    while p and not p[0]:
        p = p[1:]
        a += 1
    while len(p) > 1 and poly_eval(p, ONE) == 0:
        p, _ = poly_divide_linear(p, ONE)
        b += 1
    return a, b, p


def char_poly(M):
    """det(xI - M), exact, via Faddeev-LeVerrier over the rationals.

    Returns coefficients lowest degree first (monic of degree n).
    """
    if M.n_rows != M.n_cols:
        raise DimensionError("characteristic polynomial of non-square matrix")
    n = M.n_rows
    coeffs = [ONE]  # c_0 = 1 for x^n
    N = SparseMat.identity(n)
    for k in range(1, n + 1):
        MN = M.matmul(N)
        tr = sum((MN[(i, i)] for i in range(n)), ZERO)
        ck = -tr / k
        coeffs.append(ck)
        if k < n:
            N = MN.add(SparseMat.identity(n), scale=ck)
    return list(reversed(coeffs))
