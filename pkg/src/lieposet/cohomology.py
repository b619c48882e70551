"""Chevalley-Eilenberg cochain complex with adjoint coefficients.

Cochain coordinates are (strictly increasing basis-index tuple, target
basis index), ordered lexicographically by tuple then target; that order
is frozen so dumped matrices are stable.  The degree-0 differential is
d(x)(g1) = [g1, x], which makes H^0 the center -- all other signs then
follow from the standard alternating-sum formula.
"""

import itertools
import math
from dataclasses import dataclass

from . import exactla, liealg, simplicial
from .exactla import ONE, ZERO, SparseMat

DEGREE_GUARD = 3
DEFAULT_MAX_DIM = 12


class DegreeError(ValueError):
    pass


@dataclass(frozen=True)
class CoboundaryMap:
    degree: int
    matrix: SparseMat
    col_index: tuple  # (tuple, target) per column of C^degree
    row_index: tuple  # (tuple, target) per row of C^(degree+1)


def cochain_dim(g, n):
    """dim C^n(g, g) = C(dim, n) * dim."""
    if not 0 <= n <= g.dim:
        raise DegreeError(f"degree {n} out of range for dim {g.dim}")
    return math.comb(g.dim, n) * g.dim


def _coords(dim, n):
    combos = list(itertools.combinations(range(dim), n))
    pos = {S: i for i, S in enumerate(combos)}
    return combos, pos


def coboundary_matrix(g, n):
    """Exact matrix of the degree-n differential C^n -> C^(n+1).

    At n = dim the target space is zero and the matrix has no rows.
    """
    if not 0 <= n <= g.dim:
        raise DegreeError(f"degree {n} out of range for dim {g.dim}")
    dim = g.dim
    combos_n, _ = _coords(dim, n)
    combos_n1, pos_n1 = _coords(dim, n + 1)
    ents = {}

    def add(row_tuple, target, val, col):
        if not val:
            return
        key = (pos_n1[row_tuple] * dim + target, col)
        s = ents.get(key, ZERO) + val
        if s:
            ents[key] = s
        else:
            del ents[key]

    for s_pos, S in enumerate(combos_n):
        in_S = set(S)
        for t in range(dim):
            col = s_pos * dim + t
            # Module term: insert a into S; the cochain eats the rest.
            for a in range(dim):
                if a in in_S:
                    continue
                G = tuple(sorted(S + (a,)))
                sign = ONE if G.index(a) % 2 == 0 else -ONE
                for m, c in g.structure(a, t).items():
                    add(G, m, sign * c, col)
            # Bracket term: replace k in S by a bracketed pair (a, b).
            for k in S:
                R = tuple(x for x in S if x != k)
                in_R = set(R)
                sign_k = ONE if sum(1 for r in R if r < k) % 2 == 0 else -ONE
                for a in range(dim):
                    if a in in_R:
                        continue
                    for b in range(a + 1, dim):
                        if b in in_R:
                            continue
                        c_ab = g.structure(a, b).get(k)
                        if not c_ab:
                            continue
                        G = tuple(sorted(R + (a, b)))
                        i, j = G.index(a) + 1, G.index(b) + 1
                        sign_ij = ONE if (i + j) % 2 == 0 else -ONE
                        add(G, t, sign_ij * sign_k * c_ab, col)

    rows = math.comb(dim, n + 1) * dim
    cols = math.comb(dim, n) * dim
    return CoboundaryMap(
        degree=n,
        matrix=SparseMat(rows, cols, ents),
        col_index=tuple((S, t) for S in combos_n for t in range(dim)),
        row_index=tuple((S, t) for S in combos_n1 for t in range(dim)),
    )


def cohomology_report(g, n, max_dim=DEFAULT_MAX_DIM):
    """Dims of C^n, Z^n, B^n, H^n, via exact ranks of the differentials."""
    if not 0 <= n <= DEGREE_GUARD:
        raise DegreeError(f"degree guard: 0 <= n <= {DEGREE_GUARD}")
    if g.dim > max_dim:
        raise DegreeError(f"dimension guard: dim {g.dim} > {max_dim}")
    c_dim = cochain_dim(g, n)
    rank_n = exactla.rank(coboundary_matrix(g, n).matrix) if n <= g.dim else 0
    z_dim = c_dim - rank_n
    b_dim = exactla.rank(coboundary_matrix(g, n - 1).matrix) if n >= 1 else 0
    return {"C": c_dim, "Z": z_dim, "B": b_dim, "H": z_dim - b_dim}


def cohomology_dim(g, n, max_dim=DEFAULT_MAX_DIM):
    return cohomology_report(g, n, max_dim=max_dim)["H"]


# ---------------------------------------------------------------------------
# Shape of Z^2 for the normal form


def _cochain_from_vector(cm, vec):
    out = {}
    for col, v in enumerate(vec):
        if v:
            out[cm.col_index[col]] = v
    return out


def _coeff(F2, pair, target):
    """Coefficient of x_target in F2(x_a, x_b) for an ordered pair (a, b)."""
    a, b = pair
    if a < b:
        return F2.get(((a, b), target), ZERO)
    return -F2.get(((b, a), target), ZERO)


def z2_shape_check_phi(n):
    """Verify every 2-cocycle of the normal form Phi_n has the constrained
    support shape, and that the explicit 1-cochain recipe cobounds it.

    Returns (True, None), or (False, counterexample cochain dict).
    """
    if n > 4:
        raise DegreeError("shape check guarded to n <= 4")
    g = liealg.make_phi(n)
    d2 = coboundary_matrix(g, 2)
    kernel = exactla.kernel_basis(d2.matrix)
    d = list(range(n))  # indices of d_1..d_n
    e = [n + i for i in range(n)]  # indices of e_1..e_n
    for vec in kernel:
        F2 = _cochain_from_vector(d2, vec)
        if not _shape_ok(F2, n, d, e) or not _recipe_cobounds(g, F2, n, d, e):
            return False, F2
    return True, None


def _shape_ok(F2, n, d, e):
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            allowed = {e[i], e[j]}
            for pair in ((e[i], e[j]), (d[i], d[j]), (d[i], e[j])):
                for t in range(2 * n):
                    if t not in allowed and _coeff(F2, pair, t):
                        return False
    # Coupled diagonal constraint on F2(d_i, e_i).
    for i in range(n):
        for t in range(2 * n):
            val = _coeff(F2, (d[i], e[i]), t)
            if t == e[i] or t == d[i]:
                continue
            if t in e:
                k = e.index(t)
                if val != -_coeff(F2, (d[k], e[i]), e[k]):
                    return False
            else:
                k = d.index(t)
                if val != -_coeff(F2, (e[i], e[k]), e[k]):
                    return False
    return True


def _recipe_cobounds(g, F2, n, d, e):
    """Build the 1-cochain from the closed-form recipe and check dF1 = F2."""
    F1 = {}

    def put(src, tgt, val):
        if val:
            F1[(src, tgt)] = F1.get((src, tgt), ZERO) + val

    for i in range(n):
        for j in range(n):
            if i != j:
                put(e[i], d[j], _coeff(F2, (e[i], e[j]), e[j]))
                put(d[j], e[i], _coeff(F2, (d[i], d[j]), e[i]))
                put(e[j], e[i], _coeff(F2, (d[i], e[j]), e[i]))
            put(d[i], d[j], _coeff(F2, (d[i], e[j]), e[j]))
        put(e[i], d[i], -_coeff(F2, (d[i], e[i]), d[i]))

    d1 = coboundary_matrix(g, 1)
    vec = [ZERO] * len(d1.col_index)
    col_pos = {key: c for c, key in enumerate(d1.col_index)}
    for (src, tgt), val in F1.items():
        vec[col_pos[((src,), tgt)]] += val
    image = d1.matrix.mat_vec(vec)
    want = [ZERO] * len(d1.row_index)
    for r, key in enumerate(d1.row_index):
        want[r] = F2.get(key, ZERO)
    return image == want


# ---------------------------------------------------------------------------
# The three-component comparison for type-A second cohomology


@dataclass(frozen=True)
class H2ComparisonReport:
    lhs: int
    rhs: int
    pieces: tuple  # (wedge^2 h* x center, h* x H^1(nerve), H^2(nerve))
    match: bool


def compare_h2(P, variant="gl", max_dim=DEFAULT_MAX_DIM):
    """Compare dim H^2(g, g) against the three simplicial components
    C(dim h, 2)*dim(center) + dim h * dim H^1(nerve) + dim H^2(nerve),
    computed along fully independent code paths.
    """
    g = liealg.build(P, variant=variant)
    lhs = cohomology_dim(g, 2, max_dim=max_dim)
    h_dim = g.cartan_count
    c_dim = liealg.center(g).dim
    h1 = simplicial.simplicial_cohomology_dim(P, 1)
    h2 = simplicial.simplicial_cohomology_dim(P, 2)
    pieces = (math.comb(h_dim, 2) * c_dim, h_dim * h1, h2)
    rhs = sum(pieces)
    return H2ComparisonReport(lhs=lhs, rhs=rhs, pieces=pieces, match=(lhs == rhs))


def dump_complex(cm, stream):
    """Sparse triplet text: one 'row col numerator/denominator' per line."""
    stream.write(f"# degree {cm.degree}: {cm.matrix.n_rows} x {cm.matrix.n_cols}\n")
    for (i, j), v in sorted(cm.matrix.entries.items()):
        stream.write(f"{i} {j} {v.numerator}/{v.denominator}\n")


__all__ = [
    "CoboundaryMap",
    "H2ComparisonReport",
    "cochain_dim",
    "coboundary_matrix",
    "cohomology_dim",
    "cohomology_report",
    "dump_complex",
    "compare_h2",
    "z2_shape_check_phi",
]
