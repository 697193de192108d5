"""Dense exact linear algebra over Fraction: rref, rank, nullspaces.

Matrices are lists of row lists.  Weight spaces stay small (a few
hundred at most under the default caps), so dense Gaussian elimination
with exact rationals is the right tool; pivots are chosen with the
smallest numerator/denominator bit size to keep intermediate entries
tame.
"""

from fractions import Fraction

F = Fraction


def _pivot_size(x):
    return max(abs(x.numerator), x.denominator)


def rref(matrix, ncols=None):
    """Reduced row echelon form. Returns (rows, pivot_columns).

    The input is not modified.  Zero rows are dropped.
    """
    rows = [[F(x) for x in row] for row in matrix]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        best = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0 and (best is None or _pivot_size(rows[i][c]) < _pivot_size(rows[best][c])):
                best = i
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        inv = F(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix, ncols=None):
    return len(rref(matrix, ncols)[0])


def nullspace(matrix, ncols):
    """Basis of {x : M x = 0} as a list of column vectors (length ncols)."""
    rows, pivots = rref(matrix, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [F(0)] * ncols
        vec[fc] = F(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def nullity(matrix, ncols):
    return ncols - rank(matrix, ncols)


def transpose(matrix, ncols):
    return [[row[c] for row in matrix] for c in range(ncols)]


def cokernel_equations(columns, dim):
    """Rows e with e . v = 0 for every v in the span of `columns`.

    `columns` are vectors of length `dim`; the result cuts out exactly
    their span inside F^dim.
    """
    if not columns:
        return [[F(1) if j == i else F(0) for j in range(dim)] for i in range(dim)]
    # left null space of the dim x k matrix whose columns are the vectors
    mat = [[col[i] for col in columns] for i in range(dim)]
    return nullspace(transpose(mat, len(columns)), dim)


def in_span(columns, vector):
    """Is `vector` in the span of `columns`? (all length dim)"""
    base = [list(c) for c in columns]
    r0 = rank(base, len(vector)) if columns else 0
    return rank(base + [list(vector)], len(vector)) == r0


def mat_vec(matrix, vec):
    return [sum(a * b for a, b in zip(row, vec)) for row in matrix]
