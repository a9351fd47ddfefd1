"""Exact linear algebra over the scalar field Q(params).

All routines take matrices as lists of rows of :class:`Scalar`.  Ranks of
parametric matrices are generic ranks: elimination divides by any nonzero
rational function, so the result is valid off the vanishing locus of the
pivots (special parameter values are handled upstream by re-evaluating at
the point).  Matrices whose entries are all constant take a fast path over
plain Fractions.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import Rat, Scalar

Row = list[Scalar]


class SingularMatrix(ValueError):
    """Raised when inverting a matrix with identically zero determinant."""


def _const_matrix(rows: list[Row]) -> list[list[Rat]] | None:
    out = []
    for row in rows:
        crow = []
        for s in row:
            if not s.is_const():
                return None
            crow.append(s.const_value())
        out.append(crow)
    return out


# -- reduced row echelon form ---------------------------------------------


def _rref_frac(rows: list[list[Rat]]) -> tuple[list[list[Rat]], list[int]]:
    mat = [row[:] for row in rows if any(row)]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        lead = mat[r][col]
        if lead != 1:
            mat[r] = [c / lead for c in mat[r]]
        prow = mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], prow)]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def _pivot_cost(s: Scalar) -> tuple[int, int]:
    # prefer constant pivots, then structurally small ones
    return (0 if s.is_const() else 1, len(s.num.terms) + len(s.den.terms))


def _rref_scalar(rows: list[Row]) -> tuple[list[Row], list[int]]:
    mat = [row[:] for row in rows if any(not s.is_zero() for s in row)]
    if not mat:
        return [], []
    ncols = len(mat[0])
    one = Scalar.one()
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = None
        best = None
        for i in range(r, len(mat)):
            s = mat[i][col]
            if not s.is_zero():
                cost = _pivot_cost(s)
                if best is None or cost < best:
                    best, pivot = cost, i
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        lead = mat[r][col]
        if lead != one:
            mat[r] = [c / lead for c in mat[r]]
        prow = mat[r]
        for i in range(len(mat)):
            if i != r and not mat[i][col].is_zero():
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], prow)]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rref(rows: list[Row]) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    cm = _const_matrix(rows)
    if cm is not None:
        mat, pivots = _rref_frac(cm)
        return [[Scalar.const(c) for c in row] for row in mat], pivots
    return _rref_scalar(rows)


def rank(rows: list[Row]) -> int:
    cm = _const_matrix(rows)
    if cm is not None:
        return len(_rref_frac(cm)[1])
    return len(_rref_scalar(rows)[1])


def nullspace(rows: list[Row], ncols: int) -> list[tuple[Scalar, ...]]:
    """Basis of {x : sum_j row[j] * x[j] = 0 for every row}."""
    if not rows:
        return [tuple(Scalar.one() if j == k else Scalar.zero() for j in range(ncols))
                for k in range(ncols)]
    mat, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Scalar.zero()] * ncols
        vec[fc] = Scalar.one()
        for prow, pc in zip(mat, pivots):
            vec[pc] = -prow[fc]
        basis.append(tuple(vec))
    return basis


def in_row_span(vec: Row, rows: list[Row]) -> bool:
    """Whether vec lies in the row span of rows (generic for parameters)."""
    base = rank(rows)
    return rank(rows + [vec]) == base


def residual_mod_rows(vec: Row, rref_rows: list[Row], pivots: list[int]) -> Row:
    """Reduce vec against an RREF basis; zero iff vec lies in the span."""
    out = list(vec)
    for prow, pc in zip(rref_rows, pivots):
        f = out[pc]
        if not f.is_zero():
            out = [a - f * b for a, b in zip(out, prow)]
    return out


def det(rows: list[Row]) -> Scalar:
    n = len(rows)
    assert all(len(r) == n for r in rows), "det needs a square matrix"
    cm = _const_matrix(rows)
    if cm is not None:
        sign = 1
        mat = [r[:] for r in cm]
        prod = Fraction(1)
        for col in range(n):
            pivot = None
            for i in range(col, n):
                if mat[i][col]:
                    pivot = i
                    break
            if pivot is None:
                return Scalar.zero()
            if pivot != col:
                mat[col], mat[pivot] = mat[pivot], mat[col]
                sign = -sign
            lead = mat[col][col]
            prod *= lead
            for i in range(col + 1, n):
                if mat[i][col]:
                    f = mat[i][col] / lead
                    mat[i] = [a - f * b for a, b in zip(mat[i], mat[col])]
        return Scalar.const(sign * prod)
    mat = [r[:] for r in rows]
    sign = 1
    prod = Scalar.one()
    for col in range(n):
        pivot = None
        best = None
        for i in range(col, n):
            s = mat[i][col]
            if not s.is_zero():
                cost = _pivot_cost(s)
                if best is None or cost < best:
                    best, pivot = cost, i
        if pivot is None:
            return Scalar.zero()
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            sign = -sign
        lead = mat[col][col]
        prod = prod * lead
        for i in range(col + 1, n):
            if not mat[i][col].is_zero():
                f = mat[i][col] / lead
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[col])]
    if sign < 0:
        prod = -prod
    return prod


def inverse(rows: list[Row]) -> list[Row]:
    n = len(rows)
    assert all(len(r) == n for r in rows), "inverse needs a square matrix"
    zero, one = Scalar.zero(), Scalar.one()
    aug = [list(rows[i]) + [one if j == i else zero for j in range(n)]
           for i in range(n)]
    mat, pivots = rref(aug)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix has identically zero determinant")
    return [row[n:] for row in mat]


def mat_mul(a: list[Row], b: list[Row]) -> list[Row]:
    assert a and b and len(a[0]) == len(b)
    cols = len(b[0])
    out = []
    for row in a:
        orow = []
        for j in range(cols):
            acc = Scalar.zero()
            for k, s in enumerate(row):
                if not s.is_zero() and not b[k][j].is_zero():
                    acc = acc + s * b[k][j]
            orow.append(acc)
        out.append(orow)
    return out


def mat_vec(a: list[Row], v: Row) -> Row:
    out = []
    for row in a:
        acc = Scalar.zero()
        for s, x in zip(row, v):
            if not s.is_zero() and not x.is_zero():
                acc = acc + s * x
        out.append(acc)
    return out
