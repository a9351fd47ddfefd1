"""Exact invariants of algebra presentations.

Every invariant here is computed symbolically over Q(params); for a
parametric presentation the result is the generic value (valid off a
proper closed locus), so callers that care about special parameter values
bind them first via ``substitute_params``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .algebra import AlgebraPresentation, Vector
from .exact import ParamPoly, Scalar
from .linalg import Row, nullspace, rank, residual_mod_rows, rref

# -- adjoint maps ----------------------------------------------------------


def ad_matrix(a: AlgebraPresentation, x: Vector) -> list[Row]:
    """Matrix of left multiplication L_x : y -> x*y, columns over e_j."""
    cols = [a.product(x, a.basis_vector(j)) for j in range(a.dim)]
    return [[cols[j][k] for j in range(a.dim)] for k in range(a.dim)]


# -- derivation algebra ----------------------------------------------------


def derivation_dim(a: AlgebraPresentation) -> int:
    """Dimension of the derivation algebra.

    Unknowns D[p][q] (coords of D(e_p)); the Leibniz constraints on basis
    pairs i<j generate all constraints by bilinearity.
    """
    n = a.dim
    nvar = n * n

    def var(p: int, q: int) -> int:
        return p * n + q

    rows: list[Row] = []
    zero = Scalar.zero()
    # iterate over every i<j (absent products still constrain the RHS)
    for i in range(n):
        for j in range(i + 1, n):
            cij = a.products.get((i, j))
            for m in range(n):
                row = [zero] * nvar
                # D(e_i)e_j = sum_k D[i][k] (e_k e_j)
                for k in range(n):
                    ckj = a._table[k][j]
                    if not ckj[m].is_zero():
                        row[var(i, k)] = row[var(i, k)] + ckj[m]
                    cik = a._table[i][k]
                    if not cik[m].is_zero():
                        row[var(j, k)] = row[var(j, k)] + cik[m]
                if cij is not None:
                    # - D(e_i e_j) = - sum_k c_k D[k][m]
                    for k in range(n):
                        if not cij[k].is_zero():
                            row[var(k, m)] = row[var(k, m)] - cij[k]
                if any(not s.is_zero() for s in row):
                    rows.append(row)
    return nvar - rank(rows)


# -- power sequence --------------------------------------------------------


def power_dims(a: AlgebraPresentation) -> tuple[int, ...]:
    """(dim A^1, dim A^2, ...) with A^l = A^{l-1} A, until stabilization.

    The chain is decreasing (A^l is contained in A^{l-1}); computation
    stops when the dimension repeats or after dim+1 terms.
    """
    n = a.dim
    dims = [n]
    current = [list(a.basis_vector(i)) for i in range(n)]
    while True:
        nxt: list[Row] = []
        for b in current:
            for j in range(n):
                v = a.product(tuple(b), a.basis_vector(j))
                if any(not s.is_zero() for s in v):
                    nxt.append(list(v))
        red, piv = rref(nxt)
        d = len(piv)
        dims.append(d)
        if d == dims[-2] or len(dims) > n + 1 or d == 0:
            return tuple(dims)
        current = red


def power_dim(a: AlgebraPresentation, l: int) -> int:
    dims = power_dims(a)
    return dims[l - 1] if l - 1 < len(dims) else dims[-1]


# -- upper central series --------------------------------------------------


def central_series_dims(a: AlgebraPresentation) -> tuple[int, ...]:
    """(dim Z_1, dim Z_2, ...) until stabilization or the whole algebra.

    Z_1 is the center; Z_l is the full preimage {x : x e_j in Z_{l-1} for
    all j}, computed via residuals against an echelon basis of Z_{l-1}
    (no explicit quotient algebra is formed).
    """
    n = a.dim
    dims: list[int] = []
    zrows: list[Row] = []
    zpiv: list[int] = []
    while True:
        eq_rows: list[Row] = []
        for j in range(n):
            # column a of (x e_j) is c[a][j]; reduce mod Z_{l-1}
            reduced_cols = [residual_mod_rows(list(a._table[p][j]), zrows, zpiv)
                            for p in range(n)]
            for m in range(n):
                row = [reduced_cols[p][m] for p in range(n)]
                if any(not s.is_zero() for s in row):
                    eq_rows.append(row)
        basis = nullspace(eq_rows, n)
        d = len(basis)
        if dims and d == dims[-1]:
            return tuple(dims)
        dims.append(d)
        if d == n:
            return tuple(dims)
        zrows, zpiv = rref([list(v) for v in basis])


def central_dim(a: AlgebraPresentation, l: int) -> int:
    dims = central_series_dims(a)
    return dims[l - 1] if l - 1 < len(dims) else dims[-1]


# -- trace-form invariants -------------------------------------------------


@dataclass(frozen=True)
class IJResult:
    """Outcome of the (i,j) trace invariant.

    kind:
      * ``proportional``: tr((ad x)^i) tr((ad y)^j) = ratio * tr((ad x)^i (ad y)^j)
        identically, with the right side not identically zero;
      * ``both_zero``: both sides vanish identically (no information);
      * ``left_only``: the right side vanishes but the left does not;
      * ``not_proportional``: no constant ratio exists.
    """

    kind: Literal["proportional", "both_zero", "left_only", "not_proportional"]
    ratio: Scalar | None = None


def _generic_ad_power(a: AlgebraPresentation, prefix: str, power: int) -> list[list[ParamPoly]]:
    x = tuple(Scalar.var(f"{prefix}{i + 1}") for i in range(a.dim))
    m = ad_matrix(a, x)
    mp = [[s.num if s.den.is_const() and s.den.const_value() == 1 else None
           for s in row] for row in m]
    if any(e is None for row in mp for e in row):  # pragma: no cover
        raise ValueError("ad matrix has non-polynomial entries")
    acc = mp
    for _ in range(power - 1):
        acc = _poly_mat_mul(acc, mp)
    return acc


def _poly_mat_mul(a: list[list[ParamPoly]], b: list[list[ParamPoly]]) -> list[list[ParamPoly]]:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ParamPoly.const(0)
            for k in range(n):
                if a[i][k].is_zero() or b[k][j].is_zero():
                    continue
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def _poly_trace(m: list[list[ParamPoly]]) -> ParamPoly:
    acc = ParamPoly.const(0)
    for i in range(len(m)):
        acc = acc + m[i][i]
    return acc


def _trace_of_product(a: list[list[ParamPoly]], b: list[list[ParamPoly]]) -> ParamPoly:
    n = len(a)
    acc = ParamPoly.const(0)
    for i in range(n):
        for k in range(n):
            if not a[i][k].is_zero() and not b[k][i].is_zero():
                acc = acc + a[i][k] * b[k][i]
    return acc


def ij_invariant(a: AlgebraPresentation, i: int, j: int) -> IJResult:
    """Constant of proportionality between tr((ad x)^i) tr((ad y)^j) and
    tr((ad x)^i (ad y)^j) over generic x, y (2*dim generic coordinates).

    The candidate ratio is read off one coordinate monomial and then
    verified on all monomials by cross multiplication, which keeps the
    computation inside polynomial arithmetic.
    """
    coord_names = {f"x{k + 1}" for k in range(a.dim)} | {f"y{k + 1}" for k in range(a.dim)}
    clash = coord_names & set(a.params)
    if clash:
        raise ValueError(f"parameter names {sorted(clash)} clash with coordinates")
    ax = _generic_ad_power(a, "x", i)
    ay = _generic_ad_power(a, "y", j)
    left = _poly_trace(ax) * _poly_trace(ay)
    right = _trace_of_product(ax, ay)
    if left.is_zero() and right.is_zero():
        return IJResult("both_zero")
    if right.is_zero():
        return IJResult("left_only")
    if left.is_zero():
        return IJResult("proportional", Scalar.zero())

    def grouped(p: ParamPoly) -> dict[tuple, ParamPoly]:
        groups: dict[tuple, dict] = {}
        for mono, coef in p.terms.items():
            cpart = tuple((v, e) for v, e in mono if v in coord_names)
            ppart = tuple((v, e) for v, e in mono if v not in coord_names)
            groups.setdefault(cpart, {})[ppart] = coef
        return {c: ParamPoly(t) for c, t in groups.items()}

    lg = grouped(left)
    rg = grouped(right)
    # pick a reference monomial with nonzero right coefficient
    ref = next(iter(sorted(rg.keys())))
    l_ref = lg.get(ref, ParamPoly.const(0))
    r_ref = rg[ref]
    # verify L_m * R_ref == L_ref * R_m for every monomial m
    zero = ParamPoly.const(0)
    for mono in set(lg) | set(rg):
        lm = lg.get(mono, zero)
        rm = rg.get(mono, zero)
        if lm * r_ref != l_ref * rm:
            return IJResult("not_proportional")
    return IJResult("proportional", Scalar(l_ref, r_ref))


# -- wedge identity --------------------------------------------------------


def wedge_identity_residual(a: AlgebraPresentation) -> list[ParamPoly]:
    """Obstructions to the closed identity  (x(xy)) wedge (y(xy)) = 0.

    For generic vectors x, y the 2x2 minors of the pair of double products
    u = x(xy), v = y(xy) are polynomials in the coordinates of x and y with
    coefficients in Q[params].  The identity "u and v are parallel for all
    x, y" holds at a parameter point iff every coefficient polynomial
    vanishes there; it holds identically iff the returned list is empty.

    The condition is a polynomial condition on structure constants that is
    preserved under change of basis and under passage to orbit-closure
    limits, so an algebra satisfying it cannot degenerate to one that does
    not.
    """
    n = a.dim
    xs = [f"wx{i}" for i in range(n)]
    ys = [f"wy{i}" for i in range(n)]
    clash = (set(xs) | set(ys)) & set(a.params)
    if clash:
        raise ValueError(f"parameter names collide with probe coordinates: {sorted(clash)}")
    x = tuple(Scalar.var(v) for v in xs)
    y = tuple(Scalar.var(v) for v in ys)
    xy = a.product(x, y)
    u = a.product(x, xy)
    v = a.product(y, xy)
    coord_names = set(xs) | set(ys)

    residual: list[ParamPoly] = []
    seen: set[tuple] = set()
    for i in range(n):
        for j in range(i + 1, n):
            minor = u[i] * v[j] - u[j] * v[i]
            num = minor.num
            for mono in minor.den.terms:
                if any(vname in coord_names for vname, _ in mono):
                    raise ValueError("unexpected probe coordinate in denominator")
            # group numerator terms by coordinate part; each coefficient in
            # Q[params] must vanish for the identity to hold
            groups: dict[tuple, dict] = {}
            for mono, coef in num.terms.items():
                cpart = tuple((vn, e) for vn, e in mono if vn in coord_names)
                ppart = tuple((vn, e) for vn, e in mono if vn not in coord_names)
                groups.setdefault(cpart, {})[ppart] = coef
            for cpart, terms in groups.items():
                poly = ParamPoly(terms)
                if poly.is_zero():
                    continue
                key = tuple(sorted(poly.terms.items()))
                if key not in seen:
                    seen.add(key)
                    residual.append(poly)
    return residual


def wedge_identity_holds(a: AlgebraPresentation) -> bool:
    """True iff the wedge identity holds for every parameter value."""
    return not wedge_identity_residual(a)


def wedge_violation_pair(
    a: AlgebraPresentation,
) -> tuple[Vector, Vector, Scalar] | None:
    """A concrete pair (x, y) with x(xy) not parallel to y(xy), if found.

    Searches basis pairs, then two-term combinations.  Returns the pair and
    one nonzero minor (a polynomial in params for parametric presentations,
    nonzero generically).  None if the search finds no violation.
    """
    n = a.dim
    one = Scalar.one()
    zero = Scalar.zero()

    def vec(*support: int) -> Vector:
        return tuple(one if k in support else zero for k in range(n))

    candidates: list[tuple[Vector, Vector]] = []
    for i in range(n):
        for j in range(i + 1, n):
            candidates.append((vec(i), vec(j)))
    for i in range(n):
        for j in range(n):
            if j == i:
                continue
            for k in range(n):
                if k in (i, j):
                    continue
                candidates.append((vec(i, k), vec(j)))
                candidates.append((vec(i), vec(j, k)))

    for x, y in candidates:
        xy = a.product(x, y)
        u = a.product(x, xy)
        v = a.product(y, xy)
        for i in range(n):
            for j in range(i + 1, n):
                minor = u[i] * v[j] - u[j] * v[i]
                if not minor.is_zero():
                    return x, y, minor
    return None


# -- bundled profile -------------------------------------------------------


@dataclass(frozen=True)
class InvariantProfile:
    dim: int
    derivation_dim: int
    power_dims: tuple[int, ...]
    central_dims: tuple[int, ...]
    alg_type: str

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "derivation_dim": self.derivation_dim,
            "power_dims": list(self.power_dims),
            "central_dims": list(self.central_dims),
            "type": self.alg_type,
        }


def invariant_profile(a: AlgebraPresentation) -> InvariantProfile:
    return InvariantProfile(
        dim=a.dim,
        derivation_dim=derivation_dim(a),
        power_dims=power_dims(a),
        central_dims=central_series_dims(a),
        alg_type=a.classify_type(),
    )
