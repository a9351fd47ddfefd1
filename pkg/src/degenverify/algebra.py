"""Anticommutative algebra presentations with exact structure constants.

An :class:`AlgebraPresentation` is a finite-dimensional anticommutative
algebra given by structure constants over Q(params): products are stored
for basis pairs ``i < j`` only and extended by antisymmetry.  All identity
checks are exact symbolic proofs (generic coordinates or polarized basis
evaluations), never numeric sampling.
"""

from __future__ import annotations

from typing import Iterable, Literal, Mapping

from .exact import (
    DEFORMATION_VAR,
    ParamPoly,
    Rat,
    Scalar,
    parse_scalar,
    poly_gcd,
    substitute,
)
from .linalg import inverse, mat_vec

Vector = tuple[Scalar, ...]

IdentityName = Literal["jacobi", "malcev", "binary_lie"]
IDENTITIES: tuple[IdentityName, ...] = ("jacobi", "malcev", "binary_lie")

# type ladder: each level satisfies all weaker identities
TYPE_ORDER = ("lie", "malcev", "binary_lie", "not_binary_lie")


class PresentationError(ValueError):
    """Raised for malformed structure-constant data."""


class NeedsSpecialization(ValueError):
    """Raised when a question about a parametric family has no uniform answer."""


def _zero_vec(dim: int) -> Vector:
    return tuple(Scalar.zero() for _ in range(dim))


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(s: Scalar, a: Vector) -> Vector:
    return tuple(s * x for x in a)


def vec_is_zero(a: Vector) -> bool:
    return all(x.is_zero() for x in a)


class AlgebraPresentation:
    """An anticommutative algebra with exact structure constants.

    ``products`` maps 0-based basis pairs ``(i, j)`` with ``i < j`` to the
    coordinate vector of ``e_i * e_j``; absent pairs multiply to zero.
    ``params`` lists the free parameter names; the deformation variable
    ``t`` may appear in entries only when ``allow_t=True`` (used for
    deformed presentations built from degeneration witnesses).
    """

    __slots__ = ("name", "display", "dim", "params", "products", "_table")

    def __init__(
        self,
        name: str,
        dim: int,
        products: Mapping[tuple[int, int], Vector],
        params: Iterable[str] = (),
        display: str | None = None,
        allow_t: bool = False,
    ) -> None:
        if dim < 1:
            raise PresentationError(f"{name}: dimension must be positive")
        self.name = name
        self.display = display if display is not None else name
        self.dim = dim
        self.params = tuple(params)
        if len(set(self.params)) != len(self.params):
            raise PresentationError(f"{name}: duplicate parameter names")
        if DEFORMATION_VAR in self.params:
            raise PresentationError(
                f"{name}: {DEFORMATION_VAR!r} is reserved for deformations")
        allowed = set(self.params)
        if allow_t:
            allowed.add(DEFORMATION_VAR)
        norm: dict[tuple[int, int], Vector] = {}
        for (i, j), vec in products.items():
            if not (0 <= i < j < dim):
                raise PresentationError(
                    f"{name}: product key ({i},{j}) must satisfy 0 <= i < j < dim")
            vec = tuple(vec)
            if len(vec) != dim:
                raise PresentationError(f"{name}: product ({i},{j}) has wrong length")
            for s in vec:
                stray = s.variables() - allowed
                if stray:
                    raise PresentationError(
                        f"{name}: undeclared names {sorted(stray)} in product ({i},{j})")
            if not vec_is_zero(vec):
                norm[(i, j)] = vec
        self.products = norm
        # full antisymmetrized multiplication table c[i][j] = e_i * e_j
        zero = _zero_vec(dim)
        table = [[zero] * dim for _ in range(dim)]
        for (i, j), vec in norm.items():
            table[i][j] = vec
            table[j][i] = tuple(-x for x in vec)
        self._table = tuple(tuple(row) for row in table)

    # -- basics -----------------------------------------------------------

    def basis_vector(self, i: int) -> Vector:
        return tuple(Scalar.one() if k == i else Scalar.zero() for k in range(self.dim))

    def zero_vector(self) -> Vector:
        return _zero_vec(self.dim)

    def product(self, x: Vector, y: Vector) -> Vector:
        out = list(_zero_vec(self.dim))
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            row = self._table[i]
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                cij = row[j]
                if cij is not None:
                    coef = xi * yj
                    for k, ck in enumerate(cij):
                        if not ck.is_zero():
                            out[k] = out[k] + coef * ck
        return tuple(out)

    def jacobian(self, x: Vector, y: Vector, z: Vector) -> Vector:
        """J(x,y,z) = (xy)z + (yz)x + (zx)y."""
        p = self.product
        return vec_add(vec_add(p(p(x, y), z), p(p(y, z), x)), p(p(z, x), y))

    def same_structure_constants(self, other: "AlgebraPresentation") -> bool:
        if self.dim != other.dim:
            return False
        keys = set(self.products) | set(other.products)
        zero = _zero_vec(self.dim)
        for key in keys:
            if self.products.get(key, zero) != other.products.get(key, zero):
                return False
        return True

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"AlgebraPresentation({self.name!r}, dim={self.dim}, params={self.params})"

    # -- identities -------------------------------------------------------

    def _identity_case_residuals(self, identity: IdentityName, x: Vector,
                                 y: Vector, z: Vector | None) -> Vector:
        J = self.jacobian
        p = self.product
        if identity == "jacobi":
            assert z is not None
            return J(x, y, z)
        if identity == "malcev":
            # J(x, y, x*z) - J(x, y, z)*x
            assert z is not None
            return vec_sub(J(x, y, p(x, z)), p(J(x, y, z), x))
        if identity == "binary_lie":
            # J(x, y, x*y)
            return J(x, y, p(x, y))
        raise ValueError(f"unknown identity {identity!r}")

    def identity_residual(self, identity: IdentityName) -> list[ParamPoly]:
        """Coefficient polynomials (in params only) of the identity residual.

        Generic coordinate vectors are substituted into the identity; the
        residual is expanded and grouped by coordinate monomials, and the
        list of parameter-coefficient polynomials is returned.  The
        identity holds throughout the parameter family iff every returned
        polynomial is zero, and the set of parameter values where it holds
        is exactly the common zero set of the returned polynomials.
        """
        coord_names: list[str] = []

        def generic(prefix: str) -> Vector:
            names = [f"{prefix}{i + 1}" for i in range(self.dim)]
            clash = set(names) & (set(self.params) | {DEFORMATION_VAR})
            if clash:
                raise PresentationError(
                    f"{self.name}: parameter names {sorted(clash)} clash with "
                    "generic coordinates")
            coord_names.extend(names)
            return tuple(Scalar.var(n) for n in names)

        x = generic("x")
        y = generic("y")
        z = generic("z") if identity in ("jacobi", "malcev") else None
        residual = self._identity_case_residuals(identity, x, y, z)
        coords = set(coord_names)
        seen: dict[tuple, ParamPoly] = {}
        for comp in residual:
            if comp.is_zero():
                continue
            if not comp.den.is_const():
                stray = comp.den.variables() & coords
                if stray:  # cannot happen: coords enter numerators only
                    raise PresentationError("generic coordinates leaked into denominator")
            # split each monomial into coordinate part and parameter part
            groups: dict[tuple, dict] = {}
            for mono, coef in comp.num.terms.items():
                cpart = tuple((v, e) for v, e in mono if v in coords)
                ppart = tuple((v, e) for v, e in mono if v not in coords)
                groups.setdefault(cpart, {})[ppart] = coef
            for cpart, terms in groups.items():
                poly = ParamPoly(terms)
                if not poly.is_zero():
                    seen[(cpart, str(poly))] = poly
        # dedupe up to sign/scale would lose information; dedupe exact only
        uniq: list[ParamPoly] = []
        seen_repr: set[str] = set()
        for poly in seen.values():
            r = str(poly)
            if r not in seen_repr:
                seen_repr.add(r)
                uniq.append(poly)
        return uniq

    def _polarization_points(self) -> list[Vector]:
        pts = [self.basis_vector(a) for a in range(self.dim)]
        for a in range(self.dim):
            for b in range(a + 1, self.dim):
                pts.append(vec_add(self.basis_vector(a), self.basis_vector(b)))
        return pts

    def identity_holds(self, identity: IdentityName) -> bool:
        """Exact identity check via polarized basis evaluations.

        Over a field of characteristic zero this is equivalent to the
        generic-coordinate residual being zero: the Jacobian is trilinear
        (basis triples suffice); the other residuals are quadratic in the
        repeated slot, so evaluations at e_a and e_a + e_b recover every
        coefficient of the quadratic form.
        """
        basis = [self.basis_vector(a) for a in range(self.dim)]
        if identity == "jacobi":
            for a in range(self.dim):
                for b in range(a + 1, self.dim):
                    for c in range(b + 1, self.dim):
                        if not vec_is_zero(
                                self.jacobian(basis[a], basis[b], basis[c])):
                            return False
            return True
        if identity == "malcev":
            for x in self._polarization_points():
                for y in basis:
                    for z in basis:
                        if not vec_is_zero(
                                self._identity_case_residuals("malcev", x, y, z)):
                            return False
            return True
        if identity == "binary_lie":
            pts = self._polarization_points()
            for x in pts:
                for y in pts:
                    if not vec_is_zero(
                            self._identity_case_residuals("binary_lie", x, y, None)):
                        return False
            return True
        raise ValueError(f"unknown identity {identity!r}")

    def classify_type(self) -> str:
        """One of 'lie' < 'malcev' < 'binary_lie' < 'not_binary_lie'.

        For a parameter-free presentation the answer is direct.  For a
        parametric family the answer is returned only when it is uniform
        across every parameter value: an identity counts as failing
        uniformly when its residual coefficients have provably empty
        common zero set (constant gcd for one parameter, or a nonzero
        constant coefficient).  Otherwise the type jumps at special
        parameter values and NeedsSpecialization is raised.
        """
        if not self.params:
            for level, identity in (("lie", "jacobi"), ("malcev", "malcev"),
                                    ("binary_lie", "binary_lie")):
                if self.identity_holds(identity):
                    return level
            return "not_binary_lie"
        for level, identity in (("lie", "jacobi"), ("malcev", "malcev"),
                                ("binary_lie", "binary_lie")):
            polys = self.identity_residual(identity)
            if not polys:
                return level
            if any(p.is_const() for p in polys):
                continue  # a nonzero constant residual: fails at every value
            if len(self.params) == 1:
                g = polys[0]
                for p in polys[1:]:
                    g = poly_gcd(g, p)
                if g.is_const():
                    continue  # no common root: fails at every value
            raise NeedsSpecialization(
                f"{self.name}: type jumps at special values of {self.params}")
        return "not_binary_lie"

    def identity_zero_set_poly(self, identity: IdentityName) -> ParamPoly:
        """For one-parameter families: a univariate polynomial whose roots
        are exactly the parameter values where the identity holds.

        The residual coefficients are univariate, so their gcd has
        precisely the common roots.  Raises for 0- or 2-parameter cases.
        """
        if len(self.params) != 1:
            raise NeedsSpecialization(
                f"{self.name}: zero-set polynomial needs exactly one parameter")
        polys = self.identity_residual(identity)
        if not polys:
            return ParamPoly.const(0)  # identity holds everywhere
        g = polys[0]
        for p in polys[1:]:
            g = poly_gcd(g, p)
        return g

    # -- transformations --------------------------------------------------

    def change_of_basis(self, rows: list[list[Scalar]],
                        name: str | None = None,
                        allow_t: bool = False) -> "AlgebraPresentation":
        """Rewrite the presentation in the basis f_i = sum_a rows[i][a] e_a.

        ``rows[i]`` is the coordinate row of the new basis vector f_i in
        the old basis.  New structure constants solve w . P = v where v is
        the old-coordinate product vector, i.e. w = v . P^{-1}.
        """
        if len(rows) != self.dim or any(len(r) != self.dim for r in rows):
            raise PresentationError(f"{self.name}: basis matrix must be {self.dim}x{self.dim}")
        pinv = inverse(rows)  # raises SingularMatrix if not generically invertible
        # w = v . P^{-1}  (row vector times matrix)
        pinv_cols = list(zip(*pinv))
        new_products: dict[tuple[int, int], Vector] = {}
        for i in range(self.dim):
            fi = tuple(rows[i])
            for j in range(i + 1, self.dim):
                v = self.product(fi, tuple(rows[j]))
                if vec_is_zero(v):
                    continue
                w = tuple(
                    sum((va * pc for va, pc in zip(v, col) if not va.is_zero()),
                        Scalar.zero())
                    for col in pinv_cols)
                if not vec_is_zero(w):
                    new_products[(i, j)] = w
        extra = set()
        for vec in new_products.values():
            for s in vec:
                extra |= s.variables()
        extra -= {DEFORMATION_VAR}
        params = tuple(dict.fromkeys(list(self.params) + sorted(extra - set(self.params))))
        return AlgebraPresentation(
            name if name is not None else self.name,
            self.dim, new_products, params=params, display=self.display,
            allow_t=allow_t or any(
                DEFORMATION_VAR in s.variables()
                for vec in new_products.values() for s in vec) or any(
                DEFORMATION_VAR in s.variables() for r in rows for s in r))

    def substitute_params(self, bindings: Mapping[str, Scalar],
                          name: str | None = None,
                          allow_t: bool = False) -> "AlgebraPresentation":
        """Bind parameters to exact values (or expressions).

        Raises SubstitutionPole if a denominator vanishes under the
        binding.  Unbound parameters remain free; variables introduced by
        the binding expressions become parameters of the result.
        """
        new_products: dict[tuple[int, int], Vector] = {}
        for key, vec in self.products.items():
            new_products[key] = tuple(substitute(s, bindings) for s in vec)
        remaining = [p for p in self.params if p not in bindings]
        introduced: set[str] = set()
        for vec in new_products.values():
            for s in vec:
                introduced |= s.variables()
        introduced -= set(remaining)
        introduced -= {DEFORMATION_VAR}
        params = tuple(remaining + sorted(introduced))
        return AlgebraPresentation(
            name if name is not None else self.name,
            self.dim, new_products, params=params, display=self.display,
            allow_t=allow_t or any(
                DEFORMATION_VAR in s.variables()
                for vec in new_products.values() for s in vec))

    def direct_sum(self, other: "AlgebraPresentation",
                   name: str | None = None) -> "AlgebraPresentation":
        dim = self.dim + other.dim
        products: dict[tuple[int, int], Vector] = {}
        zero_tail = _zero_vec(other.dim)
        zero_head = _zero_vec(self.dim)
        for (i, j), vec in self.products.items():
            products[(i, j)] = tuple(vec) + zero_tail
        for (i, j), vec in other.products.items():
            products[(i + self.dim, j + self.dim)] = zero_head + tuple(vec)
        params = tuple(dict.fromkeys(self.params + other.params))
        return AlgebraPresentation(
            name if name is not None else f"{self.name}+{other.name}",
            dim, products, params=params)


def abelian(dim: int, name: str | None = None) -> AlgebraPresentation:
    return AlgebraPresentation(name if name else f"abelian{dim}", dim, {})


def parse_vector(text: str, dim: int, params: Iterable[str],
                 allow_t: bool = False) -> Vector:
    """Parse a linear combination like ``e3 + (1-beta)*e4`` into a vector.

    Accepts any scalar expression in which basis symbols ``e1..e<dim>``
    appear linearly with scalar coefficients; implemented by expanding the
    expression with basis symbols as extra variables and collecting the
    coefficient of each.
    """
    names = [f"e{i + 1}" for i in range(dim)]
    allowed = set(params) | set(names)
    s = parse_scalar(text, allowed=allowed if not allow_t else allowed | {DEFORMATION_VAR})
    if any(n in s.den.variables() for n in names):
        raise PresentationError(f"basis symbols in denominator: {text!r}")
    comps: list[dict] = [dict() for _ in range(dim)]
    const_terms = {}
    for mono, coef in s.num.terms.items():
        evars = [(v, e) for v, e in mono if v in names]
        if not evars:
            const_terms[mono] = coef
            continue
        if len(evars) > 1 or evars[0][1] != 1:
            raise PresentationError(f"expression not linear in basis symbols: {text!r}")
        rest = tuple((v, e) for v, e in mono if v not in names)
        idx = names.index(evars[0][0])
        comps[idx][rest] = coef
    if const_terms:
        raise PresentationError(f"constant term present in vector expression: {text!r}")
    den = Scalar(ParamPoly.const(1), s.den)
    return tuple(Scalar(ParamPoly(c), ParamPoly.const(1)) * den if c else Scalar.zero()
                 for c in comps)
