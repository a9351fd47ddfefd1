"""Degeneration witnesses, non-degeneration arguments, and R-sets.

A degeneration witness is a parametrized basis E_i^t of the source
algebra (optionally after substituting a parametrized index into the
source's parameters); verification rewrites the source in that basis,
takes exact t -> 0 limits of every structure constant, and compares the
limit tensor with the target entry by entry.  Everything is symbolic:
a Pass certifies the degeneration for all values of the remaining free
parameters.

Non-degeneration arguments are tagged justifications: dimension
semicontinuity (powers / central series), (i,j) trace-invariant
separation, membership of the source in a torus- and transvection-stable
closed set that the target provably avoids, or a recorded manual axiom.
Manual content is never reported as machine-proved.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Literal, Sequence

from .algebra import AlgebraPresentation, Vector, vec_is_zero, vec_sub, vec_scale
from .exact import (
    DEFORMATION_VAR,
    ParamPoly,
    Rat,
    Scalar,
    SubstitutionPole,
    UNDEFINED,
    substitute,
    t_order_and_limit,
)
from .invariants import (
    central_dim,
    ij_invariant,
    power_dim,
    wedge_identity_residual,
    wedge_violation_pair,
)
from .linalg import SingularMatrix

# -- verdicts --------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification: pass, fail, or axiom.

    ``axiom`` marks a claim whose mechanical side checks passed but whose
    universal content is recorded, not proved; audits must list every
    axiom they rely on.  ``details`` carries machine-readable specifics
    (offending tensor entries, failed condition indices, ...).
    """

    status: Literal["pass", "fail", "axiom"]
    reason: str
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def as_dict(self) -> dict:
        def enc(v):
            if isinstance(v, Scalar):
                return str(v)
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            if isinstance(v, dict):
                return {str(k): enc(x) for k, x in v.items()}
            return v
        return {"status": self.status, "reason": self.reason,
                "details": enc(self.details)}


def _pass(reason: str = "ok", **details) -> Verdict:
    return Verdict("pass", reason, details)


def _fail(reason: str, **details) -> Verdict:
    return Verdict("fail", reason, details)


# -- degeneration witnesses ------------------------------------------------


@dataclass(frozen=True)
class DegenerationWitness:
    """Parametrized basis certifying source -> target.

    ``basis`` rows are the E_i^t in source coordinates (Scalars in t and
    free parameters); ``index`` optionally binds source parameters to
    Scalars in t (the parametrized index).  Source and target arrive with
    their claim-level parameter bindings already applied.
    """

    source: AlgebraPresentation
    target: AlgebraPresentation
    basis: tuple[tuple[Scalar, ...], ...]
    index: dict[str, Scalar] = field(default_factory=dict)
    label: str = ""


def apply_witness(w: DegenerationWitness) -> AlgebraPresentation:
    """Structure constants of the source in the witness basis, over t.

    Raises SingularMatrix if the basis is singular for generic t, and
    SubstitutionPole if the parametrized index hits a denominator zero.
    """
    src = w.source
    if w.index:
        src = src.substitute_params(dict(w.index), allow_t=True)
    rows = [list(r) for r in w.basis]
    return src.change_of_basis(rows, name=f"{src.name}@t", allow_t=True)


def rescale_witness(w: DegenerationWitness,
                    exponents: Sequence[int]) -> DegenerationWitness:
    """Witness with row i multiplied by t^exponents[i].

    Used by the invariance property check: rescalings whose exponent
    vector lies in the target's grading lattice (a_i + a_j = a_k on the
    target support) and which keep every off-support t-order positive
    must preserve a passing verdict.
    """
    t = Scalar.var(DEFORMATION_VAR)
    rows = tuple(
        tuple(s * t ** e for s in row)
        for e, row in zip(exponents, w.basis, strict=True))
    return replace(w, basis=rows)


def target_grading_lattice(target: AlgebraPresentation) -> list[list[Rat]]:
    """Basis of the rational solution space of a_i + a_j = a_k over the
    support of the target's structure constants (its toral grading
    lattice); every vector in it rescales a passing witness to another
    passing witness, provided off-support orders stay positive."""
    from .linalg import nullspace
    n = target.dim
    rows = []
    for (i, j), vec in target.products.items():
        for k in range(n):
            if not vec[k].is_zero():
                coeff = [Scalar.zero()] * n
                coeff[i] = coeff[i] + Scalar.one()
                coeff[j] = coeff[j] + Scalar.one()
                coeff[k] = coeff[k] - Scalar.one()
                rows.append(coeff)
    basis = nullspace(rows, n)
    out = []
    for v in basis:
        assert all(s.is_const() for s in v)
        out.append([s.const_value() for s in v])
    return out


def verify_degeneration(w: DegenerationWitness) -> Verdict:
    """Pass iff every deformed constant has t-order >= 0 and the t=0
    limit tensor equals the target tensor exactly (free parameters stay
    symbolic, so Pass covers all their values)."""
    if w.source.dim != w.target.dim:
        return _fail("dimension_mismatch",
                     source_dim=w.source.dim, target_dim=w.target.dim)
    try:
        deformed = apply_witness(w)
    except SingularMatrix:
        return _fail("singular_basis")
    except SubstitutionPole as exc:
        return _fail("substitution_pole", message=str(exc))
    n = deformed.dim
    zero = Scalar.zero()
    limit_products: dict[tuple[int, int], list[Scalar]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            vec = deformed.products.get((i, j))
            if vec is None:
                continue
            limv = []
            for k in range(n):
                s = vec[k]
                order, lim = t_order_and_limit(s)
                if lim is UNDEFINED:
                    return _fail("negative_t_order", entry=(i + 1, j + 1, k + 1),
                                 order=order, value=str(s))
                limv.append(lim)
            limit_products[(i, j)] = limv
    tgt = w.target
    for i in range(n):
        for j in range(i + 1, n):
            got = limit_products.get((i, j), [zero] * n)
            want = tgt.products.get((i, j), tuple([zero] * n))
            for k in range(n):
                if got[k] != want[k]:
                    return _fail("limit_mismatch", entry=(i + 1, j + 1, k + 1),
                                 got=str(got[k]), want=str(want[k]))
    return _pass("limit_matches_target")


def semicontinuity_violations(src: AlgebraPresentation,
                              dst: AlgebraPresentation,
                              expect_proper: bool = False) -> list[str]:
    """Cross-checks that must hold whenever src degenerates to dst.

    Returns human-readable violation strings (empty = all good): identity
    closedness (each identity satisfied by src must hold in dst), power
    dims can only drop, central series dims can only grow, and for a
    proper degeneration the derivation dimension grows strictly.
    """
    from .invariants import central_series_dims, derivation_dim, power_dims
    out: list[str] = []
    for ident in ("jacobi", "malcev", "binary_lie"):
        if src.identity_holds(ident) and not dst.identity_holds(ident):
            out.append(f"identity_closedness:{ident}")
    n = src.dim
    for l in range(2, n + 1):
        a, b = power_dim(src, l), power_dim(dst, l)
        if a < b:
            out.append(f"power_dim_grew:l={l}:{a}<{b}")
    for l in range(1, n + 1):
        a, b = central_dim(src, l), central_dim(dst, l)
        if a > b:
            out.append(f"central_dim_shrank:l={l}:{a}>{b}")
    da, db = derivation_dim(src), derivation_dim(dst)
    if expect_proper and da >= db:
        out.append(f"derivation_dim_not_strictly_grown:{da}>={db}")
    if not expect_proper and da > db:
        out.append(f"derivation_dim_shrank:{da}>{db}")
    return out


# -- R-set specifications --------------------------------------------------


@dataclass(frozen=True)
class ProdCond:
    """<f_u..f_n> * <f_v..f_n> contained in <f_w..f_n>; w = n+1 means 0."""

    u: int
    v: int
    w: int


@dataclass(frozen=True)
class EqCond:
    """poly(c_i_j_k, params) = 0 on the flag-basis structure constants."""

    poly: ParamPoly
    text: str


@dataclass(frozen=True)
class IdentityCond:
    """f_a (f_b f_c) = coeff * f_b (f_a f_c) for a>=u, b>=v, c>=w."""

    u: int
    v: int
    w: int
    coeff: Scalar
    text: str


RSetCondition = ProdCond | EqCond | IdentityCond

_CVAR = re.compile(r"^c_([1-9]\d*)_([1-9]\d*)_([1-9]\d*)$")


@dataclass(frozen=True)
class RSetSpec:
    name: str
    dim: int
    params: tuple[str, ...]
    conditions: tuple[RSetCondition, ...]

    def __post_init__(self):
        n = self.dim
        for cond in self.conditions:
            if isinstance(cond, ProdCond):
                if not (1 <= cond.u <= n and 1 <= cond.v <= n and 1 <= cond.w <= n + 1):
                    raise ValueError(f"{self.name}: condition indices out of range")
            elif isinstance(cond, IdentityCond):
                if not all(1 <= x <= n for x in (cond.u, cond.v, cond.w)):
                    raise ValueError(f"{self.name}: identity spans out of range")
            elif isinstance(cond, EqCond):
                for var in cond.poly.variables():
                    m = _CVAR.match(var)
                    if m:
                        i, j, k = (int(g) for g in m.groups())
                        if not (1 <= i < j <= n and 1 <= k <= n):
                            raise ValueError(
                                f"{self.name}: bad structure-constant symbol {var}")
                    elif var not in self.params:
                        raise ValueError(f"{self.name}: undeclared name {var}")


def rset_torus_homogeneity(spec: RSetSpec) -> Verdict:
    """Pass iff every polynomial equation is weight-homogeneous under the
    torus action c_i_j_k -> (a_i a_j / a_k) c_i_j_k.

    Containments and quantified identities range over suffix spans, which
    diagonal basis rescalings preserve, so they are torus-stable by
    construction and do not need a check.
    """
    n = spec.dim
    for idx, cond in enumerate(spec.conditions):
        if not isinstance(cond, EqCond):
            continue
        weights: set[tuple[int, ...]] = set()
        for mono, _ in cond.poly.terms.items():
            w = [0] * n
            for var, exp in mono:
                m = _CVAR.match(var)
                if not m:
                    continue  # spec parameter: weight zero
                i, j, k = (int(g) for g in m.groups())
                w[i - 1] += exp
                w[j - 1] += exp
                w[k - 1] -= exp
            weights.add(tuple(w))
        if len(weights) > 1:
            return _fail("inhomogeneous_equation", condition_index=idx,
                         equation=cond.text,
                         weights=[list(w) for w in sorted(weights)])
    return _pass("all_equations_homogeneous")


def _flag_presentation(a: AlgebraPresentation,
                       flag_rows: Sequence[Sequence[Scalar]]) -> AlgebraPresentation:
    return a.change_of_basis([list(r) for r in flag_rows], name=f"{a.name}@flag")


def rset_membership(a: AlgebraPresentation,
                    flag_rows: Sequence[Sequence[Scalar]],
                    spec: RSetSpec) -> Verdict:
    """Pass iff the structure constants of ``a`` in the flag basis satisfy
    every condition of ``spec``, exactly and symbolically in parameters.

    Containments against suffix spans of the same flag are coordinate
    conditions, so they are decided by exact coordinate vanishing.
    """
    if a.dim != spec.dim:
        return _fail("dimension_mismatch", algebra_dim=a.dim, spec_dim=spec.dim)
    try:
        flagged = _flag_presentation(a, flag_rows)
    except SingularMatrix:
        return _fail("singular_flag")
    return _conditions_verdict(flagged, spec)


def _conditions_verdict(flagged: AlgebraPresentation, spec: RSetSpec) -> Verdict:
    n = spec.dim
    for idx, cond in enumerate(spec.conditions):
        if isinstance(cond, ProdCond):
            for x in range(cond.u - 1, n):
                for y in range(cond.v - 1, n):
                    if x == y:
                        continue
                    vec = flagged._table[x][y]
                    for k in range(cond.w - 1):
                        if not vec[k].is_zero():
                            return _fail(
                                "containment_violated", condition_index=idx,
                                product=(x + 1, y + 1), coordinate=k + 1,
                                value=str(vec[k]))
        elif isinstance(cond, EqCond):
            bindings = {}
            for var in cond.poly.variables():
                m = _CVAR.match(var)
                if m:
                    i, j, k = (int(g) for g in m.groups())
                    bindings[var] = flagged._table[i - 1][j - 1][k - 1]
            value = cond.poly.eval_scalar(bindings)
            if not value.is_zero():
                return _fail("equation_violated", condition_index=idx,
                             equation=cond.text, value=str(value))
        elif isinstance(cond, IdentityCond):
            for b1 in range(cond.u - 1, n):
                for b2 in range(cond.v - 1, n):
                    for b3 in range(cond.w - 1, n):
                        fa = flagged.basis_vector(b1)
                        fb = flagged.basis_vector(b2)
                        fc = flagged.basis_vector(b3)
                        lhs = flagged.product(fa, flagged.product(fb, fc))
                        rhs = vec_scale(cond.coeff,
                                        flagged.product(fb, flagged.product(fa, fc)))
                        if not vec_is_zero(vec_sub(lhs, rhs)):
                            return _fail("identity_violated", condition_index=idx,
                                         identity=cond.text,
                                         at=(b1 + 1, b2 + 1, b3 + 1))
    return _pass("all_conditions_hold")


@dataclass(frozen=True)
class EvidenceReport:
    trials: int
    violations: list
    seed: int

    @property
    def clean(self) -> bool:
        return not self.violations


def rset_unipotent_evidence(a: AlgebraPresentation,
                            flag_rows: Sequence[Sequence[Scalar]],
                            spec: RSetSpec, trials: int,
                            seed: int) -> EvidenceReport:
    """Randomized stability probe for the transvection rules.

    Each trial perturbs the flag by a random upper unipotent matrix
    (row u gains multiples of rows v > u, i.e. f_u += x*f_v, which
    preserves every suffix span) and re-checks membership.  A violation
    means the spec is not stable the way a Borel-stable closed set must
    be, i.e. the claim file is wrong.  Evidence, not proof.
    """
    rng = random.Random(seed)
    n = spec.dim
    violations = []
    base = [list(r) for r in flag_rows]
    for trial in range(trials):
        coeffs = {}
        rows = [list(r) for r in base]
        for u in range(n):
            for v in range(u + 1, n):
                c = rng.choice((-2, -1, -1, 0, 0, 0, 1, 1, 2, 3))
                if c:
                    coeffs[(u + 1, v + 1)] = c
                    rows[u] = [x + Scalar.const(c) * y
                               for x, y in zip(rows[u], base[v])]
        verdict = rset_membership(a, rows, spec)
        if not verdict.ok:
            violations.append({"trial": trial, "transvections": coeffs,
                               "verdict": verdict.as_dict()})
    return EvidenceReport(trials=trials, violations=violations, seed=seed)


def _monomial_candidates(n: int):
    """Permutation matrices, then signed permutation matrices."""
    perms = list(itertools.permutations(range(n)))
    for p in perms:
        yield ("perm", p, (1,) * n)
    for p in perms:
        for signs in itertools.product((1, -1), repeat=n):
            if all(s == 1 for s in signs):
                continue
            yield ("signed", p, signs)


def _monomial_flag_rows(n: int, perm: Sequence[int],
                        signs: Sequence[int]) -> list[list[Scalar]]:
    rows = []
    for i in range(n):
        row = [Scalar.zero()] * n
        row[perm[i]] = Scalar.const(signs[i])
        rows.append(row)
    return rows


def _monomial_flagged(a: AlgebraPresentation, perm: Sequence[int],
                      signs: Sequence[int]) -> AlgebraPresentation:
    """Fast tensor relabeling for f_i = signs[i] * e_{perm[i]}.

    New c[i][j][k] = signs[i] signs[j] / signs[k] * old c[perm i][perm j][perm k].
    """
    n = a.dim
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    products = {}
    for (pi, pj), vec in a.products.items():
        i, j = inv[pi], inv[pj]
        sign = signs[i] * signs[j]
        new = [Scalar.zero()] * n
        for pk in range(n):
            s = vec[pk]
            if s.is_zero():
                continue
            k = inv[pk]
            c = signs[k] * sign  # 1/sign_k = sign_k for +-1
            new[k] = s if c == 1 else -s
        if i < j:
            key, val = (i, j), new
        else:
            key, val = (j, i), [-s for s in new]
        products[key] = tuple(val)
    return AlgebraPresentation(f"{a.name}@mono", n, products, params=a.params,
                               allow_t=False)


def rset_counterexample_search(b: AlgebraPresentation, spec: RSetSpec,
                               budget: int, seed: int,
                               rng_entries: tuple[int, ...] = (-2, -1, 0, 0, 1, 2),
                               ) -> tuple[list[list[Scalar]] | None, int]:
    """Search for a flag basis of ``b`` satisfying ``spec``.

    Systematic phases first (permutations, then signed permutations, via
    fast tensor relabeling), then random small integer matrices, until
    ``budget`` candidates have been tried.  Returns (basis, tried) where
    basis is None if nothing was found; a found basis refutes a recorded
    non-membership claim.
    """
    if b.dim != spec.dim:
        raise ValueError("dimension mismatch between algebra and spec")
    n = b.dim
    tried = 0
    for kind, perm, signs in _monomial_candidates(n):
        if tried >= budget:
            return None, tried
        tried += 1
        flagged = _monomial_flagged(b, perm, signs)
        if _conditions_verdict(flagged, spec).ok:
            return _monomial_flag_rows(n, perm, signs), tried
    rng = random.Random(seed)
    while tried < budget:
        tried += 1
        rows = [[Scalar.const(rng.choice(rng_entries)) for _ in range(n)]
                for _ in range(n)]
        verdict = rset_membership(b, rows, spec)
        if verdict.ok:
            return rows, tried
        # singular or failing candidates are simply skipped
    return None, tried


# -- non-degeneration arguments --------------------------------------------


@dataclass(frozen=True)
class PowerDimArg:
    l: int


@dataclass(frozen=True)
class CentralDimArg:
    l: int


@dataclass(frozen=True)
class IJArg:
    """One or several (i,j) trace-invariant separations, used jointly.

    A claim row citing several pairs means: at every in-scope parameter
    point, at least one cited pair separates the two algebras.
    ``scope_excludes`` lists polynomials (in the union of both parameter
    sets) whose zero locus the claim excludes, e.g. gamma - beta for
    "gamma != beta".
    """

    pairs: tuple[tuple[int, int], ...]
    scope_excludes: tuple[ParamPoly, ...] = ()
    #: certify equality fails at the point at infinity of the parameter
    #: line as well -- required when the claim separates the closure of a
    #: whole family (the parameter then ranges over P^1, not A^1)
    projective: bool = False


@dataclass(frozen=True)
class RSetArg:
    spec: RSetSpec
    flag_rows: tuple[tuple[Scalar, ...], ...]
    manual: bool = True
    note: str = ""
    probe_budget: int = 200
    probe_seed: int = 20260822


@dataclass(frozen=True)
class WedgeArg:
    """Separation by the closed identity  x(xy) wedge y(xy) = 0.

    The source must satisfy the identity for every in-scope parameter
    value and the target must violate it throughout its in-scope domain.
    ``scope_excludes`` lists polynomials in the target's parameters whose
    zero locus the claim excludes.
    """

    scope_excludes: tuple[ParamPoly, ...] = ()


@dataclass(frozen=True)
class ManualArg:
    note: str


NonDegenerationArgument = (
    PowerDimArg | CentralDimArg | IJArg | RSetArg | WedgeArg | ManualArg)

_SPOT_VALUES = [Rat(v) for v in (
    2, 3, -2, 5, -3, 7, -5, 4, 9, -7, 6, -4, 8, 10, -6, 11, -8, 12, -9, 13)] + [
    Rat(1, 2), Rat(-1, 2), Rat(3, 2), Rat(5, 2), Rat(-3, 2), Rat(1, 3), Rat(-1, 3)]


def _excluded(binding: dict[str, Scalar], excludes: Iterable[ParamPoly]) -> bool:
    return any(e.eval_scalar(binding).is_zero() for e in excludes)


def _verify_ij(a: AlgebraPresentation, b: AlgebraPresentation,
               arg: IJArg) -> Verdict:
    """Joint (i,j)-invariant separation; see IJArg.

    For each cited pair the source must satisfy a proportionality
    relation (that is the closed condition inherited by degenerations).
    A target that breaks proportionality outright settles the claim.
    Otherwise the ratio formulas must differ, and the difference is
    checked at rational spot points in scope; when the parameters involve
    a single symbol, the common equality locus of all cited pairs is
    computed exactly (gcd of difference numerators + rational roots), and
    the verdict records whether the certificate is complete.
    """
    ratios: list[tuple[tuple[int, int], Scalar, Scalar]] = []
    inert: list[tuple[int, int]] = []
    for (i, j) in arg.pairs:
        ra = ij_invariant(a, i, j)
        if ra.kind != "proportional":
            return _fail("source_not_proportional", pair=(i, j), kind=ra.kind)
        rb = ij_invariant(b, i, j)
        if rb.kind in ("not_proportional", "left_only"):
            return _pass("target_breaks_proportionality", pair=(i, j),
                         target_kind=rb.kind, source_ratio=str(ra.ratio))
        if rb.kind == "both_zero":
            inert.append((i, j))
            continue
        assert ra.ratio is not None and rb.ratio is not None
        if ra.ratio == rb.ratio:
            inert.append((i, j))
            continue
        ratios.append(((i, j), ra.ratio, rb.ratio))
    if not ratios:
        return _fail("no_separating_pair", inert_pairs=inert)
    names = tuple(dict.fromkeys(tuple(a.params) + tuple(b.params)))
    formulas = {f"c_{i}_{j}": (str(ra), str(rb)) for (i, j), ra, rb in ratios}
    if not names:
        # constant ratios that differ: separation is exact and complete
        return _pass("ratios_differ", complete=True, formulas=formulas)
    if len(names) == 1:
        var = names[0]
        from .exact import poly_gcd, rational_roots

        def deg(p: ParamPoly) -> int:
            return max((e for mono in p.terms for v, e in mono if v == var),
                       default=0)

        if arg.projective:
            # family closure: the parameter ranges over P^1, so the
            # certificate must also separate in the limit var -> infinity,
            # i.e. some cited difference must not tend to 0 there
            if all(deg((ra - rb).num) < deg((ra - rb).den) for _, ra, rb in ratios):
                return _fail("equality_at_infinity",
                             formulas=formulas)
        g = None
        for _, ra, rb in ratios:
            num = (ra - rb).num
            g = num if g is None else poly_gcd(g, num)
        roots, residue = rational_roots(g, var)
        bad = []
        for root, _mult in roots:
            binding = {var: Scalar.const(root)}
            if not _excluded(binding, arg.scope_excludes):
                bad.append(str(root))
        if bad:
            return _fail("common_equality_in_scope", values=bad,
                         formulas=formulas)
        if residue.is_const():
            return _pass("ratios_differ", complete=True, formulas=formulas,
                         excluded_roots=[str(r) for r, _ in roots])
        # irrational common roots cannot be excluded with this certificate
        checked, failures = _ij_spot_grid(a, b, arg, ratios)
        if failures:
            return _fail("spot_grid_equality", failures=failures)
        return _pass("ratios_differ", complete=False, formulas=formulas,
                     residue=str(residue), spot_checked=checked)
    checked, failures = _ij_spot_grid(a, b, arg, ratios)
    if failures:
        return _fail("spot_grid_equality", failures=failures)
    residual = [str((ra - rb).num) for _, ra, rb in ratios]
    return _pass("ratios_differ", complete=False, formulas=formulas,
                 spot_checked=checked, residual_locus=residual)


def _ij_spot_grid(a: AlgebraPresentation, b: AlgebraPresentation, arg: IJArg,
                  ratios: list, count: int = 25) -> tuple[int, list]:
    """Exact joint spot checks at rational parameter points, skipping
    poles and the excluded locus; a point fails only if EVERY cited pair
    has equal values there."""
    names = tuple(dict.fromkeys(tuple(a.params) + tuple(b.params)))
    combos = itertools.product(_SPOT_VALUES, repeat=len(names))
    checked = 0
    failures = []
    for combo in combos:
        if checked >= count:
            break
        binding = {nm: Scalar.const(v) for nm, v in zip(names, combo)}
        if _excluded(binding, arg.scope_excludes):
            continue
        values = []
        try:
            for _, ra, rb in ratios:
                values.append((substitute(ra, binding), substitute(rb, binding)))
        except SubstitutionPole:
            continue
        checked += 1
        if all(va == vb for va, vb in values):
            failures.append({nm: str(v) for nm, v in binding.items()})
    return checked, failures


def verify_nondegeneration(a: AlgebraPresentation, b: AlgebraPresentation,
                           arg: NonDegenerationArgument) -> Verdict:
    """Run the tagged argument that A does not degenerate to B."""
    if isinstance(arg, PowerDimArg):
        da, db = power_dim(a, arg.l), power_dim(b, arg.l)
        if da < db:
            return _pass("power_dim_separates", l=arg.l, source=da, target=db)
        return _fail("power_dim_inapplicable", l=arg.l, source=da, target=db)
    if isinstance(arg, CentralDimArg):
        da, db = central_dim(a, arg.l), central_dim(b, arg.l)
        if da > db:
            return _pass("central_dim_separates", l=arg.l, source=da, target=db)
        return _fail("central_dim_inapplicable", l=arg.l, source=da, target=db)
    if isinstance(arg, IJArg):
        shared = set(a.params) & set(b.params)
        if shared:
            # same symbol on both sides would make the equality locus
            # dense in scope; claims rename one side's parameters first
            return _fail("shared_parameters_ambiguous", shared=sorted(shared))
        return _verify_ij(a, b, arg)
    if isinstance(arg, RSetArg):
        hom = rset_torus_homogeneity(arg.spec)
        if not hom.ok:
            return hom
        mem = rset_membership(a, [list(r) for r in arg.flag_rows], arg.spec)
        if not mem.ok:
            return Verdict("fail", "witness_membership_failed",
                           {"inner": mem.as_dict()})
        if arg.manual:
            return Verdict("axiom", "rset_nonmembership_manual",
                           {"rset": arg.spec.name, "note": arg.note})
        if b.params:
            return _fail("probe_requires_bound_target", params=list(b.params))
        found, tried = rset_counterexample_search(
            b, arg.spec, arg.probe_budget, arg.probe_seed)
        if found is not None:
            return _fail("counterexample_found",
                         basis=[[str(s) for s in row] for row in found],
                         tried=tried)
        return _pass("rset_separates_after_search", tried=tried)
    if isinstance(arg, WedgeArg):
        return _verify_wedge(a, b, arg)
    if isinstance(arg, ManualArg):
        return Verdict("axiom", "manual_argument", {"note": arg.note})
    raise TypeError(f"unknown argument {arg!r}")


def _verify_wedge(a: AlgebraPresentation, b: AlgebraPresentation,
                  arg: WedgeArg) -> Verdict:
    """The wedge identity holds in A, fails throughout B's scope.

    Both sides are decided from the residual coefficient polynomials of
    the identity: empty residual means the identity holds identically.
    The target's residual must have no common zero in scope; for a single
    target parameter the common zero locus is computed exactly (gcd and
    rational roots), otherwise exact spot checks are used.
    """
    src_res = wedge_identity_residual(a)
    if src_res:
        return _fail("source_violates_wedge",
                     residual=[str(p) for p in src_res[:4]])
    tgt_res = wedge_identity_residual(b)
    if not tgt_res:
        return _fail("target_satisfies_wedge")
    details: dict = {}
    exhibit = wedge_violation_pair(b)
    if exhibit is not None:
        x, y, minor = exhibit
        details["violation_pair"] = {
            "x": [str(s) for s in x], "y": [str(s) for s in y],
            "minor": str(minor)}
    names = tuple(b.params)
    if not names:
        return _pass("wedge_separates", complete=True, **details)
    if len(names) == 1:
        var = names[0]
        from .exact import poly_gcd, rational_roots

        g = None
        for p in tgt_res:
            g = p if g is None else poly_gcd(g, p)
        roots, residue = rational_roots(g, var)
        bad = []
        for root, _mult in roots:
            binding = {var: Scalar.const(root)}
            if not _excluded(binding, arg.scope_excludes):
                bad.append(str(root))
        if bad:
            return _fail("target_satisfies_wedge_at", values=bad, **details)
        if residue.is_const():
            return _pass("wedge_separates", complete=True,
                         excluded_roots=[str(r) for r, _ in roots], **details)
        return _pass("wedge_separates", complete=False,
                     residue=str(residue), **details)
    # several parameters: exact spot checks over the rational grid
    checked = 0
    failures = []
    for combo in itertools.product(_SPOT_VALUES, repeat=len(names)):
        if checked >= 25:
            break
        binding = {nm: Scalar.const(v) for nm, v in zip(names, combo)}
        if _excluded(binding, arg.scope_excludes):
            continue
        checked += 1
        if all(p.eval_scalar(binding).is_zero() for p in tgt_res):
            failures.append({nm: str(v) for nm, v in binding.items()})
    if failures:
        return _fail("spot_grid_satisfies_wedge", failures=failures, **details)
    return _pass("wedge_separates", complete=False, spot_checked=checked,
                 **details)
