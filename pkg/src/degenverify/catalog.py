"""Catalog files: the classification tables as verifiable data.

A catalog file (``.alg``) records one variety of algebras: every row of
the corresponding classification table becomes an ``algebra`` block
holding the multiplication table plus the invariant values the table
prints, stored as machine-checkable expectations.  ``verify_entry``
recomputes each expectation with the exact engine: symbolically for the
generic stratum, by substitution on every printed special case, and on
an exact rational grid that must be classified correctly by the printed
case split.  For one-parameter type splits the split is additionally
certified complete over the complex numbers via the rational-root
decomposition of the identity residuals.

Grammar (``#`` starts a comment, blank lines are ignored)::

    variety SLUG display "TEXT" dim N

    algebra SLUG display "TEXT" dim N [params a, b] [domain GUARD]
      [erratum "note about a misprint in the source row"]
      eI*eJ = VECTOR            # 1-based indices, I < J
      expect KIND VALUES [when GUARD] [erratum "TEXT"]
      [iso inverse PARAM | iso proportion]
    end

where KIND is one of ``der`` (derivation algebra dimension), ``z``
(centre dimension), ``zseries`` (ascending central series dimensions),
``a2``/``a3`` (dimensions of the power ideals), ``type`` (``lie``,
``malcev`` or ``binary``), and GUARD is a comma-separated conjunction
of ``EXPR = EXPR`` / ``EXPR != EXPR`` conditions on the parameters.
"""

from __future__ import annotations

import itertools
import re
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Iterator, Mapping

from .algebra import (AlgebraPresentation, NeedsSpecialization,
                      PresentationError, parse_vector)
from .exact import (ParamPoly, Rat, Scalar, ScalarSyntaxError, parse_scalar,
                    rational_roots)
from .invariants import (central_dim, central_series_dims, derivation_dim,
                         power_dim)


class CatalogError(ValueError):
    """Raised for malformed or inconsistent catalog sources."""


# -- data model -----------------------------------------------------------


@dataclass(frozen=True)
class GuardAtom:
    """One conjunct of a guard: ``poly == 0`` (eq) or ``poly != 0``."""

    poly: ParamPoly
    is_eq: bool
    text: str

    def satisfied_at(self, point: Mapping[str, Rat]) -> bool:
        return (poly_at(self.poly, point) == 0) == self.is_eq


@dataclass(frozen=True)
class Expectation:
    kind: str
    value: tuple[int, ...] | str
    guard: tuple[GuardAtom, ...] = ()
    erratum: str | None = None

    @property
    def guard_text(self) -> str:
        return ", ".join(a.text for a in self.guard)


@dataclass(frozen=True)
class CatalogEntry:
    slug: str
    display: str
    algebra: AlgebraPresentation
    expects: tuple[Expectation, ...]
    domain: tuple[GuardAtom, ...] = ()
    iso: tuple[str, ...] | None = None
    errata: tuple[str, ...] = ()

    def domain_text(self) -> str:
        return ", ".join(a.text for a in self.domain)


@dataclass(frozen=True)
class VarietyCatalog:
    slug: str
    display: str
    dim: int
    entries: dict[str, CatalogEntry] = field(default_factory=dict)

    def entry(self, slug: str) -> CatalogEntry:
        try:
            return self.entries[slug]
        except KeyError:
            raise CatalogError(f"{self.slug}: no algebra named {slug!r}") from None


def poly_at(poly: ParamPoly, point: Mapping[str, Rat]) -> Rat:
    """Evaluate a polynomial at a rational point binding every variable."""
    total = Fraction(0)
    for mono, coeff in poly.terms.items():
        value = coeff
        for var, exp in mono:
            value *= Fraction(point[var]) ** exp
        total += value
    return total


# -- parsing --------------------------------------------------------------

_KINDS = ("der", "z", "zseries", "a2", "a3", "type")
_TYPE_CODE = {"lie": "lie", "malcev": "malcev", "binary": "binary_lie"}
_PRODUCT_RE = re.compile(r"^e(\d+)\s*\*\s*e(\d+)\s*=\s*(.+)$")
_ERRATUM_TAIL_RE = re.compile(r'\s+erratum\s+"([^"]*)"\s*$')
_ERRATUM_LINE_RE = re.compile(r'^erratum\s+"([^"]*)"$')


def _strip_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_guard(text: str, params: tuple[str, ...], where: str,
                 neq_only: bool = False) -> tuple[GuardAtom, ...]:
    atoms = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        m = re.match(r"^(.+?)\s*(!=|=)\s*(.+)$", chunk)
        if not m:
            raise CatalogError(f"{where}: cannot parse condition {chunk!r}")
        lhs, op, rhs = m.groups()
        try:
            diff = parse_scalar(lhs, allowed=params) - parse_scalar(rhs, allowed=params)
        except ScalarSyntaxError as exc:
            raise CatalogError(f"{where}: {exc}") from None
        if not diff.den.is_const():
            raise CatalogError(f"{where}: condition {chunk!r} is not polynomial")
        poly = diff.num
        if poly.is_const():
            raise CatalogError(f"{where}: condition {chunk!r} does not involve "
                               f"a parameter")
        if not poly.variables() <= set(params):
            raise CatalogError(f"{where}: condition {chunk!r} uses undeclared names")
        if neq_only and op == "=":
            raise CatalogError(f"{where}: domain constraints must use '!='")
        atoms.append(GuardAtom(poly=poly, is_eq=(op == "="), text=chunk))
    return tuple(atoms)


def _parse_header_tail(tail: str, where: str) -> tuple[tuple[str, ...], str]:
    """Split ``[params a, b] [domain ...]`` off an algebra header."""
    params: tuple[str, ...] = ()
    domain_text = ""
    tail = tail.strip()
    if tail.startswith("params"):
        tail = tail[len("params"):].strip()
        cut = tail.find(" domain ")
        plist, tail = (tail, "") if cut < 0 else (tail[:cut], tail[cut + 1:])
        params = tuple(p.strip() for p in plist.split(",") if p.strip())
        if not params:
            raise CatalogError(f"{where}: empty params clause")
        for p in params:
            if not re.match(r"^[A-Za-z_]\w*$", p):
                raise CatalogError(f"{where}: bad parameter name {p!r}")
    tail = tail.strip()
    if tail.startswith("domain "):
        domain_text = tail[len("domain "):].strip()
    elif tail:
        raise CatalogError(f"{where}: unexpected trailing text {tail!r}")
    return params, domain_text


def _parse_expect(line: str, params: tuple[str, ...], where: str) -> Expectation:
    body = line[len("expect"):].strip()
    erratum = None
    m = _ERRATUM_TAIL_RE.search(body)
    if m:
        erratum = m.group(1)
        body = body[:m.start()].strip()
    parts = re.split(r"\s+when\s+", body, maxsplit=1)
    guard = _parse_guard(parts[1], params, where) if len(parts) == 2 else ()
    tokens = parts[0].split()
    if not tokens or tokens[0] not in _KINDS:
        raise CatalogError(f"{where}: expect needs a kind from {_KINDS}")
    kind, values = tokens[0], tokens[1:]
    if not values:
        raise CatalogError(f"{where}: expect {kind} needs a value")
    value: tuple[int, ...] | str
    if kind == "type":
        if len(values) != 1 or values[0] not in _TYPE_CODE:
            raise CatalogError(f"{where}: expect type needs one of "
                               f"{sorted(_TYPE_CODE)}")
        value = values[0]
    else:
        if kind != "zseries" and len(values) != 1:
            raise CatalogError(f"{where}: expect {kind} takes exactly one value")
        try:
            value = tuple(int(v) for v in values)
        except ValueError:
            raise CatalogError(f"{where}: expect {kind} values must be "
                               f"integers") from None
    return Expectation(kind=kind, value=value, guard=guard, erratum=erratum)


def parse_alg_source(text: str) -> VarietyCatalog:
    variety: VarietyCatalog | None = None
    entries: dict[str, CatalogEntry] = {}
    current: dict | None = None

    def finish(where: str) -> None:
        nonlocal current
        assert current is not None
        try:
            algebra = AlgebraPresentation(
                current["slug"], current["dim"], current["products"],
                params=current["params"], display=current["display"])
        except PresentationError as exc:
            raise CatalogError(f"{where}: {exc}") from None
        entries[current["slug"]] = CatalogEntry(
            slug=current["slug"], display=current["display"], algebra=algebra,
            expects=tuple(current["expects"]), domain=current["domain"],
            iso=current["iso"], errata=tuple(current["errata"]))
        current = None

    for lineno, line in _strip_lines(text):
        where = f"line {lineno}"
        if line.startswith("variety "):
            if variety is not None or current is not None or entries:
                raise CatalogError(f"{where}: variety must be the single "
                                   f"first declaration")
            m = re.match(r'^variety\s+(\w+)\s+display\s+"([^"]*)"\s+dim\s+(\d+)$',
                         line)
            if not m:
                raise CatalogError(f"{where}: bad variety header")
            variety = VarietyCatalog(slug=m.group(1), display=m.group(2),
                                     dim=int(m.group(3)), entries=entries)
            continue
        if variety is None:
            raise CatalogError(f"{where}: file must start with a variety header")
        if line.startswith("algebra "):
            if current is not None:
                raise CatalogError(f"{where}: previous algebra block not closed")
            m = re.match(r'^algebra\s+(\w+)\s+display\s+"([^"]*)"\s+dim\s+(\d+)'
                         r'(?:\s+(.*))?$', line)
            if not m:
                raise CatalogError(f"{where}: bad algebra header")
            slug, display, dim_s, tail = m.groups()
            if slug in entries:
                raise CatalogError(f"{where}: duplicate algebra {slug!r}")
            dim = int(dim_s)
            if dim != variety.dim:
                raise CatalogError(f"{where}: {slug} has dim {dim}, variety "
                                   f"has dim {variety.dim}")
            params, domain_text = _parse_header_tail(tail or "", where)
            domain = (_parse_guard(domain_text, params, where, neq_only=True)
                      if domain_text else ())
            current = {"slug": slug, "display": display, "dim": dim,
                       "params": params, "domain": domain, "products": {},
                       "expects": [], "iso": None, "errata": []}
            continue
        if current is None:
            raise CatalogError(f"{where}: statement outside an algebra block")
        if line == "end":
            finish(where)
            continue
        m = _PRODUCT_RE.match(line)
        if m:
            i, j = int(m.group(1)), int(m.group(2))
            if not (1 <= i < j <= current["dim"]):
                raise CatalogError(f"{where}: product e{i}*e{j} needs "
                                   f"1 <= i < j <= {current['dim']}")
            key = (i - 1, j - 1)
            if key in current["products"]:
                raise CatalogError(f"{where}: duplicate product e{i}*e{j}")
            try:
                vec = parse_vector(m.group(3), current["dim"], current["params"])
            except (ScalarSyntaxError, PresentationError) as exc:
                raise CatalogError(f"{where}: {exc}") from None
            current["products"][key] = vec
            continue
        if line.startswith("expect"):
            current["expects"].append(
                _parse_expect(line, current["params"], where))
            continue
        if line.startswith("iso "):
            if current["iso"] is not None:
                raise CatalogError(f"{where}: duplicate iso clause")
            tokens = line.split()
            if tokens[1:] == ["proportion"]:
                current["iso"] = ("proportion",)
            elif len(tokens) == 3 and tokens[1] == "inverse":
                if tokens[2] not in current["params"]:
                    raise CatalogError(f"{where}: iso inverse needs a declared "
                                       f"parameter")
                current["iso"] = ("inverse", tokens[2])
            else:
                raise CatalogError(f"{where}: bad iso clause")
            continue
        m = _ERRATUM_LINE_RE.match(line)
        if m:
            current["errata"].append(m.group(1))
            continue
        raise CatalogError(f"{where}: cannot parse {line!r}")

    if current is not None:
        raise CatalogError("unterminated algebra block at end of file")
    if variety is None:
        raise CatalogError("empty catalog source")
    if not entries:
        raise CatalogError(f"{variety.slug}: catalog has no algebras")
    return variety


# -- serialization --------------------------------------------------------


def _scalar_text(s: Scalar) -> str:
    text = str(s)
    return text if re.match(r"^-?\w+$", text) else f"({text})"


def _vector_text(vec, dim: int) -> str:
    parts = []
    for k in range(dim):
        s = vec[k]
        if s.is_zero():
            continue
        if s == Scalar.one():
            term = f"e{k + 1}"
        elif s == -Scalar.one():
            term = f"-e{k + 1}"
        else:
            term = f"{_scalar_text(s)}*e{k + 1}"
        parts.append(term)
    if not parts:
        return "0"
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def format_alg(cat: VarietyCatalog) -> str:
    lines = [f'variety {cat.slug} display "{cat.display}" dim {cat.dim}']
    for entry in cat.entries.values():
        lines.append("")
        header = f'algebra {entry.slug} display "{entry.display}" dim {cat.dim}'
        if entry.algebra.params:
            header += " params " + ", ".join(entry.algebra.params)
        if entry.domain:
            header += " domain " + entry.domain_text()
        lines.append(header)
        for note in entry.errata:
            lines.append(f'  erratum "{note}"')
        for (i, j) in sorted(entry.algebra.products):
            vec = entry.algebra.products[(i, j)]
            lines.append(f"  e{i + 1}*e{j + 1} = {_vector_text(vec, cat.dim)}")
        for ex in entry.expects:
            value = ex.value if isinstance(ex.value, str) else \
                " ".join(str(v) for v in ex.value)
            line = f"  expect {ex.kind} {value}"
            if ex.guard:
                line += f" when {ex.guard_text}"
            if ex.erratum is not None:
                line += f' erratum "{ex.erratum}"'
            lines.append(line)
        if entry.iso is not None:
            lines.append("  iso " + " ".join(entry.iso))
        lines.append("end")
    return "\n".join(lines) + "\n"


# -- loading --------------------------------------------------------------

VARIETY_SLUGS = ("bl4", "nmal5", "nmal6")


def load_variety(slug: str) -> VarietyCatalog:
    if slug not in VARIETY_SLUGS:
        raise CatalogError(f"unknown variety {slug!r}; expected one of "
                           f"{VARIETY_SLUGS}")
    text = resources.files("degenverify").joinpath(f"data/{slug}.alg").read_text()
    cat = parse_alg_source(text)
    if cat.slug != slug:
        raise CatalogError(f"data/{slug}.alg declares variety {cat.slug!r}")
    return cat


def catalog_errata(cat: VarietyCatalog) -> list[dict]:
    """All documented misprints: entry-level notes and per-expect notes."""
    out = []
    for entry in cat.entries.values():
        for note in entry.errata:
            out.append({"variety": cat.slug, "algebra": entry.slug,
                        "kind": "products", "note": note})
        for ex in entry.expects:
            if ex.erratum is not None:
                out.append({"variety": cat.slug, "algebra": entry.slug,
                            "kind": ex.kind, "note": ex.erratum})
    return out


# -- verification ---------------------------------------------------------

GRID_VALUES = tuple(Fraction(n, d) for n, d in
                    ((-3, 1), (-2, 1), (-1, 1), (-1, 2), (0, 1),
                     (1, 2), (1, 1), (2, 1), (3, 1)))


@dataclass(frozen=True)
class CheckResult:
    slug: str
    kind: str
    label: str
    status: str
    reason: str
    details: dict

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        return {"algebra": self.slug, "kind": self.kind, "label": self.label,
                "status": self.status, "reason": self.reason,
                "details": self.details}


def _compute(kind: str, a: AlgebraPresentation):
    if kind == "der":
        return derivation_dim(a)
    if kind == "z":
        return central_dim(a, 1)
    if kind == "zseries":
        return central_series_dims(a)
    if kind == "a2":
        return power_dim(a, 2)
    if kind == "a3":
        return power_dim(a, 3)
    if kind == "type":
        return a.classify_type()
    raise CatalogError(f"unknown invariant kind {kind!r}")


def _match(ex: Expectation, got) -> bool:
    if ex.kind == "type":
        return _TYPE_CODE[ex.value] == got
    if ex.kind == "zseries":
        return tuple(ex.value) == tuple(got)
    return ex.value[0] == got


def _value_repr(kind: str, got) -> object:
    if kind == "zseries" and not isinstance(got, str):
        return list(got)
    return got


def _point_repr(point: Mapping[str, Rat]) -> dict:
    return {k: str(v) for k, v in point.items()}


def _grid_points(entry: CatalogEntry, grid) -> Iterator[dict[str, Rat]]:
    names = entry.algebra.params
    if not names:
        yield {}
        return
    for combo in itertools.product(grid, repeat=len(names)):
        point = dict(zip(names, combo))
        if all(atom.satisfied_at(point) for atom in entry.domain):
            yield point


def _at_point(a: AlgebraPresentation, point: Mapping[str, Rat]):
    if not point:
        return a
    return a.substitute_params({k: Scalar.const(v) for k, v in point.items()})


def _branch_bindings(atom: GuardAtom, where: str) -> list[dict[str, Scalar]]:
    """Substitutions realizing an equality guard, branching over factors.

    Supports the two shapes the tables use: a linear condition in one
    variable (``beta = 2``) and a vanishing monomial (``alpha*beta = 0``,
    which splits into the branches ``alpha = 0`` and ``beta = 0``).
    """
    poly = atom.poly
    variables = sorted(poly.variables())
    if len(variables) == 1 and poly.degree() == 1:
        var = variables[0]
        lin = poly.terms.get(((var, 1),), Fraction(0))
        const = poly.terms.get((), Fraction(0))
        return [{var: Scalar.const(-const / lin)}]
    if len(poly.terms) == 1:
        mono = next(iter(poly.terms))
        return [{var: Scalar.zero()} for var, _ in mono]
    raise CatalogError(f"{where}: unsupported equality guard {atom.text!r}")


def _atom_value(atom: GuardAtom, var: str) -> Rat:
    """The constant c for an atom equivalent to ``var = c``/``var != c``."""
    poly = atom.poly
    if poly.variables() != {var} or poly.degree() != 1:
        raise CatalogError(f"type split guard {atom.text!r} is not linear "
                           f"in {var}")
    lin = poly.terms.get(((var, 1),), Fraction(0))
    const = poly.terms.get((), Fraction(0))
    return -const / lin


def _certify_type_split(entry: CatalogEntry,
                        cases: list[Expectation]) -> CheckResult:
    """Prove a printed type case split exhaustive over the complex numbers.

    The identity residuals are polynomials in one parameter; the gcd of
    each residual's coefficients vanishes exactly on the locus where the
    identity holds.  When the rational-root decomposition of those gcds
    leaves a constant residue, the printed special values are provably
    the entire complex zero locus, not just its rational part.  Two
    shapes occur in the tables: a binary Lie family that is Malcev and
    Lie on finite loci, and a Malcev family that is Lie on a finite
    locus.
    """
    slug = entry.slug

    def fail(reason: str, **details) -> CheckResult:
        return CheckResult(slug, "type_split", "", "fail", reason, details)

    if len(entry.algebra.params) != 1:
        return fail("split_needs_one_parameter")
    var = entry.algebra.params[0]
    if entry.algebra.identity_residual("binary_lie"):
        return fail("family_not_binary_lie_everywhere")
    jac = entry.algebra.identity_zero_set_poly("jacobi")
    mal = entry.algebra.identity_zero_set_poly("malcev")
    if jac.is_zero():
        return fail("family_is_lie_everywhere")
    roots_j, res_j = rational_roots(jac, var)
    if not res_j.is_const():
        return fail("split_locus_not_rational", jacobi=str(jac))
    lie_roots = {r for r, _ in roots_j}
    if mal.is_zero():
        generic_value, malcev_roots = "malcev", lie_roots
    else:
        generic_value = "binary"
        roots_m, res_m = rational_roots(mal, var)
        if not res_m.is_const():
            return fail("split_locus_not_rational", malcev=str(mal))
        malcev_roots = {r for r, _ in roots_m}
    eq_vals: dict[str, set] = {"lie": set(), "malcev": set(), "binary": set()}
    neq_vals: set = set()
    for ex in cases:
        eq_atoms = [a for a in ex.guard if a.is_eq]
        neq_atoms = [a for a in ex.guard if not a.is_eq]
        if ex.value == generic_value:
            if eq_atoms:
                return fail("unsupported_split_shape", case=ex.guard_text)
            neq_vals.update(_atom_value(a, var) for a in neq_atoms)
        else:
            if len(eq_atoms) != 1 or neq_atoms or ex.value == "binary":
                return fail("unsupported_split_shape", case=ex.guard_text)
            eq_vals[ex.value].add(_atom_value(eq_atoms[0], var))
    details = {"lie_locus": sorted(str(r) for r in lie_roots),
               "malcev_locus": ("everywhere" if mal.is_zero() else
                                sorted(str(r) for r in malcev_roots)),
               "generic_type": generic_value}
    if eq_vals["lie"] != lie_roots:
        return fail("lie_cases_mismatch", **details)
    if eq_vals["malcev"] != (set() if mal.is_zero() else
                             malcev_roots - lie_roots):
        return fail("malcev_cases_mismatch", **details)
    if neq_vals != malcev_roots:
        return fail("generic_case_exclusions_mismatch", **details)
    return CheckResult(slug, "type_split", "", "pass", "split_certified_complete",
                       details)


def verify_entry(entry: CatalogEntry, grid=GRID_VALUES) -> list[CheckResult]:
    by_kind: dict[str, list[Expectation]] = defaultdict(list)
    for ex in entry.expects:
        by_kind[ex.kind].append(ex)
    failures: dict[int, list[dict]] = defaultdict(list)
    partition_faults: list[dict] = []

    for point in _grid_points(entry, grid):
        a_pt = _at_point(entry.algebra, point)
        for kind, cases in by_kind.items():
            sat = [ex for ex in cases
                   if all(atom.satisfied_at(point) for atom in ex.guard)]
            if len(sat) != 1:
                partition_faults.append({"kind": kind, "at": _point_repr(point),
                                         "matching_cases": len(sat)})
                continue
            got = _compute(kind, a_pt)
            if not _match(sat[0], got):
                failures[id(sat[0])].append({"at": _point_repr(point),
                                             "computed": _value_repr(kind, got)})

    results = []
    for kind, cases in by_kind.items():
        for ex in cases:
            notes = failures[id(ex)]
            generic = entry.algebra.params and \
                not any(atom.is_eq for atom in ex.guard)
            if generic and not (kind == "type" and len(cases) > 1):
                try:
                    got = _compute(kind, entry.algebra)
                    if not _match(ex, got):
                        notes.append({"at": "generic",
                                      "computed": _value_repr(kind, got)})
                except NeedsSpecialization as exc:
                    notes.append({"at": "generic", "computed": str(exc)})
            eq_atoms = [atom for atom in ex.guard if atom.is_eq]
            if eq_atoms:
                if len(eq_atoms) > 1:
                    raise CatalogError(f"{entry.slug}: multiple equality "
                                       f"conditions in one guard are not "
                                       f"supported")
                for binding in _branch_bindings(eq_atoms[0], entry.slug):
                    sub = entry.algebra.substitute_params(binding)
                    label = ", ".join(f"{k} = {v}" for k, v in
                                      sorted(binding.items()))
                    try:
                        got = _compute(kind, sub)
                        ok = _match(ex, got)
                    except NeedsSpecialization as exc:
                        ok, got = False, str(exc)
                    if not ok:
                        notes.append({"at": label,
                                      "computed": _value_repr(kind, got)})
            expected = ex.value if isinstance(ex.value, str) else \
                (list(ex.value) if kind == "zseries" else ex.value[0])
            results.append(CheckResult(
                entry.slug, kind, ex.guard_text,
                "pass" if not notes else "fail",
                "matches" if not notes else "value_mismatch",
                {"expected": expected, "failures": notes}))
    if partition_faults:
        results.append(CheckResult(entry.slug, "guards", "", "fail",
                                   "guard_cases_do_not_partition",
                                   {"faults": partition_faults[:5]}))
    if len(by_kind.get("type", [])) > 1:
        results.append(_certify_type_split(entry, by_kind["type"]))
    return results


def verify_catalog(cat: VarietyCatalog, grid=GRID_VALUES) -> list[CheckResult]:
    results = []
    for entry in cat.entries.values():
        results.extend(verify_entry(entry, grid))
    return results
