"""Parser and verifier for ``.claims`` files.

A claims file is the machine-checkable transcript of every degeneration
witness, every non-degeneration argument, the asserted primary-degeneration
graph, and the irreducible-component statements for one variety.  The
format is line oriented; ``#`` starts a comment and blank lines are
ignored.

Grammar::

    variety <slug>

    rset <NAME> dim <N>
        param <name>                      # declare before use
        prod <u> <v> <w>                  # <f_u..> <f_v..>  in  <f_w..>
        eq "<poly in c_i_j_k and params>"
        identity <u> <v> <w> "<coeff>"    # f_a(f_b f_c) = coeff f_b(f_a f_c)
    end

    degen <ref> -> <ref> [index p = <scalar in t>, ...]
                         [when <poly> != 0, ...] [label "<text>"] :
        E1 = <vector over source basis, coefficients in t and free params>
        ...
    end

    nondegen <ref> -> <ref> [when ...] via power_dim <l>
    nondegen ... via central_dim <l>
    nondegen ... via ij <i> <j> [, ij <i> <j>]* [projective]
    nondegen ... via rset <NAME> flag (<vec>, <vec>, ...) [note "<text>"]
    nondegen ... via wedge
    nondegen ... via manual "<text>"

    figure :
        edge <ref> -> <ref> [shared <param>] [erratum "<text>"]
    end

    components <NAME> :
        exclude <slug> ...
        restrict <slug> (<ref>, <ref>, ...)
        component <NAME> generator <ref> [family <param> ...] :
            members <ref> <ref> ...
        end
        rigid <ref> ...
    end

A ``<ref>`` is an entry slug, optionally with parameter bindings:
``g4[alpha=0, beta=1]``.  Source bindings must be constants; target
bindings may be expressions in the source's free parameters.  ``index``
bindings parametrize the source along a curve in the deformation variable
and may only involve ``t``.  A ``when P != 0`` guard restricts a claim to
the open locus where each listed polynomial is nonzero; for separation
arguments the guard becomes the scope-exclusion list.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Mapping, Sequence

from .algebra import AlgebraPresentation, parse_vector
from .catalog import CatalogError, VarietyCatalog, load_variety
from .degeneration import (
    CentralDimArg,
    DegenerationWitness,
    EqCond,
    IJArg,
    IdentityCond,
    ManualArg,
    NonDegenerationArgument,
    PowerDimArg,
    ProdCond,
    RSetArg,
    RSetCondition,
    RSetSpec,
    Verdict,
    WedgeArg,
    rset_torus_homogeneity,
    verify_degeneration,
    verify_nondegeneration,
)
from .exact import DEFORMATION_VAR, ParamPoly, Scalar, parse_scalar

__all__ = [
    "AlgebraRef",
    "ClaimsError",
    "ClaimsFile",
    "ClaimsReport",
    "ClaimItem",
    "ComponentDecl",
    "ComponentsBlock",
    "DegenClaim",
    "FigureEdge",
    "NonDegenClaim",
    "load_claims",
    "parse_claims_source",
    "resolve_degen",
    "resolve_nondegen",
    "resolve_ref",
    "verify_claims",
]


class ClaimsError(ValueError):
    """Raised for malformed or unresolvable claims sources."""


# -- data model ------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraRef:
    """Reference to a catalog entry, optionally with parameter bindings."""

    slug: str
    binds: tuple[tuple[str, str], ...] = ()

    def __str__(self) -> str:
        if not self.binds:
            return self.slug
        inner = ", ".join(f"{p}={e}" for p, e in self.binds)
        return f"{self.slug}[{inner}]"


@dataclass(frozen=True)
class DegenClaim:
    source: AlgebraRef
    target: AlgebraRef
    rows_text: tuple[str, ...]
    index: tuple[tuple[str, str], ...] = ()
    guard: tuple[str, ...] = ()
    label: str = ""
    line: int = 0

    def __str__(self) -> str:
        return f"{self.source} -> {self.target}"


@dataclass(frozen=True)
class NonDegenClaim:
    source: AlgebraRef
    target: AlgebraRef
    kind: str  # power_dim | central_dim | ij | rset | wedge | manual
    level: int = 0
    pairs: tuple[tuple[int, int], ...] = ()
    projective: bool = False
    rset_name: str = ""
    flag_rows: tuple[str, ...] = ()
    note: str = ""
    guard: tuple[str, ...] = ()
    line: int = 0

    def __str__(self) -> str:
        return f"{self.source} -/-> {self.target}"


@dataclass(frozen=True)
class FigureEdge:
    source: AlgebraRef
    target: AlgebraRef
    shared: tuple[str, ...] = ()
    erratum: str = ""
    line: int = 0

    def __str__(self) -> str:
        return f"{self.source} -> {self.target}"


@dataclass(frozen=True)
class ComponentDecl:
    name: str
    generator: AlgebraRef
    family_params: tuple[str, ...] = ()
    members: tuple[AlgebraRef, ...] = ()
    line: int = 0


@dataclass(frozen=True)
class ComponentsBlock:
    name: str
    excludes: tuple[str, ...] = ()
    restricts: tuple[tuple[str, tuple[AlgebraRef, ...]], ...] = ()
    components: tuple[ComponentDecl, ...] = ()
    rigid: tuple[AlgebraRef, ...] = ()
    line: int = 0


@dataclass(frozen=True)
class ClaimsFile:
    variety: str
    rsets: tuple[RSetSpec, ...] = ()
    degens: tuple[DegenClaim, ...] = ()
    nondegens: tuple[NonDegenClaim, ...] = ()
    figure: tuple[FigureEdge, ...] = ()
    components: tuple[ComponentsBlock, ...] = ()

    def rset(self, name: str) -> RSetSpec:
        for spec in self.rsets:
            if spec.name == name:
                return spec
        raise ClaimsError(f"no definition for restriction set {name!r}")


# -- low-level parsing helpers ---------------------------------------------

_REF_RE = re.compile(r"^([A-Za-z_]\w*)\s*(?:\[(.*)\])?$", re.S)
_STRING_RE = re.compile(r'"([^"]*)"')


def _split_top(text: str, sep: str = ",") -> list[str]:
    """Split at separators that are outside any parentheses or brackets."""
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    tail = "".join(current).strip()
    if tail:
        parts.append(tail)
    return parts


def _parse_ref(text: str, line: int) -> AlgebraRef:
    m = _REF_RE.match(text.strip())
    if not m:
        raise ClaimsError(f"line {line}: malformed algebra reference {text!r}")
    slug, inner = m.group(1), m.group(2)
    binds: list[tuple[str, str]] = []
    if inner is not None:
        for part in _split_top(inner):
            if "=" not in part:
                raise ClaimsError(
                    f"line {line}: malformed binding {part!r} in {text!r}")
            pname, expr = part.split("=", 1)
            binds.append((pname.strip(), expr.strip()))
    return AlgebraRef(slug, tuple(binds))


def _parse_bind_list(text: str, line: int, what: str) -> tuple[tuple[str, str], ...]:
    binds: list[tuple[str, str]] = []
    for part in _split_top(text):
        if "=" not in part:
            raise ClaimsError(f"line {line}: malformed {what} entry {part!r}")
        pname, expr = part.split("=", 1)
        binds.append((pname.strip(), expr.strip()))
    return tuple(binds)


def _parse_guard(text: str, line: int) -> tuple[str, ...]:
    polys: list[str] = []
    for part in _split_top(text):
        if not part.endswith("!= 0") and not part.endswith("!=0"):
            raise ClaimsError(
                f"line {line}: guard condition must end in '!= 0': {part!r}")
        polys.append(part[: part.rindex("!=")].strip())
    return tuple(polys)


def _take_string(text: str, line: int, what: str) -> tuple[str, str]:
    """Extract the first double-quoted string; return (string, remainder)."""
    m = _STRING_RE.search(text)
    if not m:
        raise ClaimsError(f"line {line}: expected quoted {what} in {text!r}")
    return m.group(1), (text[: m.start()] + text[m.end():]).strip()


# -- file parser -----------------------------------------------------------

_DEGEN_HEAD = re.compile(r"^degen\s+(.*?)\s*->\s*(.*?)\s*:$", re.S)
_NONDEGEN_HEAD = re.compile(r"^nondegen\s+(.*?)\s*->\s*(.*?)\s+via\s+(.*)$", re.S)
_ROW_RE = re.compile(r"^E(\d+)\s*=\s*(.*)$")


def parse_claims_source(text: str) -> ClaimsFile:
    lines = text.splitlines()
    variety: str | None = None
    rsets: list[RSetSpec] = []
    degens: list[DegenClaim] = []
    nondegens: list[NonDegenClaim] = []
    figure: list[FigureEdge] = []
    components: list[ComponentsBlock] = []
    seen_figure = False

    i = 0
    n = len(lines)

    def strip(line: str) -> str:
        if "#" in line:
            # respect '#' inside quoted strings
            out = []
            in_str = False
            for ch in line:
                if ch == '"':
                    in_str = not in_str
                if ch == "#" and not in_str:
                    break
                out.append(ch)
            return "".join(out).strip()
        return line.strip()

    while i < n:
        raw = strip(lines[i])
        lineno = i + 1
        if not raw:
            i += 1
            continue
        if raw.startswith("variety "):
            if variety is not None:
                raise ClaimsError(f"line {lineno}: duplicate variety header")
            variety = raw.split(None, 1)[1].strip()
            i += 1
        elif raw.startswith("rset "):
            spec, i = _parse_rset_block(lines, i, strip)
            if any(s.name == spec.name for s in rsets):
                raise ClaimsError(f"line {lineno}: duplicate rset {spec.name!r}")
            rsets.append(spec)
        elif raw.startswith("degen "):
            claim, i = _parse_degen_block(lines, i, strip)
            degens.append(claim)
        elif raw.startswith("nondegen "):
            nondegens.append(_parse_nondegen_line(raw, lineno))
            i += 1
        elif raw.startswith("figure"):
            if seen_figure:
                raise ClaimsError(f"line {lineno}: duplicate figure block")
            seen_figure = True
            edges, i = _parse_figure_block(lines, i, strip)
            figure.extend(edges)
        elif raw.startswith("components"):
            block, i = _parse_components_block(lines, i, strip)
            if any(b.name == block.name for b in components):
                raise ClaimsError(
                    f"line {lineno}: duplicate components block {block.name!r}")
            components.append(block)
        else:
            raise ClaimsError(f"line {lineno}: unrecognized statement {raw!r}")

    if variety is None:
        raise ClaimsError("missing 'variety <slug>' header")
    return ClaimsFile(
        variety=variety,
        rsets=tuple(rsets),
        degens=tuple(degens),
        nondegens=tuple(nondegens),
        figure=tuple(figure),
        components=tuple(components),
    )


def _parse_rset_block(lines: list[str], i: int, strip) -> tuple[RSetSpec, int]:
    head = strip(lines[i])
    lineno = i + 1
    m = re.match(r"^rset\s+(\w+)\s+dim\s+(\d+)$", head)
    if not m:
        raise ClaimsError(f"line {lineno}: malformed rset header {head!r}")
    name, dim = m.group(1), int(m.group(2))
    body: list[tuple[int, str]] = []
    i += 1
    while True:
        if i >= len(lines):
            raise ClaimsError(f"line {lineno}: rset {name!r} missing 'end'")
        raw = strip(lines[i])
        i += 1
        if raw == "end":
            break
        if raw:
            body.append((i, raw))
    params: list[str] = []
    for ln, raw in body:
        if raw.startswith("param "):
            params.append(raw.split(None, 1)[1].strip())
    conditions: list[RSetCondition] = []
    for ln, raw in body:
        if raw.startswith("param "):
            continue
        if raw.startswith("prod "):
            parts = raw.split()
            if len(parts) != 4:
                raise ClaimsError(f"line {ln}: malformed prod condition {raw!r}")
            conditions.append(ProdCond(int(parts[1]), int(parts[2]), int(parts[3])))
        elif raw.startswith("eq "):
            text, rest = _take_string(raw[3:], ln, "polynomial")
            if rest:
                raise ClaimsError(f"line {ln}: trailing tokens after eq: {rest!r}")
            poly = _poly_from_text(text, ln, allowed=None)
            conditions.append(EqCond(poly, text))
        elif raw.startswith("identity "):
            text, rest = _take_string(raw, ln, "coefficient")
            parts = rest.split()
            if len(parts) != 4 or parts[0] != "identity":
                raise ClaimsError(f"line {ln}: malformed identity condition {raw!r}")
            coeff = parse_scalar(text, allowed=params)
            if DEFORMATION_VAR in coeff.num.variables() | coeff.den.variables():
                raise ClaimsError(f"line {ln}: identity coefficient may not use t")
            conditions.append(IdentityCond(
                int(parts[1]), int(parts[2]), int(parts[3]), coeff, text))
        else:
            raise ClaimsError(f"line {ln}: unrecognized rset condition {raw!r}")
    return RSetSpec(name, dim, tuple(params), tuple(conditions)), i


def _poly_from_text(text: str, lineno: int, allowed) -> ParamPoly:
    try:
        s = parse_scalar(text, allowed=allowed)
    except Exception as exc:
        raise ClaimsError(f"line {lineno}: cannot parse polynomial {text!r}: {exc}")
    if not s.den.is_const():
        raise ClaimsError(f"line {lineno}: polynomial required, got denominator "
                          f"{s.den} in {text!r}")
    if DEFORMATION_VAR in s.num.variables():
        raise ClaimsError(f"line {lineno}: polynomial may not involve t: {text!r}")
    return s.num


def _parse_degen_block(lines: list[str], i: int, strip) -> tuple[DegenClaim, int]:
    head = strip(lines[i])
    lineno = i + 1
    m = _DEGEN_HEAD.match(head)
    if not m:
        raise ClaimsError(f"line {lineno}: malformed degen header {head!r} "
                          "(must end with ':')")
    source = _parse_ref(m.group(1), lineno)
    target_text = m.group(2)
    label = ""
    guard: tuple[str, ...] = ()
    index: tuple[tuple[str, str], ...] = ()
    if "label" in target_text:
        pre, _, post = target_text.rpartition("label")
        candidate, leftover = None, None
        try:
            candidate, leftover = _take_string(post, lineno, "label")
        except ClaimsError:
            candidate = None
        if candidate is not None and not leftover:
            label = candidate
            target_text = pre.strip()
    if " when " in f" {target_text}":
        before, _, guard_text = target_text.rpartition(" when ")
        if before:
            target_text = before.strip()
            guard = _parse_guard(guard_text, lineno)
    if " index " in f" {target_text}":
        before, _, index_text = target_text.rpartition(" index ")
        if before:
            target_text = before.strip()
            index = _parse_bind_list(index_text, lineno, "index")
    target = _parse_ref(target_text, lineno)

    rows: list[tuple[int, str]] = []
    i += 1
    while True:
        if i >= len(lines):
            raise ClaimsError(f"line {lineno}: degen block missing 'end'")
        raw = strip(lines[i])
        ln = i + 1
        i += 1
        if raw == "end":
            break
        if not raw:
            continue
        rm = _ROW_RE.match(raw)
        if not rm:
            raise ClaimsError(f"line {ln}: expected 'E<k> = <vector>', got {raw!r}")
        rows.append((int(rm.group(1)), rm.group(2).strip()))
    expected = list(range(1, len(rows) + 1))
    if [k for k, _ in rows] != expected:
        raise ClaimsError(f"line {lineno}: witness rows must be E1..E{len(rows)} "
                          f"in order, got {[k for k, _ in rows]}")
    return DegenClaim(
        source=source, target=target,
        rows_text=tuple(text for _, text in rows),
        index=index, guard=guard, label=label, line=lineno), i


def _parse_nondegen_line(raw: str, lineno: int) -> NonDegenClaim:
    m = _NONDEGEN_HEAD.match(raw)
    if not m:
        raise ClaimsError(f"line {lineno}: malformed nondegen statement {raw!r}")
    src_text, mid, via = m.group(1), m.group(2), m.group(3).strip()
    guard: tuple[str, ...] = ()
    if " when " in f" {mid}":
        before, _, guard_text = mid.rpartition(" when ")
        if before:
            mid = before.strip()
            guard = _parse_guard(guard_text, lineno)
    source = _parse_ref(src_text, lineno)
    target = _parse_ref(mid, lineno)

    if via.startswith("power_dim"):
        parts = via.split()
        if len(parts) != 2:
            raise ClaimsError(f"line {lineno}: malformed power_dim argument")
        return NonDegenClaim(source, target, "power_dim", level=int(parts[1]),
                             guard=guard, line=lineno)
    if via.startswith("central_dim"):
        parts = via.split()
        if len(parts) != 2:
            raise ClaimsError(f"line {lineno}: malformed central_dim argument")
        return NonDegenClaim(source, target, "central_dim", level=int(parts[1]),
                             guard=guard, line=lineno)
    if via.startswith("ij "):
        projective = False
        body = via[3:].strip()
        if body.endswith("projective"):
            projective = True
            body = body[: -len("projective")].strip()
        pairs: list[tuple[int, int]] = []
        for part in _split_top("ij " + body):
            bits = part.split()
            if len(bits) != 3 or bits[0] != "ij":
                raise ClaimsError(f"line {lineno}: malformed ij pair {part!r}")
            pairs.append((int(bits[1]), int(bits[2])))
        return NonDegenClaim(source, target, "ij", pairs=tuple(pairs),
                             projective=projective, guard=guard, line=lineno)
    if via.startswith("rset "):
        note = ""
        probe = False
        if via.endswith(" probe"):
            probe = True
            via = via[: -len(" probe")].strip()
        if 'note "' in via:
            pre, _, post = via.rpartition("note")
            note, leftover = _take_string(post, lineno, "note")
            if leftover:
                raise ClaimsError(f"line {lineno}: trailing tokens after note")
            via = pre.strip()
        if via.endswith(" probe"):
            probe = True
            via = via[: -len(" probe")].strip()
        m2 = re.match(r"^rset\s+(\w+)\s+flag\s+\((.*)\)$", via, re.S)
        if not m2:
            raise ClaimsError(f"line {lineno}: malformed rset argument {via!r}")
        name = m2.group(1)
        flag_rows = tuple(_split_top(m2.group(2)))
        return NonDegenClaim(source, target, "rset", rset_name=name,
                             flag_rows=flag_rows, note=note, probe=probe,
                             guard=guard, line=lineno)
    if via == "wedge":
        return NonDegenClaim(source, target, "wedge", guard=guard, line=lineno)
    if via.startswith("manual"):
        note, leftover = _take_string(via[len("manual"):], lineno, "note")
        if leftover:
            raise ClaimsError(f"line {lineno}: trailing tokens after manual note")
        return NonDegenClaim(source, target, "manual", note=note, guard=guard,
                             line=lineno)
    raise ClaimsError(f"line {lineno}: unknown argument kind in {via!r}")


def _parse_figure_block(lines: list[str], i: int, strip) -> tuple[list[FigureEdge], int]:
    head = strip(lines[i])
    lineno = i + 1
    if head not in ("figure :", "figure:"):
        raise ClaimsError(f"line {lineno}: malformed figure header {head!r}")
    edges: list[FigureEdge] = []
    i += 1
    while True:
        if i >= len(lines):
            raise ClaimsError(f"line {lineno}: figure block missing 'end'")
        raw = strip(lines[i])
        ln = i + 1
        i += 1
        if raw == "end":
            break
        if not raw:
            continue
        if not raw.startswith("edge "):
            raise ClaimsError(f"line {ln}: expected 'edge', got {raw!r}")
        body = raw[5:].strip()
        erratum = ""
        if "erratum" in body:
            pre, _, post = body.rpartition("erratum")
            erratum, leftover = _take_string(post, ln, "erratum")
            if leftover:
                raise ClaimsError(f"line {ln}: trailing tokens after erratum")
            body = pre.strip()
        shared: tuple[str, ...] = ()
        if " shared " in f" {body}":
            before, _, shared_text = body.rpartition(" shared ")
            if before:
                body = before.strip()
                shared = tuple(shared_text.split())
        if "->" not in body:
            raise ClaimsError(f"line {ln}: malformed edge {raw!r}")
        src_text, _, dst_text = body.partition("->")
        edges.append(FigureEdge(
            source=_parse_ref(src_text, ln), target=_parse_ref(dst_text, ln),
            shared=shared, erratum=erratum, line=ln))
    return edges, i


def _parse_components_block(lines: list[str], i: int, strip) -> tuple[ComponentsBlock, int]:
    head = strip(lines[i])
    lineno = i + 1
    m = re.match(r"^components\s+(\w+)\s*:$", head)
    if not m:
        raise ClaimsError(f"line {lineno}: malformed components header {head!r}")
    name = m.group(1)
    excludes: list[str] = []
    restricts: list[tuple[str, tuple[AlgebraRef, ...]]] = []
    decls: list[ComponentDecl] = []
    rigid: list[AlgebraRef] = []
    i += 1
    while True:
        if i >= len(lines):
            raise ClaimsError(f"line {lineno}: components block missing 'end'")
        raw = strip(lines[i])
        ln = i + 1
        i += 1
        if raw == "end":
            break
        if not raw:
            continue
        if raw.startswith("exclude "):
            excludes.extend(raw.split()[1:])
        elif raw.startswith("restrict "):
            m2 = re.match(r"^restrict\s+(\w+)\s+\((.*)\)$", raw, re.S)
            if not m2:
                raise ClaimsError(f"line {ln}: malformed restrict {raw!r}")
            refs = tuple(_parse_ref(p, ln) for p in _split_top(m2.group(2)))
            restricts.append((m2.group(1), refs))
        elif raw.startswith("rigid "):
            for part in _split_top(raw[6:]):
                for token in part.split():
                    rigid.append(_parse_ref(token, ln))
        elif raw.startswith("component "):
            m2 = re.match(
                r"^component\s+(\w+)\s+generator\s+(.*?)(?:\s+family\s+(.*?))?\s*:$",
                raw)
            if not m2:
                raise ClaimsError(f"line {ln}: malformed component header {raw!r}")
            cname = m2.group(1)
            gen = _parse_ref(m2.group(2), ln)
            fam = tuple(m2.group(3).split()) if m2.group(3) else ()
            members: list[AlgebraRef] = []
            while True:
                if i >= len(lines):
                    raise ClaimsError(f"line {ln}: component {cname!r} missing 'end'")
                mraw = strip(lines[i])
                mln = i + 1
                i += 1
                if mraw == "end":
                    break
                if not mraw:
                    continue
                if not mraw.startswith("members"):
                    raise ClaimsError(
                        f"line {mln}: expected 'members', got {mraw!r}")
                body = mraw[len("members"):].strip()
                for part in _split_top(body):
                    for token in part.split():
                        members.append(_parse_ref(token, mln))
            decls.append(ComponentDecl(cname, gen, fam, tuple(members), ln))
        else:
            raise ClaimsError(f"line {ln}: unrecognized components statement {raw!r}")
    return ComponentsBlock(
        name=name, excludes=tuple(excludes), restricts=tuple(restricts),
        components=tuple(decls), rigid=tuple(rigid), line=lineno), i


def load_claims(slug: str) -> ClaimsFile:
    """Load the packaged claims file for a variety and sanity-check its header."""
    text = resources.files("degenverify").joinpath(f"data/{slug}.claims").read_text()
    cf = parse_claims_source(text)
    if cf.variety != slug:
        raise ClaimsError(f"data/{slug}.claims declares variety {cf.variety!r}")
    return cf


# -- resolution ------------------------------------------------------------


def _no_t(s: Scalar, lineno: int, what: str) -> Scalar:
    if DEFORMATION_VAR in s.num.variables() | s.den.variables():
        raise ClaimsError(f"line {lineno}: {what} may not involve t")
    return s


def resolve_ref(ref: AlgebraRef, cat: VarietyCatalog,
                extra_params: Iterable[str] = (),
                line: int = 0) -> AlgebraPresentation:
    """Entry's presentation with the reference's bindings applied.

    Binding expressions may use names from ``extra_params`` (the free
    parameters of the claim's source side, for target references); source
    references bind to constants.
    """
    try:
        entry = cat.entry(ref.slug)
    except CatalogError:
        raise ClaimsError(f"line {line}: unknown entry {ref.slug!r} "
                          f"in variety {cat.slug!r}") from None
    alg = entry.algebra
    if not ref.binds:
        return alg
    bindings: dict[str, Scalar] = {}
    for pname, expr in ref.binds:
        if pname not in alg.params:
            raise ClaimsError(f"line {line}: {ref.slug!r} has no parameter "
                              f"{pname!r} (has {alg.params})")
        val = _no_t(parse_scalar(expr, allowed=extra_params), line,
                    f"binding {pname}={expr}")
        bindings[pname] = val
    return alg.substitute_params(bindings, name=str(ref))


def resolve_degen(claim: DegenClaim, cat: VarietyCatalog
                  ) -> tuple[AlgebraPresentation, AlgebraPresentation,
                             DegenerationWitness]:
    src = resolve_ref(claim.source, cat, line=claim.line)
    index: dict[str, Scalar] = {}
    for pname, expr in claim.index:
        if pname not in src.params:
            raise ClaimsError(f"line {claim.line}: index binds unknown "
                              f"parameter {pname!r} of {claim.source}")
        index[pname] = parse_scalar(expr, allowed=())
    free = tuple(p for p in src.params if p not in index)
    tgt = resolve_ref(claim.target, cat, extra_params=free, line=claim.line)
    if src.dim != tgt.dim:
        raise ClaimsError(f"line {claim.line}: dimension mismatch "
                          f"{src.dim} vs {tgt.dim}")
    rows = tuple(
        tuple(parse_vector(text, src.dim, free, allow_t=True))
        for text in claim.rows_text)
    if len(rows) != src.dim:
        raise ClaimsError(f"line {claim.line}: expected {src.dim} witness rows, "
                          f"got {len(rows)}")
    _check_guard_names(claim.guard, free, tgt, claim.line)
    wit = DegenerationWitness(
        source=src, target=tgt, basis=rows,
        index={k: v for k, v in index.items()},
        label=claim.label or str(claim))
    return src, tgt, wit


def _check_guard_names(guard: Sequence[str], free: tuple[str, ...],
                       tgt: AlgebraPresentation, lineno: int) -> list[ParamPoly]:
    allowed = tuple(dict.fromkeys(tuple(free) + tuple(tgt.params)))
    return [_poly_from_text(g, lineno, allowed=allowed) for g in guard]


def resolve_nondegen(claim: NonDegenClaim, cat: VarietyCatalog,
                     rsets: Mapping[str, RSetSpec] | ClaimsFile,
                     ) -> tuple[AlgebraPresentation, AlgebraPresentation,
                                NonDegenerationArgument]:
    src = resolve_ref(claim.source, cat, line=claim.line)
    tgt = resolve_ref(claim.target, cat, extra_params=src.params,
                      line=claim.line)
    scope = tuple(_check_guard_names(claim.guard, tuple(src.params), tgt,
                                     claim.line))
    if claim.kind == "power_dim":
        return src, tgt, PowerDimArg(claim.level)
    if claim.kind == "central_dim":
        return src, tgt, CentralDimArg(claim.level)
    if claim.kind == "ij":
        return src, tgt, IJArg(pairs=claim.pairs, scope_excludes=scope,
                               projective=claim.projective)
    if claim.kind == "wedge":
        return src, tgt, WedgeArg(scope_excludes=scope)
    if claim.kind == "rset":
        if isinstance(rsets, ClaimsFile):
            spec = rsets.rset(claim.rset_name)
        else:
            try:
                spec = rsets[claim.rset_name]
            except KeyError:
                raise ClaimsError(f"line {claim.line}: no definition for "
                                  f"restriction set {claim.rset_name!r}")
        if spec.dim != src.dim:
            raise ClaimsError(f"line {claim.line}: rset {spec.name!r} has "
                              f"dim {spec.dim}, claim is in dim {src.dim}")
        flag = tuple(
            tuple(parse_vector(text, src.dim, src.params, allow_t=False))
            for text in claim.flag_rows)
        if len(flag) != src.dim:
            raise ClaimsError(f"line {claim.line}: flag must have {src.dim} "
                              f"rows, got {len(flag)}")
        return src, tgt, RSetArg(spec=spec, flag_rows=flag, manual=True,
                                 note=claim.note)
    if claim.kind == "manual":
        return src, tgt, ManualArg(claim.note)
    raise ClaimsError(f"line {claim.line}: unknown argument kind {claim.kind!r}")


# -- verification ----------------------------------------------------------


@dataclass(frozen=True)
class ClaimItem:
    kind: str  # "degen" | "nondegen" | "rset"
    label: str
    verdict: Verdict
    line: int = 0
    claim: object = None

    def as_dict(self) -> dict:
        return {"kind": self.kind, "label": self.label, "line": self.line,
                "verdict": self.verdict.as_dict()}


@dataclass(frozen=True)
class ClaimsReport:
    variety: str
    items: tuple[ClaimItem, ...]

    @property
    def ok(self) -> bool:
        return all(item.verdict.ok for item in self.items)

    def failures(self) -> list[ClaimItem]:
        return [i for i in self.items if not i.verdict.ok]

    def axioms(self) -> list[ClaimItem]:
        return [i for i in self.items if i.verdict.status == "axiom"]

    def as_dict(self) -> dict:
        return {
            "variety": self.variety,
            "ok": self.ok,
            "counts": {
                "total": len(self.items),
                "failed": len(self.failures()),
                "axioms": len(self.axioms()),
            },
            "items": [i.as_dict() for i in self.items],
        }


def verify_claims(cf: ClaimsFile, cat: VarietyCatalog | None = None) -> ClaimsReport:
    """Mechanically verify every claim in the file against the catalog."""
    if cat is None:
        cat = load_variety(cf.variety)
    items: list[ClaimItem] = []
    for spec in cf.rsets:
        items.append(ClaimItem("rset", f"rset {spec.name}",
                               rset_torus_homogeneity(spec)))
    for claim in cf.degens:
        try:
            _, _, wit = resolve_degen(claim, cat)
            verdict = verify_degeneration(wit)
        except ClaimsError as exc:
            verdict = Verdict("fail", "resolution_error", {"error": str(exc)})
        items.append(ClaimItem("degen", str(claim), verdict, claim.line, claim))
    for claim in cf.nondegens:
        try:
            src, tgt, arg = resolve_nondegen(claim, cat, cf)
            verdict = verify_nondegeneration(src, tgt, arg)
        except ClaimsError as exc:
            verdict = Verdict("fail", "resolution_error", {"error": str(exc)})
        items.append(ClaimItem("nondegen", str(claim), verdict, claim.line,
                               claim))
    return ClaimsReport(variety=cf.variety, items=tuple(items))
