"""Exact scalar arithmetic over Q(t, parameters).

The ground field for every computation in this package is the field of
rational functions in a finite set of named parameters over Q.  Three layers:

- ``Rat``: arbitrary-precision rationals (``fractions.Fraction``).
- ``ParamPoly``: multivariate polynomials with Rat coefficients, stored as a
  map from monomials to nonzero coefficients.  Monomials are sorted tuples of
  ``(variable, exponent)`` pairs; the canonical order is graded lexicographic
  with variables compared alphabetically.
- ``Scalar``: quotients of ParamPolys, always gcd-reduced with the denominator
  monic under the graded-lex order.

The variable ``"t"`` is reserved for one-parameter deformations: limits at
t -> 0 are taken by :func:`t_order_and_limit`, and catalog parameters are never
allowed to shadow it.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd, inf
from typing import Iterable, Mapping

Rat = Fraction

DEFORMATION_VAR = "t"

Monomial = tuple[tuple[str, int], ...]

_EMPTY: Monomial = ()


class DivisionByZero(ArithmeticError):
    """Raised when dividing by the zero scalar."""


class SubstitutionPole(ValueError):
    """Raised when a substitution makes a denominator vanish identically."""


class ScalarSyntaxError(ValueError):
    """Raised for malformed scalar literals."""


class _Undefined:
    """Singleton marker for a limit that does not exist at t = 0."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNDEFINED"


UNDEFINED = _Undefined()


def _gl_key(mono: Monomial):
    """Sort key: smallest key = largest monomial in graded-lex order."""
    return (-sum(e for _, e in mono), tuple((v, -e) for v, e in mono))


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    merged = dict(m1)
    for v, e in m2:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items()))


def _mono_div(m1: Monomial, m2: Monomial) -> Monomial | None:
    """m1 / m2, or None if not divisible."""
    quot = dict(m1)
    for v, e in m2:
        r = quot.get(v, 0) - e
        if r < 0:
            return None
        if r == 0:
            quot.pop(v, None)
        else:
            quot[v] = r
    return tuple(sorted(quot.items()))


class ParamPoly:
    """Multivariate polynomial over Q in named variables."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Rat] | None = None):
        clean: dict[Monomial, Rat] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @staticmethod
    def const(value) -> "ParamPoly":
        q = Fraction(value)
        return ParamPoly({_EMPTY: q}) if q else ParamPoly()

    @staticmethod
    def var(name: str, exp: int = 1) -> "ParamPoly":
        if exp < 0:
            raise ValueError("polynomial variables need nonnegative exponents")
        if exp == 0:
            return ParamPoly.const(1)
        return ParamPoly({((name, exp),): Fraction(1)})

    # -- predicates and views ---------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _EMPTY in self.terms)

    def const_value(self) -> Rat:
        if not self.is_const():
            raise ValueError("polynomial is not constant")
        return self.terms.get(_EMPTY, Fraction(0))

    def variables(self) -> set[str]:
        out: set[str] = set()
        for m in self.terms:
            for v, _ in m:
                out.add(v)
        return out

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e for _, e in m) for m in self.terms)

    def degree_in(self, var: str) -> int:
        if not self.terms:
            return -1
        return max((dict(m).get(var, 0) for m in self.terms), default=0)

    def min_exp_in(self, var: str) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no minimum exponent")
        return min(dict(m).get(var, 0) for m in self.terms)

    def leading(self) -> tuple[Monomial, Rat]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = min(self.terms, key=_gl_key)
        return m, self.terms[m]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        if not self.terms:
            return other
        if not other.terms:
            return self
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            if s is None:
                terms[m] = c
            else:
                s = s + c
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        out = ParamPoly.__new__(ParamPoly)
        out.terms = terms
        return out

    def __neg__(self) -> "ParamPoly":
        out = ParamPoly.__new__(ParamPoly)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other: "ParamPoly") -> "ParamPoly":
        return self + (-other)

    def __mul__(self, other: "ParamPoly") -> "ParamPoly":
        if not self.terms or not other.terms:
            return ParamPoly()
        if self.is_const():
            c = self.terms[_EMPTY]
            out = ParamPoly.__new__(ParamPoly)
            out.terms = {m: c * k for m, k in other.terms.items()}
            return out
        if other.is_const():
            c = other.terms[_EMPTY]
            out = ParamPoly.__new__(ParamPoly)
            out.terms = {m: c * k for m, k in self.terms.items()}
            return out
        terms: dict[Monomial, Rat] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = terms.get(m)
                if s is None:
                    terms[m] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        terms[m] = s
                    else:
                        del terms[m]
        out = ParamPoly.__new__(ParamPoly)
        out.terms = terms
        return out

    def scale(self, q: Rat) -> "ParamPoly":
        if not q:
            return ParamPoly()
        out = ParamPoly.__new__(ParamPoly)
        out.terms = {m: c * q for m, c in self.terms.items()}
        return out

    def __pow__(self, n: int) -> "ParamPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial; use Scalar")
        result = ParamPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, ParamPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- evaluation -------------------------------------------------------

    def eval_scalar(self, bindings: Mapping[str, "Scalar"]) -> "Scalar":
        """Evaluate with variables mapped to Scalars (unbound ones stay)."""
        total = Scalar.zero()
        cache: dict[tuple[str, int], Scalar] = {}
        for m, c in self.terms.items():
            term = Scalar.const(c)
            for v, e in m:
                p = cache.get((v, e))
                if p is None:
                    base = bindings.get(v)
                    if base is None:
                        p = Scalar.of_poly(ParamPoly.var(v, e))
                    else:
                        p = base ** e
                    cache[(v, e)] = p
                term = term * p
            total = total + term
        return total

    def subst_poly(self, bindings: Mapping[str, "ParamPoly"]) -> "ParamPoly":
        """Evaluate with variables mapped to polynomials."""
        total = ParamPoly()
        for m, c in self.terms.items():
            term = ParamPoly.const(c)
            for v, e in m:
                base = bindings.get(v)
                if base is None:
                    base = ParamPoly.var(v)
                term = term * base ** e
            total = total + term
        return total

    # -- display ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        monos = sorted(self.terms, key=_gl_key)
        parts: list[str] = []
        for m in monos:
            c = self.terms[m]
            factors = [f"{v}^{e}" if e > 1 else v for v, e in m]
            if not factors:
                body = str(abs(c))
            else:
                body = "*".join(factors)
                if abs(c) != 1:
                    body = f"{abs(c)}*{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"ParamPoly({self})"


_P_ZERO = ParamPoly()
_P_ONE = ParamPoly.const(1)


# -- polynomial division and gcd ------------------------------------------


def poly_divexact(f: ParamPoly, g: ParamPoly) -> ParamPoly:
    """Exact division f / g; raises ValueError if not exact."""
    if g.is_zero():
        raise DivisionByZero("polynomial division by zero")
    if f.is_zero():
        return _P_ZERO
    if g.is_const():
        return f.scale(Fraction(1) / g.const_value())
    quo: dict[Monomial, Rat] = {}
    rem = f
    gm, gc = g.leading()
    while not rem.is_zero():
        rm, rc = rem.leading()
        qm = _mono_div(rm, gm)
        if qm is None:
            raise ValueError("inexact polynomial division")
        qc = rc / gc
        quo[qm] = qc
        rem = rem - ParamPoly({qm: qc}) * g
    return ParamPoly(quo)


def _prim_int(f: ParamPoly) -> ParamPoly:
    """Integer-primitive part: coprime integer coefficients, positive leading."""
    if f.is_zero():
        return f
    den_lcm = 1
    for c in f.terms.values():
        den_lcm = den_lcm * c.denominator // _int_gcd(den_lcm, c.denominator)
    num_gcd = 0
    for c in f.terms.values():
        num_gcd = _int_gcd(num_gcd, abs(c.numerator * (den_lcm // c.denominator)))
    scale = Fraction(den_lcm, num_gcd)
    if f.leading()[1] < 0:
        scale = -scale
    return f.scale(scale)


def _as_univar(f: ParamPoly, x: str) -> dict[int, ParamPoly]:
    coeffs: dict[int, dict[Monomial, Rat]] = {}
    for m, c in f.terms.items():
        d = dict(m)
        e = d.pop(x, 0)
        rest = tuple(sorted(d.items()))
        coeffs.setdefault(e, {})[rest] = c
    return {e: ParamPoly(t) for e, t in coeffs.items()}


def _from_univar(coeffs: Mapping[int, ParamPoly], x: str) -> ParamPoly:
    total = ParamPoly()
    for e, p in coeffs.items():
        total = total + (p * ParamPoly.var(x, e) if e else p)
    return total


def _uni_deg(coeffs: Mapping[int, ParamPoly]) -> int:
    live = [e for e, p in coeffs.items() if not p.is_zero()]
    return max(live) if live else -1


def _content_wrt(f: ParamPoly, x: str) -> ParamPoly:
    c = _P_ZERO
    for p in _as_univar(f, x).values():
        c = poly_gcd(c, p)
        if c == _P_ONE:
            break
    return c


def _prem(f: ParamPoly, g: ParamPoly, x: str) -> ParamPoly:
    """Pseudo-remainder of f by g with respect to x."""
    fu, gu = _as_univar(f, x), _as_univar(g, x)
    df, dg = _uni_deg(fu), _uni_deg(gu)
    lc_g = gu[dg]
    rem = f
    while True:
        ru = _as_univar(rem, x)
        dr = _uni_deg(ru)
        if dr < dg or rem.is_zero():
            return rem
        lc_r = ru[dr]
        rem = rem * lc_g - g * lc_r * ParamPoly.var(x, dr - dg)


def _gcd_univar_q(f: ParamPoly, g: ParamPoly, x: str) -> ParamPoly:
    """Fast Euclid for univariate polynomials over Q."""

    def todict(p: ParamPoly) -> dict[int, Rat]:
        return {e: q.const_value() for e, q in _as_univar(p, x).items()}

    a, b = todict(f), todict(g)

    def deg(d):
        return max(d) if d else -1

    while b:
        da, db = deg(a), deg(b)
        if da < db:
            a, b = b, a
            continue
        lead = b[db]
        b = {e: c / lead for e, c in b.items()}
        r = dict(a)
        while r and deg(r) >= db:
            dr = deg(r)
            c = r.pop(dr)
            for e, bc in b.items():
                if e == db:
                    continue
                k = dr - db + e
                s = r.get(k, Fraction(0)) - c * bc
                if s:
                    r[k] = s
                else:
                    r.pop(k, None)
        a, b = b, r
    return _prim_int(_from_univar({e: ParamPoly.const(c) for e, c in a.items()}, x))


def poly_gcd(f: ParamPoly, g: ParamPoly) -> ParamPoly:
    """Gcd in Q[vars], integer-primitive with positive leading coefficient."""
    if f.is_zero():
        return _prim_int(g)
    if g.is_zero():
        return _prim_int(f)
    if f.is_const() or g.is_const():
        return _P_ONE
    fvars = f.variables() | g.variables()
    x = max(fvars)
    if len(fvars) == 1:
        return _gcd_univar_q(f, g, x)
    cf = _content_wrt(f, x)
    cg = _content_wrt(g, x)
    c = poly_gcd(cf, cg)
    a = poly_divexact(f, cf)
    b = poly_divexact(g, cg)
    if _uni_deg(_as_univar(a, x)) < _uni_deg(_as_univar(b, x)):
        a, b = b, a
    while not b.is_zero():
        r = _prem(a, b, x)
        if not r.is_zero():
            rc = _content_wrt(r, x)
            r = poly_divexact(r, rc)
        a, b = b, r
    return _prim_int(c * a)


# -- Scalar ----------------------------------------------------------------


class Scalar:
    """Element of the rational function field Q(vars), canonically reduced.

    Invariants: gcd(num, den) is constant, den is monic in graded-lex order,
    and den = 1 whenever the value is polynomial.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: ParamPoly, den: ParamPoly = _P_ONE):
        if den.is_zero():
            raise DivisionByZero("scalar with zero denominator")
        if num.is_zero():
            self.num, self.den = _P_ZERO, _P_ONE
            return
        if den.is_const():
            c = den.const_value()
            self.num = num if c == 1 else num.scale(Fraction(1) / c)
            self.den = _P_ONE
            return
        g = poly_gcd(num, den)
        if not g.is_const():
            num = poly_divexact(num, g)
            den = poly_divexact(den, g)
        if den.is_const():
            c = den.const_value()
            self.num = num if c == 1 else num.scale(Fraction(1) / c)
            self.den = _P_ONE
            return
        lc = den.leading()[1]
        if lc != 1:
            inv = Fraction(1) / lc
            num = num.scale(inv)
            den = den.scale(inv)
        self.num, self.den = num, den

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero() -> "Scalar":
        return _S_ZERO

    @staticmethod
    def one() -> "Scalar":
        return _S_ONE

    @staticmethod
    def const(value) -> "Scalar":
        s = Scalar.__new__(Scalar)
        s.num = ParamPoly.const(value)
        s.den = _P_ONE
        return s

    @staticmethod
    def var(name: str) -> "Scalar":
        s = Scalar.__new__(Scalar)
        s.num = ParamPoly.var(name)
        s.den = _P_ONE
        return s

    @staticmethod
    def of_poly(p: ParamPoly) -> "Scalar":
        s = Scalar.__new__(Scalar)
        s.num = p
        s.den = _P_ONE
        return s

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Rat:
        if not self.is_const():
            raise ValueError(f"scalar {self} is not constant")
        return self.num.const_value()

    def is_poly(self) -> bool:
        return self.den == _P_ONE

    def variables(self) -> set[str]:
        return self.num.variables() | self.den.variables()

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == _P_ONE and other.den == _P_ONE:
            return Scalar.of_poly(self.num + other.num)
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    def __neg__(self) -> "Scalar":
        s = Scalar.__new__(Scalar)
        s.num = -self.num
        s.den = self.den
        return s

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if self.num.is_zero() or other.num.is_zero():
            return _S_ZERO
        if self.den == _P_ONE and other.den == _P_ONE:
            return Scalar.of_poly(self.num * other.num)
        return Scalar(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if other.num.is_zero():
            raise DivisionByZero("division by zero scalar")
        if self.num.is_zero():
            return _S_ZERO
        return Scalar(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int) -> "Scalar":
        if n == 0:
            return _S_ONE
        if n < 0:
            if self.num.is_zero():
                raise DivisionByZero("zero scalar to a negative power")
            inv = Scalar(self.den, self.num)
            return inv ** (-n)
        result = _S_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (isinstance(other, Scalar)
                and self.num == other.num and self.den == other.den)

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- display ----------------------------------------------------------

    def __str__(self) -> str:
        if self.den == _P_ONE:
            return str(self.num)
        num = str(self.num)
        den = str(self.den)
        if len(self.num.terms) > 1:
            num = f"({num})"
        if len(self.den.terms) > 1 or "*" in den or "^" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"Scalar({self})"


_S_ZERO = Scalar.__new__(Scalar)
_S_ZERO.num, _S_ZERO.den = _P_ZERO, _P_ONE
_S_ONE = Scalar.__new__(Scalar)
_S_ONE.num, _S_ONE.den = _P_ONE, _P_ONE


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Field operation dispatch: op in '+', '-', '*', '/'."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown scalar operation {op!r}")


# -- t-order, limits, substitution ----------------------------------------


def _drop_t(p: ParamPoly, shift: int) -> ParamPoly:
    """Divide by t^shift (must be exact) and then set t = 0."""
    out: dict[Monomial, Rat] = {}
    for m, c in p.terms.items():
        d = dict(m)
        e = d.pop(DEFORMATION_VAR, 0) - shift
        if e < 0:
            raise ValueError("inexact t-power shift")
        if e == 0:
            rest = tuple(sorted(d.items()))
            out[rest] = out.get(rest, Fraction(0)) + c
    return ParamPoly({m: c for m, c in out.items() if c})


def t_order_and_limit(s: Scalar):
    """Return (order, limit) of s at t -> 0.

    order = (lowest t-exponent of num) - (lowest t-exponent of den); the limit
    is a Scalar free of t when order >= 0 (zero when order > 0) and UNDEFINED
    when order < 0.  The zero scalar reports order +infinity and limit zero.
    """
    if s.num.is_zero():
        return inf, _S_ZERO
    k_num = s.num.min_exp_in(DEFORMATION_VAR)
    k_den = s.den.min_exp_in(DEFORMATION_VAR)
    order = k_num - k_den
    if order < 0:
        return order, UNDEFINED
    if order > 0:
        return order, _S_ZERO
    num0 = _drop_t(s.num, k_num)
    den0 = _drop_t(s.den, k_den)
    return 0, Scalar(num0, den0)


def substitute(s: Scalar, bindings: Mapping[str, Scalar]) -> Scalar:
    """Field homomorphism replacing variables by scalars.

    Unbound variables stay as themselves.  Raises SubstitutionPole when the
    denominator vanishes identically under the bindings.
    """
    if not bindings or not (s.variables() & set(bindings)):
        return s
    num = s.num.eval_scalar(bindings)
    den = s.den.eval_scalar(bindings)
    if den.is_zero():
        raise SubstitutionPole(f"substitution sends denominator of {s} to zero")
    return num / den


# -- parsing ---------------------------------------------------------------


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(text[i:j])
            i = j
        elif ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
        elif ch in "+-*/^()":
            tokens.append(ch)
            i += 1
        else:
            raise ScalarSyntaxError(f"unexpected character {ch!r} in scalar literal")
    return tokens


class _Parser:
    def __init__(self, tokens: list[str], allowed: set[str] | None):
        self.tokens = tokens
        self.pos = 0
        self.allowed = allowed

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ScalarSyntaxError("unexpected end of scalar literal")
        self.pos += 1
        return tok

    def parse_expr(self) -> Scalar:
        value = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self) -> Scalar:
        value = self.parse_factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.parse_factor()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise DivisionByZero("division by zero in scalar literal")
                value = value / rhs
        return value

    def parse_factor(self) -> Scalar:
        if self.peek() == "-":
            self.take()
            return -self.parse_factor()
        if self.peek() == "+":
            self.take()
            return self.parse_factor()
        base = self.parse_base()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            exp_tok = self.take()
            if not exp_tok.isdigit():
                raise ScalarSyntaxError(f"exponent must be an integer, got {exp_tok!r}")
            return base ** (sign * int(exp_tok))
        return base

    def parse_base(self) -> Scalar:
        tok = self.take()
        if tok == "(":
            value = self.parse_expr()
            if self.take() != ")":
                raise ScalarSyntaxError("unbalanced parentheses in scalar literal")
            return value
        if tok.isdigit():
            return Scalar.const(int(tok))
        if tok[0].isalpha():
            if self.allowed is not None and tok not in self.allowed:
                raise ScalarSyntaxError(f"unknown name {tok!r} in scalar literal")
            return Scalar.var(tok)
        raise ScalarSyntaxError(f"unexpected token {tok!r} in scalar literal")


def parse_scalar(text: str, allowed: Iterable[str] | None = None) -> Scalar:
    """Parse a scalar literal.

    Grammar: integers, names, ``+ - * / ^`` with integer exponents, and
    parentheses; whitespace-insensitive.  Rationals are written ``p/q``.
    When ``allowed`` is given, only those names (plus ``t``) may appear.
    """
    allow = None
    if allowed is not None:
        allow = set(allowed) | {DEFORMATION_VAR}
    parser = _Parser(_tokenize(text), allow)
    value = parser.parse_expr()
    if parser.peek() is not None:
        raise ScalarSyntaxError(f"trailing tokens in scalar literal: {parser.tokens[parser.pos:]}")
    return value


# -- univariate utilities --------------------------------------------------


def rational_roots(p: ParamPoly, var: str) -> tuple[list[tuple[Rat, int]], ParamPoly]:
    """Rational roots (with multiplicity) of a univariate polynomial.

    Returns ``(roots, residue)`` where residue is the (integer-primitive)
    cofactor left after deflating all rational roots; the zero set over the
    complex numbers equals the listed roots exactly iff residue is constant.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every value as a root")
    if p.variables() - {var}:
        raise ValueError("rational_roots needs a univariate polynomial")
    work = _prim_int(p)
    coeffs = {e: q.const_value() for e, q in _as_univar(work, var).items()}

    def eval_at(c: dict[int, Rat], q: Rat) -> Rat:
        return sum((coef * q ** e for e, coef in c.items()), Fraction(0))

    def deflate(c: dict[int, Rat], root: Rat) -> dict[int, Rat]:
        deg = max(c)
        out: dict[int, Rat] = {}
        carry = Fraction(0)
        for e in range(deg, 0, -1):
            carry = c.get(e, Fraction(0)) + carry
            out[e - 1] = carry
            carry = carry * root
        return {e: q for e, q in out.items() if q}

    roots: list[tuple[Rat, int]] = []
    # strip root at zero
    zero_mult = min(coeffs) if coeffs else 0
    if zero_mult:
        coeffs = {e - zero_mult: c for e, c in coeffs.items()}
        roots.append((Fraction(0), zero_mult))
    while coeffs and max(coeffs) > 0:
        deg = max(coeffs)
        lead = coeffs[deg].numerator
        tail = coeffs.get(0, Fraction(0)).numerator
        found = None
        for num in _divisors(abs(tail)):
            for den in _divisors(abs(lead)):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if eval_at(coeffs, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        mult = 0
        while eval_at(coeffs, found) == 0:
            coeffs = deflate(coeffs, found)
            mult += 1
            if not coeffs:
                break
        roots.append((found, mult))
    residue = _prim_int(_from_univar({e: ParamPoly.const(c) for e, c in coeffs.items()}, var)) if coeffs else _P_ONE
    roots.sort(key=lambda rm: rm[0])
    return roots, residue


def _divisors(n: int) -> list[int]:
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)
