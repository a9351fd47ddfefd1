"""Dev scan: find parameter values where invariants of the parametric
catalog families jump, so every case split lands in the data files."""

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from degenverify.algebra import AlgebraPresentation
from degenverify.exact import Scalar
from degenverify.invariants import (central_dim, central_series_dims,
                                    derivation_dim, power_dim)

import algfixtures as fx

GRID = [Fraction(v) for v in (-3, -2, -1, Fraction(-1, 2), 0,
                              Fraction(1, 2), 1, 2, 3)]


def profile(a, series=False):
    out = {"der": derivation_dim(a),
           "a2": power_dim(a, 2), "a3": power_dim(a, 3)}
    if series:
        out["zseries"] = central_series_dims(a)
    else:
        out["z"] = central_dim(a, 1)
    try:
        out["type"] = a.classify_type()
    except Exception as exc:  # NeedsSpecialization on parametric input
        out["type"] = f"<{exc}>"
    return out


def scan(name, family, series=False, skip=()):
    groups = {}
    for point in GRID:
        if point in skip:
            continue
        bind = {p: Scalar.const(point) for p in family.params}
        inst = family.substitute_params(bind)
        key = tuple(sorted(profile(inst, series).items()))
        groups.setdefault(key, []).append(point)
    print(f"== {name} (generic: {profile(family, series)})")
    for key, points in groups.items():
        print(f"   {dict(key)}  at {[str(p) for p in points]}")


def scan2(name, family, series=False):
    groups = {}
    p1, p2 = family.params
    for v1 in GRID:
        for v2 in GRID:
            inst = family.substitute_params(
                {p1: Scalar.const(v1), p2: Scalar.const(v2)})
            key = tuple(sorted(profile(inst, series).items()))
            groups.setdefault(key, []).append((v1, v2))
    print(f"== {name} (generic: {profile(family, series)})")
    for key, points in groups.items():
        shown = [f"({p1}={a},{p2}={b})" for a, b in points[:6]]
        print(f"   {dict(key)}  at {len(points)} points incl {shown}")


scan("bl4 g2(beta)", fx.g2())
scan("bl4 g3(beta)", fx.g3())
scan2("bl4 g4(alpha,beta)", fx.g4())
scan("bl4 g5(alpha)", fx.g5())
scan("nmal6 M2(eps), domain eps != 0, -1", fx.z6_M2(), series=True,
     skip=(Fraction(0), Fraction(-1)))
scan("nmal6 M6(eps), domain eps != 0", fx.z6_M6(), series=True,
     skip=(Fraction(0),))
