"""Dev check: engine-verify hand-derived bl4 witnesses before they are
transcribed into the claims data."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from degenverify.algebra import parse_vector
from degenverify.degeneration import DegenerationWitness, verify_degeneration
from degenverify.exact import Scalar, parse_scalar

import algfixtures as fx


def check(label, source, target, rows, index=None, params=()):
    basis = tuple(parse_vector(r, source.dim, params, allow_t=True)
                  for r in rows)
    w = DegenerationWitness(source=source, target=target, basis=basis,
                            index={k: parse_scalar(v) for k, v in
                                   (index or {}).items()},
                            label=label)
    v = verify_degeneration(w)
    print(f"{label}: {v.status} {v.reason}")
    if v.status != "pass":
        print("   ", {k: val for k, val in v.details.items()
                      if k != "limit"})


a = Scalar.var("alpha")
b = Scalar.var("beta")

# g5(1) -> g3(2)
check("g5(1) -> g3(2)",
      fx.g5().substitute_params({"alpha": Scalar.const(1)}),
      fx.g3().substitute_params({"beta": Scalar.const(2)}),
      ["e1", "e2", "t*e3", "t*e4"])

# g4(1,beta) -> g2(beta), beta symbolic
check("g4(1,b) -> g2(b)",
      fx.g4().substitute_params({"alpha": Scalar.const(1)}),
      fx.g2(),
      ["e1", "e2", "t*e3", "t*e4"], params=("beta",))

# g5(alpha) -> g4(alpha, alpha+1), alpha symbolic (generic alpha != 0)
check("g5(a) -> g4(a,a+1)",
      fx.g5(),
      fx.g4().substitute_params({"beta": parse_scalar("alpha+1",
                                                      allowed=("alpha",))}),
      ["e1", "-alpha*t*e2", "t*e2 - t*e3", "e4 + t*e3"], params=("alpha",))

# r2_r2 -> g5(0)
check("r2+r2 -> g5(0)",
      fx.r2_r2(),
      fx.g5().substitute_params({"alpha": Scalar.zero()}),
      ["e1 + e3", "e2 + e4", "t*e1 - t*e3 + e2 + e4", "-t*e2 + t*e4"])

# r2_r2 -> g4(alpha, 0), generic alpha (alpha != 0, 1)
check("r2+r2 -> g4(a,0)",
      fx.r2_r2(),
      fx.g4().substitute_params({"beta": Scalar.zero()}),
      ["e1 + alpha*e3", "(1 - alpha)*e2", "e2 + e4",
       "e2 + (1/alpha)*e4 + t*e1 + t*e3"], params=("alpha",))

# r2_r2 -> g4(0,0) directly
check("r2+r2 -> g4(0,0)",
      fx.r2_r2(),
      fx.g4().substitute_params({"alpha": Scalar.zero(),
                                 "beta": Scalar.zero()}),
      ["e1 + t*e3", "e2 + t^2*e4", "e2 + t*e4", "t*e1 + e2 + e4"])

# r2_r2 -> g4(1,0) via the alpha = 1 - t curve in the family witness
check("r2+r2 -> g4(1,0)",
      fx.r2_r2(),
      fx.g4().substitute_params({"alpha": Scalar.const(1),
                                 "beta": Scalar.zero()}),
      ["e1 + (1-t)*e3", "t*e2", "e2 + e4",
       "e2 + (1/(1-t))*e4 + t*e1 + t*e3"])

# g5 family curve alpha = t realizes the alpha = 0 member of g4(a,a+1)
check("g4(t,t+1) curve -> g4(0,1)",
      fx.g4(),
      fx.g4().substitute_params({"alpha": Scalar.zero(),
                                 "beta": Scalar.const(1)}),
      ["e1", "e2", "e3", "e4"],
      index={"alpha": "t", "beta": "t + 1"})

# trivial abelian limits
check("n3_C -> C4", fx.n3_C(), fx.C4(), ["t*e1", "t*e2", "e3", "e4"])
check("g1 -> C4", fx.g1(), fx.C4(), ["t*e1", "e2", "e3", "e4"])
