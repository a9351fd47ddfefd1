"""Dev harness: engine-verify hand-derived nmal6 Lie-edge witnesses."""
import sys

sys.path.insert(0, "src")

from degenverify.algebra import parse_vector
from degenverify.catalog import load_variety
from degenverify.degeneration import DegenerationWitness, verify_degeneration

cat = load_variety("nmal6")

CASES = [
    ("g6", "g5", ["t*e1 + e2", "t^2*e2 - t*e3 + e4", "t^3*e3 - t^2*e4",
                  "t^4*e4", "t^5*e5", "t^5*e6"]),
    ("g8", "g7", ["e1 + e2 - (1/2)*t^-2*e4", "t^2*e2 + (1/2)*e4",
                  "t^2*e3 + (1/2)*e5", "t^2*e4", "t^2*e5", "t^2*e6"]),
    ("g8", "g1", ["e1 - e3", "t*e2 + (1/2)*e4",
                  "t*e3 + (1/2)*e5 + (1/2)*e6", "t*e4", "e5",
                  "t*e5 + t*e6"]),
    ("g5", "g7", ["e1 - (1/2)*t^-1*e2", "t*e2", "t*e3",
                  "t*e4 - (1/2)*e5", "t*e5 - e6", "t*e6"]),
    ("g14", "g23", ["e1 + e2", "t*e2", "t*e3", "t*e4 + t*e5",
                    "2*t*e6", "t^2*e5"]),
    ("g23", "g6C", ["e1", "t*e2", "t*e3", "t*e4", "t*e5",
                    "e6 - t^-1*e5"]),
    ("g23", "g16", ["e1", "t^2*e2 + t*e3", "t^2*e3 + t*e4", "t*e4",
                    "t*e5", "t^4*e6"]),
    ("g6C", "g15", ["e1", "t^-1*e2", "t^-1*e3", "t^-2*e4 + e6",
                    "t^-1*e4", "t^-2*e5"]),
    ("g16", "g15", ["e1 + e2", "t*e2", "t*e3", "t^2*e3 - t^2*e4",
                    "t*e5 + t*e6", "t^2*e6"]),
    ("g5C", "g17", ["e1", "t*e2", "t*e3", "e4 + e6", "t*e4", "e5"]),
    ("g15", "g20", ["e1", "t*e2", "t*e3", "e3 - e4", "t*e5", "e5 - e6"]),
    ("g18", "g20", ["e1 + e2", "t*e2", "t*e3", "e4 - e3", "t*e5",
                    "e6 - e5"]),
    ("g3", "g3C", ["e1", "t^2*e2 + t^-1*e1 + t^3*e4", "t^2*e3",
                   "t*e3 + t*e4 - t^-3*e5", "t*e6", "t^2*e5"]),
    ("g4C", "g24", ["e1", "e2", "t^-1*e3 + e6", "e3", "t^-1*e4",
                    "t^-1*e5"]),
    ("g3C", "g21", ["e1", "e2", "t^-4*e4 + t^-1*e2",
                    "-t*e1 - t^-2*e3 + e6", "e3", "t^-1*e3 + t^-4*e5"]),
    ("n3_n3", "g21", ["e1 + e2", "e1 - e2 + e3 + e4",
                      "t^-1*e1 + t^-1*e2 + t^-1*e3 - t^-1*e4",
                      "t*e3 + t*e4", "e5 + e6", "t^-1*e5 - t^-1*e6"]),
    ("n4_C2", "g2C", ["e1", "t*e2", "e3 + e5", "t*e3", "e4", "e6"]),
    ("g1", "g10", ["e1", "t^-2*e3 - t^-2*e5", "t^-1*e2", "t^-2*e4",
                   "t^-1*e3", "t^-2*e6"]),
    ("g14", "g1", ["e1 + t^-1*e2", "e2 + 2*t^-1*e3",
                   "e3 + 2*t^-1*e4 + 2*t^-2*e5",
                   "e4 + t^-1*e5 + 4*t^-2*e6",
                   "2*t^-1*e4 - 2*t^-2*e5 + 8*t^-3*e6",
                   "2*t^-1*e6"]),
]

npass = nfail = 0
for src, dst, rows_txt in CASES:
    A = cat.entry(src).algebra
    B = cat.entry(dst).algebra
    rows = [parse_vector(txt, 6, (), allow_t=True) for txt in rows_txt]
    wit = DegenerationWitness(source=A, target=B, basis=rows)
    res = verify_degeneration(wit)
    tag = "PASS" if res.ok else "FAIL"
    if res.ok:
        npass += 1
    else:
        nfail += 1
    print(f"{tag}  {src} -> {dst}" + ("" if res.ok else f"   [{res.reason}]"))
print(f"\n{npass} pass, {nfail} fail")
