"""Regenerate fixtures/mi_reference.json with 40-digit mpmath evaluations.

Run from the repository root: python3 scripts/make_mi_fixtures.py
"""

import json
from pathlib import Path

import mpmath as mp

mp.mp.dps = 40

# (V_Hal, CC, LOC, r_comment)
VECTORS = [
    ("1", "1", "1", "0"),
    ("8", "3", "20", "0"),
    ("8", "3", "20", "0.1"),
    ("249.44984078055495", "6", "24", "0.03333333333333333"),
    ("1500.5", "17", "310", "0.25"),
    ("46.051701859880914", "2", "9", "0.5"),
    ("12000", "45", "900", "1"),
]


def sei(v, cc, loc, r):
    mi3 = 171 - mp.mpf("5.2") * mp.log(v) - mp.mpf("0.23") * cc - mp.mpf("16.2") * mp.log(loc)
    return mi3, mi3 - 50 * mp.sin(mp.sqrt(mp.mpf("2.4") * r))


def vs(v, cc, loc):
    raw = 171 - mp.mpf("5.2") * mp.log(v) - mp.mpf("0.232") * cc - mp.mpf("16.22") * mp.log(loc)
    return max(mp.mpf(0), raw * 100 / 171)


def main():
    rows = []
    for v, cc, loc, r in VECTORS:
        args = [mp.mpf(x) for x in (v, cc, loc, r)]
        mi3, mi4 = sei(*args)
        rows.append({"v_hal": v, "cc": cc, "loc": loc, "r_comment": r,
                     "mi_sei3": mp.nstr(mi3, 30), "mi_sei4": mp.nstr(mi4, 30),
                     "vs_mi": mp.nstr(vs(*args[:3]), 30)})
    out = Path(__file__).resolve().parent.parent / "fixtures" / "mi_reference.json"
    out.write_text(json.dumps({"precision_digits": 40, "vectors": rows}, indent=1) + "\n")


if __name__ == "__main__":
    main()
