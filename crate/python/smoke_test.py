"""Smoke test for the sphere_gauge extension module.

Build and install first:  pip install --no-build-isolation ./crates/py
Then run:                 python python/smoke_test.py
"""

import json
import pathlib
import sys

import sphere_gauge as sg

ROOT = pathlib.Path(__file__).resolve().parent.parent


def check(cond, what):
    if not cond:
        raise SystemExit(f"FAIL: {what}")
    print(f"ok   {what}")


def main():
    g = sg.AbGroup(1, [2, 12])
    check(str(g) == "Z + Z_2 + Z_12", "group text form")
    check(g.localize(5).unicode() == "ℤ₍₅₎", "localization at 5")
    check(sg.AbGroup.parse(str(g)) == g, "parse round trip")
    check(str(sg.AbGroup(0, [4]) + sg.AbGroup(0, [6])) == "Z_2 + Z_12", "direct sum")

    m = sg.Manifold(3, -5)
    check((m.l, m.m) == (-2, 5), "normal form of M_{3,-5}")
    check([str(h) for h in m.homology()] == ["Z", "0", "0", "Z_5", "0", "0", "0", "Z"], "homology")
    check(sg.Manifold(3, 0).is_homotopy_equivalent(sg.Manifold(15, 0))[0], "James-Whitehead example")
    check(sg.Manifold(1, 50).suspension(p=5) == "P^5(25) v S^8 @ (5)", "p-local suspension")

    s, size = sg.classify_bundles("Sp2", 3, 5)
    check((str(s), size) == ("Z_5", 5), "bundle classification")
    try:
        sg.classify_bundles("SU2", 0, 0)
        check(False, "SU(2) over M_{0,0} rejected")
    except sg.OutOfScopeError as e:
        check("π₆(SU(2)) = ℤ₁₂ ≠ 0" in str(e), "SU(2) over M_{0,0} rejected")

    d = sg.decompose("SU4", 12, 0, k=1)
    check(d["expr"] == "G^1(S^4) x O^3[SU(4)] x O^7[SU(4)]", "torsion-free decomposition")
    check(len(d["caveats"]) == 1, "opaque atom carries a caveat")
    d = sg.decompose("Sp2", 1, 25, k=5, p=5)
    check(d["expr"] == "O^8_0[Sp(2)] x X_5 @ (5)" and d["looped"] == 1, "p-local decomposition")

    check(sg.pi0_unpointed_gauge_m0("Spin8", 0).unicode() == "ℤ³", "path components of Spin(8)")
    check(str(sg.pi_pointed_gauge_plocal("SU4", 25, 0, 5)) == "Z_(5) + Z_25", "p-local path components")
    check(sg.s7_gauge_equivalent("SU2", 1, 2)[0] == "equivalent", "SU(2) gauge groups over S^7")
    check([str(h) for h in sg.oracle_homology(6)][3] == "Z_6", "oracle homology")
    check([str(h) for h in sg.complex_homology("cells 1 1 1\nd 2\n2\n")] == ["Z", "Z_2", "0"], "user complex")

    code, out = sg.run_cli(["classify", "--group", "Sp2", "--l", "3", "--m", "5", "--json"])
    doc = json.loads(out)
    check(code == 0 and doc["result"]["set"] == "Z_5", "CLI through Python")
    try:
        import jsonschema
    except ImportError:
        print("skip schema validation (jsonschema not installed)")
    else:
        schema = json.loads((ROOT / "docs" / "schema.json").read_text())
        jsonschema.validate(doc, schema)
        check(True, "CLI JSON validates against docs/schema.json")
    print("all smoke checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
