#!/usr/bin/env python3
"""Smoke test for the voaplus_py extension module.

Builds nothing itself: it locates the compiled cdylib under target/
(release preferred), exposes it as an importable module, and exercises the
bound surface end to end. Run from the repository root:

    cargo build -p voaplus-py --release
    python3 python/smoke_test.py
"""

import json
import os
import shutil
import sys
import tempfile
from fractions import Fraction

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def locate_cdylib():
    candidates = [
        os.path.join(ROOT, "target", profile, name)
        for profile in ("release", "debug")
        for name in ("libvoaplus_py.so", "libvoaplus_py.dylib", "voaplus_py.dll")
    ]
    for c in candidates:
        if os.path.exists(c):
            return c
    sys.exit(
        "voaplus_py cdylib not found; build it first:\n"
        "    cargo build -p voaplus-py --release"
    )


def import_module():
    lib = locate_cdylib()
    tmp = tempfile.mkdtemp(prefix="voaplus_py_")
    ext = ".so" if not lib.endswith(".dll") else ".pyd"
    shutil.copy(lib, os.path.join(tmp, "voaplus_py" + ext))
    sys.path.insert(0, tmp)
    import voaplus_py

    return voaplus_py


def main():
    vp = import_module()
    checks = 0

    def ok(cond, what):
        nonlocal checks
        if not cond:
            sys.exit(f"FAIL: {what}")
        checks += 1
        print(f"ok: {what}")

    lat = vp.Lattice(3)
    ok(repr(lat) == "Lattice(k=3)", "fixed-k constructor")

    # the weight grading reads off L(0)
    j = lat.eval("J")
    ok(j.weight() == "4", "J has weight 4")
    l0j = lat.virasoro(0, j)
    ok(l0j == j.scale(4, 1), "L(0)J = 4J")
    ok(lat.virasoro(1, j).is_zero() and lat.virasoro(2, j).is_zero(),
       "J is annihilated by L(1), L(2)")

    # involution fixes J and negates the antisymmetric combination
    ok(j.theta() == j, "theta(J) = J")
    f = lat.eval("F")
    ok(f.theta() == f.scale(-1, 1), "theta(F) = -F")
    ok(f.plus_project().is_zero(), "plus-projection kills F")

    # mode application against the literal-series oracle
    e = lat.eval("E")
    prod = lat.mode_apply(e, -7, e)
    ok(prod == lat.mode_apply_oracle(e, -7, e), "engine matches the series oracle")
    expected = lat.eval("E2") + lat.schur_p(12, 1) + lat.schur_p(12, -1)
    ok(prod == expected, "charge product expands into Schur states")

    # element JSON round data
    je = lat.eval("[J]_-1 E")
    coeffs = {tuple(t["parts"]): t["coeff"] for t in json.loads(je.to_json())
              if t["charge"] == 1}
    ok(coeffs[(1, 1, 1, 1)] == "1/36", "J_{-1}E leading coordinate at k=3")

    # span certificates: beta(3) = 170/11 is pinned by the weight-7 quotient
    l22e = lat.eval("L(-2) L(-2) E")
    verified, cert = lat.congruent(je, l22e.scale(170, 11))
    ok(verified, "J_{-1}E = (170/11) L(-2)^2 E modulo the graded span")
    wrong, _ = lat.congruent(je, l22e.scale(171, 11))
    ok(not wrong, "a wrong constant is rejected")
    ok(json.loads(cert)["weight"] == 7, "certificate carries its weight")

    dims = [lat.c2_quotient_dim(n) for n in range(7)]
    ok(dims == [1, 0, 1, 1, 2, 1, 2], "quotient dimensions through weight 6")

    # symbolic mode: tables and constants
    sym = vp.Lattice()
    ok(sym.is_symbolic(), "symbolic constructor")
    t1 = json.loads(sym.table(1))
    ok(t1["determinant"] == "(-16*k^2 + 40*k - 9)/(16*k^2)", "table-1 determinant")
    ok(t1["determinant_matches"] is True, "table-1 determinant matches the reference")
    consts = json.loads(sym.constants())
    ok(consts["beta"] == "(64*k^2 - 16*k - 18)/(16*k^2 - 40*k + 9)", "beta")
    ok(Fraction(consts["gamma"]) == 64, "gamma = 64")

    # mode guards
    try:
        sym.mode_apply(sym.eval("E"), -7, sym.eval("E"))
        sys.exit("FAIL: symbolic charge pairing should be refused")
    except RuntimeError:
        checks += 1
        print("ok: symbolic charge pairing is refused")
    try:
        lat.mode_apply(e, -1, sym.eval("E"))
        sys.exit("FAIL: mode mixing should be refused")
    except ValueError:
        checks += 1
        print("ok: cross-mode elements are refused")

    print(f"\nsmoke test passed: {checks} checks")


if __name__ == "__main__":
    main()
