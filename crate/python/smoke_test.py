#!/usr/bin/env python3
"""Smoke test for the ballot_py extension module.

Builds the cdylib if needed, imports it from the workspace target
directory, and checks a handful of known values end to end. Exits
nonzero on the first failure.
"""

import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parents[1]

checks = 0


def ok(name, cond):
    global checks
    if not cond:
        print(f"FAIL: {name}", file=sys.stderr)
        sys.exit(1)
    checks += 1
    print(f"ok: {name}")


def load_module():
    subprocess.run(
        ["cargo", "build", "-p", "ballot-py"],
        cwd=REPO_ROOT,
        check=True,
    )
    debug_dir = REPO_ROOT / "target" / "debug"
    built = next(
        (
            debug_dir / name
            for name in ("libballot_py.so", "libballot_py.dylib", "ballot_py.dll")
            if (debug_dir / name).exists()
        ),
        None,
    )
    if built is None:
        print(f"no built extension found under {debug_dir}", file=sys.stderr)
        sys.exit(1)
    # Python imports the module by its own name, so stage a copy with the
    # import name and the platform's extension-module suffix.
    stage = Path(tempfile.mkdtemp(prefix="ballot_py_"))
    shutil.copy2(built, stage / "ballot_py.so")
    sys.path.insert(0, str(stage))
    import ballot_py

    return ballot_py


def main():
    bp = load_module()
    R = bp.Ratio

    # Ratio type: construction, arithmetic, and interop with int/Fraction.
    ok("parse p/q", str(R("3/2")) == "3/2")
    ok("parse decimal", R("1.5") == R(3, 2))
    ok("reduce", R(6, 4).as_integer_ratio() == (3, 2))
    ok("negative denominator", R(1, -2) == R("-1/2"))
    ok("arithmetic", R("1/2") + R("1/3") == R("5/6"))
    ok("mixed int arithmetic", 1 - R("1/3") == R("2/3"))
    ok("division", R("3/2") / 3 == R("1/2"))
    ok("fraction equality", R("1/2") == Fraction(1, 2))
    ok("fraction arithmetic", R("1/2") * Fraction(2, 3) == Fraction(1, 3))
    ok("hash matches int", hash(R(7)) == hash(7))
    ok("hash matches fraction", hash(R("1/2")) == hash(Fraction(1, 2)))
    ok("dict key interop", {R("1/2"): "x"}[Fraction(1, 2)] == "x")
    ok("ordering", R("2/3") < R("3/4") <= 1)
    ok("floor and ceil", (R("7/3").floor(), R("7/3").ceil()) == (2, 3))
    ok("float exit", abs(float(R("1/3")) - 1 / 3) < 1e-15)
    try:
        R(0.5)
        ok("float rejected", False)
    except TypeError:
        ok("float rejected", True)

    # Exhaustive counting against known instances.
    c = bp.count_exact(5, 2, "3/2")
    ok("count totals", (c.total, c.desirable, c.cute) == (21, 7, 9))
    ok("count p", c.p == Fraction(1, 3))
    ok("count p_star", c.p_star == Fraction(3, 7))
    ok("budget constant", bp.DEFAULT_ENUM_BUDGET == 10_000_000)

    # Series evaluation agrees with enumeration, Fraction accepted as mu.
    ok("series value", bp.takacs_probability(5, 2, Fraction(3, 2)) == Fraction(1, 3))
    ok("series vs count", bp.takacs_probability(7, 3, 2) == bp.count_exact(7, 3, 2).p)
    coeffs = bp.takacs_coefficients("3/2", 3)
    ok("coefficient count", len(coeffs) == 4)
    ok("leading coefficient", coeffs[0] == 1)

    # Sandwich bounds and integer closed forms.
    ok("strict-lead bounds", bp.theorem1_bounds(5, 2, "3/2") == (Fraction(2, 7), Fraction(3, 7)))
    ok("weak-lead bounds", bp.theorem2_bounds(5, 2, "3/2") == (Fraction(3, 7), Fraction(1, 2)))
    ok("closed forms", bp.classical_closed_forms(3, 2, 1) == (Fraction(1, 5), Fraction(1, 2)))
    ok("no closed forms", bp.classical_closed_forms(3, 2, "3/2") is None)
    refl = bp.reflection_counting_check(5, 2, "3/2")
    ok("reflection passes", refl["passed"] and refl["undesirable"]["holds"])

    # Weighted variant: integer weights pin the probability exactly.
    wc = bp.count_exact_weighted(3, [2], 1)
    lo, hi, int_hi = bp.weighted_bounds(3, [2], 1)
    ok("weighted p", wc.p == Fraction(1, 4))
    ok("weighted bounds", (lo, hi, int_hi) == (Fraction(1, 4), Fraction(3, 4), Fraction(1, 4)))
    ok("weighted rational", bp.weighted_bounds(3, ["3/2"], 1)[2] is None)

    # Rotation machinery.
    ok("canonical rotation", bp.canonical_cute_rotation("BAABA", 1) == (1, "AABAB"))
    ok("rotation offsets", bp.cute_rotation_offsets("AABAB", 1) == [1, 3, 5])
    analysis = bp.analyze_rotations("AABAB", 1)
    ok("analysis base", analysis["base_sequence"] == "ABABA")
    ok("analysis offsets", analysis["cute_rotation_offsets"] == [2, 4, 5])
    ok("analysis desirable", analysis["desirable_rotation_offsets"] == [4])
    ok("analysis sums", analysis["prefix_sums"][-1] == 1)
    counts = bp.rotation_count_bounds_check("AABAB", 1)
    ok("rotation counts", (counts["cute_rotations"], counts["cute_bound"]) == (3, 2))
    ok("rotation count bounds", counts["passed"])
    avg = bp.rotation_average_identity_check(3, 2, 1)
    ok("rotation averaging", avg["holds"] and avg["cute_rotation_sum"] == 25)

    # Sampling: determinism and a degenerate certainty.
    ok("certain instance", bp.sample_probability(1, 0, 1, 100, seed=42).p_hat == 1.0)
    e1 = bp.sample_probability(5, 2, "3/2", 2000, seed=7)
    e2 = bp.sample_probability(5, 2, "3/2", 2000, seed=7)
    ok("sampling determinism", (e1.desirable, e1.cute) == (e2.desirable, e2.cute))
    e4 = bp.sample_probability(5, 2, "3/2", 2000, seed=7, workers=4)
    ok("worker count", e4.workers == 4)
    ok("estimate sane", abs(e1.p_hat - 1 / 3) < 4 * e1.std_err_p + 1e-9)

    # Predicates and partial sums on raw sequences.
    ok("partial sums", bp.partial_sums("AAB", "3/2") == [1, 2, Fraction(1, 2)])
    ok("desirable predicate", bp.is_desirable("AAB", 1) and not bp.is_desirable("AB", 1))
    ok("cute predicate", bp.is_cute("AB", 1) and not bp.is_cute("BA", 1))

    # Error mapping.
    try:
        bp.takacs_probability(1, 1, "1/2")
        ok("degenerate ratio raises", False)
    except ValueError as e:
        ok("degenerate ratio raises", "DegenerateRecurrence" in str(e))
    try:
        bp.theorem1_bounds(2, 2, 1)
        ok("domain violation raises", False)
    except ValueError as e:
        ok("domain violation raises", "DomainViolation" in str(e))
    try:
        bp.count_exact(12, 12, 1, budget=10)
        ok("budget overrun raises", False)
    except RuntimeError as e:
        ok("budget overrun raises", "BudgetExceeded" in str(e))
    try:
        bp.count_exact(5, 2, 1.5)
        ok("float mu rejected", False)
    except TypeError:
        ok("float mu rejected", True)
    try:
        bp.canonical_cute_rotation("ABX", 1)
        ok("bad sequence raises", False)
    except ValueError as e:
        ok("bad sequence raises", "ParseError" in str(e))

    print(f"all {checks} checks passed")


if __name__ == "__main__":
    main()
