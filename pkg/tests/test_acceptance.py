"""Acceptance criteria, one test each.

Every test prints a single ``[ACCEPT n] PASS|FAIL ...`` line to the terminal,
even under output capture, and then asserts the same condition.
"""
import time

import pytest

import property_checks as pc
from oracles import KL_S3_BASIS, KL_S3_TABLE, parse_term_sum
from semimod.catalogs import builtin_catalog, verify_suite
from semimod.cells import cell_decomposition, reduced_cell_semimodule
from semimod.classify import EnumConfig, cell_quotient_forms, classify_extreme, quotients_up_to_iso
from semimod.presets import kl_dihedral, kl_generator_oracle
from semimod.semimodule import is_simple, module_fixture
from semimod.semiring import mul


@pytest.fixture
def report(capsys):
    def emit(n, ok, elapsed, limit, detail):
        ok = ok and elapsed < limit
        with capsys.disabled():
            print(f"\n[ACCEPT {n}] {'PASS' if ok else 'FAIL'} {detail} ({elapsed:.2f}s, limit {limit:g}s)")
        assert ok, detail
    return emit


def test_kl_s3_table(report):
    t = time.perf_counter()
    R = kl_dihedral(3)
    bad = [(a, b) for a in KL_S3_BASIS for b, text in zip(KL_S3_BASIS, KL_S3_TABLE[a])
           if mul(R, R.vector(a), R.vector(b)) != parse_term_sum(text)]
    checked = 0
    for n in range(3, 9):
        Rn = kl_dihedral(n)
        for w in Rn.basis:
            s_w, t_w = kl_generator_oracle(n, w)
            checked += 2
            if mul(Rn, Rn.vector("s"), Rn.vector(w)) != s_w or mul(Rn, Rn.vector("t"), Rn.vector(w)) != t_w:
                bad.append((n, w))
    report(1, not bad, time.perf_counter() - t, 1,
           f"KL(S3) 36 products and {checked} generator products, mismatches={bad}")


def test_dihedral_cells(report):
    t = time.perf_counter()
    problems = []
    for n in range(3, 7):
        R = kl_dihedral(n)
        D = cell_decomposition(R)
        if len(D.two_sided_cells) != 3:
            problems.append(f"n={n}: {len(D.two_sided_cells)} two-sided cells")
            continue
        J = D.two_sided_cell_of(R.index("s"))
        lefts = [L for L in D.left_cells if set(L) <= set(J.members)]
        rights = [L for L in D.right_cells if set(L) <= set(J.members)]
        if (len(lefts), len(rights)) != (2, 2):
            problems.append(f"n={n}: {len(lefts)} left, {len(rights)} right")
        if not all(c.idempotent for c in D.two_sided_cells):
            problems.append(f"n={n}: nilpotent cell")
        if J.strongly_regular != (n == 3):
            problems.append(f"n={n}: strongly_regular={J.strongly_regular}")
        h = D.h_cells[(D.left_cells.index(D.left_cell_of(R.index("s"))),
                       D.right_cells.index(D.right_cell_of(R.index("s"))))]
        if n > 3 and R.index("sts") not in h:
            problems.append(f"n={n}: s and sts in different H-cells")
    report(2, not problems, time.perf_counter() - t, 1, f"cells of KL(D_2n), n=3..6, problems={problems}")


def test_kl_s3_classification(report):
    t = time.perf_counter()
    rep = classify_extreme(kl_dihedral(3), EnumConfig(4, "semilattice", True))
    cat = builtin_catalog("s3-kl")

    def names(c):
        return sorted(cat.find(e.module).name if cat.find(e.module) else f"?{e.name}" for e in c)

    got = (names(rep.minimal), names(rep.elementary), names(rep.simple))
    want = (["M1", "M2", "M3", "M4", "M5", "M6"], ["M1", "M2", "M3", "M7", "M8", "M9"], ["M1", "M2", "M3"])
    report(3, got == want, time.perf_counter() - t, 300,
           f"KL(S3) minimal={got[0]} elementary={got[1]} simple={got[2]}")


@pytest.mark.parametrize("n", [4, 5])
def test_dihedral_classification(report, n):
    t = time.perf_counter()
    R = kl_dihedral(n)
    quotients = len(quotients_up_to_iso(reduced_cell_semimodule(R, "s")))
    res = verify_suite(f"dihedral:{n}")
    counts = {k: v["computed"] for k, v in res["counts"].items()}
    ok = quotients == 3 and res["pass"] and counts == {"minimal": 6, "elementary": 6, "simple": 3}
    report(4, ok, time.perf_counter() - t, 600,
           f"KL(D_2*{n}) reduced cell quotients={quotients} counts={counts} "
           f"missing={res['missing']} extra={res['extra']}")


def test_cell_quotients_are_minimal_proper(report):
    t = time.perf_counter()
    mismatches = {}
    for n in (3, 4, 5):
        R = kl_dihedral(n)
        found = classify_extreme(R, EnumConfig(4, kinds=("minimal",))).minimal.canons()
        forms = cell_quotient_forms(R)
        if found != forms:
            mismatches[n] = (len(found), len(forms))
    report(5, not mismatches, time.perf_counter() - t, 600,
           f"minimal proper = reduced cell quotients for n=3,4,5, mismatches={mismatches}")


@pytest.mark.parametrize("suite", ["boolean", "boolean-group:s3", "nat:3", "nat-group:3:s2"])
def test_boolean_family(report, suite):
    t = time.perf_counter()
    res = verify_suite(suite)
    counts = {k: v["computed"] for k, v in res["counts"].items()}
    ok = res["pass"] and all(v == 1 for v in counts.values()) and len(builtin_catalog(suite)) == 1
    report(6, ok, time.perf_counter() - t, 30, f"{suite} extreme classes={counts}")


def test_z_and_s2_families(report):
    t = time.perf_counter()
    primes = [n for n in range(2, 13) if is_simple(module_fixture("cyclic", n=n))]
    results = {s: verify_suite(s) for s in ("z-nonneg", "z-s2", "klhat-s2")}
    failed = sorted(s for s, r in results.items() if not r["pass"])
    ok = primes == [2, 3, 5, 7, 11] and not failed
    report(7, ok, time.perf_counter() - t, 120, f"simple Z_n for n={primes}, failing suites={failed}")


def test_property_suites(report):
    t = time.perf_counter()
    fixtures = pc.all_fixtures()
    reports = pc.extreme_proper_reports()
    checks = {
        "schur": pc.schur_violations(fixtures),
        "kernel-image": pc.kernel_image_violations(fixtures),
        "minimal-quotients": pc.minimal_quotient_violations(fixtures),
        "minimal-idempotent": pc.idempotent_minimal_violations(reports),
        "zero-only-invertible": pc.invertible_violations(reports),
        "mixed-annihilation": pc.mixed_annihilation_violations(fixtures),
        "km-incomparability": pc.km_violations(),
    }
    counts = {k: len(v) for k, v in checks.items()}
    ok = len(fixtures) >= 20 and not any(counts.values())
    report(8, ok, time.perf_counter() - t, 600, f"{len(fixtures)} fixtures, violations={counts}")
