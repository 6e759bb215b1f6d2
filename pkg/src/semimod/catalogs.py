"""Named semimodule fixtures and the theorem-verification suites."""
from __future__ import annotations

import re
from typing import Optional

from . import presets
from .cells import cell_decomposition, cell_semimodule, reduced_cell_semimodule
from .classify import EnumConfig, IsoClassCatalog, abelian_groups, catalog_from_modules, classify_extreme
from .semimodule import (
    Congruence,
    FinMonoid,
    Semimodule,
    module_fixture,
    principal_congruence,
    quotient,
    subsemimodule,
    trivial_boolean,
    validate_semimodule,
)

PAIR_NAMES = ("(0,0)", "(1,0)", "(0,1)", "(1,1)")
XY_NAMES = ("0", "x", "y", "x+y")
PRIMES = (2, 3, 5, 7, 11)


def _pair_monoid() -> FinMonoid:
    # bit 0 is the first coordinate, bit 1 the second
    return FinMonoid(tuple(tuple(a | b for b in range(4)) for a in range(4)), 0)


def _boolean_module(R, acting: dict) -> Semimodule:
    """``B`` with each basis element acting as identity (True) or zero (False)."""
    actions = tuple((0, 1) if acting[b] else (0, 0) for b in R.basis)
    return Semimodule(R, FinMonoid(((0, 1), (1, 1)), 0), actions, ("0", "1"))


def s3_kl_fixtures() -> list:
    R = presets.kl_dihedral(3)
    M1 = _boolean_module(R, {b: True for b in R.basis})
    M2 = _boolean_module(R, {b: b == "e" for b in R.basis})
    M3 = _boolean_module(R, {b: b != "w0" for b in R.basis})
    ident, zero = (0, 1, 2, 3), (0, 0, 0, 0)
    to_first, to_second = (0, 1, 1, 1), (0, 2, 2, 2)
    m4 = {"e": ident, "s": to_first, "st": to_first, "t": to_second, "ts": to_second, "w0": zero}
    M4 = Semimodule(R, _pair_monoid(), tuple(m4[b] for b in R.basis), PAIR_NAMES)
    M5 = quotient(M4, principal_congruence(M4, 1, 3))
    M6 = quotient(M4, principal_congruence(M4, 2, 3))
    s_row, t_row = (0, 3, 0, 3), (0, 0, 3, 3)
    m7 = {"e": ident, "s": s_row, "ts": s_row, "t": t_row, "st": t_row, "w0": zero}
    M7 = Semimodule(R, _pair_monoid(), tuple(m7[b] for b in R.basis), PAIR_NAMES)
    M8 = subsemimodule(M7, (0, 1, 3))
    M9 = subsemimodule(M7, (0, 2, 3))
    return [("M1", M1), ("M2", M2), ("M3", M3), ("M4", M4), ("M5", M5), ("M6", M6),
            ("M7", M7), ("M8", M8), ("M9", M9)]


def dihedral_fixtures(n: int) -> list:
    R = presets.kl_dihedral(n)
    D = cell_decomposition(R)
    Ce = cell_semimodule(R, "e", D)
    Cw0 = cell_semimodule(R, "w0", D)
    Cr = reduced_cell_semimodule(R, "s", D)
    N1 = quotient(Cr, Congruence(((0,), (1, 3), (2,))))
    N2 = quotient(Cr, Congruence(((0,), (1,), (2, 3))))
    N3 = quotient(Cr, Congruence(((0,), (1, 2, 3))))
    Ls, Lt = set(D.left_cell_of(R.index("s"))), set(D.left_cell_of(R.index("t")))
    rows = []
    for i, b in enumerate(R.basis):
        if b == "e":
            rows.append((0, 1, 2, 3))
        elif i in Ls:
            rows.append((0, 3, 0, 3))
        elif i in Lt:
            rows.append((0, 0, 3, 3))
        else:
            rows.append((0, 0, 0, 0))
    K = Semimodule(R, _pair_monoid(), tuple(rows), XY_NAMES)
    return [("C_e", Ce), ("C_w0", Cw0), ("Cred_Ls", Cr), ("N1", N1), ("N2", N2), ("N3", N3),
            ("K", K), ("K1", subsemimodule(K, (0, 1, 3))), ("K2", subsemimodule(K, (0, 2, 3))),
            ("K3", subsemimodule(K, (0, 3)))]


def _cyclic_over(R, n: int, scalar: dict) -> Semimodule:
    """``Z_n`` with basis element ``b`` acting as multiplication by ``scalar[b]``."""
    actions = tuple(tuple((scalar[b] * a) % n for a in range(n)) for b in R.basis)
    return Semimodule(R, FinMonoid(tuple(tuple((a + c) % n for c in range(n)) for a in range(n)), 0), actions)


def z_nonneg_fixtures() -> list:
    R = presets.z_nonneg()
    return [("B", trivial_boolean(R))] + [(f"Z{p}", module_fixture("cyclic", n=p)) for p in PRIMES]


def z_s2_fixtures(max_p: int = 7) -> list:
    R = presets.group_semiring(presets.symmetric_group_s2())
    out = [("B_triv", trivial_boolean(R))]
    for p in PRIMES:
        if p > max_p:
            break
        out.append((f"Z{p}", module_fixture("s2-trivial", p=p)))
        if p > 2:
            out.append((f"Z{p}_tau", module_fixture("s2-tau", p=p)))
    return out


def klhat_s2_fixtures(max_p: int = 7) -> list:
    R = presets.kl_hat_s2()
    out = [("B0", module_fixture("boolean-theta-zero")), ("B_triv", trivial_boolean(R))]
    for p in PRIMES:
        if p > max_p:
            break
        out.append((f"Z{p}_theta0", module_fixture("klhat-module", p=p, theta=0)))
        if p > 2:
            out.append((f"Z{p}_theta2", module_fixture("klhat-module", p=p, theta=2)))
    return out


def s3_group_fixtures(p: int = 2) -> list:
    return [(f"Z{p}_triv", module_fixture("s3-trivial", p=p)),
            (f"Z{p}_sign", module_fixture("s3-sign", p=p)),
            (f"Z{p}^2", module_fixture("s3-two-dim", p=p))]


def _semiring_for(name: str):
    """Semiring behind a suite or catalog name."""
    if name == "s3-kl":
        return presets.kl_dihedral(3)
    m = re.fullmatch(r"dihedral:(\d+)", name)
    if m:
        return presets.kl_dihedral(int(m.group(1)))
    if name == "z-nonneg":
        return presets.z_nonneg()
    if name == "z-s2":
        return presets.group_semiring(presets.symmetric_group_s2())
    if name == "klhat-s2":
        return presets.kl_hat_s2()
    return presets.preset(name)


def _trivial_named(name: str) -> list:
    R = _semiring_for(name)
    label = "B" if name == "boolean" or name.startswith("nat:") else "B_triv"
    return [(label, trivial_boolean(R))]


def builtin_fixtures(name: str) -> list:
    """``(name, Semimodule)`` pairs of a named catalog, each validated."""
    m = re.fullmatch(r"dihedral:(\d+)", name)
    if name == "s3-kl":
        out = s3_kl_fixtures()
    elif m:
        out = dihedral_fixtures(int(m.group(1)))
    elif name == "z-nonneg":
        out = z_nonneg_fixtures()
    elif name == "z-s2":
        out = z_s2_fixtures()
    elif name == "klhat-s2":
        out = klhat_s2_fixtures()
    elif name == "s3-group":
        out = s3_group_fixtures()
    elif name == "boolean" or re.fullmatch(r"(boolean-group:\w+|nat:\d+|nat-group:\d+:\w+)", name):
        out = _trivial_named(name)
    else:
        raise ValueError(f"unknown catalog: {name}")
    for label, M in out:
        bad = validate_semimodule(M)
        if bad:
            raise AssertionError(f"fixture {label} of {name} fails: {bad[0]}")
    return out


def builtin_catalog(name: str) -> IsoClassCatalog:
    return catalog_from_modules(builtin_fixtures(name))


# ------------------------------------------------------------------ suites

SUITES = ("boolean", "boolean-group:G", "nat:k", "nat-group:k:G", "z-nonneg", "z-s2",
          "klhat-s2", "s3-kl", "dihedral:n")


def _hexes(forms) -> list:
    return sorted(f.hex() for f in forms)


class _Diff:
    """Accumulates expected-versus-computed canonical-form sets per label."""

    def __init__(self):
        self.expected, self.computed = [], []
        self.counts = {}

    def add(self, label: str, expected, computed):
        exp = {f"{label}:{h}" for h in _hexes(expected)}
        got = {f"{label}:{h}" for h in _hexes(computed)}
        self.expected += sorted(exp)
        self.computed += sorted(got)
        self.counts[label] = {"expected": len(exp), "computed": len(got)}

    def report(self, suite: str, bound: dict, notes=()) -> dict:
        exp, got = set(self.expected), set(self.computed)
        return {
            "suite": suite,
            "expected": self.expected,
            "computed": self.computed,
            "missing": sorted(exp - got),
            "extra": sorted(got - exp),
            "pass": exp == got,
            "bound": bound,
            "counts": self.counts,
            "notes": list(notes),
        }


def _forms(cat, names) -> set:
    return {cat.get(n).canon for n in names}


def _proper_carriers_only(cat) -> IsoClassCatalog:
    return cat.filter(lambda e: e.proper)


def verify_suite(name: str, n_jobs: int = 1, max_size: Optional[int] = None) -> dict:
    """Compare bounded enumeration with the expected extreme catalog of ``name``."""
    diff = _Diff()
    notes = []
    m = re.fullmatch(r"dihedral:(\d+)", name)
    if name == "s3-kl" or m:
        size = max_size or 4
        R = _semiring_for(name)
        cat = builtin_catalog(name)
        rep = classify_extreme(R, EnumConfig(size, "semilattice", True, n_jobs=n_jobs))
        if name == "s3-kl":
            exp_min, exp_elem, exp_simple = ("M1", "M2", "M3", "M4", "M5", "M6"), \
                ("M1", "M2", "M3", "M7", "M8", "M9"), ("M1", "M2", "M3")
        else:
            exp_min = ("C_e", "C_w0", "Cred_Ls", "N1", "N2", "N3")
            exp_elem = ("C_e", "C_w0", "K", "K1", "K2", "K3")
            exp_simple = ("C_e", "C_w0", "N3")
        diff.add("minimal", _forms(cat, exp_min), rep.minimal.canons())
        diff.add("elementary", _forms(cat, exp_elem), rep.elementary.canons())
        diff.add("simple", _forms(cat, exp_simple), rep.simple.canons())
        notes += rep.notes
        bound = {"proper": size}
    elif name in ("z-nonneg", "z-s2", "klhat-s2"):
        size = max_size or (5 if name == "z-nonneg" else 4)
        group_bound = 12 if name == "z-nonneg" else 7
        R = _semiring_for(name)
        cat = builtin_catalog(name)
        groups = [F for _, F in abelian_groups(group_bound)]
        mods = classify_extreme(R, EnumConfig(group_bound, require_proper=False, n_jobs=n_jobs),
                                carriers=groups).extreme()
        props = classify_extreme(R, EnumConfig(size, "all_commutative", True, n_jobs=n_jobs)).extreme()
        module_names = [e.name for e in cat if not e.proper]
        proper_names = [e.name for e in cat if e.proper]
        if name == "z-nonneg":
            # all commutative monoids up to the bound, groups included
            monoids = classify_extreme(R, EnumConfig(size, "all_commutative", False, n_jobs=n_jobs)).extreme()
            computed = monoids.canons() | mods.canons()
            diff.add("extreme", _forms(cat, proper_names + module_names), computed)
            bound = {"monoids": size, "groups": group_bound}
        else:
            diff.add("proper-extreme", _forms(cat, proper_names), props.canons())
            diff.add("module-extreme", _forms(cat, module_names), mods.canons())
            bound = {"proper": size, "groups": group_bound}
    elif name == "boolean" or re.fullmatch(r"(boolean-group:\w+|nat:\d+|nat-group:\d+:\w+)", name):
        size = max_size or 4
        R = _semiring_for(name)
        cat = builtin_catalog(name)
        rep = classify_extreme(R, EnumConfig(size, "all_commutative", False, n_jobs=n_jobs))
        for kind in ("minimal", "elementary", "simple"):
            diff.add(kind, cat.canons(), getattr(rep, kind).canons())
        bound = {"all": size}
    else:
        raise ValueError(f"unknown suite: {name}")
    return diff.report(name, bound, notes)
