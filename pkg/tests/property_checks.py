"""Invariant checks shared by the property tests and the acceptance runner.

Each function returns a list of human-readable violations; empty means the
invariant holds on everything it was run over.
"""
from semimod.catalogs import builtin_fixtures
from semimod.cells import annihilator_cells, apex, cell_decomposition, km_incomparability_violations
from semimod.classify import EnumConfig, classify_extreme
from semimod.presets import kl_dihedral, kl_hat_s2, preset, z_nonneg
from semimod.semimodule import (
    all_congruences,
    are_isomorphic,
    homs,
    invertible_elements,
    is_minimal,
    is_proper,
    is_simple,
    kernel_image,
    quotient,
    subsemimodule,
)
from semimod.semiring import BasedSemiring

FIXTURE_CATALOGS = ("s3-kl", "dihedral:4", "dihedral:5", "z-nonneg", "z-s2", "klhat-s2", "s3-group")
PRESET_NAMES = ("boolean", "nat:1", "nat:3", "group:s2", "group:s3", "group:c3", "group:c5", "group:d8",
                "kl-dihedral:3", "kl-dihedral:4", "kl-dihedral:5", "kl-dihedral:6", "kl-dihedral:7",
                "kl-dihedral:8", "kl-hat-s2", "z-nonneg", "boolean-group:s3", "nat-group:3:s2")


def all_fixtures():
    """``(catalog, name, module)`` for every built-in fixture."""
    return [(cat, name, M) for cat in FIXTURE_CATALOGS for name, M in builtin_fixtures(cat)]


def _same_semiring_pairs(fixtures):
    for ca, na, M in fixtures:
        for cb, nb, N in fixtures:
            if M.semiring == N.semiring:
                yield f"{ca}/{na}", M, f"{cb}/{nb}", N


def schur_violations(fixtures):
    """Nonzero homs out of an elementary module are injective; into a minimal one, surjective."""
    from semimod.semimodule import is_elementary

    flags = {id(M): (is_elementary(M), is_minimal(M)) for _, _, M in fixtures}
    out = []
    for a, M, b, N in _same_semiring_pairs(fixtures):
        for h in homs(M, N):
            if h.is_zero():
                continue
            if flags[id(M)][0] and not h.is_injective():
                out.append(f"{a}->{b}: {h.map} not injective")
            if flags[id(N)][1] and not h.is_surjective():
                out.append(f"{a}->{b}: {h.map} not surjective")
    return out


def kernel_image_violations(fixtures):
    out = []
    for a, M, b, N in _same_semiring_pairs(fixtures):
        for h in homs(M, N):
            ker, img = kernel_image(h)
            if not are_isomorphic(quotient(M, ker), subsemimodule(N, img)):
                out.append(f"{a}->{b}: {h.map}")
    return out


def minimal_quotient_violations(fixtures):
    out = []
    for cat, name, M in fixtures:
        if not is_minimal(M):
            continue
        for c in all_congruences(M):
            if not c.is_full() and not is_minimal(quotient(M, c)):
                out.append(f"{cat}/{name}: {c.blocks}")
    return out


def group_carrier_violations(fixtures):
    """On a group carrier minimal and simple coincide."""
    out = []
    for cat, name, M in fixtures:
        if not is_proper(M) and is_minimal(M) != is_simple(M):
            out.append(f"{cat}/{name}")
    return out


def mixed_annihilation_violations(fixtures):
    out = []
    for cat, name, M in fixtures:
        if not isinstance(M.semiring, BasedSemiring) or not is_proper(M) or M.size < 2:
            continue
        if any(M.add[m][m] != m for m in range(M.size)):
            continue
        try:
            annihilator_cells(M.semiring, M)
        except Exception as exc:  # noqa: BLE001
            out.append(f"{cat}/{name}: {exc}")
    return out


def km_violations(names=PRESET_NAMES):
    out = []
    for name in names:
        R = preset(name)
        if not isinstance(R, BasedSemiring):
            continue
        for v in km_incomparability_violations(cell_decomposition(R)):
            out.append(f"{name}: {v}")
    return out


def extreme_proper_reports(size=4):
    """Extreme proper catalogs over the based semirings, from an unrestricted
    search over all commutative monoids."""
    out = []
    for label, R in (("kl-dihedral:3", kl_dihedral(3)), ("kl-dihedral:4", kl_dihedral(4)),
                     ("kl-hat-s2", kl_hat_s2()), ("z-nonneg", z_nonneg())):
        out.append((label, R, classify_extreme(R, EnumConfig(size, "all_commutative", True))))
    return out


def idempotent_minimal_violations(reports):
    out = []
    for label, _, rep in reports:
        for e in rep.minimal:
            if e.proper and any(e.module.add[m][m] != m for m in range(e.size)):
                out.append(f"{label}/{e.name}")
    return out


def invertible_violations(reports):
    out = []
    for label, _, rep in reports:
        for e in rep.extreme():
            if e.proper and invertible_elements(e.module) != {e.module.zero}:
                out.append(f"{label}/{e.name}")
    return out


def apex_violations(reports):
    out = []
    for label, R, rep in reports:
        D = cell_decomposition(R)
        for e in rep.minimal:
            try:
                J = apex(R, e.module, D)
            except Exception as exc:  # noqa: BLE001
                out.append(f"{label}/{e.name}: {exc}")
                continue
            if not J.idempotent:
                out.append(f"{label}/{e.name}: apex not idempotent")
    return out
