"""Command-line interface.

Exit codes: 0 success / PASS / isomorphic, 1 FAIL / non-isomorphic / invalid
object, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import jsonio, presets
from .catalogs import SUITES, verify_suite
from .cells import apex, cell_decomposition, cell_semimodule, reduced_cell_semimodule
from .classify import EnumConfig, classify_extreme, quotients_up_to_iso
from .errors import ApexError, SemimodError
from .semimodule import (
    are_isomorphic,
    homs,
    is_elementary,
    is_minimal,
    is_proper,
    is_simple,
    validate_semimodule,
)
from .semiring import BasedSemiring, semirings_isomorphic, validate_semiring


class _UsageError(Exception):
    pass


def _load_semiring(path):
    return jsonio.load_semiring(path)


def cmd_build(args) -> int:
    R = presets.preset(args.preset)
    jsonio.write_text(args.output, jsonio.dumps(jsonio.semiring_to_dict(R)))
    return 0


def cmd_validate(args) -> int:
    obj = jsonio.load_any(args.path)
    report = validate_semimodule(obj) if hasattr(obj, "carrier") else validate_semiring(obj)
    out = {"valid": not report, "violations": [{"axiom": v.axiom, "witness": list(v.witness)} for v in report]}
    print(jsonio.dumps(out), end="")
    return 0 if not report else 1


def cmd_cells(args) -> int:
    R = _load_semiring(args.semiring)
    if not isinstance(R, BasedSemiring):
        raise _UsageError("cells need a based semiring")
    D = cell_decomposition(R)
    print(jsonio.cells_dot(D) if args.dot else jsonio.dumps(jsonio.cell_report(D)), end="")
    return 0


def cmd_cell_module(args) -> int:
    R = _load_semiring(args.semiring)
    if not isinstance(R, BasedSemiring):
        raise _UsageError("cell semimodules need a based semiring")
    rep = [x.strip() for x in args.left_cell.split(",")]
    L = rep[0] if len(rep) == 1 else rep
    M = reduced_cell_semimodule(R, L) if args.reduced else cell_semimodule(R, L)
    jsonio.write_text(args.output, jsonio.dumps(jsonio.semimodule_to_dict(M)))
    return 0


def cmd_check(args) -> int:
    R = _load_semiring(args.semiring)
    M = jsonio.load_semimodule(args.module)
    if M.semiring != R:
        raise _UsageError("the semimodule is defined over a different semiring")
    bad = validate_semimodule(M)
    if bad:
        raise _UsageError(f"not a semimodule: {bad[0]}")
    out = {"proper": is_proper(M), "minimal": is_minimal(M), "elementary": is_elementary(M),
           "simple": is_simple(M), "apex": None}
    if isinstance(R, BasedSemiring) and out["minimal"] and out["proper"]:
        try:
            out["apex"] = [R.basis[i] for i in apex(R, M).members]
        except ApexError:
            pass
    print(jsonio.dumps(out), end="")
    return 0


def cmd_classify(args) -> int:
    R = _load_semiring(args.semiring)
    kinds = tuple(k.strip() for k in args.kinds.split(",") if k.strip())
    monoids = {"all": "all_commutative", "semilattice": "semilattice"}[args.monoids]
    cfg = EnumConfig(args.max_size, monoids, args.proper, kinds, args.jobs)
    rep = classify_extreme(R, cfg)
    summary = {"bound": rep.bound, "notes": rep.notes}
    if args.output:
        os.makedirs(args.output, exist_ok=True)
    for kind in kinds:
        cat = getattr(rep, kind)
        summary[kind] = [{"name": e.name, "size": e.size, "canon": e.canon.hex(), **e.flags()} for e in cat]
        if args.output:
            for e in cat:
                jsonio.write_text(os.path.join(args.output, f"{kind}-{e.name}.json"),
                                  jsonio.dumps(jsonio.semimodule_to_dict(e.module)))
    text = jsonio.dumps(summary)
    if args.output:
        jsonio.write_text(os.path.join(args.output, "summary.json"), text)
    print(text, end="")
    return 0


def cmd_quotients(args) -> int:
    M = jsonio.load_semimodule(args.module)
    cat = quotients_up_to_iso(M)
    out = [{"name": e.name, "size": e.size, "canon": e.canon.hex(), **e.flags()} for e in cat]
    if args.output:
        os.makedirs(args.output, exist_ok=True)
        for e in cat:
            jsonio.write_text(os.path.join(args.output, f"{e.name}.json"),
                              jsonio.dumps(jsonio.semimodule_to_dict(e.module)))
    print(jsonio.dumps(out), end="")
    return 0


def cmd_iso(args) -> int:
    if args.semiring:
        same = semirings_isomorphic(_load_semiring(args.first), _load_semiring(args.second))
    else:
        same = are_isomorphic(jsonio.load_semimodule(args.first), jsonio.load_semimodule(args.second))
    print("isomorphic" if same else "not isomorphic")
    return 0 if same else 1


def cmd_homs(args) -> int:
    M = jsonio.load_semimodule(args.first)
    N = jsonio.load_semimodule(args.second)
    print(jsonio.dumps([list(h.map) for h in homs(M, N)]), end="")
    return 0


def cmd_verify(args) -> int:
    report = verify_suite(args.suite, n_jobs=args.jobs)
    print(jsonio.dumps(report), end="")
    return 0 if report["pass"] else 1


def cmd_export_dot(args) -> int:
    M = jsonio.load_semimodule(args.module)
    gens = [g.strip() for g in args.generators.split(",")] if args.generators else None
    jsonio.write_text(args.output, jsonio.export_dot(M, gens))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semimod", description="Finite semimodules over semirings.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("build", help="write a preset semiring as JSON")
    s.add_argument("--preset", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("validate", help="check the axioms of a semiring or semimodule")
    s.add_argument("path")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("cells", help="cell decomposition of a based semiring")
    s.add_argument("semiring")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_cells)

    s = sub.add_parser("cell-module", help="(reduced) cell semimodule of a left cell")
    s.add_argument("semiring")
    s.add_argument("--left-cell", required=True, help="a member name, or comma-separated members")
    s.add_argument("--reduced", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_cell_module)

    s = sub.add_parser("check", help="extremality flags and apex")
    s.add_argument("semiring")
    s.add_argument("module")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("classify", help="bounded classification of extreme semimodules")
    s.add_argument("semiring")
    s.add_argument("--max-size", type=int, default=4)
    s.add_argument("--kinds", default="minimal,elementary,simple")
    s.add_argument("--proper", action="store_true")
    s.add_argument("--monoids", choices=("all", "semilattice"), default="semilattice")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("quotients", help="non-trivial quotients up to isomorphism")
    s.add_argument("module")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_quotients)

    s = sub.add_parser("iso", help="isomorphism test")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("--semiring", action="store_true", help="compare two semirings instead")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("homs", help="all homomorphisms between two semimodules")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_homs)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("--suite", required=True, help=f"one of {', '.join(SUITES)}")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("export-dot", help="Hasse diagram with generator actions")
    s.add_argument("module")
    s.add_argument("--generators")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SemimodError, ValueError, KeyError, OSError, _UsageError) as exc:
        print(f"semimod {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
