"""JSON serialization of semirings, semimodules, congruences and reports, and
DOT export."""
from __future__ import annotations

import json
import os
from typing import Optional, Sequence

from .errors import SchemaError
from .semimodule import Congruence, FinMonoid, Semimodule
from .semiring import BasedSemiring, FiniteSemiring


def dumps(obj) -> str:
    """Deterministic JSON text: keys in insertion order, one trailing newline."""
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":")) + "\n"


# ------------------------------------------------------------ semirings

def semiring_to_dict(S) -> dict:
    if isinstance(S, BasedSemiring):
        return {"kind": "based", "basis": list(S.basis), "unit": list(S.unit),
                "mult": [[list(v) for v in row] for row in S.mult]}
    if isinstance(S, FiniteSemiring):
        return {"kind": "finite", "elements": list(S.elements), "add": [list(r) for r in S.add],
                "mul": [list(r) for r in S.mul], "zero": S.zero, "one": S.one}
    raise TypeError(f"not a semiring: {type(S).__name__}")


def _need(d: dict, key: str, path: str):
    if not isinstance(d, dict):
        raise SchemaError(path, "expected an object")
    if key not in d:
        raise SchemaError(f"{path}.{key}", "missing field")
    return d[key]


def _int(v, path: str, lo: int = 0, hi: Optional[int] = None) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError(path, f"expected an integer, got {type(v).__name__}")
    if v < lo or (hi is not None and v >= hi):
        raise SchemaError(path, f"{v} out of range")
    return v


def _list(v, path: str, length: Optional[int] = None) -> list:
    if not isinstance(v, list):
        raise SchemaError(path, f"expected an array, got {type(v).__name__}")
    if length is not None and len(v) != length:
        raise SchemaError(path, f"expected {length} entries, got {len(v)}")
    return v


def _table(v, path: str, n: int, hi: int) -> list:
    rows = _list(v, path, n)
    return [[_int(x, f"{path}[{i}][{j}]", 0, hi) for j, x in enumerate(_list(r, f"{path}[{i}]", n))]
            for i, r in enumerate(rows)]


def semiring_from_dict(d, path: str = "$"):
    kind = _need(d, "kind", path)
    if kind == "based":
        basis = [str(b) for b in _list(_need(d, "basis", path), f"{path}.basis")]
        k = len(basis)
        if k == 0:
            raise SchemaError(f"{path}.basis", "basis must be non-empty")
        unit = [_int(c, f"{path}.unit[{i}]") for i, c in enumerate(_list(_need(d, "unit", path), f"{path}.unit", k))]
        mult = []
        rows = _list(_need(d, "mult", path), f"{path}.mult", k)
        for i, row in enumerate(rows):
            cells = _list(row, f"{path}.mult[{i}]", k)
            mult.append([[_int(c, f"{path}.mult[{i}][{j}][{h}]")
                          for h, c in enumerate(_list(v, f"{path}.mult[{i}][{j}]", k))]
                         for j, v in enumerate(cells)])
        return BasedSemiring(tuple(basis), tuple(unit), mult)
    if kind == "finite":
        elements = [str(e) for e in _list(_need(d, "elements", path), f"{path}.elements")]
        n = len(elements)
        add = _table(_need(d, "add", path), f"{path}.add", n, n)
        mul = _table(_need(d, "mul", path), f"{path}.mul", n, n)
        zero = _int(_need(d, "zero", path), f"{path}.zero", 0, n)
        one = _int(_need(d, "one", path), f"{path}.one", 0, n)
        return FiniteSemiring(tuple(elements), add, mul, zero, one)
    raise SchemaError(f"{path}.kind", f"unknown kind {kind!r}")


# ----------------------------------------------------------- semimodules

def semimodule_to_dict(M: Semimodule, semiring_ref=None) -> dict:
    """``semiring_ref`` may be a path string; by default the semiring is inlined."""
    d = {
        "semiring": semiring_ref if semiring_ref is not None else semiring_to_dict(M.semiring),
        "size": M.size,
        "zero": M.zero,
        "add": [list(r) for r in M.add],
        "actions": [list(a) for a in M.actions],
    }
    if M.names:
        d["names"] = list(M.names)
    return d


def semimodule_from_dict(d, base_dir: str = ".", path: str = "$") -> Semimodule:
    ref = _need(d, "semiring", path)
    if isinstance(ref, str):
        R = load_semiring(os.path.join(base_dir, ref))
    else:
        R = semiring_from_dict(ref, f"{path}.semiring")
    n = _int(_need(d, "size", path), f"{path}.size", 1)
    zero = _int(_need(d, "zero", path), f"{path}.zero", 0, n)
    add = _table(_need(d, "add", path), f"{path}.add", n, n)
    expected = R.k if isinstance(R, BasedSemiring) else R.n
    acts = _list(_need(d, "actions", path), f"{path}.actions", expected)
    actions = [[_int(x, f"{path}.actions[{i}][{m}]", 0, n) for m, x in enumerate(_list(a, f"{path}.actions[{i}]", n))]
               for i, a in enumerate(acts)]
    names = None
    if "names" in d:
        names = [str(x) for x in _list(d["names"], f"{path}.names", n)]
    return Semimodule(R, FinMonoid(add, zero), actions, names)


def congruence_to_dict(c: Congruence) -> dict:
    return {"blocks": [list(b) for b in c.blocks]}


def congruence_from_dict(d, size: Optional[int] = None, path: str = "$") -> Congruence:
    blocks = _list(_need(d, "blocks", path), f"{path}.blocks")
    out = [[_int(x, f"{path}.blocks[{i}][{j}]", 0, size) for j, x in enumerate(_list(b, f"{path}.blocks[{i}]"))]
           for i, b in enumerate(blocks)]
    flat = sorted(x for b in out for x in b)
    if flat != list(range(len(flat))) or (size is not None and len(flat) != size):
        raise SchemaError(f"{path}.blocks", "blocks must partition the carrier")
    return Congruence(tuple(tuple(b) for b in out))


# ------------------------------------------------------------- reports

def cell_report(D) -> dict:
    R = D.semiring

    def names(cell):
        return [R.basis[i] for i in cell]

    return {
        "left_cells": [names(c) for c in D.left_cells],
        "right_cells": [names(c) for c in D.right_cells],
        "two_sided_cells": [{"members": names(J.members), "idempotent": J.idempotent,
                             "strongly_regular": J.strongly_regular} for J in D.two_sided_cells],
    }


# ------------------------------------------------------------- file I/O

def _read(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON in {path}: {exc.msg} (line {exc.lineno})") from None


def load_semiring(path: str):
    return semiring_from_dict(_read(path))


def load_semimodule(path: str) -> Semimodule:
    return semimodule_from_dict(_read(path), os.path.dirname(os.path.abspath(path)))


def load_any(path: str):
    """A semiring or a semimodule, told apart by the ``kind`` field."""
    d = _read(path)
    if isinstance(d, dict) and "kind" in d:
        return semiring_from_dict(d)
    return semimodule_from_dict(d, os.path.dirname(os.path.abspath(path)))


def write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        print(text, end="")
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


# ------------------------------------------------------------------ DOT

ARROW_STYLES = ("dashed", "dotted")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def default_generators(R) -> list:
    names = list(R.basis) if isinstance(R, BasedSemiring) else list(R.elements)
    if "s" in names and "t" in names:
        return ["s", "t"]
    if isinstance(R, BasedSemiring):
        unit = {i for i, c in enumerate(R.unit) if c}
        rest = [b for i, b in enumerate(names) if i not in unit]
    else:
        rest = [b for i, b in enumerate(names) if i not in (R.zero, R.one)]
    return (rest or names)[:2]


def hasse_edges(M: Semimodule) -> list:
    """Covering pairs ``(m, n)`` of the order ``m <= n`` iff ``m + n = n``."""
    n = M.size
    if any(M.add[m][m] != m for m in range(n)):
        raise ValueError("Hasse diagrams need an additively idempotent carrier")
    leq = [[M.add[a][b] == b for b in range(n)] for a in range(n)]
    edges = []
    for a in range(n):
        for b in range(n):
            if a != b and leq[a][b] and not any(c not in (a, b) and leq[a][c] and leq[c][b] for c in range(n)):
                edges.append((a, b))
    return edges


def export_dot(M: Semimodule, generators: Optional[Sequence[str]] = None) -> str:
    """Solid undirected Hasse edges; one arrow family per generator (dashed,
    dotted, then labelled solid arrows)."""
    edges = hasse_edges(M)
    R = M.semiring
    gens = list(generators) if generators else default_generators(R)
    lines = ["digraph semimodule {", "  rankdir=TB;"]
    for m in range(M.size):
        lines.append(f"  n{m} [label={_quote(M.label(m))}];")
    for a, b in edges:
        lines.append(f"  n{a} -> n{b} [dir=none];")
    for k, g in enumerate(gens):
        f = M.action(g)
        style = ARROW_STYLES[k] if k < len(ARROW_STYLES) else "solid"
        for m in range(M.size):
            lines.append(f"  n{m} -> n{f[m]} [style={style}, label={_quote(g)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cells_dot(D) -> str:
    """The two-sided order on two-sided cells, as covering edges of a DAG."""
    R = D.semiring
    cells = D.two_sided_cells
    lines = ["digraph cells {", "  rankdir=BT;"]
    for i, J in enumerate(cells):
        label = ",".join(R.basis[x] for x in J.members)
        shape = "box" if J.idempotent else "ellipse"
        lines.append(f"  c{i} [label={_quote(label)}, shape={shape}];")
    k = len(cells)
    less = [[i != j and D.j_leq(cells[i], cells[j]) for j in range(k)] for i in range(k)]
    for i in range(k):
        for j in range(k):
            if less[i][j] and not any(less[i][c] and less[c][j] for c in range(k)):
                lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
