"""Bounded enumeration of finite semimodules up to isomorphism.

Carriers come from ``enumerate_monoids`` (or an explicit list, e.g. abelian
groups); actions are found by backtracking over monoid endomorphisms, one
generator at a time, pruning on the semiring relations as soon as they can be
evaluated.  Every completeness statement carries its carrier-size bound.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import BoundExceededError
from .semimodule import (
    DEFAULT_BOUND,
    FinMonoid,
    Semimodule,
    all_congruences,
    canonical_form,
    canonical_labelling,
    is_elementary,
    is_minimal,
    is_proper,
    monoid_endomorphisms,
    quotient,
)
from .semiring import BasedSemiring, FiniteSemiring

MONOID_BOUNDS = {"all_commutative": 6, "semilattice": 7}
KINDS = ("minimal", "elementary", "simple")

SEMILATTICE_NOTE = (
    "minimal proper search restricted to semilattice carriers: over a finitely "
    "generated semiring every element of a minimal proper semimodule is "
    "additively idempotent; idempotency re-verified on every returned entry"
)


@dataclass(frozen=True)
class EnumConfig:
    """``monoid_class`` applies to the minimal search only; the elementary
    search always runs over all commutative monoids."""

    max_carrier_size: int = 4
    monoid_class: str = "semilattice"
    require_proper: bool = True
    kinds: tuple = KINDS
    n_jobs: int = 1

    def __post_init__(self):
        if self.max_carrier_size < 1:
            raise ValueError("max_carrier_size must be at least 1")
        if self.monoid_class not in MONOID_BOUNDS:
            raise ValueError(f"unknown monoid class: {self.monoid_class}")
        kinds = tuple(self.kinds)
        bad = set(kinds) - set(KINDS)
        if bad:
            raise ValueError(f"unknown kinds: {sorted(bad)}")
        object.__setattr__(self, "kinds", kinds)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    module: Semimodule
    canon: bytes
    minimal: bool
    elementary: bool
    simple: bool
    proper: bool
    aliases: tuple = ()

    @property
    def size(self) -> int:
        return self.module.size

    def flags(self) -> dict:
        return {"proper": self.proper, "minimal": self.minimal,
                "elementary": self.elementary, "simple": self.simple}


def make_entry(name: str, M: Semimodule) -> CatalogEntry:
    mini, elem = is_minimal(M), is_elementary(M)
    return CatalogEntry(name, M, canonical_form(M), mini, elem, mini and elem, is_proper(M))


@dataclass
class IsoClassCatalog:
    """Semimodules with pairwise distinct canonical forms."""

    entries: list = field(default_factory=list)
    bound: Optional[int] = None
    notes: list = field(default_factory=list)

    def __post_init__(self):
        canons = [e.canon for e in self.entries]
        if len(canons) != len(set(canons)):
            raise ValueError("catalog entries must be pairwise non-isomorphic")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def names(self) -> list:
        return [e.name for e in self.entries]

    def canons(self) -> set:
        return {e.canon for e in self.entries}

    def get(self, name: str) -> CatalogEntry:
        for e in self.entries:
            if e.name == name or name in e.aliases:
                return e
        raise KeyError(name)

    def find(self, M: Semimodule) -> Optional[CatalogEntry]:
        c = canonical_form(M)
        return next((e for e in self.entries if e.canon == c and e.module.semiring == M.semiring), None)

    def filter(self, pred) -> "IsoClassCatalog":
        return IsoClassCatalog([e for e in self.entries if pred(e)], self.bound, list(self.notes))


def _sorted(entries: Iterable[CatalogEntry]) -> list:
    return sorted(entries, key=lambda e: (e.size, e.canon))


def catalog_from_modules(named: Sequence[tuple], bound: Optional[int] = None) -> IsoClassCatalog:
    """Build a catalog from ``(name, module)`` pairs; isomorphic repeats
    become aliases of the first occurrence."""
    entries = []
    by_canon = {}
    for name, M in named:
        e = make_entry(name, M)
        if e.canon in by_canon:
            i = by_canon[e.canon]
            entries[i] = CatalogEntry(**{**entries[i].__dict__, "aliases": entries[i].aliases + (name,)})
        else:
            by_canon[e.canon] = len(entries)
            entries.append(e)
    return IsoClassCatalog(entries, bound)


# ---------------------------------------------------------------- monoids

def _monoid_search(n: int, semilattice: bool):
    """Yield every commutative monoid table on ``range(n)`` with identity 0."""
    T = [[-1] * n for _ in range(n)]
    for x in range(n):
        T[0][x] = T[x][0] = x
    cells = []
    for i in range(1, n):
        for j in range(i, n):
            if semilattice and i == j:
                T[i][i] = i
            else:
                cells.append((i, j))

    def ok(i, j):
        for a in range(n):
            for b in range(n):
                for c in (i, j):
                    for x, y, z in ((a, b, c), (a, c, b), (c, a, b)):
                        xy = T[x][y]
                        yz = T[y][z]
                        if xy < 0 or yz < 0:
                            continue
                        l, r = T[xy][z], T[x][yz]
                        if l >= 0 and r >= 0 and l != r:
                            return False
        return True

    def rec(pos):
        if pos == len(cells):
            yield tuple(tuple(row) for row in T)
            return
        i, j = cells[pos]
        for v in range(n):
            T[i][j] = T[j][i] = v
            if ok(i, j):
                yield from rec(pos + 1)
        T[i][j] = T[j][i] = -1

    if not semilattice or ok(0, 0):
        yield from rec(0)


def enumerate_monoids(n: int, monoid_class: str = "all_commutative") -> list:
    """Commutative monoids of order ``n`` up to isomorphism, sorted by canonical table."""
    if monoid_class not in MONOID_BOUNDS:
        raise ValueError(f"unknown monoid class: {monoid_class}")
    if n < 1:
        raise ValueError("monoid order must be positive")
    if n > MONOID_BOUNDS[monoid_class]:
        raise BoundExceededError(f"{monoid_class} monoids are enumerated up to order {MONOID_BOUNDS[monoid_class]}")
    seen = {}
    for table in _monoid_search(n, monoid_class == "semilattice"):
        canon, order = canonical_labelling(table, (), 0)
        if canon not in seen:
            seen[canon] = _relabelled_monoid(table, order)
    return [seen[c] for c in sorted(seen)]


def _relabelled_monoid(table, order) -> FinMonoid:
    pos = {m: i for i, m in enumerate(order)}
    return FinMonoid(tuple(tuple(pos[table[a][b]] for b in order) for a in order), 0)


def _factor(n: int) -> dict:
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _partitions(a: int, largest: Optional[int] = None):
    largest = a if largest is None else largest
    if a == 0:
        yield ()
        return
    for first in range(min(a, largest), 0, -1):
        for rest in _partitions(a - first, first):
            yield (first,) + rest


def cyclic_product(orders: Sequence[int]) -> FinMonoid:
    """Direct product of cyclic groups, elements in mixed-radix order."""
    elems = list(product(*(range(k) for k in orders))) if orders else [()]
    pos = {e: i for i, e in enumerate(elems)}
    add = tuple(
        tuple(pos[tuple((x + y) % k for x, y, k in zip(a, b, orders))] for b in elems) for a in elems
    )
    return FinMonoid(add, 0)


def abelian_groups(max_order: int) -> list:
    """``(name, FinMonoid)`` for every abelian group of order ``<= max_order``,
    from the primary decomposition."""
    out = [("Z1", cyclic_product(()))]
    for n in range(2, max_order + 1):
        primes = sorted(_factor(n).items())
        choices = [[tuple(p**e for e in part) for part in _partitions(a)] for p, a in primes]
        for combo in product(*choices):
            orders = tuple(k for part in combo for k in part)
            out.append(("x".join(f"Z{k}" for k in orders), cyclic_product(orders)))
    return out


# ------------------------------------------------------- action search

def _compose(f, g):
    return tuple(f[x] for x in g)


def _based_order(R: BasedSemiring):
    """Basis order for the search, plus for each position the relations
    completed there and (when available) a forcing rule ``(i, j)`` meaning
    ``r_h = r_i * r_j`` exactly."""
    k = R.k
    chosen = []
    unit_support = [i for i, c in enumerate(R.unit) if c]
    forced = {}
    if len(unit_support) == 1 and R.unit[unit_support[0]] == 1:
        forced[unit_support[0]] = "unit"
    supp = [[{h for h, c in enumerate(R.mult[i][j]) if c} for j in range(k)] for i in range(k)]

    def completes(cand, have):
        s = have | {cand}
        return sum(1 for i in s for j in s if supp[i][j] <= s and cand in ({i, j} | supp[i][j]))

    while len(chosen) < k:
        have = set(chosen)
        rest = [h for h in range(k) if h not in have]
        pick = None
        for h in rest:
            if forced.get(h) == "unit":
                pick = (h, "unit")
                break
        if pick is None:
            for h in rest:
                for i in chosen:
                    for j in chosen:
                        v = R.mult[i][j]
                        if v[h] == 1 and sum(v) == 1:
                            pick = (h, (i, j))
                            break
                    if pick:
                        break
                if pick:
                    break
        if pick is None:
            h = max(rest, key=lambda c: (completes(c, have), -c))
            pick = (h, None)
        chosen.append(pick[0])
        forced[pick[0]] = pick[1]
    rels = []
    for pos, h in enumerate(chosen):
        have = set(chosen[: pos + 1])
        rels.append([(i, j) for i in have for j in have
                     if supp[i][j] <= have and h in ({i, j} | supp[i][j])])
    return chosen, [forced[h] for h in chosen], rels


def _based_actions(R: BasedSemiring, F: FinMonoid, endos: list):
    k = R.k
    order, rules, rels = _based_order(R)
    A = [None] * k
    rng = range(F.size)
    ident = tuple(rng)
    mult_terms = [[[(h, c) for h, c in enumerate(R.mult[i][j]) if c] for j in range(k)] for i in range(k)]
    unit_terms = [(h, c) for h, c in enumerate(R.unit) if c]
    unit_pos = max(order.index(h) for h, _ in unit_terms)

    def lincomb(terms, m):
        out = F.zero
        for h, c in terms:
            out = F.add[out][F.multiple(c, A[h][m])]
        return out

    def check(pos):
        for i, j in rels[pos]:
            Ai, Aj, terms = A[i], A[j], mult_terms[i][j]
            for m in rng:
                if Ai[Aj[m]] != lincomb(terms, m):
                    return False
        if pos == unit_pos:
            return all(lincomb(unit_terms, m) == m for m in rng)
        return True

    def rec(pos):
        if pos == k:
            yield tuple(A)
            return
        h, rule = order[pos], rules[pos]
        if rule == "unit":
            cands = [ident]
        elif rule is not None:
            cands = [_compose(A[rule[0]], A[rule[1]])]
        else:
            cands = endos
        for f in cands:
            A[h] = f
            if check(pos):
                yield from rec(pos + 1)
        A[h] = None

    yield from rec(0)


def _finite_recipe(S: FiniteSemiring):
    """Stages of a generating recipe for a finite semiring: each stage is a
    generator followed by the new elements it produces, each with its
    derivation ``("add"|"mul", a, b)``."""
    known = {S.zero: ("zero",), S.one: ("one",)}
    order = [S.zero] + ([S.one] if S.one != S.zero else [])
    stages = [[(x, known[x]) for x in order]]

    def close():
        changed = True
        while changed:
            changed = False
            for a in list(order):
                for b in list(order):
                    for kind, table in (("add", S.add), ("mul", S.mul)):
                        z = table[a][b]
                        if z not in known:
                            known[z] = (kind, a, b)
                            order.append(z)
                            stages[-1].append((z, known[z]))
                            changed = True

    close()
    for x in range(S.n):
        if x not in known:
            known[x] = ("gen",)
            order.append(x)
            stages.append([(x, ("gen",))])
            close()
    return stages


def _finite_actions(S: FiniteSemiring, F: FinMonoid, endos: list):
    stages = _finite_recipe(S)
    A = [None] * S.n
    rng = range(F.size)
    zero_map = tuple(F.zero for _ in rng)
    ident = tuple(rng)

    def psum(f, g):
        return tuple(F.add[f[m]][g[m]] for m in rng)

    def fill(stage):
        for x, how in stage:
            kind = how[0]
            if kind == "zero":
                A[x] = zero_map
            elif kind == "one":
                A[x] = ident
            elif kind == "add":
                A[x] = psum(A[how[1]], A[how[2]])
            elif kind == "mul":
                A[x] = _compose(A[how[1]], A[how[2]])

    def consistent(new):
        assigned = [x for x in range(S.n) if A[x] is not None]
        for a in new:
            for b in assigned:
                for x, y in ((a, b), (b, a)):
                    if A[S.add[x][y]] != psum(A[x], A[y]):
                        return False
                    if A[S.mul[x][y]] != _compose(A[x], A[y]):
                        return False
        return True

    def rec(s):
        if s == len(stages):
            yield tuple(A)
            return
        stage = stages[s]
        g = stage[0][0]
        for f in endos:
            A[g] = f
            fill(stage[1:])
            if consistent([x for x, _ in stage]):
                yield from rec(s + 1)
            for x, _ in stage:
                A[x] = None

    fill(stages[0])
    # zero and one might coincide (the one-element semiring)
    if consistent([x for x, _ in stages[0]]):
        yield from rec(1)


def semimodule_structures(R, F: FinMonoid):
    """Every action of ``R`` on the carrier ``F`` (not up to isomorphism)."""
    endos = monoid_endomorphisms(F)
    if isinstance(R, BasedSemiring):
        gen = _based_actions(R, F, endos)
    else:
        gen = _finite_actions(R, F, endos)
    for actions in gen:
        yield Semimodule(R, F, actions)


def _classes_on(args):
    R, F = args
    out = {}
    for M in semimodule_structures(R, F):
        c = canonical_form(M, bound=max(DEFAULT_BOUND, M.size))
        if c not in out:
            out[c] = M
    return out


def _carriers(cfg: EnumConfig, monoid_class: str) -> list:
    return [F for n in range(1, cfg.max_carrier_size + 1) for F in enumerate_monoids(n, monoid_class)]


def enumerate_semimodules(R, cfg: EnumConfig = EnumConfig(), carriers: Optional[Sequence[FinMonoid]] = None,
                          monoid_class: Optional[str] = None) -> IsoClassCatalog:
    """All semimodules over ``R`` on the given carriers (default: every monoid
    of ``cfg.monoid_class`` up to ``cfg.max_carrier_size``), up to isomorphism.

    Non-proper semimodules are dropped when ``cfg.require_proper`` is set.
    """
    if carriers is None:
        carriers = _carriers(cfg, monoid_class or cfg.monoid_class)
    if cfg.require_proper:
        carriers = [F for F in carriers if any(all(F.add[m][x] != F.zero for x in range(F.size))
                                               for m in range(F.size))]
    jobs = [(R, F) for F in carriers]
    if cfg.n_jobs > 1:
        with ProcessPoolExecutor(cfg.n_jobs) as pool:
            parts = list(pool.map(_classes_on, jobs))
    else:
        parts = [_classes_on(j) for j in jobs]
    found = {}
    for part in parts:
        for c, M in part.items():
            found.setdefault(c, M)
    entries = [make_entry("", found[c]) for c in found]
    entries = _sorted(entries)
    counters = {}
    named = []
    for e in entries:
        counters[e.size] = counters.get(e.size, 0) + 1
        named.append(CatalogEntry(f"m{e.size}.{counters[e.size]}", e.module, e.canon,
                                  e.minimal, e.elementary, e.simple, e.proper))
    bound = max((F.size for F in carriers), default=0)
    return IsoClassCatalog(named, bound)


@dataclass
class ExtremeReport:
    minimal: Optional[IsoClassCatalog]
    elementary: Optional[IsoClassCatalog]
    simple: Optional[IsoClassCatalog]
    bound: int
    notes: list = field(default_factory=list)

    def extreme(self) -> IsoClassCatalog:
        """Union of the minimal and elementary catalogs."""
        seen = {}
        for cat in (self.minimal, self.elementary):
            for e in cat or ():
                seen.setdefault(e.canon, e)
        return IsoClassCatalog(_sorted(seen.values()), self.bound)


def classify_extreme(R, cfg: EnumConfig = EnumConfig(), carriers: Optional[Sequence[FinMonoid]] = None) -> ExtremeReport:
    """Minimal, elementary and simple semimodules up to the size bound.

    With explicit ``carriers`` every search uses them.  Otherwise the
    elementary search (and hence the simple one) runs over all commutative
    monoids and the minimal search over ``cfg.monoid_class``.
    """
    notes = []
    want = set(cfg.kinds)
    minimal = elementary = simple = full = None
    restricted = carriers is None and cfg.monoid_class == "semilattice"
    if carriers is not None or want & {"elementary", "simple"} or not restricted:
        full = enumerate_semimodules(R, cfg, carriers, monoid_class="all_commutative")
    if "minimal" in want:
        if restricted:
            minimal = enumerate_semimodules(R, cfg, monoid_class="semilattice").filter(lambda e: e.minimal)
            notes.append(SEMILATTICE_NOTE if cfg.require_proper
                         else "minimal search restricted to semilattice carriers")
            for e in minimal:
                M = e.module
                if any(M.add[m][m] != m for m in range(M.size)):
                    raise AssertionError(f"{e.name} is not additively idempotent")
        else:
            minimal = full.filter(lambda e: e.minimal)
    if "elementary" in want:
        elementary = full.filter(lambda e: e.elementary)
    if "simple" in want:
        simple = full.filter(lambda e: e.simple)
    bound = full.bound if full is not None else cfg.max_carrier_size
    for cat in (minimal, elementary, simple):
        if cat is not None:
            cat.notes[:] = notes
    return ExtremeReport(minimal, elementary, simple, bound, notes)


def quotients_up_to_iso(M: Semimodule, nontrivial: bool = True, bound: int = DEFAULT_BOUND) -> IsoClassCatalog:
    """Quotients of ``M`` by all its congruences, up to isomorphism.

    With ``nontrivial`` the equality and full relations are skipped.
    """
    found = {}
    for c in all_congruences(M, bound):
        if nontrivial and (c.is_equality() or c.is_full()):
            continue
        Q = quotient(M, c)
        e = make_entry("", Q)
        found.setdefault(e.canon, e)
    entries = _sorted(found.values())
    return IsoClassCatalog([CatalogEntry(**{**e.__dict__, "name": f"q{i + 1}"}) for i, e in enumerate(entries)],
                           M.size)


def cell_quotient_forms(R: BasedSemiring, reduced: bool = True) -> set:
    """Canonical forms of the non-zero quotients of the (reduced) cell
    semimodules over every left cell in an idempotent two-sided cell."""
    from .cells import cell_decomposition, cell_semimodule, reduced_cell_semimodule

    D = cell_decomposition(R)
    build = reduced_cell_semimodule if reduced else cell_semimodule
    out = set()
    for L in D.left_cells:
        if not D.two_sided_cell_of(L[0]).idempotent:
            continue
        C = build(R, L, D)
        for e in quotients_up_to_iso(C, nontrivial=False):
            if e.size > 1:
                out.add(e.canon)
    return out
