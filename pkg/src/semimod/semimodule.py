"""Finite commutative monoids, semimodules over based or finite semirings,
congruences, homomorphisms and the extremality predicates."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import (
    BoundExceededError,
    MalformedTableError,
    NotACongruenceError,
    SemiringMismatchError,
)
from .semiring import BasedSemiring, FiniteSemiring, NatVec, Semiring, Violation

DEFAULT_BOUND = 12


@dataclass(frozen=True)
class FinMonoid:
    """Commutative monoid on ``range(size)`` given by its addition table."""

    add: tuple
    zero: int = 0

    def __post_init__(self):
        add = tuple(tuple(int(v) for v in row) for row in self.add)
        n = len(add)
        if n == 0 or any(len(row) != n for row in add):
            raise MalformedTableError("addition table must be square and non-empty")
        if any(not 0 <= v < n for row in add for v in row) or not 0 <= self.zero < n:
            raise MalformedTableError("addition table entries out of range")
        object.__setattr__(self, "add", add)

    @property
    def size(self) -> int:
        return len(self.add)

    def multiple(self, c: int, m: int) -> int:
        """``c * m`` by repeated addition (``0 * m`` is zero)."""
        out = self.zero
        for _ in range(c):
            out = self.add[out][m]
        return out

    def is_semilattice(self) -> bool:
        return all(self.add[m][m] == m for m in range(self.size))

    def validate(self) -> list:
        A, z = self.add, self.zero
        rng = range(self.size)
        report = []
        for a in rng:
            if A[z][a] != a:
                report.append(Violation("additive identity", (a,)))
            for b in rng:
                if A[a][b] != A[b][a]:
                    report.append(Violation("additive commutativity", (a, b)))
                for c in rng:
                    if A[A[a][b]][c] != A[a][A[b][c]]:
                        report.append(Violation("additive associativity", (a, b, c)))
        return report


@dataclass(frozen=True)
class Semimodule:
    """A finite commutative monoid with one action map per semiring generator.

    Over a ``BasedSemiring`` there is one action per basis element; over a
    ``FiniteSemiring`` one per semiring element.  ``names`` is cosmetic.
    """

    semiring: object
    carrier: FinMonoid
    actions: tuple
    names: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        actions = tuple(tuple(int(v) for v in a) for a in self.actions)
        n = self.carrier.size
        expected = _n_actions(self.semiring)
        if len(actions) != expected:
            raise MalformedTableError(f"{len(actions)} action tables given, semiring needs {expected}")
        for a in actions:
            if len(a) != n or any(not 0 <= v < n for v in a):
                raise MalformedTableError("action table does not map the carrier into itself")
        object.__setattr__(self, "actions", actions)
        if self.names is not None:
            names = tuple(str(x) for x in self.names)
            if len(names) != n:
                raise MalformedTableError("names must label every carrier element")
            object.__setattr__(self, "names", names)

    @property
    def size(self) -> int:
        return self.carrier.size

    @property
    def add(self) -> tuple:
        return self.carrier.add

    @property
    def zero(self) -> int:
        return self.carrier.zero

    def label(self, m: int) -> str:
        return self.names[m] if self.names else str(m)

    def element(self, name) -> int:
        if isinstance(name, int):
            return name
        if self.names is None:
            return int(name)
        return self.names.index(name)

    def action(self, r) -> tuple:
        """Action table of a basis element / semiring element, by name or index."""
        R = self.semiring
        i = R.index(r)
        return self.actions[i]


def _n_actions(R) -> int:
    if isinstance(R, _NoActions):
        return 0
    if isinstance(R, BasedSemiring):
        return R.k
    if isinstance(R, FiniteSemiring):
        return R.n
    raise TypeError(f"not a semiring: {type(R).__name__}")


def act(M: Semimodule, a: NatVec, m: int) -> int:
    """Action of a general element ``sum a_i r_i`` of a based semiring."""
    out = M.zero
    for i, c in enumerate(a):
        if c:
            out = M.add[out][M.carrier.multiple(c, M.actions[i][m])]
    return out


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # keep the smaller index as representative
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def labels(self) -> tuple:
        return tuple(self.find(x) for x in range(len(self.parent)))


# ---------------------------------------------------------------- validation

def _relations(R: BasedSemiring):
    """For each basis pair (i, j): the (h, c) terms of r_i * r_j."""
    return [[[(h, c) for h, c in enumerate(R.mult[i][j]) if c] for j in range(R.k)] for i in range(R.k)]


def validate_semimodule(M: Semimodule) -> list:
    report = list(M.carrier.validate())
    if report:
        return report
    A, z = M.add, M.zero
    rng = range(M.size)
    for i, f in enumerate(M.actions):
        if f[z] != z:
            report.append(Violation("action fixes zero", (i,)))
        for a, b in product(rng, repeat=2):
            if f[A[a][b]] != A[f[a]][f[b]]:
                report.append(Violation("action is additive", (i, a, b)))
    R = M.semiring
    if isinstance(R, BasedSemiring):
        rel = _relations(R)
        for i, j in product(range(R.k), repeat=2):
            for m in rng:
                lhs = M.actions[i][M.actions[j][m]]
                rhs = z
                for h, c in rel[i][j]:
                    rhs = A[rhs][M.carrier.multiple(c, M.actions[h][m])]
                if lhs != rhs:
                    report.append(Violation("product relation", (i, j, m)))
        for m in rng:
            if act(M, R.unit, m) != m:
                report.append(Violation("unit acts as identity", (m,)))
    else:
        S = R
        for m in rng:
            if M.actions[S.zero][m] != z:
                report.append(Violation("semiring zero acts as zero", (m,)))
            if M.actions[S.one][m] != m:
                report.append(Violation("semiring one acts as identity", (m,)))
        for a, b in product(range(S.n), repeat=2):
            fa, fb = M.actions[a], M.actions[b]
            fs, fp = M.actions[S.add[a][b]], M.actions[S.mul[a][b]]
            for m in rng:
                if fs[m] != A[fa[m]][fb[m]]:
                    report.append(Violation("action of a sum", (a, b, m)))
                if fp[m] != fa[fb[m]]:
                    report.append(Violation("action of a product", (a, b, m)))
    return report


# ---------------------------------------------------------- basic predicates

def invertible_elements(M: Semimodule) -> frozenset:
    z = M.zero
    return frozenset(m for m in range(M.size) if any(M.add[m][n] == z for n in range(M.size)))


def is_proper(M: Semimodule) -> bool:
    return len(invertible_elements(M)) != M.size


def generated_subsemimodule(M: Semimodule, seed: Iterable[int]) -> frozenset:
    """Least subset containing zero and ``seed`` closed under addition and all actions."""
    seen = {M.zero}
    work = [M.zero]
    for s in seed:
        if s not in seen:
            seen.add(s)
            work.append(s)
    done = []
    while work:
        x = work.pop()
        new = [f[x] for f in M.actions]
        done.append(x)
        for y in done:
            new.append(M.add[x][y])
        for y in new:
            if y not in seen:
                seen.add(y)
                work.append(y)
    return frozenset(seen)


def _check_bound(M: Semimodule, bound: int) -> None:
    if M.size > bound:
        raise BoundExceededError(f"carrier of size {M.size} exceeds bound {bound}")


def all_subsemimodules(M: Semimodule, bound: int = DEFAULT_BOUND) -> list:
    _check_bound(M, bound)
    found = {generated_subsemimodule(M, ())}
    frontier = list(found)
    while frontier:
        nxt = []
        for sub in frontier:
            for m in range(M.size):
                if m not in sub:
                    bigger = generated_subsemimodule(M, sub | {m})
                    if bigger not in found:
                        found.add(bigger)
                        nxt.append(bigger)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def subsemimodule(M: Semimodule, elements: Iterable[int]) -> Semimodule:
    """Restrict ``M`` to a subset closed under addition and actions, relabelled
    in increasing order of the original indices."""
    elems = sorted(set(elements))
    pos = {m: i for i, m in enumerate(elems)}
    if M.zero not in pos:
        raise ValueError("a subsemimodule must contain zero")
    try:
        add = tuple(tuple(pos[M.add[a][b]] for b in elems) for a in elems)
        actions = tuple(tuple(pos[f[a]] for a in elems) for f in M.actions)
    except KeyError as exc:
        raise ValueError(f"subset is not closed: {exc.args[0]} escapes") from None
    names = tuple(M.label(m) for m in elems) if M.names else None
    return Semimodule(M.semiring, FinMonoid(add, pos[M.zero]), actions, names)


# ------------------------------------------------------------- congruences

@dataclass(frozen=True)
class Congruence:
    """Partition of the carrier; blocks are sorted tuples ordered by least member."""

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks if b), key=lambda b: b[0]))
        seen = [x for b in blocks for x in b]
        if len(seen) != len(set(seen)):
            raise ValueError("blocks overlap")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Congruence":
        groups = {}
        for x, r in enumerate(labels):
            groups.setdefault(r, []).append(x)
        return cls(tuple(groups.values()))

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_index(self) -> tuple:
        out = [0] * self.size
        for i, b in enumerate(self.blocks):
            for x in b:
                out[x] = i
        return tuple(out)

    def is_equality(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def is_full(self) -> bool:
        return len(self.blocks) == 1


def equality(M: Semimodule) -> Congruence:
    return Congruence(tuple((m,) for m in range(M.size)))


def full_relation(M: Semimodule) -> Congruence:
    return Congruence((tuple(range(M.size)),))


def congruence_closure(M: Semimodule, pairs: Iterable[tuple]) -> Congruence:
    """Least congruence containing ``pairs``: union-find plus a worklist of
    translated and acted-upon pairs."""
    uf = UnionFind(M.size)
    work = list(pairs)
    A = M.add
    rng = range(M.size)
    while work:
        x, y = work.pop()
        if not uf.union(x, y):
            continue
        for k in rng:
            work.append((A[x][k], A[y][k]))
        for f in M.actions:
            work.append((f[x], f[y]))
    return Congruence.from_labels(uf.labels())


def principal_congruence(M: Semimodule, a: int, b: int) -> Congruence:
    return congruence_closure(M, [(a, b)])


def is_congruence(M: Semimodule, c: Congruence) -> bool:
    if c.size != M.size:
        return False
    idx = c.block_index()
    for b in c.blocks:
        x = b[0]
        for y in b[1:]:
            for k in range(M.size):
                if idx[M.add[x][k]] != idx[M.add[y][k]]:
                    return False
            for f in M.actions:
                if idx[f[x]] != idx[f[y]]:
                    return False
    return True


def quotient(M: Semimodule, c: Congruence) -> Semimodule:
    if not is_congruence(M, c):
        raise NotACongruenceError("partition is not compatible with addition and the actions")
    idx = c.block_index()
    reps = [b[0] for b in c.blocks]
    add = tuple(tuple(idx[M.add[a][b]] for b in reps) for a in reps)
    actions = tuple(tuple(idx[f[a]] for a in reps) for f in M.actions)
    names = None
    if M.names:
        names = tuple("~".join(M.label(x) for x in b) if len(b) > 1 else M.label(b[0]) for b in c.blocks)
    return Semimodule(M.semiring, FinMonoid(add, idx[M.zero]), actions, names)


def all_congruences(M: Semimodule, bound: int = DEFAULT_BOUND) -> list:
    """Every congruence, as joins of principal congruences."""
    _check_bound(M, bound)
    principal = {}
    for a in range(M.size):
        for b in range(a + 1, M.size):
            c = principal_congruence(M, a, b)
            principal[c.blocks] = c
    found = {equality(M).blocks: equality(M)}
    frontier = list(found.values())
    while frontier:
        nxt = []
        for c in frontier:
            base = [(b[0], x) for b in c.blocks for x in b[1:]]
            for p in principal.values():
                extra = [(b[0], x) for b in p.blocks for x in b[1:]]
                j = congruence_closure(M, base + extra)
                if j.blocks not in found:
                    found[j.blocks] = j
                    nxt.append(j)
        frontier = nxt
    return sorted(found.values(), key=lambda c: (-len(c.blocks), c.blocks))


# ------------------------------------------------------------- extremality

def is_minimal(M: Semimodule) -> bool:
    if M.size < 2:
        return False
    return all(len(generated_subsemimodule(M, (m,))) == M.size for m in range(M.size) if m != M.zero)


def is_elementary(M: Semimodule) -> bool:
    if M.size < 2:
        return False
    for a in range(M.size):
        for b in range(a + 1, M.size):
            if not principal_congruence(M, a, b).is_full():
                return False
    return True


def is_simple(M: Semimodule) -> bool:
    return is_minimal(M) and is_elementary(M)


# ------------------------------------------------------------- direct sums

@dataclass(frozen=True)
class Hom:
    """Semimodule homomorphism, stored as the image of each carrier element."""

    source: Semimodule = field(repr=False)
    target: Semimodule = field(repr=False)
    map: tuple

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))

    def __call__(self, m: int) -> int:
        return self.map[m]

    def is_zero(self) -> bool:
        return all(v == self.target.zero for v in self.map)

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.size


def is_hom(M: Semimodule, N: Semimodule, f: Sequence[int]) -> bool:
    if len(f) != M.size or M.semiring != N.semiring:
        return False
    if f[M.zero] != N.zero:
        return False
    for a, b in product(range(M.size), repeat=2):
        if f[M.add[a][b]] != N.add[f[a]][f[b]]:
            return False
    for g, h in zip(M.actions, N.actions):
        for m in range(M.size):
            if f[g[m]] != h[f[m]]:
                return False
    return True


def direct_sum(M: Semimodule, N: Semimodule) -> Semimodule:
    """Componentwise sum; element ``(m, n)`` has index ``m * |N| + n``."""
    if M.semiring != N.semiring:
        raise SemiringMismatchError("direct sum needs semimodules over the same semiring")
    nN = N.size
    pairs = list(product(range(M.size), range(nN)))
    enc = lambda m, n: m * nN + n  # noqa: E731
    add = tuple(tuple(enc(M.add[a][c], N.add[b][d]) for c, d in pairs) for a, b in pairs)
    actions = tuple(tuple(enc(f[a], g[b]) for a, b in pairs) for f, g in zip(M.actions, N.actions))
    names = tuple(f"({M.label(a)},{N.label(b)})" for a, b in pairs)
    return Semimodule(M.semiring, FinMonoid(add, enc(M.zero, N.zero)), actions, names)


def direct_sum_maps(M: Semimodule, N: Semimodule) -> dict:
    """The inclusions and projections of ``direct_sum(M, N)``."""
    S = direct_sum(M, N)
    nN = N.size
    return {
        "iota_M": Hom(M, S, tuple(m * nN + N.zero for m in range(M.size))),
        "iota_N": Hom(N, S, tuple(M.zero * nN + n for n in range(nN))),
        "pi_M": Hom(S, M, tuple(x // nN for x in range(S.size))),
        "pi_N": Hom(S, N, tuple(x % nN for x in range(S.size))),
    }


# ------------------------------------------------------ generating recipes

def generating_recipe(M: Semimodule, use_actions: bool = True):
    """A greedy generating set of ``M`` and a recipe expressing every element.

    Returns ``(gens, recipe)`` where ``recipe`` lists ``(element, how)`` in
    discovery order; ``how`` is ``("gen", g)``, ``("add", a, b)`` or
    ``("act", i, a)``.  Elements reachable from the first ``j`` generators
    come before generator ``j``.
    """
    actions = M.actions if use_actions else ()
    known = {M.zero}
    order = [M.zero]
    recipe = [(M.zero, ("zero",))]
    gens = []
    done = 0

    def close():
        nonlocal done
        while done < len(order):
            x = order[done]
            for q in range(done + 1):
                y = order[q]
                z = M.add[x][y]
                if z not in known:
                    known.add(z)
                    order.append(z)
                    recipe.append((z, ("add", x, y)))
            for i, f in enumerate(actions):
                z = f[x]
                if z not in known:
                    known.add(z)
                    order.append(z)
                    recipe.append((z, ("act", i, x)))
            done += 1

    close()
    for m in range(M.size):
        if m not in known:
            gens.append(m)
            known.add(m)
            order.append(m)
            recipe.append((m, ("gen", len(gens) - 1)))
            close()
    return gens, recipe


def _morphisms(M: Semimodule, N: Semimodule, use_actions: bool, bijective: bool = False):
    """Backtrack over generator images; yields complete maps M -> N."""
    gens, recipe = generating_recipe(M, use_actions)
    # split the recipe at generator boundaries
    stages = [[]]
    for elem, how in recipe:
        if how[0] == "gen":
            stages.append([])
        stages[-1].append((elem, how))
    image = [-1] * M.size
    acts = list(zip(M.actions, N.actions)) if use_actions else []

    def extend(stage):
        for elem, how in stage:
            kind = how[0]
            if kind == "zero":
                image[elem] = N.zero
            elif kind == "add":
                image[elem] = N.add[image[how[1]]][image[how[2]]]
            elif kind == "act":
                image[elem] = N.actions[how[1]][image[how[2]]]

    def consistent(assigned):
        for a in assigned:
            ia = image[a]
            for b in assigned:
                r = image[M.add[a][b]]
                if r >= 0 and r != N.add[ia][image[b]]:
                    return False
            for g, h in acts:
                r = image[g[a]]
                if r >= 0 and r != h[ia]:
                    return False
        return True

    extend(stages[0])
    if not consistent([m for m in range(M.size) if image[m] >= 0]):
        return

    def rec(s):
        if s == len(stages):
            if bijective and len(set(image)) != M.size:
                return
            yield tuple(image)
            return
        stage = stages[s]
        g_elem = stage[0][0]
        before = [m for m in range(M.size) if image[m] >= 0]
        for t in range(N.size):
            if bijective and t in (image[m] for m in before):
                continue
            image[g_elem] = t
            extend(stage[1:])
            assigned = [m for m in range(M.size) if image[m] >= 0]
            if consistent(assigned):
                yield from rec(s + 1)
            for elem, _ in stage:
                image[elem] = -1

    yield from rec(1)


def homs(M: Semimodule, N: Semimodule, bound: int = DEFAULT_BOUND) -> list:
    """Every semimodule homomorphism ``M -> N``, sorted by image tuple."""
    _check_bound(M, bound)
    if M.semiring != N.semiring:
        raise SemiringMismatchError("homs need semimodules over the same semiring")
    return [Hom(M, N, f) for f in sorted(_morphisms(M, N, use_actions=True))]


def monoid_endomorphisms(F: FinMonoid) -> list:
    """All monoid endomorphisms of ``F`` (zero-preserving additive maps)."""
    M = _bare(F)
    return sorted(_morphisms(M, M, use_actions=False))


def _bare(F: FinMonoid) -> Semimodule:
    return Semimodule(_BARE, F, ())


class _NoActions:
    """Stand-in semiring for a monoid viewed without any actions."""

    def __eq__(self, other):
        return isinstance(other, _NoActions)

    def __hash__(self):
        return 0


_BARE = _NoActions()


def kernel_image(h: Hom):
    """``(kernel congruence, image subset)`` of a homomorphism."""
    return Congruence.from_labels(h.map), frozenset(h.map)


# ------------------------------------------------------ canonical labelling

def _colors(add, actions, zero) -> list:
    """Isomorphism-invariant colouring by iterated refinement."""
    n = len(add)
    color = [0 if m == zero else 1 for m in range(n)]
    while True:
        sigs = []
        for m in range(n):
            sig = (
                color[m],
                color[add[m][m]],
                tuple(color[f[m]] for f in actions),
                tuple(sorted((color[k], color[add[m][k]]) for k in range(n))),
            )
            sigs.append(sig)
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(color)):
            return new
        color = new


def canonical_labelling(add, actions, zero) -> tuple:
    """Return ``(serialized, order)``: the least table over an
    isomorphism-equivariant family of labellings, and one labelling
    (new label -> old element) that attains it.

    Labellings start at zero and grow by closing under addition and the
    actions in a fixed order; when the closure stalls, every unlabelled
    element of the least colour is tried as the next seed.
    """
    n = len(add)
    color = _colors(add, actions, zero)
    best = [None, None]

    def serialize(order):
        pos = [0] * n
        for i, m in enumerate(order):
            pos[m] = i
        out = [n]
        for a in order:
            row = add[a]
            out.extend(pos[row[b]] for b in order)
        for f in actions:
            out.extend(pos[f[a]] for a in order)
        return out

    def close(order, seen, done):
        while done < len(order):
            x = order[done]
            for q in range(done + 1):
                z = add[x][order[q]]
                if z not in seen:
                    seen.add(z)
                    order.append(z)
            for f in actions:
                z = f[x]
                if z not in seen:
                    seen.add(z)
                    order.append(z)
            done += 1
        return done

    def rec(order, seen, done):
        done = close(order, seen, done)
        if len(order) == n:
            s = serialize(order)
            if best[0] is None or s < best[0]:
                best[0], best[1] = s, tuple(order)
            return
        rest = [m for m in range(n) if m not in seen]
        low = min(color[m] for m in rest)
        for m in rest:
            if color[m] != low:
                continue
            rec(order + [m], seen | {m}, done)

    rec([zero], {zero}, 0)
    return tuple(best[0]), best[1]


def canonical_form(M: Semimodule, bound: int = DEFAULT_BOUND) -> bytes:
    _check_bound(M, bound)
    s, _ = canonical_labelling(M.add, M.actions, M.zero)
    if M.size > 255:
        raise BoundExceededError("canonical forms are byte-encoded; carrier too large")
    return bytes(s)


def are_isomorphic(M: Semimodule, N: Semimodule, bound: int = DEFAULT_BOUND) -> bool:
    if M.semiring != N.semiring or M.size != N.size:
        return False
    return canonical_form(M, bound) == canonical_form(N, bound)


def isomorphism(M: Semimodule, N: Semimodule, bound: int = DEFAULT_BOUND) -> Optional[Hom]:
    """An explicit isomorphism ``M -> N`` if one exists."""
    if not are_isomorphic(M, N, bound):
        return None
    _, om = canonical_labelling(M.add, M.actions, M.zero)
    _, on = canonical_labelling(N.add, N.actions, N.zero)
    f = [0] * M.size
    for a, b in zip(om, on):
        f[a] = b
    return Hom(M, N, tuple(f))


def relabel(M: Semimodule, perm: Sequence[int]) -> Semimodule:
    """Copy of ``M`` with element ``m`` renamed to ``perm[m]``."""
    n = M.size
    inv = [0] * n
    for m, p in enumerate(perm):
        inv[p] = m
    add = tuple(tuple(perm[M.add[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
    actions = tuple(tuple(perm[f[inv[a]]] for a in range(n)) for f in M.actions)
    names = tuple(M.label(inv[a]) for a in range(n)) if M.names else None
    return Semimodule(M.semiring, FinMonoid(add, perm[M.zero]), actions, names)


# ---------------------------------------------------------------- fixtures

def _cyclic_monoid(n: int) -> FinMonoid:
    return FinMonoid(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), 0)


def _boolean_monoid() -> FinMonoid:
    return FinMonoid(((0, 1), (1, 1)), 0)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def trivial_boolean(R: Semiring) -> Semimodule:
    """``B`` on which every non-zero generator acts as the identity."""
    if isinstance(R, BasedSemiring):
        actions = tuple((0, 1) for _ in range(R.k))
    else:
        actions = tuple((0, 0) if a == R.zero else (0, 1) for a in range(R.n))
    return Semimodule(R, _boolean_monoid(), actions, ("0", "1"))


def regular_semimodule(R: FiniteSemiring) -> Semimodule:
    return Semimodule(R, FinMonoid(R.add, R.zero), R.mul, R.elements)


def _matmul(A, B, p):
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(2)) % p for j in range(2)) for i in range(2))


def module_fixture(kind: str, **params) -> Semimodule:
    """Named small semimodules.

    kinds: ``cyclic`` (n), ``s2-trivial`` / ``s2-tau`` (p), ``s3-trivial`` /
    ``s3-sign`` / ``s3-two-dim`` (p), ``klhat-module`` (p, theta),
    ``trivial-boolean`` (semiring), ``regular`` (finite semiring),
    ``boolean-theta-zero``.
    """
    from . import presets

    if kind == "cyclic":
        n = int(params["n"])
        if n < 1:
            raise ValueError("cyclic fixture needs n >= 1")
        M = Semimodule(presets.z_nonneg(), _cyclic_monoid(n), (tuple(range(n)),))
    elif kind in ("s2-trivial", "s2-tau"):
        p = int(params["p"])
        if not _is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        tau = tuple(range(p)) if kind == "s2-trivial" else tuple((-a) % p for a in range(p))
        M = Semimodule(presets.group_semiring(presets.symmetric_group_s2()), _cyclic_monoid(p),
                       (tuple(range(p)), tau))
    elif kind == "klhat-module":
        p, theta = int(params["p"]), int(params["theta"])
        if not _is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        M = Semimodule(presets.kl_hat_s2(), _cyclic_monoid(p),
                       (tuple(range(p)), tuple((theta * a) % p for a in range(p))))
    elif kind in ("s3-trivial", "s3-sign"):
        p = int(params["p"])
        if not _is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        D = presets.DihedralGroup(3)
        actions = []
        for g in range(6):
            sign = -1 if (kind == "s3-sign" and D.lengths[g] % 2) else 1
            actions.append(tuple((sign * a) % p for a in range(p)))
        M = Semimodule(presets.group_semiring(D.table), _cyclic_monoid(p), tuple(actions))
    elif kind == "s3-two-dim":
        p = int(params["p"])
        if not _is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        D = presets.DihedralGroup(3)
        gen = {"s": ((0, 1), (1, 0)), "t": ((1, p - 1), (0, p - 1))}
        vecs = [(a, b) for a in range(p) for b in range(p)]
        enc = {v: i for i, v in enumerate(vecs)}
        add = tuple(tuple(enc[((u[0] + v[0]) % p, (u[1] + v[1]) % p)] for v in vecs) for u in vecs)
        actions = []
        for g in range(6):
            A = ((1, 0), (0, 1))
            for letter in D.word(g):
                A = _matmul(A, gen[letter], p)
            actions.append(tuple(enc[((A[0][0] * a + A[0][1] * b) % p, (A[1][0] * a + A[1][1] * b) % p)]
                                 for a, b in vecs))
        names = tuple(f"({a},{b})" for a, b in vecs)
        M = Semimodule(presets.group_semiring(D.table), FinMonoid(add, 0), tuple(actions), names)
    elif kind == "trivial-boolean":
        M = trivial_boolean(params["semiring"])
    elif kind == "regular":
        M = regular_semimodule(params["semiring"])
    elif kind == "boolean-theta-zero":
        M = Semimodule(presets.kl_hat_s2(), _boolean_monoid(), ((0, 1), (0, 0)), ("0", "1"))
    else:
        raise ValueError(f"unknown fixture kind: {kind}")
    bad = validate_semimodule(M)
    if bad:
        raise ValueError(f"fixture {kind} is not a semimodule: {bad[0]}")
    return M
