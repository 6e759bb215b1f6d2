"""Concrete semirings: Boolean, truncated naturals, group semirings and
Kazhdan-Lusztig semirings of dihedral groups."""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from .errors import InvalidGroupError, MalformedTableError, NegativeCoefficientError
from .semiring import BasedSemiring, FiniteSemiring, Violation

MAX_FINITE_GROUP_SEMIRING = 1024


@dataclass(frozen=True)
class GroupTable:
    element_names: tuple
    cayley: tuple
    identity: int = 0

    def __post_init__(self):
        object.__setattr__(self, "element_names", tuple(self.element_names))
        object.__setattr__(self, "cayley", tuple(tuple(row) for row in self.cayley))

    @property
    def order(self) -> int:
        return len(self.element_names)

    def validate(self) -> list:
        n = self.order
        T, e = self.cayley, self.identity
        if len(T) != n or any(len(r) != n for r in T) or not 0 <= e < n:
            return [Violation("well-formed table", ())]
        if any(not 0 <= v < n for r in T for v in r):
            return [Violation("entries in range", ())]
        report = []
        for a in range(n):
            if T[e][a] != a or T[a][e] != a:
                report.append(Violation("identity", (a,)))
            if not any(T[a][b] == e for b in range(n)):
                report.append(Violation("inverse", (a,)))
        for a, b, c in product(range(n), repeat=3):
            if T[T[a][b]][c] != T[a][T[b][c]]:
                report.append(Violation("associativity", (a, b, c)))
        return report


def _alternating(first: str, length: int) -> str:
    other = "t" if first == "s" else "s"
    return "".join(first if i % 2 == 0 else other for i in range(length))


@dataclass(frozen=True)
class DihedralGroup:
    """D_{2n} with generators s, t; elements are indexed as
    ``e, s, t, st, ts, sts, tst, ..., w0`` (by length, s-word first)."""

    n: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidGroupError("dihedral groups here need n >= 3")

    @property
    def elements(self) -> tuple:
        """(length, first_letter) pairs; first_letter is None for e and w0."""
        out = [(0, None)]
        for length in range(1, self.n):
            out += [(length, "s"), (length, "t")]
        out.append((self.n, None))
        return tuple(out)

    @property
    def names(self) -> tuple:
        out = []
        for length, first in self.elements:
            if length == 0:
                out.append("e")
            elif length == self.n:
                out.append("w0")
            else:
                out.append(_alternating(first, length))
        return tuple(out)

    @property
    def lengths(self) -> tuple:
        return tuple(length for length, _ in self.elements)

    def word(self, i: int) -> str:
        """A reduced word for element ``i`` (the s-first one for w0)."""
        length, first = self.elements[i]
        if length == 0:
            return ""
        return _alternating(first or "s", length)

    def _perm(self, word: str) -> tuple:
        # s and t act on the vertices of the n-gon as the reflections i -> -i, i -> 1-i
        n = self.n
        p = tuple(range(n))
        for letter in reversed(word):
            if letter == "s":
                p = tuple((-v) % n for v in p)
            else:
                p = tuple((1 - v) % n for v in p)
        return p

    @property
    def table(self) -> GroupTable:
        perms = [self._perm(self.word(i)) for i in range(2 * self.n)]
        index = {p: i for i, p in enumerate(perms)}
        if len(index) != 2 * self.n:
            raise InvalidGroupError("dihedral words are not pairwise distinct")
        cayley = []
        for p in perms:
            # (gh)(v) = g(h(v))
            cayley.append(tuple(index[tuple(p[v] for v in q)] for q in perms))
        return GroupTable(self.names, tuple(cayley), 0)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def left_letter(self, letter: str, i: int) -> int:
        """Index of ``letter * w_i`` computed on reduced words."""
        length, first = self.elements[i]
        if length == 0:
            return self.index(letter)
        if length == self.n or first == letter:
            # the product shortens: drop the leading letter
            w = self.word(i) if length < self.n else _alternating(letter, self.n)
            rest = w[1:]
            return self.index(rest) if rest else 0
        w = letter + self.word(i)
        return self.index("w0") if len(w) == self.n else self.index(w)


def cyclic_group(n: int) -> GroupTable:
    if n < 1:
        raise InvalidGroupError("cyclic group order must be positive")
    names = ["e"] + ["g" if i == 1 else f"g{i}" for i in range(1, n)]
    cayley = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return GroupTable(tuple(names), cayley, 0)


def symmetric_group_s2() -> GroupTable:
    return GroupTable(("e", "s"), ((0, 1), (1, 0)), 0)


def symmetric_group_s3() -> GroupTable:
    # s = (12), t = (23); S3 is the Coxeter group D_{2*3}
    return DihedralGroup(3).table


def group_preset(name: str) -> GroupTable:
    name = name.lower()
    if name == "s2":
        return symmetric_group_s2()
    if name == "s3":
        return symmetric_group_s3()
    m = re.fullmatch(r"c(\d+)", name)
    if m:
        return cyclic_group(int(m.group(1)))
    m = re.fullmatch(r"d(\d+)", name)
    if m:
        order = int(m.group(1))
        if order % 2:
            raise InvalidGroupError(f"dihedral group order must be even: {name}")
        return DihedralGroup(order // 2).table
    raise InvalidGroupError(f"unknown group: {name}")


def boolean_semiring() -> FiniteSemiring:
    return FiniteSemiring(("0", "1"), ((0, 1), (1, 1)), ((0, 0), (0, 1)), 0, 1)


def nat_rees(k: int) -> FiniteSemiring:
    """The naturals with everything >= k collapsed into one absorbing class ``I``."""
    if k < 1:
        raise ValueError("nat_rees needs k >= 1")
    names = [str(i) for i in range(k)] + ["I"]
    add = tuple(tuple(min(a + b, k) for b in range(k + 1)) for a in range(k + 1))
    mul = tuple(tuple(min(a * b, k) for b in range(k + 1)) for a in range(k + 1))
    return FiniteSemiring(tuple(names), add, mul, 0, 1)


def group_semiring(G: GroupTable) -> BasedSemiring:
    """The group semiring over the non-negative integers, basis = group elements."""
    bad = G.validate()
    if bad:
        raise InvalidGroupError(f"invalid group table: {bad[0]}")
    n = G.order
    mult = []
    for a in range(n):
        row = []
        for b in range(n):
            v = [0] * n
            v[G.cayley[a][b]] = 1
            row.append(tuple(v))
        mult.append(tuple(row))
    unit = [0] * n
    unit[G.identity] = 1
    return BasedSemiring(G.element_names, tuple(unit), tuple(mult))


def z_nonneg() -> BasedSemiring:
    return BasedSemiring(("1",), (1,), (((1,),),))


def finite_group_semiring(K: FiniteSemiring, G: GroupTable) -> FiniteSemiring:
    """K[G] for a finite semiring K, as a full table on K^|G|."""
    bad = G.validate()
    if bad:
        raise InvalidGroupError(f"invalid group table: {bad[0]}")
    size = K.n ** G.order
    if size > MAX_FINITE_GROUP_SEMIRING:
        raise MalformedTableError(f"{K.n}^{G.order} = {size} elements is too large")
    # index 0 is the zero function because K.zero is moved to position 0 first
    order = [K.zero] + [x for x in range(K.n) if x != K.zero]
    elems = [tuple(order[c] for c in combo) for combo in product(range(K.n), repeat=G.order)]
    index = {e: i for i, e in enumerate(elems)}

    def kadd(a, b):
        return K.add[a][b]

    add = []
    mul = []
    for a in elems:
        add_row = []
        mul_row = []
        for b in elems:
            add_row.append(index[tuple(kadd(x, y) for x, y in zip(a, b))])
            c = [K.zero] * G.order
            for g, ag in enumerate(a):
                if ag == K.zero:
                    continue
                for h, bh in enumerate(b):
                    if bh == K.zero:
                        continue
                    gh = G.cayley[g][h]
                    c[gh] = kadd(c[gh], K.mul[ag][bh])
            mul_row.append(index[tuple(c)])
        add.append(tuple(add_row))
        mul.append(tuple(mul_row))
    one = [K.zero] * G.order
    one[G.identity] = K.one

    def name(e):
        terms = []
        for g, c in zip(G.element_names, e):
            if c == K.zero:
                continue
            terms.append(g if c == K.one else f"{K.elements[c]}{g}")
        return "+".join(terms) if terms else "0"

    return FiniteSemiring(tuple(name(e) for e in elems), tuple(add), tuple(mul),
                          index[tuple([K.zero] * G.order)], index[tuple(one)])


def kl_hat_s2() -> BasedSemiring:
    """Subsemiring of Z>=0[S2] spanned by e and theta = e + s (theta^2 = 2 theta)."""
    return BasedSemiring(
        ("e", "theta"),
        (1, 0),
        (((1, 0), (0, 1)), ((0, 1), (0, 2))),
    )


def kl_dihedral(n: int) -> BasedSemiring:
    """Kazhdan-Lusztig semiring of D_{2n}.

    Each KL element is the sum of all group elements below it in the Bruhat
    order (for dihedral groups: strictly shorter, or equal).  Products are
    taken in the integral group ring and converted back by eliminating the
    longest remaining group element first.
    """
    D = DihedralGroup(n)
    G = D.table
    size = 2 * n
    lengths = D.lengths
    kl = []
    for w in range(size):
        kl.append(tuple(1 if (lengths[x] < lengths[w] or x == w) else 0 for x in range(size)))
    by_length = sorted(range(size), key=lambda x: -lengths[x])

    def ring_product(a, b):
        out = [0] * size
        for x, ax in enumerate(a):
            if ax:
                for y, by in enumerate(b):
                    if by:
                        out[G.cayley[x][y]] += ax * by
        return out

    def to_kl(vec):
        vec = list(vec)
        coeffs = [0] * size
        for g in by_length:
            c = vec[g]
            if c:
                coeffs[g] = c
                for x, v in enumerate(kl[g]):
                    vec[x] -= c * v
        if any(vec):
            raise NegativeCoefficientError("change of basis did not terminate at zero")
        return coeffs

    mult = []
    for a in range(size):
        row = []
        for b in range(size):
            coeffs = to_kl(ring_product(kl[a], kl[b]))
            if any(c < 0 for c in coeffs):
                raise NegativeCoefficientError(f"negative KL structure constant in {D.names[a]}*{D.names[b]}")
            row.append(tuple(coeffs))
        mult.append(tuple(row))
    unit = [0] * size
    unit[0] = 1
    return BasedSemiring(D.names, tuple(unit), tuple(mult))


def kl_generator_oracle(n: int, w) -> tuple:
    """Products s*w and t*w in the KL basis of D_{2n}, from the dihedral case
    formulas alone (no group-ring arithmetic)."""
    D = DihedralGroup(n)
    i = D.index(w) if isinstance(w, str) else int(w)
    size = 2 * n
    length, first = D.elements[i]
    results = []
    for letter in ("s", "t"):
        other = "t" if letter == "s" else "s"
        v = [0] * size
        if length == 0 or (length == 1 and first == other):
            v[D.left_letter(letter, i)] += 1
        elif length == n or first == letter:
            v[i] += 2
        else:
            v[D.left_letter(letter, i)] += 1
            v[D.left_letter(other, i)] += 1
        results.append(tuple(v))
    return tuple(results)


def preset(name: str):
    """Resolve a preset name such as ``kl-dihedral:4`` or ``nat-group:3:s2``."""
    key = name.strip().lower()
    if key == "boolean":
        return boolean_semiring()
    if key == "kl-hat-s2":
        return kl_hat_s2()
    if key in ("z-nonneg", "nat"):
        return z_nonneg()
    m = re.fullmatch(r"nat:(\d+)", key)
    if m:
        return nat_rees(int(m.group(1)))
    m = re.fullmatch(r"group:(\w+)", key)
    if m:
        return group_semiring(group_preset(m.group(1)))
    m = re.fullmatch(r"kl-dihedral:(\d+)", key)
    if m:
        return kl_dihedral(int(m.group(1)))
    m = re.fullmatch(r"boolean-group:(\w+)", key)
    if m:
        return finite_group_semiring(boolean_semiring(), group_preset(m.group(1)))
    m = re.fullmatch(r"nat-group:(\d+):(\w+)", key)
    if m:
        return finite_group_semiring(nat_rees(int(m.group(1))), group_preset(m.group(2)))
    raise ValueError(f"unknown preset: {name}")
