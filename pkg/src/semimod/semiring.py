"""Finitely based semirings over the non-negative integers and finite semirings.

Elements of a based semiring are dense coefficient tuples (``NatVec``) over a
fixed basis; multiplication is the bilinear extension of the structure
constants stored in ``BasedSemiring.mult``.  A ``FiniteSemiring`` is given by
complete addition and multiplication tables.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Sequence, Union

from .errors import CoefficientOverflowError, MalformedTableError

NatVec = tuple  # tuple[int, ...]; one non-negative coefficient per basis element

U64_MAX = 2**64 - 1


class Violation(NamedTuple):
    """One failed axiom instance together with the witness that breaks it."""

    axiom: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.axiom} at {self.witness}"


def _check_u64(vec: Sequence[int]) -> NatVec:
    for c in vec:
        if c > U64_MAX:
            raise CoefficientOverflowError(f"coefficient {c} exceeds the 64-bit range")
    return tuple(vec)


@dataclass(frozen=True)
class BasedSemiring:
    """Semiring with a finite basis and non-negative integer structure constants.

    ``mult[i][j]`` is the coefficient vector of ``basis[i] * basis[j]``.
    """

    basis: tuple
    unit: tuple
    mult: tuple

    def __post_init__(self):
        basis = tuple(str(b) for b in self.basis)
        k = len(basis)
        if k == 0:
            raise MalformedTableError("a based semiring needs a non-empty basis")
        if len(set(basis)) != k:
            raise MalformedTableError("basis names must be distinct")
        unit = tuple(int(c) for c in self.unit)
        if len(unit) != k:
            raise MalformedTableError(f"unit has length {len(unit)}, expected {k}")
        if len(self.mult) != k or any(len(row) != k for row in self.mult):
            raise MalformedTableError(f"mult must be a {k}x{k} table")
        mult = []
        for i, row in enumerate(self.mult):
            new_row = []
            for j, vec in enumerate(row):
                if len(vec) != k:
                    raise MalformedTableError(f"mult[{i}][{j}] has length {len(vec)}, expected {k}")
                new_row.append(tuple(int(c) for c in vec))
            mult.append(tuple(new_row))
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "mult", tuple(mult))

    @property
    def k(self) -> int:
        return len(self.basis)

    def index(self, name: Union[str, int]) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.k:
                raise IndexError(name)
            return name
        return self.basis.index(name)

    def vector(self, *terms) -> NatVec:
        """Build a NatVec from basis names, e.g. ``R.vector("s", "s", "w0")``."""
        out = [0] * self.k
        for t in terms:
            out[self.index(t)] += 1
        return tuple(out)

    def basis_vector(self, i: Union[str, int]) -> NatVec:
        out = [0] * self.k
        out[self.index(i)] = 1
        return tuple(out)

    @property
    def zero(self) -> NatVec:
        return (0,) * self.k

    def format(self, a: NatVec) -> str:
        terms = []
        for name, c in zip(self.basis, a):
            if c == 1:
                terms.append(name)
            elif c:
                terms.append(f"{c}{name}")
        return "+".join(terms) if terms else "0"


@dataclass(frozen=True)
class FiniteSemiring:
    """Semiring given by full Cayley tables on named elements."""

    elements: tuple
    add: tuple
    mul: tuple
    zero: int
    one: int

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        n = len(elements)
        if n == 0:
            raise MalformedTableError("a finite semiring needs at least one element")
        if len(set(elements)) != n:
            raise MalformedTableError("element names must be distinct")
        for label, table in (("add", self.add), ("mul", self.mul)):
            if len(table) != n or any(len(row) != n for row in table):
                raise MalformedTableError(f"{label} must be a {n}x{n} table")
            for row in table:
                for v in row:
                    if not 0 <= int(v) < n:
                        raise MalformedTableError(f"{label} entry {v} out of range")
        for label, v in (("zero", self.zero), ("one", self.one)):
            if not 0 <= int(v) < n:
                raise MalformedTableError(f"{label} index {v} out of range")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "add", tuple(tuple(int(v) for v in row) for row in self.add))
        object.__setattr__(self, "mul", tuple(tuple(int(v) for v in row) for row in self.mul))
        object.__setattr__(self, "zero", int(self.zero))
        object.__setattr__(self, "one", int(self.one))

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, name: Union[str, int]) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.n:
                raise IndexError(name)
            return name
        return self.elements.index(name)


Semiring = Union[BasedSemiring, FiniteSemiring]


def _conform(S: BasedSemiring, a: NatVec) -> None:
    if len(a) != S.k:
        raise MalformedTableError(f"vector of length {len(a)} does not conform to basis of size {S.k}")
    if any(c < 0 for c in a):
        raise MalformedTableError(f"negative coefficient in {a}")


def add(S: BasedSemiring, a: NatVec, b: NatVec) -> NatVec:
    _conform(S, a)
    _conform(S, b)
    return _check_u64([x + y for x, y in zip(a, b)])


def scale(S: BasedSemiring, n: int, a: NatVec) -> NatVec:
    _conform(S, a)
    if n < 0:
        raise ValueError("scalar must be non-negative")
    return _check_u64([n * x for x in a])


def mul(S: BasedSemiring, a: NatVec, b: NatVec) -> NatVec:
    _conform(S, a)
    _conform(S, b)
    out = [0] * S.k
    for i, ai in enumerate(a):
        if not ai:
            continue
        row = S.mult[i]
        for j, bj in enumerate(b):
            if not bj:
                continue
            c = ai * bj
            for h, v in enumerate(row[j]):
                if v:
                    out[h] += c * v
    # all terms are non-negative, so an intermediate overflow implies a final one
    return _check_u64(out)


def support(a: NatVec) -> frozenset:
    return frozenset(i for i, c in enumerate(a) if c)


def validate_semiring(S: Semiring) -> list:
    """Return every violated axiom instance; an empty list means ``S`` is a semiring."""
    if isinstance(S, BasedSemiring):
        return _validate_based(S)
    if isinstance(S, FiniteSemiring):
        return _validate_finite(S)
    raise TypeError(f"not a semiring: {type(S).__name__}")


def _validate_based(S: BasedSemiring) -> list:
    report = []
    k = S.k
    for i, j in product(range(k), repeat=2):
        for h, c in enumerate(S.mult[i][j]):
            if c < 0:
                report.append(Violation("non-negative structure constants", (i, j, h)))
    if any(c < 0 for c in S.unit):
        report.append(Violation("non-negative unit", S.unit))
    if report:
        return report
    for i in range(k):
        e = S.basis_vector(i)
        if mul(S, S.unit, e) != e:
            report.append(Violation("left unit", (i,)))
        if mul(S, e, S.unit) != e:
            report.append(Violation("right unit", (i,)))
    # bilinearity reduces associativity to basis triples
    for i, j, h in product(range(k), repeat=3):
        left = mul(S, S.mult[i][j], S.basis_vector(h))
        right = mul(S, S.basis_vector(i), S.mult[j][h])
        if left != right:
            report.append(Violation("associativity", (i, j, h)))
    return report


def _validate_finite(S: FiniteSemiring) -> list:
    report = []
    A, M, z, o = S.add, S.mul, S.zero, S.one
    rng = range(S.n)
    for a in rng:
        if A[z][a] != a or A[a][z] != a:
            report.append(Violation("additive identity", (a,)))
        if M[o][a] != a or M[a][o] != a:
            report.append(Violation("multiplicative identity", (a,)))
        if M[z][a] != z or M[a][z] != z:
            report.append(Violation("zero absorbs", (a,)))
        for b in rng:
            if A[a][b] != A[b][a]:
                report.append(Violation("additive commutativity", (a, b)))
            for c in rng:
                if A[A[a][b]][c] != A[a][A[b][c]]:
                    report.append(Violation("additive associativity", (a, b, c)))
                if M[M[a][b]][c] != M[a][M[b][c]]:
                    report.append(Violation("multiplicative associativity", (a, b, c)))
                if M[A[a][b]][c] != A[M[a][c]][M[b][c]]:
                    report.append(Violation("right distributivity", (a, b, c)))
                if M[c][A[a][b]] != A[M[c][a]][M[c][b]]:
                    report.append(Violation("left distributivity", (a, b, c)))
    return report


def finite_semiring_isomorphisms(S: FiniteSemiring, T: FiniteSemiring):
    """Yield every bijection S -> T preserving both tables, zero and one."""
    if S.n != T.n:
        return
    n = S.n
    image = [-1] * n
    used = [False] * n
    image[S.zero] = T.zero
    used[T.zero] = True
    if S.one != S.zero:
        if T.one == T.zero:
            return
        image[S.one] = T.one
        used[T.one] = True
    elif T.one != T.zero:
        return
    free = [a for a in range(n) if image[a] < 0]

    def consistent(a):
        ia = image[a]
        for b in range(n):
            ib = image[b]
            if ib < 0:
                continue
            for table_s, table_t in ((S.add, T.add), (S.mul, T.mul)):
                for x, y, ix, iy in ((a, b, ia, ib), (b, a, ib, ia)):
                    r = image[table_s[x][y]]
                    if r >= 0 and r != table_t[ix][iy]:
                        return False
        return True

    def rec(pos):
        if pos == len(free):
            yield tuple(image)
            return
        a = free[pos]
        for t in range(n):
            if used[t]:
                continue
            image[a] = t
            used[t] = True
            if consistent(a):
                yield from rec(pos + 1)
            image[a] = -1
            used[t] = False

    if all(consistent(a) for a in range(n) if image[a] >= 0):
        yield from rec(0)


def semirings_isomorphic(S: Semiring, T: Semiring) -> bool:
    if isinstance(S, FiniteSemiring) and isinstance(T, FiniteSemiring):
        return next(finite_semiring_isomorphisms(S, T), None) is not None
    if isinstance(S, BasedSemiring) and isinstance(T, BasedSemiring):
        return next(based_semiring_isomorphisms(S, T), None) is not None
    return False


def based_semiring_isomorphisms(S: BasedSemiring, T: BasedSemiring):
    """Yield basis permutations carrying the structure constants of S onto T.

    A based semiring has a unique basis, so isomorphisms are exactly these
    permutations.
    """
    if S.k != T.k:
        return
    k = S.k
    perm = [-1] * k
    used = [False] * k

    def vec_image(v):
        out = [0] * k
        for i, c in enumerate(v):
            if c:
                out[perm[i]] = c
        return tuple(out)

    def ok_partial(i):
        for j in range(k):
            if perm[j] < 0:
                continue
            for x, y in ((i, j), (j, i)):
                v = S.mult[x][y]
                if all(perm[h] >= 0 for h, c in enumerate(v) if c):
                    if vec_image(v) != T.mult[perm[x]][perm[y]]:
                        return False
        return True

    def rec(i):
        if i == k:
            if vec_image(S.unit) == T.unit:
                yield tuple(perm)
            return
        for t in range(k):
            if used[t]:
                continue
            perm[i], used[t] = t, True
            if ok_partial(i):
                yield from rec(i + 1)
            perm[i], used[t] = -1, False

    yield from rec(0)
