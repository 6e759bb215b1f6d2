"""Cells of a based semiring and the semimodules built from them.

Everything here depends only on which basis elements occur in a product, so
the computations run on the support table (the booleanization) of the
semiring.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import (
    ApexError,
    MixedAnnihilationError,
    NilpotentCellError,
    NotALeftCellError,
    SemiringMismatchError,
)
from .semimodule import (
    FinMonoid,
    Hom,
    Semimodule,
    invertible_elements,
    is_minimal,
    is_proper,
)
from .semiring import BasedSemiring, mul, support


@dataclass(frozen=True)
class BoolSupportAlgebra:
    """``supp_mult[i][j]`` is the set of basis indices in ``r_i * r_j``."""

    k: int
    supp_mult: tuple

    def product(self, X: Iterable[int], Y: Iterable[int]) -> frozenset:
        out = set()
        for i in X:
            for j in Y:
                out |= self.supp_mult[i][j]
        return frozenset(out)


def booleanize(R: BasedSemiring) -> BoolSupportAlgebra:
    table = tuple(
        tuple(support(mul(R, R.basis_vector(i), R.basis_vector(j))) for j in range(R.k))
        for i in range(R.k)
    )
    return BoolSupportAlgebra(R.k, table)


def _closure(step) -> tuple:
    """Reflexive-transitive closure of a boolean k x k relation (Warshall)."""
    k = len(step)
    reach = [[step[i][j] or i == j for j in range(k)] for i in range(k)]
    for m in range(k):
        for i in range(k):
            if reach[i][m]:
                row_m = reach[m]
                row_i = reach[i]
                for j in range(k):
                    if row_m[j]:
                        row_i[j] = True
    return tuple(tuple(r) for r in reach)


def _classes(leq) -> tuple:
    k = len(leq)
    seen = set()
    out = []
    for i in range(k):
        if i in seen:
            continue
        cls = tuple(j for j in range(k) if leq[i][j] and leq[j][i])
        seen.update(cls)
        out.append(cls)
    return tuple(out)


@dataclass(frozen=True)
class TwoSidedCell:
    members: tuple
    idempotent: bool
    strongly_regular: bool


@dataclass(frozen=True)
class CellDecomposition:
    """Pre-orders, cells and H-cells of a based semiring.

    ``left_leq[i][j]`` holds when ``r_j`` occurs in ``r * r_i`` for some
    ``r`` (closed transitively); ``right_leq`` uses ``r_i * r``.  Cells are
    tuples of basis indices ordered by their least member.  ``h_cells`` maps
    ``(left cell index, right cell index)`` to the non-empty intersections.
    """

    semiring: BasedSemiring
    left_leq: tuple
    right_leq: tuple
    two_sided_leq: tuple
    left_cells: tuple
    right_cells: tuple
    two_sided_cells: tuple
    h_cells: dict

    def left_cell_of(self, i: int) -> tuple:
        return next(c for c in self.left_cells if i in c)

    def right_cell_of(self, i: int) -> tuple:
        return next(c for c in self.right_cells if i in c)

    def two_sided_cell_of(self, i: int) -> TwoSidedCell:
        return next(c for c in self.two_sided_cells if i in c.members)

    def h_cells_of_left(self, L: tuple) -> list:
        """H-cells inside ``L``, in the order of their right cells."""
        li = self.left_cells.index(L)
        return [self.h_cells[key] for key in sorted(self.h_cells) if key[0] == li]

    def j_leq(self, A: TwoSidedCell, B: TwoSidedCell) -> bool:
        return self.two_sided_leq[A.members[0]][B.members[0]]


def cell_decomposition(R: BasedSemiring) -> CellDecomposition:
    B = booleanize(R)
    k = R.k
    left_step = [[False] * k for _ in range(k)]
    right_step = [[False] * k for _ in range(k)]
    for i in range(k):
        for r in range(k):
            for j in B.supp_mult[r][i]:
                left_step[i][j] = True
            for j in B.supp_mult[i][r]:
                right_step[i][j] = True
    left_leq = _closure(left_step)
    right_leq = _closure(right_step)
    two = _closure([[left_leq[i][j] or right_leq[i][j] for j in range(k)] for i in range(k)])
    left_cells, right_cells = _classes(left_leq), _classes(right_leq)
    h_cells = {}
    for a, L in enumerate(left_cells):
        for b, Rc in enumerate(right_cells):
            common = tuple(sorted(set(L) & set(Rc)))
            if common:
                h_cells[(a, b)] = common
    cells = []
    for members in _classes(two):
        mset = set(members)
        idem = any(B.supp_mult[x][y] & mset for x in members for y in members)
        regular = all(len(h) == 1 for h in h_cells.values() if set(h) <= mset)
        cells.append(TwoSidedCell(members, idem, regular))
    return CellDecomposition(R, left_leq, right_leq, two, left_cells, right_cells, tuple(cells), h_cells)


def km_incomparability_violations(D: CellDecomposition) -> list:
    """Pairs of distinct left (or right) cells inside one idempotent two-sided
    cell that are comparable; an empty list is expected."""
    out = []
    for J in D.two_sided_cells:
        if not J.idempotent:
            continue
        m = set(J.members)
        for kind, cells, leq in (("left", D.left_cells, D.left_leq), ("right", D.right_cells, D.right_leq)):
            inside = [c for c in cells if set(c) <= m]
            for A in inside:
                for C in inside:
                    if A != C and leq[A[0]][C[0]]:
                        out.append((kind, A, C))
    return out


def _resolve_left_cell(R: BasedSemiring, D: CellDecomposition, L) -> tuple:
    """Accept a left cell as a member name/index or as a collection of them."""
    if isinstance(L, (str, int)):
        return D.left_cell_of(R.index(L))
    idx = tuple(sorted(R.index(x) for x in L))
    if idx not in D.left_cells:
        names = [R.basis[i] for i in idx]
        raise NotALeftCellError(f"{names} is not a left cell")
    return idx


def _subset_names(labels: list) -> tuple:
    out = []
    for mask in range(1 << len(labels)):
        parts = [labels[b] for b in range(len(labels)) if mask >> b & 1]
        out.append("+".join(parts) if parts else "0")
    return tuple(out)


def _powerset_monoid(bits: int) -> FinMonoid:
    size = 1 << bits
    return FinMonoid(tuple(tuple(a | b for b in range(size)) for a in range(size)), 0)


def cell_semimodule(R: BasedSemiring, L: Union[str, int, Iterable], decomposition=None) -> Semimodule:
    """Subsets of the left cell ``L`` under union; ``r`` sends ``X`` to the
    members of ``L`` occurring in ``r * x`` for some ``x`` in ``X``."""
    D = decomposition or cell_decomposition(R)
    L = _resolve_left_cell(R, D, L)
    B = booleanize(R)
    pos = {x: b for b, x in enumerate(L)}
    size = 1 << len(L)
    actions = []
    for r in range(R.k):
        # image of each singleton, then extend by union
        single = []
        for x in L:
            mask = 0
            for z in B.supp_mult[r][x]:
                if z in pos:
                    mask |= 1 << pos[z]
            single.append(mask)
        actions.append(tuple(_union_image(single, X) for X in range(size)))
    names = _subset_names([R.basis[x] for x in L])
    return Semimodule(R, _powerset_monoid(len(L)), tuple(actions), names)


def _union_image(single, X) -> int:
    out = 0
    b = 0
    while X:
        if X & 1:
            out |= single[b]
        X >>= 1
        b += 1
    return out


def _h_labels(count: int) -> list:
    if count <= 2:
        return ["x", "y"][:count]
    return [f"h{i + 1}" for i in range(count)]


def reduced_cell_semimodule(R: BasedSemiring, L, decomposition=None) -> Semimodule:
    """Subsets of the H-cells of ``L`` under union.

    H-cells are ordered by their right cells, so in the dihedral presets
    ``x`` is the H-cell of ``s`` and ``y`` its neighbour in the right cell of ``t``.
    """
    D = decomposition or cell_decomposition(R)
    L = _resolve_left_cell(R, D, L)
    if not D.two_sided_cell_of(L[0]).idempotent:
        raise NilpotentCellError("reduced cell semimodules need an idempotent two-sided cell")
    B = booleanize(R)
    H = D.h_cells_of_left(L)
    where = {x: b for b, h in enumerate(H) for x in h}
    size = 1 << len(H)
    actions = []
    for r in range(R.k):
        single = []
        for h in H:
            mask = 0
            for x in h:
                for z in B.supp_mult[r][x]:
                    if z in where:
                        mask |= 1 << where[z]
            single.append(mask)
        actions.append(tuple(_union_image(single, X) for X in range(size)))
    names = _subset_names(_h_labels(len(H)))
    return Semimodule(R, _powerset_monoid(len(H)), tuple(actions), names)


def collapse_map(R: BasedSemiring, L, decomposition=None) -> Hom:
    """The map ``C_L -> reduced C_L`` recording which H-cells a subset touches."""
    D = decomposition or cell_decomposition(R)
    L = _resolve_left_cell(R, D, L)
    H = D.h_cells_of_left(L)
    bit_to_h = [next(b for b, h in enumerate(H) if x in h) for x in L]
    f = []
    for X in range(1 << len(L)):
        mask = 0
        for b, hb in enumerate(bit_to_h):
            if X >> b & 1:
                mask |= 1 << hb
        f.append(mask)
    return Hom(cell_semimodule(R, L, D), reduced_cell_semimodule(R, L, D), tuple(f))


def _annihilates(M: Semimodule, i: int) -> bool:
    return all(v == M.zero for v in M.actions[i])


def annihilator_cells(R: BasedSemiring, M: Semimodule, decomposition=None) -> list:
    """One flag per two-sided cell: whether its members annihilate ``M``.

    Defined for proper semimodules whose elements are all idempotent (and for
    the zero semimodule).  A cell with both annihilating and non-annihilating
    members raises ``MixedAnnihilationError``.
    """
    if M.semiring != R:
        raise SemiringMismatchError("semimodule is over a different semiring")
    if M.size > 1 and not (is_proper(M) and all(M.add[m][m] == m for m in range(M.size))):
        raise ValueError("annihilator_cells needs a proper semimodule of idempotents")
    D = decomposition or cell_decomposition(R)
    flags = []
    for J in D.two_sided_cells:
        kill = {_annihilates(M, i) for i in J.members}
        if len(kill) > 1:
            names = [R.basis[i] for i in J.members]
            raise MixedAnnihilationError(f"cell {names} partly annihilates the semimodule")
        flags.append(kill.pop())
    return flags


def apex(R: BasedSemiring, M: Semimodule, decomposition=None) -> TwoSidedCell:
    """The largest two-sided cell that does not annihilate ``M``.

    Only defined for minimal proper semimodules; anything else is refused.
    """
    if M.semiring != R:
        raise SemiringMismatchError("semimodule is over a different semiring")
    if not (is_minimal(M) and is_proper(M)):
        raise ApexError("the apex is only defined for minimal proper semimodules")
    D = decomposition or cell_decomposition(R)
    alive = [J for J in D.two_sided_cells if not all(_annihilates(M, i) for i in J.members)]
    if not alive:
        raise ApexError("every two-sided cell annihilates the semimodule")
    top = [J for J in alive if not any(K is not J and D.j_leq(J, K) for K in alive)]
    if len(top) != 1:
        raise ApexError(f"{len(top)} maximal non-annihilating cells; expected one")
    if not top[0].idempotent:
        raise ApexError("the apex candidate is not idempotent")
    # every element of a minimal proper semimodule is idempotent, zero the
    # only invertible one
    assert invertible_elements(M) == {M.zero}
    return top[0]


def cell_names(R: BasedSemiring, cell: Iterable[int]) -> list:
    return [R.basis[i] for i in cell]
