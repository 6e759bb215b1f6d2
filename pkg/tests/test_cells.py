import pytest

from semimod.catalogs import builtin_fixtures
from semimod.cells import (
    annihilator_cells,
    apex,
    booleanize,
    cell_decomposition,
    cell_names,
    cell_semimodule,
    collapse_map,
    km_incomparability_violations,
    reduced_cell_semimodule,
)
from semimod.errors import ApexError, MixedAnnihilationError, NilpotentCellError, NotALeftCellError
from semimod.presets import group_preset, group_semiring, kl_dihedral, kl_hat_s2, z_nonneg
from semimod.semimodule import (
    FinMonoid,
    Semimodule,
    are_isomorphic,
    is_hom,
    is_minimal,
    validate_semimodule,
)
from semimod.semiring import BasedSemiring

R3 = kl_dihedral(3)
S3 = dict(builtin_fixtures("s3-kl"))
BASED_PRESETS = [kl_dihedral(n) for n in range(3, 9)] + [
    group_semiring(group_preset(g)) for g in ("s2", "s3", "c4", "d8")] + [kl_hat_s2(), z_nonneg()]


def idx(R, *names):
    return {R.index(n) for n in names}


def test_booleanize_examples():
    B = booleanize(R3)
    assert B.supp_mult[R3.index("s")][R3.index("ts")] == idx(R3, "s", "w0")
    for x in range(R3.k):
        assert B.supp_mult[R3.index("e")][x] == {x}
    assert B.supp_mult[R3.index("w0")][R3.index("w0")] == idx(R3, "w0")


def test_s3_cells():
    D = cell_decomposition(R3)
    assert [cell_names(R3, J.members) for J in D.two_sided_cells] == [["e"], ["s", "t", "st", "ts"], ["w0"]]
    middle = [cell_names(R3, c) for c in D.left_cells if len(c) == 2]
    assert middle == [["s", "ts"], ["t", "st"]]
    assert all(J.idempotent and J.strongly_regular for J in D.two_sided_cells)


def test_group_semiring_single_cell():
    R = group_semiring(group_preset("s3"))
    D = cell_decomposition(R)
    assert len(D.two_sided_cells) == 1 and D.two_sided_cells[0].members == tuple(range(6))


def test_d8_not_strongly_regular():
    R = kl_dihedral(4)
    D = cell_decomposition(R)
    J = D.two_sided_cell_of(R.index("s"))
    assert not J.strongly_regular
    assert idx(R, "s", "sts") in [set(h) for h in D.h_cells.values()]


@pytest.mark.parametrize("R", BASED_PRESETS, ids=lambda R: "+".join(R.basis)[:30])
def test_decomposition_invariants(R):
    D = cell_decomposition(R)
    k = R.k
    for leq in (D.left_leq, D.right_leq, D.two_sided_leq):
        assert all(leq[i][i] for i in range(k))
        assert all(leq[i][j] for i in range(k) for j in range(k) for m in range(k) if leq[i][m] and leq[m][j])
    for (a, b), h in D.h_cells.items():
        assert set(h) == set(D.left_cells[a]) & set(D.right_cells[b])
    for J in D.two_sided_cells:
        if J.strongly_regular:
            assert all(len(h) == 1 for h in D.h_cells.values() if set(h) <= set(J.members))
        assert J.idempotent
    assert km_incomparability_violations(D) == []


def test_cell_semimodule_s3():
    Cs = cell_semimodule(R3, "s")
    assert Cs.size == 4 and validate_semimodule(Cs) == []
    assert Cs.action("e") == tuple(range(4))
    # {s} is bit 0; w0 sends it to the empty set
    assert Cs.action("w0")[1] == 0
    assert are_isomorphic(Cs, S3["M4"])
    assert are_isomorphic(Cs, cell_semimodule(R3, "t"))


def test_not_a_left_cell():
    with pytest.raises(NotALeftCellError):
        cell_semimodule(R3, ["s", "t"])
    assert cell_semimodule(R3, ["ts", "s"]) == cell_semimodule(R3, "s")


@pytest.mark.parametrize("n", range(3, 8))
def test_reduced_cell_semimodule_dihedral(n):
    R = kl_dihedral(n)
    D = cell_decomposition(R)
    C = reduced_cell_semimodule(R, "s", D)
    assert C.names == ("0", "x", "y", "x+y")
    Rs, Rt = set(D.right_cell_of(R.index("s"))), set(D.right_cell_of(R.index("t")))
    x, y = 1, 2
    for i, w in enumerate(R.basis):
        f = C.actions[i]
        if w == "w0":
            assert f[x] == 0 and f[y] == 0
            continue
        assert f[x] == (y if i in Rt else x)
        assert f[y] == (x if i in Rs else y)
    assert C.action("e") == tuple(range(4))
    assert is_minimal(C)
    h = collapse_map(R, "s", D)
    assert is_hom(h.source, h.target, h.map) and h.is_surjective()


def test_strongly_regular_reduced_equals_cell():
    assert are_isomorphic(reduced_cell_semimodule(R3, "s"), cell_semimodule(R3, "s"))


def test_nilpotent_cell_rejected():
    # basis e, a with a*a = 0: the cell {a} is nilpotent
    R = BasedSemiring(("e", "a"), (1, 0), (((1, 0), (0, 1)), ((0, 1), (0, 0))))
    D = cell_decomposition(R)
    assert not D.two_sided_cell_of(1).idempotent
    with pytest.raises(NilpotentCellError):
        reduced_cell_semimodule(R, "a")


def test_apex_examples():
    D = cell_decomposition(R3)
    assert cell_names(R3, apex(R3, S3["M4"], D).members) == ["s", "t", "st", "ts"]
    assert cell_names(R3, apex(R3, S3["M1"], D).members) == ["w0"]
    assert cell_names(R3, apex(R3, S3["M2"], D).members) == ["e"]
    with pytest.raises(ApexError):
        apex(R3, S3["M7"], D)


def test_annihilator_cells():
    assert annihilator_cells(R3, S3["M3"]) == [False, False, True]
    assert annihilator_cells(R3, S3["M1"]) == [False, False, False]
    zero = Semimodule(R3, FinMonoid(((0,),)), tuple((0,) for _ in range(6)))
    assert annihilator_cells(R3, zero) == [True, True, True]


def test_mixed_annihilation_detected():
    # not a semimodule, but exercises the consistency check
    acts = [(0, 1)] * 6
    acts[R3.index("s")] = (0, 0)
    fake = Semimodule(R3, FinMonoid(((0, 1), (1, 1))), acts)
    with pytest.raises(MixedAnnihilationError):
        annihilator_cells(R3, fake)
