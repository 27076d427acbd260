import pytest

from braidbench.grcat import GrMorphism, compose, identity, tensor_mor, unit
from braidbench.hopfcore import (
    NotHopfError,
    antipode_from_fusion,
    antipode_solutions,
    build_An,
    check_hopf,
    fa_functor,
    free_module,
    fusion_ops,
    module_check,
    module_dual,
    module_tensor,
    regular_module,
    trivial_module,
)
from braidbench.linalg import mor_rank
from braidbench.scalar import Cyc, make_root

import oracles

NS = [2, 3, 4, 5]


def vec(H, m):
    """Column of the basis vector x^m as a morphism 1 -> A."""
    return GrMorphism.from_entries(unit(H.n), H.carrier.__class__(H.n, (m,)), [(0, 0, 1)])


def test_coproduct_of_x():
    A = build_An(3)
    # x is basis 1; x (x) 1 has index 1*3+0, 1 (x) x has index 0*3+1
    assert A.cp.column(1) == {3: Cyc.one(3), 1: Cyc.one(3)}


def test_antipode_x_squared():
    A = build_An(3)
    assert A.S.entry(2, 2) == make_root(3)


@pytest.mark.parametrize("n", NS)
def test_counit(n):
    A = build_An(n)
    assert [A.eps.entry(0, m) for m in range(n)] == [Cyc.one(n)] + [Cyc.zero(n)] * (n - 1)


@pytest.mark.parametrize("n", NS)
def test_structure_matches_oracle(n):
    A = build_An(n)
    assert oracles.dense_coords(A.cp) == oracles.normalize(oracles.an_coproduct(n), n)
    assert oracles.dense_coords(A.m) == oracles.normalize(oracles.an_product(n), n)
    assert oracles.dense_coords(A.S) == oracles.normalize(oracles.an_antipode(n), n)


@pytest.mark.parametrize("n", NS)
def test_check_hopf_An(n):
    rep = check_hopf(build_An(n))
    assert rep.ok, rep.failures()
    assert "bialg.delta_m" in rep.keys()


def test_check_hopf_catches_identity_antipode():
    A = build_An(2)
    rep = check_hopf(A.with_(S=identity(A.carrier), Sinv=None))
    bad = {r.key for r in rep.failures()}
    assert bad == {"antipode.left", "antipode.right"}
    ce = rep.failures()[0].counterexample
    assert {"row", "col", "lhs", "rhs"} <= set(ce)


def test_check_hopf_coend(coend):
    assert check_hopf(coend(2).hopf).ok


def test_fusion_example():
    A = build_An(2)
    Hl, _Hr = fusion_ops(A)
    # x (x) 1 is index 2; image x (x) 1 + 1 (x) x
    assert Hl.column(2) == {2: Cyc.one(2), 1: Cyc.one(2)}
    assert mor_rank(Hl) == 4


def test_fusion_trivial_coend(coend):
    Hl, Hr = fusion_ops(coend(1).hopf)
    one = unit(1)
    assert Hl == identity(one @ one) and Hr == identity(one @ one)


@pytest.mark.parametrize("n", NS)
def test_antipode_from_fusion(n):
    A = build_An(n)
    S, Sinv = antipode_from_fusion(A.with_(S=None, Sinv=None), with_inverse=True)
    assert oracles.dense_coords(S) == oracles.normalize(oracles.an_antipode(n), n)
    assert compose(S, Sinv) == identity(A.carrier)


def test_antipode_unique():
    A = build_An(3)
    fam = antipode_solutions(A.with_(S=None, Sinv=None))
    assert fam.dimension == 0 and fam.member() == A.S


def test_non_hopf_bialgebra_rejected():
    A = build_An(2)
    collapse = compose(tensor_mor(A.u, A.u), A.eps)
    bad = A.with_(cp=collapse, S=None, Sinv=None)
    with pytest.raises(NotHopfError):
        antipode_from_fusion(bad)


# modules

@pytest.mark.parametrize("side", ["left", "right"])
def test_regular_and_trivial_modules(side):
    A = build_An(3)
    for M in (regular_module(A, side), trivial_module(A, side)):
        assert module_check(M).ok


def test_tensor_with_trivial_module():
    A = build_An(2)
    M = regular_module(A)
    TM = module_tensor(trivial_module(A), M)
    assert TM.carrier.dim == M.carrier.dim
    assert TM.action == M.action


def test_fa_functor_gives_right_module():
    A = build_An(2)
    R = fa_functor(regular_module(A))
    assert R.side == "right" and module_check(R).ok


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("side", ["left", "right"])
@pytest.mark.parametrize("which", ["left", "right"])
def test_dual_modules(n, side, which):
    A = build_An(n)
    M = module_dual(regular_module(A, side), which)
    assert module_check(M).ok


def test_tensor_of_regular_modules():
    A = build_An(3)
    M = module_tensor(regular_module(A), regular_module(A))
    assert module_check(M).ok


def test_free_module():
    A = build_An(3)
    F = free_module(A, A.carrier)
    assert F.side == "right" and module_check(F).ok


def test_module_errors():
    A = build_An(2)
    with pytest.raises(ValueError):
        module_tensor(regular_module(A, "left"), regular_module(A, "right"))
    with pytest.raises(ValueError):
        module_dual(regular_module(A.with_(S=None, Sinv=None)), "left")
    with pytest.raises(ValueError):
        build_An(1)
