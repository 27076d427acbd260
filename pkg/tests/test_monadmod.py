import pytest

from braidbench.coendmod import character_module, regular_c_module
from braidbench.doublemod import RMatrixData
from braidbench.grcat import GrObject, compose, identity, tensor_mor, unit, zero_mor
from braidbench.hopfcore import module_check, module_dual
from braidbench.linalg import SingularError, mor_rank
from braidbench.monadmod import (
    CenterObject,
    augmentation_search,
    braiding_compatibility,
    center_probes,
    check_augmentation,
    check_monad_suite,
    check_tmodule_braiding,
    counit_augmentation,
    cross_product_check,
    dual_tmodule,
    free_monad,
    hopf_monad_antipodes,
    tmodule_check,
    tmodule_tensor,
)
from braidbench.report import Report


@pytest.fixture(scope="module")
def freeC2(coend):
    cd = coend(2)
    return free_monad(cd.hopf, cd, RMatrixData(cd.hopf, cd, cd.rmat))


def test_center_object_basics(coend):
    cd = coend(3)
    X = CenterObject.from_module(character_module(cd, 1, 2), cd)
    assert X.check().ok
    assert X.tensor(X).carrier == GrObject(3, (2,))
    assert X.left_dual().check().ok and X.right_dual().check().ok
    with pytest.raises(ValueError):
        CenterObject(GrObject(3, (0,)), identity(GrObject(3, (0,))), cd)


def test_center_probes(coend):
    cd = coend(2)
    probes = center_probes(cd)
    assert len(probes) == 5 and probes[-1].carrier == cd.carrier
    assert len(center_probes(cd, regular=False)) == 4


def test_free_monad_on_unit(freeC2, coend):
    cd = coend(2)
    assert freeC2.apply_obj(freeC2.unit_object()).carrier == cd.carrier


def test_dA_output_is_center_object(dA2, coend):
    cd = coend(2)
    out = dA2.apply_obj(CenterObject.trivial(cd, unit(2)))
    assert out.carrier.dim == 4
    assert module_check(out.module).ok


def test_free_monad_suite(freeC2, coend):
    rep = check_monad_suite(freeC2, center_probes(coend(2), regular=False))
    assert rep.ok, rep.failures()
    for key in ("monad.assoc", "bimonad.mu_T2", "hopf.fusion_left", "qt.first", "qt.braiding.hexagon_left"):
        assert key in rep.keys()


def test_dA_suite_on_two_probes(dA2, coend):
    probes = center_probes(coend(2))
    rep = check_monad_suite(dA2, [probes[1], probes[-1]], triples=False, braiding=False)
    assert rep.ok, rep.failures()


def test_zero_unit_rejected(dA2, coend):
    cd = coend(2)
    probes = center_probes(cd)[:2]
    bad = dA2.with_(eta=lambda X: zero_mor(X.carrier, dA2.apply_obj(X).carrier))
    rep = check_monad_suite(bad, probes, triples=False, braiding=False)
    failed = {r.key for r in rep.failures()}
    assert {"monad.unit_left", "monad.unit_right"} <= failed
    ce = next(r for r in rep.failures() if r.key == "monad.unit_left").counterexample
    assert ce["lhs"] != ce["rhs"]


def test_mutated_T2_has_singular_fusion(freeC2, coend):
    cd = coend(2)
    bad = freeC2.with_(T2=lambda X, Y: freeC2.T2(X, Y).scale(0))
    X = center_probes(cd)[1]
    with pytest.raises(SingularError):
        hopf_monad_antipodes(bad, X)
    rep = check_monad_suite(bad, [X], triples=False)
    assert "hopf.fusion_left" in {r.key for r in rep.failures()}


@pytest.mark.parametrize("which", ["left", "right"])
def test_dual_tmodules(which, freeC2, dA2, coend):
    cd = coend(2)
    X = center_probes(cd)[3]
    for T in (freeC2, dA2):
        if T.extra.get("on") == "B":
            X = CenterObject.trivial(cd, X.carrier)
        # the free T-module (T X, mu_X) and its dual
        D, r = dual_tmodule(T, T.apply_obj(X), T.mu(X), which)
        assert tmodule_check(T, D, r).ok


def test_dual_of_free_module_matches_module_dual(freeC2, coend):
    cd = coend(2)
    # (C, m) as the free T-module on the unit
    Mt = CenterObject.trivial(cd, cd.carrier)
    for which in ("left", "right"):
        _D, r = dual_tmodule(freeC2, Mt, cd.hopf.m, which)
        assert r == module_dual(regular_c_module(cd), which).action


def test_antipodes_on_unit_are_surjective(freeC2):
    one = freeC2.unit_object()
    s_l, s_r = hopf_monad_antipodes(freeC2, one)
    assert mor_rank(s_l) == s_l.dst.dim and mor_rank(s_r) == s_r.dst.dim


def test_tmodule_braiding_on_free_modules(dA2, coend):
    probes = center_probes(coend(2))
    mods = [(dA2.apply_obj(X), dA2.mu(X)) for X in probes[:2]]
    rep = check_tmodule_braiding(dA2, mods, Report({"n": 2}))
    assert rep.ok, rep.failures()
    M, r = tmodule_tensor(dA2, *mods)
    assert tmodule_check(dA2, M, r).ok


# cross product

def test_cross_product(an, coend, dA2):
    rep = cross_product_check(an(2), coend(2), dA=dA2)
    assert rep.ok, rep.failures()


def test_cross_product_needs_identification(an, coend, dA2):
    rep = cross_product_check(an(2), coend(2), dA=dA2, identification="none")
    assert not rep.ok
    assert rep.failures()[0].counterexample is not None


# augmentations

def test_dA_has_no_augmentation(an, coend, dA2):
    cert = augmentation_search(dA2, A=an(2))
    assert cert["status"] == "empty"
    assert cert["violation"]["equation"].startswith("aug.")
    assert cert["yd_cross_check"]["character_has_yd_structure"] == {"0": True, "1": False}


def test_free_monad_augmentations(freeC2, coend):
    cert = augmentation_search(freeC2, exhaustive=True)
    assert cert["status"] == "found" and cert["verified"]
    assert all(s["verified"] for s in cert["solutions"])
    counit = counit_augmentation(freeC2)
    probes = [CenterObject.trivial(coend(2), GrObject(2, (g,))) for g in range(2)]
    want = [counit(X).to_json() for X in probes]
    assert want in [s["components"] for s in cert["solutions"]]


def test_counit_augmentation(freeC2, coend):
    probes = center_probes(coend(2))
    e = counit_augmentation(freeC2)
    assert check_augmentation(freeC2, e, probes).ok
    assert braiding_compatibility(freeC2, e, probes).ok
    rep = check_augmentation(freeC2, lambda X: e(X).scale(2), probes)
    assert not rep.ok and rep.failures()[0].counterexample is not None


def test_augmentation_search_input_checked():
    with pytest.raises(ValueError):
        augmentation_search(4)
