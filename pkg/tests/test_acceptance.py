"""The eleven acceptance criteria, one test each (criterion 3 has a second, expected-failure part).

Each test prints ``criterion N: PASS|FAIL - summary``; the same lines are
repeated in the pytest terminal summary.
"""

import time
from fractions import Fraction

import pytest

from braidbench.coendmod import build_coend, character_module, check_coend_identities, check_pairing
from braidbench.doublemod import (
    YDModule,
    adjoint_yd,
    build_double,
    check_braiding,
    check_mirror,
    check_rmatrix,
    trivial_center,
    yd_check,
    yd_search,
    yd_solve,
)
from braidbench.grcat import GrObject, identity, simple, unit, zero_mor
from braidbench.hopfcore import (
    HopfData,
    antipode_from_fusion,
    build_An,
    check_hopf,
    free_module,
    regular_module,
    trivial_module,
)
from braidbench.monadmod import (
    CenterObject,
    augmentation_search,
    braiding_compatibility,
    center_probes,
    check_augmentation,
    check_monad_suite,
    counit_augmentation,
    cross_product_check,
    free_monad,
)
from braidbench.scalar import qbinom, qbinom_product

import oracles


def failed_keys(rep):
    return [r.key for r in rep.failures()]


def test_criterion_01_An_hopf_suite(criterion):
    t0 = time.perf_counter()
    bad = {}
    for n in (2, 3, 4, 5):
        rep = check_hopf(build_An(n))
        if not rep.ok:
            bad[n] = failed_keys(rep)
    dt = time.perf_counter() - t0
    ok = not bad and dt < 10
    criterion(1, ok, f"A_n Hopf axioms exact for n=2..5 in {dt:.1f}s" + (f"; failures {bad}" if bad else ""))
    assert ok


def test_criterion_02_antipode_recovery(criterion):
    mismatch = []
    for n in (2, 3, 4, 5):
        S = antipode_from_fusion(build_An(n).with_(S=None, Sinv=None))
        if oracles.dense_coords(S) != oracles.normalize(oracles.an_antipode(n), n):
            mismatch.append(n)
    ok = not mismatch
    criterion(2, ok, "S from the fusion operators equals (-1)^m q^(m(m-1)/2) x^m for n=2..5"
              + (f"; mismatch at {mismatch}" if mismatch else ""))
    assert ok


def _coend_suite():
    results = {}
    for n in (1, 2, 3, 4):
        cd = build_coend(n)
        hopf = check_hopf(cd.hopf)
        pair = check_pairing(cd)
        idents = check_coend_identities(cd)
        results[n] = {
            "fail": failed_keys(hopf) + failed_keys(pair) + failed_keys(idents),
            "omega_eps": pair.extra["omega_is_eps_eps"],
        }
    return results


def test_criterion_03_coend_suite(criterion):
    t0 = time.perf_counter()
    res = _coend_suite()
    dt = time.perf_counter() - t0
    axioms_ok = all(not r["fail"] for r in res.values())
    # what the category forces: omega = eps (x) eps iff B_n is symmetric (n | 2)
    symmetric_ok = all(r["omega_eps"] == oracles.braided_symmetric(n) for n, r in res.items())
    literal = {n: r["omega_eps"] == (n == 1) for n, r in res.items()}
    literal_ok = all(literal.values())
    ok = axioms_ok and literal_ok and dt < 30
    omegas = ", ".join(f"n={n}:{r['omega_eps']}" for n, r in res.items())
    criterion(3, ok, f"Hopf+pairing+identities exact for n=1..4 ({dt:.1f}s); omega=eps*eps at {omegas}; "
              f"clause 'iff n=1' {'holds' if literal_ok else 'fails at n=2 (B_2 is symmetric)'}")
    assert axioms_ok and symmetric_ok and dt < 30


@pytest.mark.xfail(strict=True, reason="B_2 is symmetric, so its pairing is eps (x) eps although n != 1")
def test_criterion_03_literal_omega_clause():
    res = _coend_suite()
    assert all(r["omega_eps"] == (n == 1) for n, r in res.items())


@pytest.mark.slow
def test_criterion_04_double_suite(criterion, coend):
    times = {}
    bad = {}
    for n in (2, 3):
        t0 = time.perf_counter()
        H, rd = build_double(build_An(n), coend(n))
        rep = check_hopf(H)
        check_rmatrix(rd, rep)
        times[n] = time.perf_counter() - t0
        if not rep.ok:
            bad[n] = failed_keys(rep)
    cd = coend(2)
    one = unit(2)
    I = identity(one)
    H1, rd1 = build_double(HopfData(one, I, I, I, I, I, I, name="1"), cd)
    unit_ok = all(getattr(H1, k) == getattr(cd.hopf, k) for k in ("m", "u", "cp", "eps", "S")) and rd1.r == cd.rmat
    ok = not bad and unit_ok and times[2] < 60 and times[3] < 900
    criterion(4, ok, f"D(A_2) {times[2]:.1f}s, D(A_3) {times[3]:.1f}s Hopf+R-matrix exact; D(1) = (C, rmat_C): {unit_ok}"
              + (f"; failures {bad}" if bad else ""))
    assert ok


def test_criterion_05_induced_braiding(criterion, double):
    H, rd = double(2)
    right = [trivial_module(H, "right"), regular_module(H, "right"), free_module(H, simple(2, 1))]
    rep = check_braiding(rd, right, morphisms=[(H.eps, right[1], right[0])])
    left = [trivial_module(H), regular_module(H)]
    check_braiding(rd, left, side="left", report=rep, prefix="left.")
    check_mirror(rd, left, rep)
    ok = rep.ok and "braiding.natural" in rep.keys()
    criterion(5, ok, f"{len(rep.keys())} braiding checks on D(A_2) probes (hexagons, naturality, mirror)"
              + ("" if rep.ok else f"; failures {failed_keys(rep)}"))
    assert ok


def test_criterion_06_yd_negative(criterion):
    problems = []
    for n in (2, 3, 5):
        cd, A = build_coend(n), build_An(n)
        Ac = trivial_center(cd, A.carrier)
        for chi in range(1, n):
            X = character_module(cd, 0, chi)
            cert = yd_search(cd, A, Ac, X)
            if yd_solve(cd, A, Ac, X) or cert["status"] != "empty" or not ("rank" in cert or "witness" in cert):
                problems.append((n, chi))
        if not yd_solve(cd, A, Ac, character_module(cd, 0, 0)):
            problems.append((n, 0))
    ok = not problems
    criterion(6, ok, "no YD structure on k_chi for nontrivial chi (n=2,3,5), certificates attached; trivial chi solvable"
              + (f"; problems {problems}" if problems else ""))
    assert ok


@pytest.mark.slow
def test_criterion_07_central_double(criterion, dA2, coend):
    probes = center_probes(coend(2))
    t0 = time.perf_counter()
    rep = check_monad_suite(dA2, probes)
    dt = time.perf_counter() - t0
    groups = sorted({k.split(".")[0] for k in rep.keys()})
    ok = rep.ok and dt < 300 and len(probes) == 5
    criterion(7, ok, f"d_A(A_2) suite ({', '.join(groups)}) on 4 simples + regular in {dt:.1f}s"
              + ("" if rep.ok else f"; failures {failed_keys(rep)}"))
    assert ok


def test_criterion_08_cross_product(criterion, an, coend, dA2):
    rep = cross_product_check(an(2), coend(2), dA=dA2)
    criterion(8, rep.ok, "? (x) D(A_2) equals U d_A F on probes {1, k_1, A_2}"
              + ("" if rep.ok else f"; failures {failed_keys(rep)}"))
    assert rep.ok


def test_criterion_09_augmentations(criterion, coend, dA2, an):
    cert = augmentation_search(dA2, A=an(2))
    cd = coend(2)
    T = free_monad(cd.hopf, cd)
    found = augmentation_search(T, exhaustive=True)
    e = counit_augmentation(T)
    probes = [CenterObject.trivial(cd, GrObject(2, (g,))) for g in range(2)]
    counit_json = [e(X).to_json() for X in probes]
    counit_found = found["status"] == "found" and counit_json in [s["components"] for s in found["solutions"]]
    verified = check_augmentation(T, e, center_probes(cd)).ok
    compatible = braiding_compatibility(T, e, center_probes(cd)).ok
    ok = cert["status"] == "empty" and counit_found and verified and compatible
    criterion(9, ok, f"d_(A_2): {cert['status']} (violated {cert.get('violation', {}).get('equation')}); "
              f"? (x) C: counit found among {len(found.get('solutions', []))} solutions, "
              f"verified={verified}, braiding-compatible={compatible}")
    assert ok


def test_criterion_10_negative_fixtures(criterion, an, coend, double, dA2):
    A = an(2)
    H, rd = double(2)
    cd = coend(2)
    Ac = trivial_center(cd, A.carrier)
    probes = center_probes(cd)[:2]
    zero_eta = dA2.with_(eta=lambda X: zero_mor(X.carrier, dA2.apply_obj(X).carrier))
    cases = {
        "broken S": (check_hopf(A), check_hopf(A.with_(S=identity(A.carrier), Sinv=None))),
        "broken Delta": (check_hopf(A), check_hopf(A.with_(cp=A.cp * 2))),
        "broken R": (check_rmatrix(rd), check_rmatrix(rd.with_r(rd.r * 2))),
        # control: adjoint action; fixture: regular action with the same coaction
        "non-YD pair": (yd_check(cd, adjoint_yd(cd, A, Ac)), yd_check(cd, YDModule(A, Ac, Ac, A.m, A.cp))),
        "zero eta": (check_monad_suite(dA2, probes, triples=False, braiding=False),
                     check_monad_suite(zero_eta, probes, triples=False, braiding=False)),
    }
    verdict = {}
    for name, (good, bad) in cases.items():
        ce = bad.failures()[0].counterexample if bad.failures() else None
        verdict[name] = good.ok and not bad.ok and bool(ce)
    ok = all(verdict.values())
    criterion(10, ok, "; ".join(f"{k}: {'rejected' if v else 'NOT rejected'}" for k, v in verdict.items()))
    assert ok


def test_criterion_11_qbinom(criterion):
    bad = []
    for q in (2, 3, -1):
        poly_at = lambda m, k: Fraction(int(oracles.qbinom_poly(m, k).eval(q)))
        for m in range(9):
            for k in range(m + 1):
                pascal = Fraction(qbinom(m, k, q))
                try:
                    product = qbinom_product(m, k, q)
                except ZeroDivisionError:
                    # q = -1 kills a denominator: use the cancelled product, a polynomial in q
                    product = poly_at(m, k)
                if pascal != product or pascal != poly_at(m, k):
                    bad.append((q, m, k))
    ok = not bad
    criterion(11, ok, "Pascal = product formula at q in {2, 3, -1}, 0<=k<=m<=8" + (f"; mismatches {bad}" if bad else ""))
    assert ok
