import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from braidbench.grcat import GrMorphism, GrObject, compose, identity
from braidbench.linalg import (
    Inconsistent,
    SingularError,
    is_invertible,
    mor_inverse,
    mor_rank,
    rank,
    solve_affine,
    solve_morphisms,
)
from braidbench.scalar import Cyc


def to_rows(matrix, n=1):
    return [{j: Cyc.const(n, v) for j, v in enumerate(r) if v} for r in matrix]


small = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=60, deadline=None)
@given(small)
def test_rank_matches_sympy(matrix):
    assert rank(to_rows(matrix)) == sympy.Matrix(matrix).rank()


@settings(max_examples=40, deadline=None)
@given(small, st.data())
def test_solve_affine_consistent_system(matrix, data):
    ncols = len(matrix[0])
    x = data.draw(st.lists(st.integers(-4, 4), min_size=ncols, max_size=ncols))
    eqs = [({j: Cyc.const(1, v) for j, v in enumerate(r) if v}, sum(a * b for a, b in zip(r, x))) for r in matrix]
    sol = solve_affine(eqs, ncols, 1)
    assert sol.dimension == ncols - sympy.Matrix(matrix).rank()
    pt = sol.point(1, [3] * sol.dimension)
    for coeffs, b in eqs:
        lhs = sum((coeffs[j] * pt[j] for j in coeffs), Cyc.zero(1))
        assert lhs == Cyc.const(1, b)


def test_solve_affine_inconsistent():
    one = Cyc.one(3)
    with pytest.raises(Inconsistent) as err:
        solve_affine([({0: one}, one), ({0: one}, Cyc.zero(3))], 1, 3)
    assert err.value.witness is not None


def test_inverse_over_cyclotomic_field():
    X = GrObject(3, (0, 0, 1))
    z = Cyc.root_power(3, 1)
    f = GrMorphism.from_entries(X, X, [(0, 0, z), (0, 1, 1), (1, 0, 1), (2, 2, z + 2)])
    g = mor_inverse(f)
    assert compose(f, g) == identity(X) and compose(g, f) == identity(X)
    assert is_invertible(f) and mor_rank(f) == 3


def test_singular_detected():
    X = GrObject(2, (0, 0))
    f = GrMorphism.from_entries(X, X, [(0, 0, 1), (0, 1, 1), (1, 0, 2), (1, 1, 2)])
    assert not is_invertible(f) and mor_rank(f) == 1
    with pytest.raises(SingularError):
        mor_inverse(f)


def test_solve_morphisms_commutant():
    # endomorphisms of k_0 + k_0 + k_1 commuting with diag(1, 2, 1): two diagonal entries plus the k_1 block
    X = GrObject(5, (0, 0, 1))
    d = GrMorphism.from_entries(X, X, [(0, 0, 1), (1, 1, 2), (2, 2, 1)])
    fam = solve_morphisms(X, X, [lambda F: compose(F, d) - compose(d, F)])
    assert fam.dimension == 3
    for b in fam.basis():
        assert compose(b, d) == compose(d, b)
