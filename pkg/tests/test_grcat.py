import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidbench.grcat import (
    GrMorphism,
    GrObject,
    HomogeneityError,
    braiding,
    braiding_inv,
    compose,
    identity,
    left_dual,
    right_dual,
    simple,
    tensor_mor,
    tensor_obj,
    unit,
    zero_mor,
)
from braidbench.scalar import Cyc, make_root


def objects(n, max_dim=3):
    return st.lists(st.integers(0, n - 1), min_size=0, max_size=max_dim).map(lambda d: GrObject(n, tuple(d)))


def morphisms(src, dst):
    slots = [(i, j) for i in range(dst.dim) for j in range(src.dim) if dst.degs[i] == src.degs[j]]
    vals = st.lists(st.integers(-3, 3), min_size=len(slots), max_size=len(slots))
    return vals.map(lambda vs: GrMorphism.from_entries(src, dst, [(i, j, v) for (i, j), v in zip(slots, vs) if v]))


@st.composite
def composable(draw, n=3):
    X, Y, Z = (draw(objects(n)) for _ in range(3))
    return draw(morphisms(Y, Z)), draw(morphisms(X, Y))


def test_tensor_obj_examples():
    A3 = GrObject(3, (0, 1, 2))
    assert tensor_obj(unit(3), A3) == A3
    assert tensor_obj(simple(2, 1), simple(2, 1)) == GrObject(2, (0,))
    assert tensor_obj(A3, A3).dim == 9
    # lexicographic order of basis pairs
    assert tensor_obj(A3, A3).degs == tuple((i + j) % 3 for i in range(3) for j in range(3))


def test_homogeneity_enforced():
    with pytest.raises(HomogeneityError):
        GrMorphism.from_entries(simple(3, 0), simple(3, 1), [(0, 0, 1)])


def test_identity_laws():
    X = GrObject(4, (0, 1, 1, 3))
    f = GrMorphism.from_entries(X, X, [(1, 2, 5), (0, 0, -1)])
    assert compose(identity(X), f) == f
    assert compose(f, identity(X)) == f
    Y = GrObject(4, (2,))
    assert tensor_mor(identity(X), identity(Y)) == identity(X @ Y)


@settings(max_examples=40, deadline=None)
@given(composable(), composable())
def test_interchange_law(fg, hk):
    (f, h), (g, k) = fg, hk
    assert compose(tensor_mor(f, g), tensor_mor(h, k)) == tensor_mor(compose(f, h), compose(g, k))


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_composition_associative(data):
    W, X, Y, Z = (data.draw(objects(3)) for _ in range(4))
    f, g, h = data.draw(morphisms(W, X)), data.draw(morphisms(X, Y)), data.draw(morphisms(Y, Z))
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_braiding_simple_scalar(n):
    k1 = simple(n, 1)
    c = braiding(k1, k1)
    assert c.entry(0, 0) == make_root(n)
    X = GrObject(n, (0, 1))
    assert braiding(unit(n), X) == identity(X)


def test_double_braiding_symmetry():
    for n, want in ((2, 1), (4, -1)):
        k1 = simple(n, 1)
        cc = compose(braiding(k1, k1), braiding(k1, k1))
        assert cc.entry(0, 0) == Cyc.const(n, want)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.tuples(objects(n), objects(n), objects(n))))
def test_hexagon_and_inverse(XYZ):
    X, Y, Z = XYZ
    lhs = braiding(X, Y @ Z)
    rhs = compose(tensor_mor(identity(Y), braiding(X, Z)), tensor_mor(braiding(X, Y), identity(Z)))
    assert lhs == rhs
    lhs = braiding(X @ Y, Z)
    rhs = compose(tensor_mor(braiding(X, Z), identity(Y)), tensor_mor(identity(X), braiding(Y, Z)))
    assert lhs == rhs
    assert compose(braiding_inv(X, Y), braiding(Y, X)) == identity(Y @ X)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_braiding_natural(data):
    n = 3
    X, Xp, Y = (data.draw(objects(n)) for _ in range(3))
    f = data.draw(morphisms(X, Xp))
    assert compose(braiding(Xp, Y), tensor_mor(f, identity(Y))) == compose(tensor_mor(identity(Y), f), braiding(X, Y))


def test_unit_dual():
    D, ev, coev = left_dual(unit(3))
    assert D == unit(3)
    assert ev == identity(unit(3)) and coev == identity(unit(3))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_dual_degrees(n):
    D, _, _ = left_dual(GrObject(n, tuple(range(n))))
    assert sorted(D.degs) == sorted((-m) % n for m in range(n))


@pytest.mark.parametrize("which", [left_dual, right_dual])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_snakes(which, n):
    X = GrObject(n, tuple(range(n)) + (1,))
    D, e, c = which(X)
    if which is left_dual:
        # ev : D X -> 1, coev : 1 -> X D
        assert compose(tensor_mor(e, identity(D)), tensor_mor(identity(D), c)) == identity(D)
        assert compose(tensor_mor(identity(X), e), tensor_mor(c, identity(X))) == identity(X)
    else:
        # rev : X D -> 1, rcoev : 1 -> D X
        assert compose(tensor_mor(identity(D), e), tensor_mor(c, identity(D))) == identity(D)
        assert compose(tensor_mor(e, identity(X)), tensor_mor(identity(X), c)) == identity(X)


def test_zero_and_json_roundtrip():
    X = GrObject(3, (0, 1, 2))
    z = zero_mor(X, X)
    assert z.is_zero()
    f = GrMorphism.from_entries(X, X, [(1, 1, make_root(3)), (2, 2, 7)])
    assert GrMorphism.from_json(f.to_json()) == f
    d = f.first_difference(identity(X))
    assert d is not None and d[:2] == (0, 0)


def test_mismatched_shapes_rejected():
    X, Y = GrObject(3, (0,)), GrObject(3, (1,))
    with pytest.raises(ValueError):
        compose(identity(X), identity(Y))
    with pytest.raises(ValueError):
        tensor_obj(GrObject(2, (0,)), GrObject(3, (0,)))
