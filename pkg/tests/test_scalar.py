from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidbench.scalar import Cyc, arith, cyclotomic_poly, make_root, qbinom, qbinom_product

import oracles

MODULI = [1, 2, 3, 4, 5, 6, 8, 12]


def cyc(n):
    deg = len(Cyc.zero(n).c)
    rat = st.fractions(min_value=-20, max_value=20, max_denominator=7)
    return st.lists(rat, min_size=deg, max_size=deg).map(lambda c: Cyc(n, c))


def test_make_root_basic():
    assert make_root(4) ** 2 == Cyc.const(4, -1)
    assert make_root(1) == Cyc.one(1)
    assert make_root(3) ** 3 == Cyc.one(3)


@pytest.mark.parametrize("n", MODULI)
def test_root_is_primitive(n):
    z = make_root(n)
    powers = [z ** k for k in range(1, n + 1)]
    assert powers[-1] == Cyc.one(n)
    assert all(p != Cyc.one(n) for p in powers[:-1])


@pytest.mark.parametrize("n", MODULI)
def test_root_powers_match_sympy(n):
    z = make_root(n)
    for k in range(2 * n):
        assert oracles.coords(z ** k) == oracles.root_power_coords(n, k)


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_mul_inverse_power(n):
    z = make_root(n)
    assert arith(z, z ** (n - 1), "mul") == Cyc.one(n)


def test_div_example():
    z = make_root(3)
    q = arith(Cyc.one(3), Cyc.one(3) + z, "div")
    assert q * (Cyc.one(3) + z) == Cyc.one(3)
    assert q == -z
    assert oracles.close(oracles.to_complex(q), 1 / (1 + oracles.to_complex(z)))


def test_arith_errors():
    with pytest.raises(ZeroDivisionError):
        arith(Cyc.one(3), Cyc.zero(3), "div")
    with pytest.raises(ValueError):
        arith(Cyc.one(3), Cyc.one(4), "add")
    with pytest.raises(ValueError):
        arith(Cyc.one(3), Cyc.one(3), "pow")
    with pytest.raises(ValueError):
        make_root(0)


def test_cyclotomic_poly_matches_sympy():
    import sympy

    x = sympy.Symbol("x")
    for n in range(1, 16):
        expect = [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs())]
        assert [int(c) for c in cyclotomic_poly(n)] == expect


@pytest.mark.parametrize("n", [3, 5, 8, 12])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_field_axioms(n, data):
    a, b, c = (data.draw(cyc(n)) for _ in range(3))
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + Cyc.zero(n) == a
    if not b.is_zero():
        assert (a / b) * b == a


@pytest.mark.parametrize("n", [3, 5, 7, 12])
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_embedding_is_a_ring_map(n, data):
    a, b = data.draw(cyc(n)), data.draw(cyc(n))
    A, B = oracles.to_complex(a), oracles.to_complex(b)
    assert oracles.close(oracles.to_complex(a * b), A * B, 1e-6)
    assert oracles.close(oracles.to_complex(a - b), A - B, 1e-6)


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 9), st.integers(-5, 5), st.integers(-5, 5))
def test_parse_roundtrip(n, a, b):
    v = Cyc.const(n, a) + Cyc.const(n, b) * make_root(n)
    assert Cyc.parse(n, str(v)) == v


def test_rational_projection():
    assert Cyc.const(5, Fraction(3, 4)).rational() == Fraction(3, 4)
    with pytest.raises(ValueError):
        make_root(5).rational()


# q-binomials

def test_qbinom_examples():
    z = make_root(5)
    assert all(qbinom(m, 0, z) == Cyc.one(5) for m in range(6))
    assert qbinom(2, 1, 2) == 3
    assert qbinom(2, 1, z) == Cyc.one(5) + z
    for n in range(2, 9):
        assert qbinom(n, 1, make_root(n)).is_zero()


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_qbinom_at_roots_matches_sympy(n):
    z = make_root(n)
    for m in range(n + 3):
        for k in range(m + 1):
            want = oracles.reduce_cyclotomic(n, oracles.qbinom_poly(m, k))
            assert oracles.coords(qbinom(m, k, z)) == want, (m, k)


@given(st.integers(0, 10).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, m))),
       st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_qbinom_pascal_vs_product(mk, q):
    m, k = mk
    if any(q ** i == 1 for i in range(1, k + 1)):
        return
    assert qbinom(m, k, q) == oracles.qbinom_fraction(m, k, q)
    assert qbinom_product(m, k, q) == oracles.qbinom_fraction(m, k, q)


def test_qbinom_errors():
    with pytest.raises(ValueError):
        qbinom(2, 3, 2)
    with pytest.raises(ValueError):
        qbinom(-1, 0, 2)
    with pytest.raises(ZeroDivisionError):
        qbinom_product(3, 2, -1)
