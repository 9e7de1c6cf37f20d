import numpy as np
import pytest
from hypothesis import given, strategies as st

from twistdec.algebra import (
    BiPoly,
    FieldError,
    Poly,
    bipoly_translate,
    compose,
    extension_field,
    field_make,
    is_irreducible,
    multipoint_eval,
    pack,
    poly_eval,
    univariate_roots,
    unpack,
    wdeg,
)
from twistdec.gscore import multiplicity_at

FIELDS = [(2, 1), (7, 1), (23, 1), (2, 3), (2, 8), (3, 4), (5, 2), (23, 2)]
F23 = field_make(23)
EX1_POLY = (4, 2, 10, 11, 8, 2)


def test_prime_field_has_no_modulus():
    F = field_make(23, 1)
    assert F.q == 23 and F.modulus == () and F.is_prime_field


def test_gf8_modulus_is_smallest_irreducible():
    F = field_make(2, 3)
    assert F.modulus == (1, 1, 0, 1)
    cubics = [(a, b, c, 1) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    irreducible = [f for f in cubics if is_irreducible(f, 2)]
    assert min(irreducible, key=lambda f: sum(c * 2**i for i, c in enumerate(f))) == F.modulus


def test_non_prime_characteristic_rejected():
    with pytest.raises(FieldError):
        field_make(4, 1)


def test_field_is_cached():
    assert field_make(2, 8) is field_make(2, 8)


def test_worked_scalars():
    assert F23.inv(11) == 21
    assert F23.pow(11, 5) == 5
    for a in range(23):
        assert F23.add(a, F23.neg(a)) == 0


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        F23.inv(0)


@pytest.mark.parametrize("p,e", FIELDS)
def test_field_axioms_random(p, e):
    F = field_make(p, e)
    rng = np.random.default_rng(p * 100 + e)
    a, b, c = (rng.integers(F.q, size=300) for _ in range(3))
    assert np.array_equal(F.vmul(a, F.vadd(b, c)), F.vadd(F.vmul(a, b), F.vmul(a, c)))
    assert np.array_equal(F.vmul(F.vmul(a, b), c), F.vmul(a, F.vmul(b, c)))
    assert np.array_equal(F.vadd(F.vadd(a, b), c), F.vadd(a, F.vadd(b, c)))
    nz = a[a != 0]
    assert np.all(F.vmul(nz, F.vinv(nz)) == 1)
    assert np.all(F.vsub(a, a) == 0)
    for x, y in zip(a[:40].tolist(), b[:40].tolist()):
        assert F.mul(x, y) == int(F.vmul(np.array([x]), np.array([y]))[0])
        assert F.add(x, y) == int(F.vadd(np.array([x]), np.array([y]))[0])


@pytest.mark.parametrize("p,e", [(2, 3), (3, 2), (5, 2)])
def test_extension_multiplicative_group_is_cyclic_of_order_q_minus_1(p, e):
    F = field_make(p, e)
    for a in range(1, F.q):
        assert F.pow(a, F.q - 1) == 1


def test_field_element_operators():
    x = F23(11)
    assert int(x * x.inv()) == 1
    assert int(x**5) == 5
    assert int(-x + x) == 0
    with pytest.raises(FieldError):
        field_make(7)(1) + field_make(11)(1)


def test_pack_prime_base():
    assert pack(F23, F23, [11]) == 11
    G8 = field_make(2, 3)
    assert G8.to_coeffs(pack(field_make(2), G8, [1, 1, 0])) == [1, 1, 0]


def test_pack_length_mismatch():
    with pytest.raises(FieldError):
        pack(F23, extension_field(F23, 2), [1])


@pytest.mark.parametrize("q,b", [(23, 1), (23, 2), (2, 8)])
def test_pack_unpack_round_trip(q, b):
    base = field_make(q)
    ext = extension_field(base, b)
    rng = np.random.default_rng(q + b)
    for _ in range(1000):
        v = tuple(int(x) for x in rng.integers(q, size=b))
        assert unpack(base, ext, pack(base, ext, v)) == v


def test_pack_is_additive():
    base, ext = F23, extension_field(F23, 2)
    rng = np.random.default_rng(1)
    for _ in range(200):
        u, v = rng.integers(23, size=2), rng.integers(23, size=2)
        s = [(a + b) % 23 for a, b in zip(u, v)]
        assert ext.add(pack(base, ext, u), pack(base, ext, v)) == pack(base, ext, s)


def test_evaluation_worked_values():
    f = Poly(F23, EX1_POLY)
    assert poly_eval(f, 1) == 14
    assert poly_eval(f, 2) == 6
    assert poly_eval(f, 0) == 4
    assert multipoint_eval(f, list(range(23))).tolist()[:3] == [4, 14, 6]


def test_poly_arithmetic():
    x1 = Poly(F23, [1, 1])
    xm1 = Poly(F23, [22, 1])
    assert x1 * xm1 == Poly(F23, [22, 0, 1])
    q, r = Poly.monomial(F23, 3).quotrem(xm1)
    assert q == Poly(F23, [1, 1, 1]) and r == Poly(F23, [1])
    with pytest.raises(ZeroDivisionError):
        x1.quotrem(Poly(F23, []))


def test_zero_polynomial_degree_is_not_minus_one():
    z = Poly(F23, [0, 0])
    assert z.is_zero()
    assert z.degree < -10**9


def test_roots():
    assert univariate_roots(Poly(F23, [22, 0, 1])) == [1, 22]
    assert univariate_roots(Poly(F23, [5])) == []
    assert univariate_roots(Poly(field_make(7), [1, 0, 1])) == []
    with pytest.raises(ValueError):
        univariate_roots(Poly(F23, []))


def test_compose_constructed_root():
    f = Poly(F23, EX1_POLY)
    assert compose(BiPoly.y_minus(f), f).is_zero()


def test_translate_examples():
    F = F23
    Q = BiPoly(F, {(0, 1): 1, (1, 0): 22})  # y - x
    assert bipoly_translate(Q, 1, 1) == Q
    assert bipoly_translate(BiPoly(F, {(2, 0): 1}), 1, 0) == BiPoly(F, {(2, 0): 1, (1, 0): 2, (0, 0): 1})
    sq = Q * Q
    for c in range(23):
        assert multiplicity_at(sq, c, c) == 2


def test_wdeg_examples():
    F = F23
    assert wdeg(BiPoly(F, {(3, 1): 1, (0, 2): 1}), 1) == 4
    assert wdeg(BiPoly(F, {(0, 1): 1}), 4) == 4
    assert wdeg(BiPoly(F, {(5, 0): 1, (1, 2): 1}), 2) == 5
    with pytest.raises(ValueError):
        wdeg(BiPoly(F), 1)


def _random_bipoly(F, rng, dx=4, dy=3):
    return BiPoly.from_dense(F, rng.integers(F.q, size=(dx, dy)))


@given(st.integers(0, 2**32 - 1), st.sampled_from([(7, 1), (2, 3), (3, 2)]))
def test_compose_matches_pointwise_evaluation(seed, pe):
    F = field_make(*pe)
    rng = np.random.default_rng(seed)
    Q = _random_bipoly(F, rng)
    f = Poly(F, rng.integers(F.q, size=3).tolist())
    g = compose(Q, f)
    for a in range(F.q):
        assert poly_eval(g, a) == Q(a, poly_eval(f, a))


def _hasse(F, Q, a, b, i, j):
    # sum C(u,i) C(v,j) q_uv a^(u-i) b^(v-j)
    from math import comb

    acc = 0
    for (u, v), c in Q.terms.items():
        if u >= i and v >= j:
            coef = comb(u, i) * comb(v, j) % F.p
            acc = F.add(acc, F.mul(F.mul(c, coef), F.mul(F.pow(a, u - i), F.pow(b, v - j))))
    return acc


@given(st.integers(0, 2**32 - 1), st.sampled_from([(7, 1), (5, 1), (2, 3)]))
def test_multiplicity_equals_first_nonvanishing_hasse_derivative(seed, pe):
    F = field_make(*pe)
    rng = np.random.default_rng(seed)
    a, b = (int(v) for v in rng.integers(F.q, size=2))
    # force a zero of random order at (a, b)
    lin1 = BiPoly(F, {(1, 0): 1, (0, 0): F.neg(a)})
    lin2 = BiPoly(F, {(0, 1): 1, (0, 0): F.neg(b)})
    Q = _random_bipoly(F, rng, 3, 2)
    for _ in range(int(rng.integers(0, 3))):
        Q = Q * (lin1 if rng.random() < 0.5 else lin2)
    if Q.is_zero():
        return
    m = multiplicity_at(Q, a, b)
    first = next(s for s in range(40) if any(_hasse(F, Q, a, b, i, s - i) for i in range(s + 1)))
    assert m == first
