import random

import pytest
from hypothesis import given, strategies as st

from tgoppa import (
    FieldMismatchError,
    NotInvertibleError,
    Poly,
    inverse_linear_residue,
    is_root_free,
    make_field,
    modinv,
    xgcd,
)

F2 = make_field(2, 1)
F4 = make_field(2, 2)
F8 = make_field(2, 3)
F16 = make_field(2, 4)
F9 = make_field(3, 2)

G = Poly(F4, (2, 1, 1))  # x^2 + x + 2 over GF(4), root-free


def test_normalization_and_degree():
    assert Poly(F4, (1, 2, 0, 0)).coeffs == (1, 2)
    z = Poly.zero(F4)
    assert z.coeffs == () and z.degree == -1 and z.is_zero
    assert Poly.one(F4).degree == 0
    assert Poly.x(F4).degree == 1
    assert G.degree == 2 and G.lead == 1
    with pytest.raises(ValueError):
        Poly(F4, (4,))


def test_string_round_trip():
    assert G.to_string() == "2,1,1"
    assert Poly.from_string(F4, "2,1,1") == G
    assert Poly.from_string(F4, "0").is_zero
    assert Poly.zero(F4).to_string() == "0"
    assert Poly.from_string(F4, "3").degree == 0
    with pytest.raises(ValueError):
        Poly.from_string(F4, "1,x")
    with pytest.raises(ValueError):
        Poly.from_string(F4, "7,1")


def test_add_and_mul_examples():
    f = Poly(F4, (1, 3, 2))
    assert f + Poly.zero(F4) == f
    xp1 = Poly(F2, (1, 1))
    assert xp1 * xp1 == Poly(F2, (1, 0, 1))  # (x+1)^2 = x^2 + 1 in char 2
    assert -f == f  # characteristic 2


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        Poly.x(F4) + Poly.x(F8)
    with pytest.raises(FieldMismatchError):
        Poly.x(F4) * Poly.x(F9)


def test_divmod_example():
    q, r = divmod(Poly(F4, (0, 0, 1)), G)  # x^2 by x^2+x+2
    assert q == Poly.one(F4)
    assert r == Poly(F4, (2, 1))  # x + 2
    with pytest.raises(ZeroDivisionError):
        divmod(G, Poly.zero(F4))


def test_eval_examples():
    assert Poly.constant(F4, 3)(2) == 3
    assert G(0) == 2
    assert G(1) == 2


def test_xgcd_with_zero():
    f = Poly(F4, (1, 0, 2))  # lead 2
    g, u, v = xgcd(f, Poly.zero(F4))
    assert g == f.monic()
    assert u == Poly.constant(F4, F4.inv(2))
    assert v.is_zero


def test_xgcd_frozen_gf2():
    g, u, v = xgcd(Poly(F2, (0, 1, 1)), Poly.x(F2))  # x^2+x and x
    assert g == Poly.x(F2)
    assert u.is_zero
    assert v == Poly.one(F2)


def test_xgcd_coprime_gf4():
    f, h = Poly.x(F4), G
    g, u, v = xgcd(f, h)
    assert g == Poly.one(F4)
    assert u * f + v * h == Poly.one(F4)


def test_xgcd_both_zero():
    with pytest.raises(ValueError):
        xgcd(Poly.zero(F4), Poly.zero(F4))


def _random_poly(rng, field, max_deg):
    return Poly(field, [rng.randrange(field.order) for _ in range(max_deg + 1)])


@given(st.integers(0, 10**9))
def test_bezout_identity_random(seed):
    rng = random.Random(seed)
    field = (F4, F9, F8)[seed % 3]
    f = _random_poly(rng, field, rng.randrange(6))
    h = _random_poly(rng, field, rng.randrange(6))
    if f.is_zero and h.is_zero:
        return
    g, u, v = xgcd(f, h)
    assert u * f + v * h == g
    assert g.lead == 1  # monic
    assert (f % g).is_zero and (h % g).is_zero


@given(st.integers(0, 10**9))
def test_products_distribute_mod_g(seed):
    rng = random.Random(seed)
    field = (F4, F9, F16)[seed % 3]
    f = _random_poly(rng, field, rng.randrange(5))
    h = _random_poly(rng, field, rng.randrange(5))
    w = _random_poly(rng, field, rng.randrange(5))
    g = Poly(field, [rng.randrange(field.order) for _ in range(3)] + [1])
    assert ((f + h) * w) % g == (f * w % g + h * w % g) % g
    assert (f * h) % g == ((f % g) * (h % g)) % g


@given(st.integers(0, 10**9))
def test_divmod_round_trip_random(seed):
    rng = random.Random(seed)
    field = (F4, F9, F16)[seed % 3]
    f = _random_poly(rng, field, rng.randrange(8))
    h = _random_poly(rng, field, rng.randrange(5))
    if h.is_zero:
        return
    q, r = divmod(f, h)
    assert q * h + r == f
    assert r.degree < h.degree


def test_modinv_examples():
    assert modinv(Poly.one(F4), G) == Poly.one(F4)
    assert modinv(Poly.x(F4), G) == Poly(F4, (3, 3))
    assert modinv(Poly(F4, (1, 1)), G) == Poly(F4, (0, 3))


def test_modinv_errors():
    with pytest.raises(ZeroDivisionError):
        modinv(Poly.x(F4), Poly.zero(F4))
    with pytest.raises(ValueError):
        modinv(Poly.x(F4), Poly.constant(F4, 2))
    with pytest.raises(NotInvertibleError):
        modinv(G, G)
    with pytest.raises(NotInvertibleError):
        modinv(Poly.zero(F4), G)


def test_modinv_degree_is_exactly_t_minus_1():
    rng = random.Random(9)
    for _ in range(40):
        field = (F8, F16)[rng.randrange(2)]
        t = rng.randrange(2, 6)
        g = Poly(field, [rng.randrange(field.order) for _ in range(t)]
                 + [rng.randrange(1, field.order)])
        alpha = rng.randrange(field.order)
        if g(alpha) == 0:
            continue
        r = modinv(Poly.linear(field, alpha), g)
        assert r.degree == t - 1
        assert (Poly.linear(field, alpha) * r % g) == Poly.one(field)


def test_residue_oracle_examples():
    assert inverse_linear_residue(0, G) == Poly(F4, (3, 3))
    assert inverse_linear_residue(1, G) == Poly(F4, (0, 3))
    # degree-1 modulus: residue is a constant
    g1 = Poly(F4, (2, 1))  # x + 2
    r = inverse_linear_residue(0, g1)
    assert r.degree == 0
    assert (Poly.x(F4) * r % g1) == Poly.one(F4)
    with pytest.raises(ZeroDivisionError):
        inverse_linear_residue(2, g1)  # 2 is the root of x + 2


def test_residue_oracle_matches_modinv_exhaustively():
    rng = random.Random(4)
    for field in (F4, F8, F16, F9):
        for _ in range(25):
            t = rng.randrange(1, 7)
            g = Poly(field, [rng.randrange(field.order) for _ in range(t)]
                     + [rng.randrange(1, field.order)])
            for alpha in field.elements():
                if g(alpha) == 0:
                    continue
                assert inverse_linear_residue(alpha, g) == modinv(
                    Poly.linear(field, alpha), g
                )


def test_is_root_free():
    assert is_root_free(Poly.constant(F4, 3))
    assert is_root_free(G)
    assert not is_root_free(Poly(F4, (2, 1)))  # linear, root 2
    assert not is_root_free(Poly(F16, (0, 0, 1)))  # x^2 has root 0
    with pytest.raises(ValueError):
        is_root_free(Poly.zero(F4))


def test_poly_immutable_and_hashable():
    with pytest.raises(AttributeError):
        G.coeffs = (1,)
    assert hash(G) == hash(Poly(F4, (2, 1, 1)))
