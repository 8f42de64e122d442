"""Witt vector arithmetic over finite fields, polynomial and Laurent rings."""

import random

import pytest

from wittgrass.errors import NonUnit, NotPerfect, RingMismatch
from wittgrass.fields import GF
from wittgrass.rings import LaurentRing
from wittgrass.witt import (
    WittVector,
    frobenius,
    mat_det,
    mat_inv,
    mat_mul,
    mat_identity,
    p_shift,
    random_sl,
    teichmuller,
    verschiebung,
    witt_arith,
    witt_from_int,
    witt_inv,
    witt_one,
    witt_random,
    witt_zero,
)

F2 = GF(2)
F4 = GF(4)
F9 = GF(9)


def vec(field, *ints):
    return WittVector(field, tuple(field.from_int(i) for i in ints))


def test_two_plus_two_makes_p():
    assert vec(F2, 1, 0) + vec(F2, 1, 0) == vec(F2, 0, 1)


def test_negation_of_one_mod_four():
    # -1 = 3 = (1,1) in W_2(F_2)
    assert -vec(F2, 1, 0) == vec(F2, 1, 1)


def test_teichmuller_multiplicative():
    rng = random.Random(0)
    for _ in range(20):
        a, b = F4.random(rng), F4.random(rng)
        assert teichmuller(F4, a, 3) * teichmuller(F4, b, 3) == teichmuller(
            F4, a * b, 3
        )


def test_teichmuller_units():
    assert teichmuller(F4, F4.zero, 2) == witt_zero(F4, 2)
    assert teichmuller(F4, F4.one, 2) == witt_one(F4, 2)
    u = F4.gen()
    assert witt_inv(teichmuller(F4, u, 3)) == teichmuller(F4, u.inv(), 3)


def test_inverse_of_one_plus_v():
    # (1, a) is its own inverse at p = 2, N = 2
    for a in F4.elements():
        w = WittVector(F4, (F4.one, a))
        assert witt_inv(w) == w
        assert w * w == witt_one(F4, 2)


def test_inverse_requires_unit():
    with pytest.raises(NonUnit):
        witt_inv(vec(F2, 0, 1))


def test_inverse_two_sided_random():
    rng = random.Random(1)
    one = witt_one(F9, 3)
    seen = 0
    while seen < 50:
        a = witt_random(F9, 3, rng)
        if not a.is_unit():
            continue
        seen += 1
        assert a * witt_inv(a) == one
        assert witt_inv(a) * a == one


def test_ring_axioms_sample():
    rng = random.Random(2)
    for field in (F2, F4, F9):
        zero = witt_zero(field, 3)
        one = witt_one(field, 3)
        for _ in range(100):
            x, y, z = (witt_random(field, 3, rng) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert x + y == y + x
            assert (x * y) * z == x * (y * z)
            assert x * y == y * x
            assert x * (y + z) == x * y + x * z
            assert x + zero == x
            assert x * one == x
            assert x + (-x) == zero


def test_shift_operators():
    # p_shift((1,0,0)) = (0,1,0) over any prime field
    for p in (2, 3, 5):
        F = GF(p)
        w = WittVector(F, (F.one, F.zero, F.zero))
        assert p_shift(w) == WittVector(F, (F.zero, F.one, F.zero))
    assert p_shift(witt_zero(F4, 3)) == witt_zero(F4, 3)
    rng = random.Random(3)
    p_const = witt_from_int(F4, 2, 3)
    for _ in range(100):
        a = witt_random(F4, 3, rng)
        assert frobenius(verschiebung(a)) == p_const * a
        assert verschiebung(frobenius(a)) == p_const * a
        assert p_shift(a) == p_const * a


def test_not_perfect_rejections():
    L = LaurentRing(F2)
    t = L.monomial(1)
    w = WittVector(L, (t, L.zero, L.one))
    with pytest.raises(NotPerfect):
        frobenius(w)
    with pytest.raises(NotPerfect):
        p_shift(w)
    # generic multiplication by the constant p still works
    assert witt_arith("mul", witt_from_int(L, 2, 3), w) == WittVector(
        L, (L.zero, t * t, L.zero)
    )


def test_length_and_ring_mismatch():
    with pytest.raises(RingMismatch):
        witt_arith("add", vec(F2, 1, 0), vec(F2, 1, 0, 0))
    with pytest.raises(RingMismatch):
        witt_arith("add", vec(F2, 1, 0), vec(F4, 1, 0))


def test_from_int_matches_ghost_values():
    # w_n determines integers: check against base-p expansions mod p^N
    for p in (2, 3):
        F = GF(p)
        for n in range(0, p**3):
            w = witt_from_int(F, n, 3)
            # recover the integer from ghost components over the prime field:
            # w_k(a) = n mod p^(k+1) determines a uniquely; spot-check a_0
            assert w.coords[0] == F.from_int(n)


def test_matrix_helpers():
    rng = random.Random(4)
    for _ in range(10):
        g = random_sl(F4, 2, 3, rng)
        assert mat_det(g) == witt_one(F4, 3)
        gi = mat_inv(g)
        assert mat_mul(g, gi) == mat_identity(F4, 2, 3)
        assert mat_mul(gi, g) == mat_identity(F4, 2, 3)
