"""Realization compiler: component formulas, functoriality, compatibility."""

import random

import pytest

from wittgrass.errors import NonUnit
from wittgrass.fields import GF
from wittgrass.greenberg import (
    RealizedMap,
    WittPolynomial,
    coord_ring,
    localized_transition,
    parse_witt_map,
    realize_action,
    realize_ideal,
    realize_poly_map,
)
from wittgrass.poly import parse_polynomial
from wittgrass.witt import (
    WittVector,
    mat_det,
    random_sl,
    teichmuller,
    witt_from_int,
    witt_one,
    witt_random,
    witt_zero,
)

F2 = GF(2)
F4 = GF(4)
F9 = GF(9)


def T(field, N, arity, l):
    return WittPolynomial.variable(field, N, arity, l)


def expect(ring, text):
    return parse_polynomial(ring, text)


def test_sum_map_components():
    rm = realize_poly_map([T(F2, 2, 2, 0) + T(F2, 2, 2, 1)])
    R = rm.ring
    assert rm.components[0][0] == expect(R, "x[1,0] + x[2,0]")
    assert rm.components[0][1] == expect(R, "x[1,1] + x[2,1] + x[1,0]*x[2,0]")


def test_constant_map_components():
    c = teichmuller(F4, F4.gen(), 2)
    rm = realize_poly_map([WittPolynomial.constant(c, 1)], 2)
    assert rm.components[0][0] == rm.ring.const(F4.gen())
    assert rm.components[0][1].is_zero()


def test_realized_determinant_formula():
    vars4 = [T(F2, 2, 4, l) for l in range(4)]
    det = vars4[0] * vars4[3] - vars4[1] * vars4[2]
    rm = realize_poly_map([det])
    R = rm.ring
    assert rm.components[0][0] == expect(R, "x[1,0]*x[4,0] + x[2,0]*x[3,0]")
    assert rm.components[0][1] == expect(
        R,
        "x[1,0]^2*x[4,1] + x[1,1]*x[4,0]^2 + x[2,0]^2*x[3,1] + x[2,1]*x[3,0]^2"
        " + x[2,0]^2*x[3,0]^2 + x[1,0]*x[4,0]*x[2,0]*x[3,0]",
    )


def test_realized_determinant_evaluation_50_samples():
    rng = random.Random(7)
    vars4 = [T(F4, 2, 4, l) for l in range(4)]
    rm = realize_poly_map([vars4[0] * vars4[3] - vars4[1] * vars4[2]])
    for _ in range(50):
        pts = [witt_random(F4, 2, rng) for _ in range(4)]
        assert rm.apply_point(pts)[0] == pts[0] * pts[3] - pts[1] * pts[2]


def test_evaluation_compatibility_basic_ops():
    rng = random.Random(8)
    maps = {
        "add": realize_poly_map([T(F9, 3, 2, 0) + T(F9, 3, 2, 1)]),
        "mul": realize_poly_map([T(F9, 3, 2, 0) * T(F9, 3, 2, 1)]),
        "neg": realize_poly_map([-T(F9, 3, 2, 0)]),
    }
    for _ in range(200):
        a, b = witt_random(F9, 3, rng), witt_random(F9, 3, rng)
        assert maps["add"].apply_point([a, b])[0] == a + b
        assert maps["mul"].apply_point([a, b])[0] == a * b
        assert maps["neg"].apply_point([a, b])[0] == -a


def rand_wpoly(field, N, arity, rng, nterms=2, deg=2):
    P = None
    for _ in range(nterms):
        exps = [0] * arity
        for _ in range(rng.randrange(deg + 1)):
            exps[rng.randrange(arity)] += 1
        t = WittPolynomial.constant(witt_random(field, N, rng), arity)
        for l, e in enumerate(exps):
            t = t * WittPolynomial.variable(field, N, arity, l) ** e
        P = t if P is None else P + t
    return P


def compose_wpolys(outer, inner, field, N, arity):
    out = []
    for P in outer:
        acc = WittPolynomial(field, N, arity, {})
        for m, c in P.terms.items():
            t = WittPolynomial.constant(c, arity)
            for l, e in enumerate(m):
                t = t * inner[l] ** e
            acc = acc + t
        out.append(acc)
    return out


@pytest.mark.parametrize("field,trials", [(F2, 6), (F9, 3)])
def test_functoriality_random_maps(field, trials):
    rng = random.Random(9)
    N = 3
    for _ in range(trials):
        f = [rand_wpoly(field, N, 2, rng) for _ in range(2)]
        g = [rand_wpoly(field, N, 2, rng) for _ in range(2)]
        Rf, Rg = realize_poly_map(f), realize_poly_map(g)
        Rgf = realize_poly_map(compose_wpolys(g, f, field, N, 2), N)
        assert Rg.compose(Rf).components == Rgf.components


def test_realize_ideal_examples():
    # <T> at N = 2
    rid = realize_ideal([T(F2, 2, 1, 0)])
    R = rid.ring
    assert rid.generators == [R.var(0), R.var(1)]
    # <p*T> at p = 2, N = 2: component 0 vanishes, leaving t0^2
    ptimes = WittPolynomial.constant(witt_from_int(F2, 2, 2), 1) * T(F2, 2, 1, 0)
    rid = realize_ideal([ptimes])
    assert rid.generators == [R.var(0) ** 2]
    # <T1 + T2>
    rid = realize_ideal([T(F2, 2, 2, 0) + T(F2, 2, 2, 1)])
    R2 = rid.ring
    assert rid.generators == [
        expect(R2, "x[1,0] + x[2,0]"),
        expect(R2, "x[1,1] + x[2,1] + x[1,0]*x[2,0]"),
    ]


def test_products_of_disjoint_systems():
    # realizing a variable-disjoint union equals the union of realizations
    f = T(F2, 2, 2, 0) ** 2 + T(F2, 2, 2, 0)  # only T1
    g = T(F2, 2, 2, 1) ** 2                   # only T2
    joint = realize_ideal([f, g])
    single = realize_ideal([T(F2, 2, 1, 0) ** 2 + T(F2, 2, 1, 0)])
    ring = joint.ring
    # map the single-variable realizations into the joint ring at block 1, 2
    into_first = [ring.var(0), ring.var(1)]
    into_second = [ring.var(2), ring.var(3)]
    expected = [q.map_into(ring, into_first) for q in single.generators]
    single_g = realize_ideal([T(F2, 2, 1, 0) ** 2])
    expected += [q.map_into(ring, into_second) for q in single_g.generators]
    assert set(joint.generators) == set(expected)


def test_localized_transition_point_map():
    lt = localized_transition(2, F2)
    pt = lt.apply_point([WittVector(F2, (F2.one, F2.zero))])[0]
    assert pt == WittVector(F2, (F2.zero, F2.one))
    z = lt.apply_point([witt_zero(F2, 2)])[0]
    assert z == witt_zero(F2, 2)


def test_localized_transition_squares_to_p_squared():
    lt = localized_transition(3, F2)
    twice = lt.compose(lt)
    p2T = realize_poly_map(
        [WittPolynomial.constant(witt_from_int(F2, 4, 3), 1) * T(F2, 3, 1, 0)]
    )
    assert twice.components == p2T.components


def test_realize_action_identity():
    one = witt_one(F2, 2)
    zero = witt_zero(F2, 2)
    g = [[one, zero], [zero, one]]
    rm = realize_action(g)
    R = rm.ring
    assert rm.flat_components() == [R.var(k) for k in range(4)]


def test_realize_action_teichmuller_diagonal():
    u = F4.gen()
    g = [
        [teichmuller(F4, u, 2), witt_zero(F4, 2)],
        [witt_zero(F4, 2), teichmuller(F4, u.inv(), 2)],
    ]
    rm = realize_action(g)
    R = rm.ring
    p = 2
    for j in range(2):
        assert rm.components[0][j] == R.var(j).scale(u ** (p**j))
        assert rm.components[1][j] == R.var(2 + j).scale(u.inv() ** (p**j))


def test_realize_action_unipotent():
    one = witt_one(F2, 2)
    zero = witt_zero(F2, 2)
    g = [[one, one], [zero, one]]
    rm = realize_action(g)
    R = rm.ring
    assert rm.components[0][0] == expect(R, "x[1,0] + x[2,0]")
    assert rm.components[0][1] == expect(R, "x[1,1] + x[2,1] + x[1,0]*x[2,0]")
    assert rm.components[1][0] == R.var(2)
    assert rm.components[1][1] == R.var(3)


def test_realize_action_rejects_non_units():
    zero = witt_zero(F2, 2)
    pvec = witt_from_int(F2, 2, 2)
    with pytest.raises(NonUnit):
        realize_action([[pvec, zero], [zero, pvec]])


def test_realized_sl2_multiplication_group_laws():
    # matrix multiplication as a polynomial map A^8 -> A^4 over W_2(F_4)
    rng = random.Random(10)
    N = 2
    entries = [T(F4, N, 8, l) for l in range(8)]
    a, b, c, d = entries[:4]
    e, f, g, h = entries[4:]
    mulmap = realize_poly_map([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])

    def apply(mats):
        flat = [x for m in mats for x in m]
        return mulmap.apply_point(flat)

    for _ in range(100):
        m1 = random_sl(F4, 2, N, rng)
        m2 = random_sl(F4, 2, N, rng)
        m3 = random_sl(F4, 2, N, rng)
        flat1 = [m1[0][0], m1[0][1], m1[1][0], m1[1][1]]
        flat2 = [m2[0][0], m2[0][1], m2[1][0], m2[1][1]]
        flat3 = [m3[0][0], m3[0][1], m3[1][0], m3[1][1]]
        m12 = apply([flat1, flat2])
        m23 = apply([flat2, flat3])
        assert apply([m12, flat3]) == apply([flat1, m23])
        # identity acts as the neutral element
        ident = [witt_one(F4, N), witt_zero(F4, N), witt_zero(F4, N), witt_one(F4, N)]
        assert apply([flat1, ident]) == flat1
        assert apply([ident, flat1]) == flat1


def test_parse_witt_map_round_trip():
    polys = parse_witt_map("T1*T2-1; T1+T2", F2, 2)
    rm = realize_poly_map(polys)
    R = rm.ring
    assert rm.components[0][0] == expect(R, "x[1,0]*x[2,0] + 1")
    assert rm.components[1][0] == expect(R, "x[1,0] + x[2,0]")
