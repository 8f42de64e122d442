"""Cell decompositions, the point-level ideal-to-lattice map, image reports."""

import random

import pytest

from wittgrass.errors import NotStable, SizeGuard, UsageError
from wittgrass.fields import GF
from wittgrass.grassmann import (
    degeneration_family_ideal,
    image_check,
    points_lattice,
    standard_cell_lattice,
    witt_cell_table,
    zadic_cell_table,
)
from wittgrass.hilbert import (
    GradedIdeal,
    act_on_ideal,
    ambient_ring,
    flat_limit,
    hilbert_function,
    ideal_I_lambda,
    is_module_stable,
)
from wittgrass.witt import random_sl
from wittgrass.zadic import zadic_oracle

F2 = GF(2)
F4 = GF(4)


# -- points_lattice -------------------------------------------------------------

def test_zero_ideal_gives_standard_lattice():
    R = ambient_ring(F2, 2, 2)
    I = GradedIdeal(R, 2, 2, [])
    lat = points_lattice(I, shift=0)
    assert lat.cell() == (0, 0)
    assert lat == standard_cell_lattice(F2, (0, 0))


def test_cocharacter_ideal_maps_to_its_diagonal_lattice():
    I = ideal_I_lambda(F2, (1, -1), 3)
    lat = points_lattice(I, q=2, shift=1)
    assert lat.cell() == (1, -1)
    assert lat == standard_cell_lattice(F2, (1, -1))


def test_swapped_coordinate_ideal_same_cell_other_lattice():
    R = ambient_ring(F2, 2, 2)
    I = GradedIdeal(R, 2, 2, [R.var(2), R.var(3)])  # second block killed
    lat = points_lattice(I, shift=1)
    assert lat.cell() == (1, -1)
    assert lat != standard_cell_lattice(F2, (1, -1))


def test_boundary_ideals_map_to_standard_over_f4():
    R = ambient_ring(F4, 2, 2)
    expected = standard_cell_lattice(F4, (0, 0))
    for a in F4.elements():
        J = GradedIdeal(R, 2, 2, [R.var(0) + R.var(2).scale(a), R.var(2) ** 2])
        lat = points_lattice(J, shift=1)
        assert lat.cell() == (0, 0)
        assert lat == expected


def test_points_lattice_rejects_unstable():
    R = ambient_ring(F2, 1, 2)
    bad = GradedIdeal(R, 1, 2, [R.var(1)])
    with pytest.raises(NotStable):
        points_lattice(bad, shift=0)


def test_points_lattice_field_mismatch():
    I = ideal_I_lambda(F2, (1, -1), 3)
    with pytest.raises(UsageError):
        points_lattice(I, q=4, shift=1)


# -- cell tables ------------------------------------------------------------------

def test_tables_window_zero():
    wt = witt_cell_table(2, 2, 0)
    assert wt.counts == {(0, 0): 1}
    assert zadic_oracle(2, 2, 0) == {(0, 0): 1}


@pytest.mark.parametrize("q", [2, 3])
def test_witt_and_zadic_tables_agree(q):
    wt = witt_cell_table(2, q, 1)
    zt = zadic_cell_table(2, q, 1)
    assert wt.same_counts(zt)
    assert set(wt.counts) == {(0, 0), (1, -1)}
    assert wt.counts[(0, 0)] == 1
    assert wt.counts[(1, -1)] == q * q + q
    assert wt.total == zt.total


def test_zadic_rejects_prime_powers():
    with pytest.raises(UsageError):
        zadic_oracle(2, 4, 1)


def test_zadic_guard():
    with pytest.raises(SizeGuard):
        zadic_oracle(3, 5, 2)


# -- non-injectivity ---------------------------------------------------------------

def test_distinct_stable_ideals_over_standard_lattice():
    R = ambient_ring(F2, 2, 2)
    witnesses = []
    for a in F2.elements():
        witnesses.append(
            GradedIdeal(R, 2, 2, [R.var(0) + R.var(2).scale(a), R.var(2) ** 2])
        )
    witnesses.append(GradedIdeal(R, 2, 2, [R.var(2), R.var(0) ** 2]))
    keys = set()
    h = hilbert_function(witnesses[0], 8)
    for J in witnesses:
        assert is_module_stable(J)
        assert hilbert_function(J, 8) == h
        lat = points_lattice(J, shift=1)
        assert lat.cell() == (0, 0)
        keys.add(lat.canonical_key())
    assert len(keys) == 1  # one lattice downstairs
    assert len({J for J in witnesses}) == 3  # several ideals upstairs


# -- the degeneration family and the image report ------------------------------------

def test_family_ideal_generators():
    fam = degeneration_family_ideal(F2, 1, -1, N=2)
    K = fam.ring
    KK = K.coeff
    t4 = K.const(KK.t_power(4))
    assert fam == GradedIdeal(
        K, 2, 2, [K.var(2), K.var(0) ** 2 + t4 * K.var(3)]
    )


def test_family_flat_limit_reaches_lower_cell():
    fam = degeneration_family_ideal(F2, 1, -1, N=2)
    limit = flat_limit(fam, bound=8)
    lat = points_lattice(limit, shift=1)
    assert lat.cell() == (0, 0)


def test_image_check_trivial_cell():
    rep = image_check((0, 0), q=2, samples=4, seed=1)
    assert set(rep["observed"]) == {(0, 0)}
    assert rep["bruhat_ok"]


def test_image_check_minuscule():
    rep = image_check((1, -1), q=2, samples=12, seed=7)
    assert set(rep["observed"]) == {(1, -1), (0, 0)}
    assert rep["bruhat_ok"]
    assert rep["standard_fiber_ideals"] >= 2
    assert (1, -1) in rep["realized"] and (0, 0) in rep["realized"]


def test_image_check_bigger_cell_subset():
    rep = image_check((2, -2), q=2, samples=5, seed=2)
    assert set(rep["observed"]) <= {(2, -2), (1, -1), (0, 0)}
    assert rep["bruhat_ok"]


def test_image_check_determinism():
    a = image_check((1, -1), q=2, samples=6, seed=3)
    b = image_check((1, -1), q=2, samples=6, seed=3)
    assert a == b


def test_orbit_images_stay_in_cell():
    rng = random.Random(40)
    I = ideal_I_lambda(F2, (1, -1), 3)
    for _ in range(10):
        g = random_sl(F2, 2, 3, rng)
        lat = points_lattice(act_on_ideal(g, I), shift=1, check_stable=False)
        assert lat.cell() == (1, -1)
