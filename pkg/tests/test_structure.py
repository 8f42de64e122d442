"""Structure polynomial generation: ghost identities, triangularity, cache."""

import os

import pytest

from wittgrass import structure as st
from wittgrass.errors import CacheCorrupt, TableLimit


def poly_text(levels):
    return [st.render_ip(t) for t in levels]


def test_addition_level_zero_and_one_p2():
    add = st.solve_levels(2, "add", 2)
    assert st.render_ip(add[0]) == "1*X0 + 1*Y0"
    # S_1 = X_1 + Y_1 - X_0*Y_0
    assert add[1] == {st.xvar(1): 1, st.yvar(1): 1, st.xvar(0) + st.yvar(0): -1}


def test_multiplication_levels_p2():
    mul = st.solve_levels(2, "mul", 2)
    assert mul[0] == {st.xvar(0) + st.yvar(0): 1}
    # M_1 = X_0^2*Y_1 + X_1*Y_0^2 + 2*X_1*Y_1
    assert mul[1] == {
        2 * st.xvar(0) + st.yvar(1): 1,
        st.xvar(1) + 2 * st.yvar(0): 1,
        st.xvar(1) + st.yvar(1): 2,
    }


def test_negation_is_minus_for_odd_p():
    for p in (3, 5):
        neg = st.solve_levels(p, "neg", 3)
        for n, level in enumerate(neg):
            assert level == {st.xvar(n): -1}


@pytest.mark.parametrize("p,N", [(2, 5), (3, 4), (5, 3)])
@pytest.mark.parametrize("op", ["add", "mul", "neg"])
def test_ghost_identities_exact(p, N, op):
    levels = st.solve_levels(p, op, N)
    assert st.verify_ghost(p, op, levels)
    assert st.check_triangular(levels, op)


def test_ghost_verification_detects_corruption():
    levels = st.solve_levels(2, "add", 3)
    broken = [dict(t) for t in levels]
    broken[2][st.xvar(0)] = broken[2].get(st.xvar(0), 0) + 1
    assert not st.verify_ghost(2, "add", broken)


def test_table_render_parse_round_trip():
    for op in ("add", "mul", "neg"):
        levels = st.solve_levels(3, op, 3)
        for t in levels:
            assert st.parse_ip(st.render_ip(t)) == t


def test_cache_write_load_and_corruption(tmp_path):
    cdir = str(tmp_path)
    tables = {
        "add": st.solve_levels(2, "add", 3),
        "mul": st.solve_levels(2, "mul", 3),
        "neg": st.solve_levels(2, "neg", 3),
    }
    st.write_cache(2, cdir, tables)
    loaded = st.load_cache(2, cdir)
    assert loaded == tables
    path = os.path.join(cdir, "structure_p2.txt")
    with open(path, "a") as fh:
        fh.write("ADD 9 garbage\n")
    with pytest.raises(CacheCorrupt):
        st.load_cache(2, cdir)


def test_size_guard_refuses_infeasible_cells():
    with pytest.raises(TableLimit):
        st.solve_levels(5, "add", 5)
    with pytest.raises(TableLimit):
        st.solve_levels(3, "add", 6)
    with pytest.raises(TableLimit):
        st.solve_levels(2, "add", 9)  # beyond the hard length cap
    with pytest.raises(TableLimit):
        st.solve_levels(7, "add", 2)  # unsupported prime


def test_support_counts_monotone():
    # the guard's cost model: two-sided slices grow with the level
    costs = [st.level_cost(3, n, "add") for n in range(5)]
    assert costs == sorted(costs)
    assert st.level_cost(5, 4, "add") > st.DEFAULT_TERM_LIMIT
