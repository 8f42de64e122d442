"""Grassmannian-level checks: cells of enumerated lattices, the point-level
shadow of the ideal-to-lattice map, and the image/surjectivity report.

points_lattice enumerates the F_q points of a module-stable subscheme of
W_N^n, verifies closure under the module operations, and lifts the point set
to a lattice in the appropriate window.  The cell table builders run the Witt
enumeration and the independent z-adic oracle side by side.
"""

from __future__ import annotations

import itertools
import random

from .errors import NotStable, SizeGuard, UsageError
from .fields import GF
from .greenberg import generic_vectors
from .groebner import ideal_equal
from .hilbert import (
    GradedIdeal,
    ambient_ring,
    family_ring,
    flat_limit,
    ideal_I_lambda,
    is_module_stable,
    var_index,
)
from .lattice import (
    Lattice,
    PadicWittNumber,
    bruhat_leq,
    dominant_or_raise,
    lattice_from_columns,
    padic_p_power,
    padic_zero,
)
from .poly import PolyRing
from .rings import RationalFunctionField
from .witt import WittVector, teichmuller, witt_from_int, random_sl
from .zadic import zadic_oracle

POINTS_GUARD = 1 << 20


class CellTable:
    """Counts of special lattices per dominant cocharacter in a window."""

    def __init__(self, counts, n, q, window, provenance):
        self.counts = dict(counts)
        self.n = n
        self.q = q
        self.window = window
        self.provenance = provenance

    @property
    def total(self):
        return sum(self.counts.values())

    def same_counts(self, other):
        return self.counts == other.counts

    def as_dict(self):
        return {
            "n": self.n,
            "q": self.q,
            "window": self.window,
            "provenance": self.provenance,
            "total": self.total,
            "cells": [
                {"lambda": list(cell), "count": self.counts[cell]}
                for cell in sorted(self.counts)
            ],
        }

    def __repr__(self):
        cells = ", ".join(
            f"({','.join(map(str, c))}): {v}" for c, v in sorted(self.counts.items())
        )
        return f"{{{cells}}}"


def witt_cell_table(n, q, window):
    from .lattice import enumerate_lattices

    counts = {}
    for _, cell in enumerate_lattices(n, q, window):
        counts[cell] = counts.get(cell, 0) + 1
    return CellTable(counts, n, q, window, "witt")


def zadic_cell_table(n, q, window):
    return CellTable(zadic_oracle(n, q, window), n, q, window, "z-adic")


def points_lattice(I, q=None, shift=0, check_stable=True, verify_closure=True):
    """Lattice spanned by the F_q points of V(I) in W_N(F_q)^n, unshifted.

    The point set of a module-stable ideal is a W_N(F_q)-submodule; it is
    lifted to the lattice it generates together with p^N W^n, then divided by
    p^shift.  With check_stable the Groebner stability test runs first; with
    verify_closure the point set is checked to be closed under addition and
    the scalar action (a brute-force confirmation, not a proof substitute).
    """
    field = I.ring.coeff
    if q is not None and field.q != q:
        raise UsageError(f"ideal lives over GF({field.q}), not GF({q})")
    n, N = I.n, I.N
    if field.q ** (n * N) > POINTS_GUARD:
        raise SizeGuard(f"point enumeration {field.q}^{n * N} beyond the guard")
    if check_stable and not is_module_stable(I):
        raise NotStable("points_lattice needs a module-stable ideal")

    elems = field.elements()
    points = []
    for coords in itertools.product(elems, repeat=n * N):
        if all(g.evaluate(list(coords)).is_zero() for g in I.generators):
            points.append(
                tuple(
                    WittVector(field, coords[i * N:(i + 1) * N]) for i in range(n)
                )
            )
    if verify_closure:
        pset = set(points)
        for a in points:
            for b in points:
                if tuple(x + y for x, y in zip(a, b)) not in pset:
                    raise NotStable("point set not closed under Witt addition")
        scalars = [
            WittVector(field, c) for c in itertools.product(elems, repeat=N)
        ]
        for s in scalars:
            for a in points:
                if tuple(s * x for x in a) not in pset:
                    raise NotStable("point set not closed under the scalar action")

    # one digit beyond the kernel level N; canonical keys for windows up to
    # (N-1)/n stay exact, larger windows still classify correctly
    prec = N + 1
    columns = [
        [
            PadicWittNumber(field, 0, v.coords + (field.zero,) * (prec - N))
            for v in pt
        ]
        for pt in points
        if any(not c.is_zero() for v in pt for c in v.coords)
    ]
    for row in range(n):  # the kernel of reduction: p^N W^n
        col = [padic_zero(field, prec) for _ in range(n)]
        col[row] = padic_p_power(field, N, prec)
        columns.append(col)
    return lattice_from_columns(columns, n, shift, field, prec)


def standard_cell_lattice(field, lam, prec=None):
    """The diagonal lattice of a dominant cocharacter, as a Lattice value."""
    n = len(lam)
    window = max(abs(v) for v in lam) if lam else 0
    prec = prec if prec is not None else 2 * n * max(window, 1) + 2
    cols = []
    for i in range(n):
        col = [padic_zero(field, prec + n * window) for _ in range(n)]
        col[i] = padic_p_power(field, lam[i], prec)
        cols.append(col)
    from .lattice import WittMatrix

    mat = WittMatrix(field, [[cols[j][i] for j in range(n)] for i in range(n)])
    return Lattice(mat, window)


# ---------------------------------------------------------------------------
# degeneration families as ideals over F_q(t)
# ---------------------------------------------------------------------------

def degeneration_family_ideal(field, e, d, N=None, tvar="t"):
    """Ideal over F_q(t) of the family lattice with columns
    (p^(e-1-d), 0) and ([t^2], p) inside W_N^2 (the window -d shifted model).

    Derived by eliminating the parametrization: the span of the two columns is
    the image of (x, y) -> x*c1 + y*c2, and a block elimination order projects
    the graph ideal onto the coordinate block.
    """
    if e <= d:
        raise UsageError("family needs e > d")
    if N is None:
        N = max(e - d, 2)
    K = RationalFunctionField(field, tvar)
    p = field.p
    nparams = 2 * N
    names = tuple(f"w[{l},{j}]" for l in range(1, 3) for j in range(N))
    names += tuple(f"x[{i},{j}]" for i in range(1, 3) for j in range(N))
    weights = tuple(p**j for _ in range(2) for j in range(N)) * 2
    elim = PolyRing(K, names, weights, order=("elim", nparams))

    wvec = []
    for l in range(2):
        wvec.append(WittVector(elim, tuple(elim.var(l * N + j) for j in range(N))))
    pk = witt_from_int(elim, p ** (e - 1 - d), N)
    pone = witt_from_int(elim, p, N)
    t2 = teichmuller(elim, elim.const(K.t_power(2)), N)
    v1 = pk * wvec[0] + t2 * wvec[1]
    v2 = pone * wvec[1]
    relations = []
    for i, v in enumerate((v1, v2), start=1):
        for j in range(N):
            relations.append(elim.var(nparams + (i - 1) * N + j) - v.coords[j])
    from .groebner import buchberger

    gb = buchberger(relations)
    fam = family_ring(field, 2, N, tvar)
    coord_only = []
    for g in gb:
        if all(not any(m[:nparams]) for m in g.terms):
            coord_only.append(
                g.map_into(
                    fam,
                    [fam.zero] * nparams + [fam.var(k) for k in range(2 * N)],
                )
            )
    return GradedIdeal(fam, 2, N, coord_only)


# ---------------------------------------------------------------------------
# the image report
# ---------------------------------------------------------------------------

def image_check(lam, q=2, samples=20, seed=7, N=None):
    """Sample the ideal-to-lattice map over the orbit and its degenerations.

    Reports the observed cells of (a) random orbit images of the cocharacter
    ideal and (b) flat limits of the one-parameter families, checks that every
    observed cell is dominance-below lam, and counts distinct module-stable
    ideals that map to the standard lattice.
    """
    dominant_or_raise(lam)
    n = len(lam)
    tilde1 = lam[0] - lam[-1]
    big_lambda = -n * lam[-1]
    if big_lambda > 4:
        raise SizeGuard("image_check is desk scale: sum of shifted exponents <= 4")
    field = GF(q)
    if N is None:
        N = tilde1 + 1
    rng = random.Random(seed)
    window = -lam[-1]

    observed = {}
    realized = {}

    def note(cell, how):
        observed[cell] = observed.get(cell, 0) + 1
        realized.setdefault(cell, how)

    I = ideal_I_lambda(field, lam, N)
    base = points_lattice(I, shift=window, check_stable=True)
    note(base.cell(), "cocharacter ideal")

    for _ in range(samples):
        g = random_sl(field, n, N, rng)
        from .hilbert import act_on_ideal

        J = act_on_ideal(g, I)
        lat = points_lattice(J, shift=window, check_stable=False, verify_closure=False)
        note(lat.cell(), "orbit image")

    stable_to_standard = set()
    standard_key = None
    # The explicit degeneration family is priced for the smallest cell; for
    # larger cocharacters the report covers the open orbit by sampling only.
    if lam == (1, -1):
        fam = degeneration_family_ideal(field, lam[0], lam[1], N=N)
        limit = flat_limit(fam, bound=2 * field.p ** (N - 1))
        if is_module_stable(limit):
            lat = points_lattice(limit, shift=window, check_stable=False)
            note(lat.cell(), "flat limit of the degeneration family")
            if lat.cell() == tuple([0] * n):
                stable_to_standard.add(limit)
                standard_key = lat.canonical_key()
        # the boundary ideals x[1,0] + a x[2,0], x[2,0]^p (window 1 data)
        ring = ambient_ring(field, 2, N)
        for a in field.elements():
            g1 = ring.var(var_index(2, N, 1, 0)) + ring.var(
                var_index(2, N, 2, 0)
            ).scale(a)
            g2 = ring.var(var_index(2, N, 2, 0)) ** field.p
            J = GradedIdeal(ring, 2, N, [g1, g2])
            if not is_module_stable(J):
                continue
            lat = points_lattice(J, shift=window, check_stable=False)
            note(lat.cell(), "boundary ideal")
            if lat.cell() == tuple([0] * n):
                if standard_key is None:
                    standard_key = lat.canonical_key()
                if lat.canonical_key() == standard_key:
                    stable_to_standard.add(J)

    bruhat_ok = all(bruhat_leq(cell, lam) for cell in observed)
    return {
        "lambda": list(lam),
        "q": q,
        "seed": seed,
        "samples": samples,
        "observed": {cell: observed[cell] for cell in sorted(observed)},
        "realized": {cell: realized[cell] for cell in sorted(realized)},
        "bruhat_ok": bruhat_ok,
        "standard_fiber_ideals": len(stable_to_standard),
    }
