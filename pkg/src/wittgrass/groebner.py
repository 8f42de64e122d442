"""Buchberger's algorithm for the weighted orders used here.

Plain sparse Buchberger with the coprime-leading-term criterion and full
interreduction; the ideals in this package are desk scale (a handful of
generators in at most a dozen variables), so no further pair selection
heuristics are needed.
"""

from __future__ import annotations

from .errors import SizeGuard

BASIS_GUARD = 2000


def _divides(m, lm):
    return all(a <= b for a, b in zip(m, lm))


def _quot(m, d):
    return tuple(a - b for a, b in zip(m, d))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(f, basis):
    """Full normal form of f modulo the (not necessarily Groebner) basis."""
    ring = f.ring
    key = ring.order_key
    remainder = ring.zero
    work = f
    lms = [(g.lm(), g) for g in basis if not g.is_zero()]
    while not work.is_zero():
        m = work.lm()
        c = work.terms[m]
        for glm, g in lms:
            if _divides(glm, m):
                factor = ring.monomial(_quot(m, glm), c * g.terms[glm].inv())
                work = work - factor * g
                break
        else:
            t = ring.monomial(m, c)
            remainder = remainder + t
            work = work - t
    return remainder


def s_polynomial(f, g):
    ring = f.ring
    lf, lg = f.lm(), g.lm()
    l = _lcm(lf, lg)
    mf = ring.monomial(_quot(l, lf), f.terms[lf].inv())
    mg = ring.monomial(_quot(l, lg), g.terms[lg].inv())
    return mf * f - mg * g


def buchberger(gens):
    """Reduced monic Groebner basis of the ideal generated by ``gens``."""
    basis = [g for g in gens if not g.is_zero()]
    if not basis:
        return []
    ring = basis[0].ring
    basis = [g.scale(g.lc().inv()) for g in basis]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        i, j = pairs.pop()
        f, g = basis[i], basis[j]
        lf, lg = f.lm(), g.lm()
        if all(a == 0 or b == 0 for a, b in zip(lf, lg)):
            continue  # coprime leading monomials reduce to zero
        r = normal_form(s_polynomial(f, g), basis)
        if r.is_zero():
            continue
        r = r.scale(r.lc().inv())
        basis.append(r)
        if len(basis) > BASIS_GUARD:
            raise SizeGuard("Groebner basis exceeded the resource guard")
        pairs.extend((len(basis) - 1, k) for k in range(len(basis) - 1))
    return interreduce(basis)


def interreduce(basis):
    """Minimal reduced basis: no leading term divides another, tails reduced."""
    basis = [g for g in basis if not g.is_zero()]
    # drop redundant leading terms
    keep = []
    for i, g in enumerate(basis):
        lm = g.lm()
        if any(
            j != i and _divides(basis[j].lm(), lm)
            and (basis[j].lm() != lm or j < i)
            for j in range(len(basis))
        ):
            continue
        keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = normal_form(g, others)
        if not r.is_zero():
            out.append(r.scale(r.lc().inv()))
    out.sort(key=lambda h: h.ring.order_key(h.lm()))
    return out


def ideal_contains(basis, f):
    """Membership modulo a Groebner basis."""
    return normal_form(f, basis).is_zero()


def ideal_equal(basis_a, basis_b):
    """Equality of ideals given by reduced Groebner bases of the same ring."""
    return set(basis_a) == set(basis_b)
