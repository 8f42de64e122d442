"""Graded ideals for the p-power weighted module grading, and their invariants.

The ambient ring is k[x[i,j] : 1 <= i <= n, 0 <= j < N] with deg x[i,j] = p^j,
the grading that makes the realized W_N-module operations on affine nN-space
graded.  This module owns Groebner normalization, multigraded Hilbert
functions, the submodule-scheme stability test, the realized group action on
ideals, and flat limits of one-parameter families.

Flat limits work degree by degree: the degree-a slice of a family over F_q(t)
is a module over the local ring of t = 0; its Smith normal form yields the
t-saturation, whose fiber at t = 0 is the limit's degree-a piece.  The limit
Hilbert function equals the generic one by construction, which the tests
cross-check by independent monomial enumeration.
"""

from __future__ import annotations

from .errors import SaturationGuard, UsageError, WindowTooSmall
from .greenberg import coord_ring, realize_action
from .lattice import dominant_or_raise
from .groebner import buchberger, ideal_contains, ideal_equal, normal_form
from .poly import PolyRing, Polynomial
from .rings import RationalFunctionField
from .structure import MAX_SLOTS, StructurePolynomialTable
from .witt import mat_inv


def ambient_ring(field, n, N):
    return coord_ring(field, n, N)


def var_index(n, N, i, j):
    """Index of x[i,j] (i is 1-based as displayed, j is the Witt level)."""
    if not (1 <= i <= n and 0 <= j < N):
        raise UsageError(f"x[{i},{j}] outside the ambient {n} x {N} grid")
    return (i - 1) * N + j


class GradedIdeal:
    """Homogeneous ideal in the weighted coordinate ring of W_N^n."""

    def __init__(self, ring, n, N, generators):
        self.ring = ring
        self.n = n
        self.N = N
        self.generators = [g for g in generators if not g.is_zero()]
        for g in self.generators:
            if not g.is_homogeneous():
                raise UsageError(f"generator {g!r} is not homogeneous for the grading")
        self._gb = None

    @property
    def p(self):
        return self.ring.coeff.p

    def basis(self):
        if self._gb is None:
            self._gb = buchberger(self.generators)
        return self._gb

    def contains(self, f):
        return ideal_contains(self.basis(), f)

    def __eq__(self, other):
        return (
            isinstance(other, GradedIdeal)
            and self.ring is other.ring
            and ideal_equal(self.basis(), other.basis())
        )

    def __hash__(self):
        return hash((id(self.ring), frozenset(self.basis())))

    def __repr__(self):
        gens = ", ".join(repr(g) for g in self.generators)
        return f"<ideal ({gens})>"


def ideal_for_window(field, lam, N, window):
    """Ideal of the lattice diag(p^(lam_i + window)) W^n inside W_N^n.

    Generators x[i,j] for j < lam_i + window; requires lam_i + window >= 0 and
    N >= max exponent.
    """
    n = len(lam)
    exps = [l + window for l in lam]
    if any(e < 0 for e in exps):
        raise WindowTooSmall(f"window {window} too small for {lam}")
    if N < max(exps):
        raise WindowTooSmall(f"length {N} cannot hold exponents {exps}")
    ring = ambient_ring(field, n, N)
    gens = [
        ring.var(var_index(n, N, i, j))
        for i in range(1, n + 1)
        for j in range(exps[i - 1])
    ]
    return GradedIdeal(ring, n, N, gens)


def ideal_I_lambda(field, lam, N, allow_tight_window=False):
    """The coordinate ideal of the cocharacter lattice at its natural window.

    Kills x[i,j] for j < lam_i - lam_n.  The truncation must satisfy
    N > lam_1 - lam_n; pass allow_tight_window=True to permit equality, which
    kills every level of the first coordinate block.
    """
    dominant_or_raise(lam)
    tilde1 = lam[0] - lam[-1]
    if N < tilde1 + (0 if allow_tight_window else 1):
        raise WindowTooSmall(
            f"truncation length {N} too small for cocharacter {lam}"
        )
    return ideal_for_window(field, lam, N, -lam[-1])


# ---------------------------------------------------------------------------
# Hilbert functions
# ---------------------------------------------------------------------------

def monomials_of_weight(ring, a):
    """All exponent tuples of weighted degree exactly a."""
    weights = ring.weights
    nvars = len(weights)
    out = []
    exps = [0] * nvars

    def rec(idx, rem):
        if idx == nvars:
            if rem == 0:
                out.append(tuple(exps))
            return
        w = weights[idx]
        if idx == nvars - 1:
            if rem % w == 0:
                exps[idx] = rem // w
                out.append(tuple(exps))
                exps[idx] = 0
            return
        for e in range(rem // w + 1):
            exps[idx] = e
            rec(idx + 1, rem - e * w)
        exps[idx] = 0

    rec(0, a)
    return out


def default_bound(p, N):
    return 4 * p ** (N - 1)


class HilbertFunction:
    """Degree-indexed ranks h(0..bound) of the graded quotient."""

    def __init__(self, values):
        self.values = list(values)

    def __getitem__(self, a):
        return self.values[a]

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        return isinstance(other, HilbertFunction) and self.values == other.values

    def dominates(self, other):
        """Pointwise >=, with strict inequality somewhere on the common range."""
        pairs = list(zip(self.values, other.values))
        return all(a >= b for a, b in pairs) and any(a > b for a, b in pairs)

    def __repr__(self):
        return ",".join(str(v) for v in self.values)


def hilbert_function(I, bound):
    """h(a) = number of weight-a monomials outside the leading-term ideal."""
    lts = [g.lm() for g in I.basis()]
    values = []
    for a in range(bound + 1):
        count = 0
        for m in monomials_of_weight(I.ring, a):
            if not any(all(x >= y for x, y in zip(m, lt)) for lt in lts):
                count += 1
        values.append(count)
    return HilbertFunction(values)


def hilbert_function_linalg(I, bound):
    """Rank-based Hilbert function, independent of any Groebner computation.

    The degree-a piece of the ideal is spanned by monomial multiples of the
    generators; h(a) is the slice dimension minus the rank of that span.
    """
    field = I.ring.coeff
    values = []
    for a in range(bound + 1):
        slice_monos = monomials_of_weight(I.ring, a)
        pos = {m: k for k, m in enumerate(slice_monos)}
        rows = []
        for g in I.generators:
            d = g.wdeg()
            if d > a:
                continue
            for m in monomials_of_weight(I.ring, a - d):
                vec = [field.zero] * len(slice_monos)
                for gm, c in g.terms.items():
                    mm = tuple(x + y for x, y in zip(m, gm))
                    vec[pos[mm]] = vec[pos[mm]] + c
                rows.append(vec)
        values.append(len(slice_monos) - _rank(rows, field))
    return HilbertFunction(values)


def _rank(rows, field):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    lead = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if not rows[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inv()
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                c = rows[r][col]
                rows[r] = [x - c * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# module stability (the lattice-scheme condition)
# ---------------------------------------------------------------------------

def _table_poly(ring, level_terms, images_x, images_y):
    """Build a structure polynomial inside `ring` with the given variable
    images: slot i of the X letter -> images_x[i], same for Y."""
    acc = ring.zero
    for exps, c in level_terms:
        term = ring.from_int(c)
        for slot, e in exps:
            base = images_x[slot] if slot < MAX_SLOTS else images_y[slot - MAX_SLOTS]
            term = term * base**e
        acc = acc + term
    return acc


def is_module_stable(I):
    """Is V(I) stable under the realized W_N-module operations?

    Checks, for every generator: the negation comorphism keeps it in I; the
    addition comorphism lands in I' + I'' in the doubled coordinate ring; the
    generic-scalar comorphism lands in the extension of I by the scalar
    coordinates.  The zero section is automatic for homogeneous ideals under
    a positive grading.
    """
    n, N = I.n, I.N
    field = I.ring.coeff
    p = field.p
    table = StructurePolynomialTable.get(p, N)
    gb = I.basis()

    # negation: x[i,j] -> N_j(x[i,*])
    neg_images = []
    for i in range(1, n + 1):
        xs = [I.ring.var(var_index(n, N, i, j)) for j in range(N)]
        for j in range(N):
            neg_images.append(_table_poly(I.ring, table.neg_p[j], xs, xs))
    for g in I.generators:
        if not ideal_contains(gb, g.map_into(I.ring, neg_images)):
            return False

    # addition: x[i,j] -> S_j(y[i,*], z[i,*]) against I(y) + I(z)
    dn = [f"y[{i},{j}]" for i in range(1, n + 1) for j in range(N)]
    dn += [f"z[{i},{j}]" for i in range(1, n + 1) for j in range(N)]
    dw = tuple(p**j for i in range(n) for j in range(N)) * 2
    doubled = PolyRing(field, dn, dw)
    halfway = n * N
    y_of = lambda i, j: doubled.var((i - 1) * N + j)
    z_of = lambda i, j: doubled.var(halfway + (i - 1) * N + j)
    add_images = []
    for i in range(1, n + 1):
        ys = [y_of(i, j) for j in range(N)]
        zs = [z_of(i, j) for j in range(N)]
        for j in range(N):
            add_images.append(_table_poly(doubled, table.add_p[j], ys, zs))
    to_y = [y_of(i, j) for i in range(1, n + 1) for j in range(N)]
    to_z = [z_of(i, j) for i in range(1, n + 1) for j in range(N)]
    # Groebner bases of ideals in disjoint variable blocks stay Groebner, and
    # so does their union (coprime leading terms).
    doubled_gb = [g.map_into(doubled, to_y) for g in gb]
    doubled_gb += [g.map_into(doubled, to_z) for g in gb]
    for g in I.generators:
        if not ideal_contains(doubled_gb, g.map_into(doubled, add_images)):
            return False

    # generic scalar: x[i,j] -> M_j(s[*], x[i,*]) against I extended by s[*]
    sn = [f"s[0,{j}]" for j in range(N)]
    sn += list(I.ring.names)
    sw = tuple(p**j for j in range(N)) + I.ring.weights
    scal = PolyRing(field, sn, sw)
    svars = [scal.var(j) for j in range(N)]
    x_of = lambda i, j: scal.var(N + (i - 1) * N + j)
    scal_images = []
    for i in range(1, n + 1):
        xs = [x_of(i, j) for j in range(N)]
        for j in range(N):
            scal_images.append(_table_poly(scal, table.mul_p[j], svars, xs))
    to_x = [x_of(i, j) for i in range(1, n + 1) for j in range(N)]
    # extension of I: the lifted basis is still a Groebner basis because the
    # scalar variables sit in front and the order restricts to the old one
    scal_gb = [g.map_into(scal, to_x) for g in gb]
    for g in I.generators:
        if not ideal_contains(scal_gb, g.map_into(scal, scal_images)):
            return False
    return True


def act_on_ideal(g, I):
    """Left action of g in GL_n(W_N(k)) on the ideal: substitute g^{-1}.x."""
    ginv = mat_inv(g)
    rmap = realize_action(ginv, I.n)
    if rmap.ring is not I.ring:
        raise UsageError("action realized over a different ambient ring")
    images = rmap.flat_components()
    gens = [f.map_into(I.ring, images) for f in I.generators]
    return GradedIdeal(I.ring, I.n, I.N, gens)


# ---------------------------------------------------------------------------
# flat limits of one-parameter families
# ---------------------------------------------------------------------------

def family_ring(field, n, N, tvar="t"):
    """Coordinate ring of W_N^n over the rational function field F_q(t)."""
    K = RationalFunctionField(field, tvar)
    return PolyRing(
        K,
        tuple(f"x[{i},{j}]" for i in range(1, n + 1) for j in range(N)),
        tuple(field.p**j for _ in range(n) for j in range(N)),
    )


def _tval(r):
    """t-adic valuation of a RatFunc (num and den are coprime)."""
    num, den = r.num, r.den
    nv = next((i for i, c in enumerate(num) if not c.is_zero()), None)
    if nv is None:
        return None
    dv = next(i for i, c in enumerate(den) if not c.is_zero())
    return nv - dv


def _at_zero(r, field):
    """Evaluate a t-integral RatFunc at t = 0."""
    num = r.num[0] if r.num else field.zero
    den = r.den[0]
    return num * den.inv()


def _dvr_saturated_fiber(rows, ncols, K):
    """Rows span a module over the local ring at t = 0; return (rank, basis of
    the t-saturation's fiber at t = 0) as vectors over the residue field.

    Smith normal form over the DVR: row/column eliminations with minimal
    t-valuation pivots, tracking only the column operations' effect on a
    companion matrix V, so that the saturation is the span of V's first
    rank rows.
    """
    field = K.base
    A = [list(r) for r in rows]
    nrows = len(A)
    V = [
        [K.one if i == j else K.zero for j in range(ncols)]
        for i in range(ncols)
    ]
    rank = 0
    for k in range(min(nrows, ncols)):
        piv = None
        piv_val = None
        for i in range(k, nrows):
            for j in range(k, ncols):
                v = _tval(A[i][j])
                if v is None:
                    continue
                if piv_val is None or v < piv_val:
                    piv, piv_val = (i, j), v
        if piv is None:
            break
        pi, pj = piv
        A[k], A[pi] = A[pi], A[k]
        if pj != k:
            for row in A:
                row[k], row[pj] = row[pj], row[k]
            V[k], V[pj] = V[pj], V[k]
        pivot = A[k][k]
        for i in range(k + 1, nrows):
            if _tval(A[i][k]) is None:
                continue
            f = A[i][k] * pivot.inv()
            A[i] = [x - f * y for x, y in zip(A[i], A[k])]
        for j in range(k + 1, ncols):
            if _tval(A[k][j]) is None:
                continue
            f = A[k][j] * pivot.inv()  # t-integral: pivot has minimal valuation
            for row in A:
                row[j] = row[j] - f * row[k]
            V[k] = [x + f * y for x, y in zip(V[k], V[j])]
        rank += 1
    fiber = [[_at_zero(x, field) for x in V[i]] for i in range(rank)]
    return rank, fiber


def flat_limit(family, bound=None, guard_band=None):
    """Fiber at t = 0 of the t-saturation of a homogeneous family.

    ``family`` is a GradedIdeal over F_q(t) coefficients.  Degree by degree,
    the slice of the family is saturated with respect to t and evaluated at
    t = 0; minimal generators of the resulting ideal are extracted up to the
    degree bound.  Raises SaturationGuard if generators still appear within
    ``guard_band`` of the bound, since completeness can then not be certified.
    """
    K = family.ring.coeff
    field = K.base
    n, N = family.n, family.N
    p = field.p
    if bound is None:
        bound = default_bound(p, N)
    if guard_band is None:
        guard_band = max(p ** (N - 1), max((g.wdeg() for g in family.generators), default=1))
    ring = ambient_ring(field, n, N)

    pieces = {}  # degree -> list of k-vectors (in the slice monomial basis)
    ranks = {}
    slices = {}
    for a in range(bound + 1):
        slice_monos = monomials_of_weight(family.ring, a)
        slices[a] = slice_monos
        pos = {m: k for k, m in enumerate(slice_monos)}
        rows = []
        for g in family.generators:
            d = g.wdeg()
            if d > a:
                continue
            for m in monomials_of_weight(family.ring, a - d):
                vec = [K.zero] * len(slice_monos)
                for gm, c in g.terms.items():
                    mm = tuple(x + y for x, y in zip(m, gm))
                    vec[pos[mm]] = vec[pos[mm]] + c
                rows.append(vec)
        if not rows:
            pieces[a], ranks[a] = [], 0
            continue
        ranks[a], pieces[a] = _dvr_saturated_fiber(rows, len(slice_monos), K)

    # minimal generators: piece modulo (variables times lower pieces)
    gens = []
    for a in range(bound + 1):
        if not pieces[a]:
            continue
        pos = {m: k for k, m in enumerate(slices[a])}
        old = []
        for vi, w in enumerate(ring.weights):
            b = a - w
            if b < 0 or b not in pieces:
                continue
            for vec in pieces[b]:
                lifted = [field.zero] * len(slices[a])
                for m, c in zip(slices[b], vec):
                    if c.is_zero():
                        continue
                    mm = list(m)
                    mm[vi] += 1
                    lifted[pos[tuple(mm)]] = lifted[pos[tuple(mm)]] + c
                old.append(lifted)
        new_vecs = _complement_basis(old, pieces[a], field)
        if new_vecs and a > bound - guard_band:
            raise SaturationGuard(
                f"flat limit still acquires generators at degree {a}, "
                f"too close to the bound {bound}"
            )
        for vec in new_vecs:
            terms = {
                m: c for m, c in zip(slices[a], vec) if not c.is_zero()
            }
            gens.append(Polynomial(ring, terms))
    return GradedIdeal(ring, n, N, gens)


def generic_hilbert(family, bound):
    """Hilbert function of the generic fiber of a family over F_q(t)."""
    return hilbert_function_linalg(family, bound)


def _complement_basis(old_rows, new_rows, field):
    """Vectors of new_rows independent modulo the span of old_rows."""
    rows = [list(r) for r in old_rows]
    base_rank = _rank(rows, field)
    out = []
    work = [list(r) for r in old_rows]
    cur = base_rank
    for cand in new_rows:
        trial = work + [list(cand)]
        r = _rank(trial, field)
        if r > cur:
            out.append(cand)
            work = trial
            cur = r
    return out
