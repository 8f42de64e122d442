"""Precision-tracked arithmetic in W(k)[1/p] and the lattice toolbox.

A PadicWittNumber is p^shift times a truncated Witt mantissa; its absolute
precision is shift + len(mantissa).  Over perfect coefficient rings values are
kept normalized (leading mantissa component nonzero) by stripping leading
zeros with p-th roots; over non-perfect rings (Laurent coefficients) mantissas
are left as computed and only alignment, which needs p-th powers, is used.

Alignment to a smaller shift uses the identity p*(a_0, a_1, ...) =
(0, a_0^p, a_1^p, ...), which holds over every ring of characteristic p;
raising the shift is the direction that needs perfectness.

On top of that: Smith normal form over the discrete valuation ring W(F_q)
at finite precision, Schubert-cell classification, the dominance order,
first-column basis normalization, the two-parameter degeneration matrices,
and brute-force enumeration of special lattices in a symmetric window.
"""

from __future__ import annotations

import itertools

from .errors import (
    DetValuationMismatch,
    NonUnit,
    NotDominant,
    PrecisionLoss,
    RingMismatch,
    SizeGuard,
    UsageError,
    ZeroAtPrecision,
)
from .fields import GF
from .rings import LaurentRing
from .witt import WittVector, teichmuller, witt_arith, witt_inv

ENUM_GUARD = 1 << 24


class PadicWittNumber:
    """p^shift * mantissa at absolute precision shift + len(mantissa)."""

    __slots__ = ("ring", "shift", "mantissa")

    def __init__(self, ring, shift, mantissa, normalize=True):
        self.ring = ring
        coords = tuple(mantissa)
        if normalize and ring.is_perfect:
            while coords and coords[0].is_zero():
                shift += 1
                coords = tuple(c.pth_root() for c in coords[1:])
        self.shift = shift
        self.mantissa = coords

    # -- bookkeeping --

    @property
    def abs_prec(self):
        return self.shift + len(self.mantissa)

    def is_zero(self):
        return all(c.is_zero() for c in self.mantissa)

    def val(self):
        if self.ring.is_perfect:
            if not self.mantissa:
                raise ZeroAtPrecision(f"zero modulo p^{self.abs_prec}")
            return self.shift
        for i, c in enumerate(self.mantissa):
            if not c.is_zero():
                return self.shift + i
        raise ZeroAtPrecision(f"zero modulo p^{self.abs_prec}")

    def val_or_none(self):
        try:
            return self.val()
        except ZeroAtPrecision:
            return None

    # -- alignment --

    def aligned_mantissa(self, shift, length):
        """Coordinates of this value viewed at the given lower shift."""
        k = self.shift - shift
        if k < 0:
            raise PrecisionLoss("cannot align to a larger shift without roots")
        q = self.ring.p**k
        coords = [self.ring.zero] * k + [c**q for c in self.mantissa]
        if len(coords) < length:
            raise PrecisionLoss("not enough digits to align")
        return tuple(coords[:length])

    # -- arithmetic --

    def truncate_abs(self, a):
        """This value known only modulo p^a."""
        if a >= self.abs_prec:
            return self
        if a <= self.shift:
            return PadicWittNumber(self.ring, a, ())
        return PadicWittNumber(
            self.ring, self.shift, self.mantissa[: a - self.shift], normalize=False
        )

    def __add__(self, other):
        self._like(other)
        prec = min(self.abs_prec, other.abs_prec)
        if self.is_zero():
            return other.truncate_abs(prec)
        if other.is_zero():
            return self.truncate_abs(prec)
        s = min(self.shift, other.shift)
        L = prec - s
        if L <= 0:
            raise PrecisionLoss("sum has no provable digits")
        a = WittVector(self.ring, self.aligned_mantissa(s, L))
        b = WittVector(self.ring, other.aligned_mantissa(s, L))
        return PadicWittNumber(self.ring, s, (a + b).coords)

    def __neg__(self):
        if not self.mantissa:
            return self
        m = witt_arith("neg", WittVector(self.ring, self.mantissa))
        return PadicWittNumber(self.ring, self.shift, m.coords, normalize=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._like(other)
        if self.is_zero() or other.is_zero():
            prec = min(
                self.abs_prec + other.shift,
                other.abs_prec + self.shift,
            )
            return PadicWittNumber(self.ring, prec, ())
        L = min(len(self.mantissa), len(other.mantissa))
        a = WittVector(self.ring, self.mantissa[:L])
        b = WittVector(self.ring, other.mantissa[:L])
        return PadicWittNumber(
            self.ring, self.shift + other.shift, (a * b).coords, normalize=False
        )

    def inv(self):
        if self.is_zero():
            raise ZeroAtPrecision("cannot invert a value that vanishes at precision")
        if self.mantissa[0].is_zero():
            # non-perfect ring with a non-normalizable leading zero
            raise NonUnit("mantissa has a leading zero over a non-perfect ring")
        m = witt_inv(WittVector(self.ring, self.mantissa))
        return PadicWittNumber(self.ring, -self.shift, m.coords, normalize=False)

    def __truediv__(self, other):
        return self * other.inv()

    def unit_part(self):
        """The mantissa as an exact integral value (shift zero)."""
        return PadicWittNumber(self.ring, 0, self.mantissa, normalize=False)

    def p_times(self, k):
        """Shift by p^k (k may be negative over perfect rings)."""
        if k >= 0 or self.ring.is_perfect:
            return PadicWittNumber(self.ring, self.shift + k, self.mantissa)
        raise PrecisionLoss("negative shifts need a perfect coefficient ring")

    def eq_at_precision(self, other):
        return (self - other).is_zero()

    def split(self, k):
        """(low, high) with self = low + p^k * high; low has digits < k only."""
        if self.shift >= k or self.is_zero():
            low = PadicWittNumber(self.ring, min(k, self.abs_prec), ())
            high = PadicWittNumber(self.ring, self.shift - k, self.mantissa, normalize=False)
            return low, high
        m = k - self.shift
        low = PadicWittNumber(self.ring, self.shift, self.mantissa[:m], normalize=False)
        diff = self - low
        if not diff.is_zero() and diff.val() < k:
            raise PrecisionLoss("truncation failed to cancel low digits")
        high = PadicWittNumber(self.ring, diff.shift - k, diff.mantissa)
        return low, high

    def _like(self, other):
        if self.ring is not other.ring:
            raise RingMismatch("operands over different coefficient rings")

    def __eq__(self, other):
        return (
            isinstance(other, PadicWittNumber)
            and self.ring is other.ring
            and self.shift == other.shift
            and self.mantissa == other.mantissa
        )

    def __hash__(self):
        return hash((id(self.ring), self.shift, self.mantissa))

    def __repr__(self):
        body = "(" + ",".join(repr(c) for c in self.mantissa) + ")"
        if self.shift:
            return f"p^{self.shift}*{body}"
        return body


def padic_from_witt(w, shift=0):
    return PadicWittNumber(w.ring, shift, w.coords)


def padic_p_power(ring, k, prec):
    return PadicWittNumber(ring, k, (ring.one,) + (ring.zero,) * (prec - 1))


def padic_zero(ring, abs_prec):
    return PadicWittNumber(ring, abs_prec, ())


def padic_op(op, a, b=None):
    """Dispatcher for {add, mul, inv} on PadicWittNumbers."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        if b is not None:
            raise UsageError("inv takes a single operand")
        return a.inv()
    raise UsageError(f"unknown padic operation {op!r}")


# ---------------------------------------------------------------------------
# matrices of PadicWittNumbers
# ---------------------------------------------------------------------------

class WittMatrix:
    """Square matrix over W(k)[1/p] at a common working precision."""

    __slots__ = ("ring", "entries")

    def __init__(self, ring, entries):
        self.ring = ring
        self.entries = [list(row) for row in entries]

    @property
    def n(self):
        return len(self.entries)

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    @classmethod
    def identity(cls, ring, n, prec):
        one = padic_p_power(ring, 0, prec)
        zero = padic_zero(ring, prec)
        return cls(ring, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_witt_rows(cls, rows, prec=None, pad=None):
        """Lift a matrix of integral WittVectors, zero-padded to `prec` digits.

        `pad` optionally supplies the padding digits: pad(i, j, level) is used
        for levels >= the vectors' native length (the default pads zeros).
        """
        ring = rows[0][0].ring
        ents = []
        for i, row in enumerate(rows):
            out = []
            for j, w in enumerate(row):
                coords = list(w.coords)
                if prec is not None:
                    while len(coords) < prec:
                        coords.append(
                            pad(i, j, len(coords)) if pad is not None else ring.zero
                        )
                out.append(PadicWittNumber(ring, 0, coords))
            ents.append(out)
        return cls(ring, ents)

    def scale(self, c):
        return WittMatrix(
            self.ring, [[c * x for x in row] for row in self.entries]
        )

    def p_times(self, k):
        return WittMatrix(
            self.ring, [[x.p_times(k) for x in row] for row in self.entries]
        )

    def mul(self, other):
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(other.n):
                acc = self.entries[i][0] * other.entries[0][j]
                for l in range(1, n):
                    acc = acc + self.entries[i][l] * other.entries[l][j]
                row.append(acc)
            out.append(row)
        return WittMatrix(self.ring, out)

    def det(self):
        n = self.n
        if n == 1:
            return self.entries[0][0]
        acc = None
        for j in range(n):
            minor = WittMatrix(
                self.ring, [row[:j] + row[j + 1:] for row in self.entries[1:]]
            )
            term = self.entries[0][j] * minor.det()
            if j % 2:
                term = -term
            acc = term if acc is None else acc + term
        return acc

    def eq_at_precision(self, other):
        return all(
            self.entries[i][j].eq_at_precision(other.entries[i][j])
            for i in range(self.n)
            for j in range(self.n)
        )

    def copy(self):
        return WittMatrix(self.ring, self.entries)

    def __repr__(self):
        return "\n".join(
            "[" + ", ".join(repr(x) for x in row) + "]" for row in self.entries
        )


# ---------------------------------------------------------------------------
# Smith normal form over W(F_q) at precision
# ---------------------------------------------------------------------------

def _min_val_position(W, start):
    best = None
    best_val = None
    n = W.n
    for i in range(start, n):
        for j in range(start, n):
            v = W.entries[i][j].val_or_none()
            if v is None:
                continue
            if best_val is None or v < best_val:
                best, best_val = (i, j), v
    if best is None:
        raise PrecisionLoss("no pivot distinguishable from zero at this precision")
    return best, best_val


def smith_normal_form(A):
    """U, mu, V with U * diag(p^mu) * V = A at precision, mu decreasing.

    U and V are integrally invertible (products of swaps, unit scalings and
    integral transvections).  Pivoting picks the entry of minimal valuation,
    ties broken row-major.
    """
    n = A.n
    ring = A.ring
    prec = max(e.abs_prec for row in A.entries for e in row)
    W = A.copy()
    U = WittMatrix.identity(ring, n, prec)
    V = WittMatrix.identity(ring, n, prec)
    exps = []
    for k in range(n):
        (pi, pj), mu = _min_val_position(W, k)
        if pi != k:
            W.entries[k], W.entries[pi] = W.entries[pi], W.entries[k]
            for r in range(n):  # U: swap columns k, pi
                U.entries[r][k], U.entries[r][pi] = U.entries[r][pi], U.entries[r][k]
        if pj != k:
            for r in range(n):
                W.entries[r][k], W.entries[r][pj] = W.entries[r][pj], W.entries[r][k]
            V.entries[k], V.entries[pj] = V.entries[pj], V.entries[k]
        pivot = W.entries[k][k]
        unit = pivot.unit_part()  # pivot = p^mu * unit
        uinv = unit.inv()
        W.entries[k] = [x * uinv for x in W.entries[k]]
        for r in range(n):  # U: column k picks up the unit
            U.entries[r][k] = U.entries[r][k] * unit
        pivot = W.entries[k][k]
        for i in range(n):
            if i == k:
                continue
            e = W.entries[i][k]
            if e.is_zero():
                continue
            factor = e / pivot  # integral: val(e) >= mu
            W.entries[i] = [
                x - factor * y for x, y in zip(W.entries[i], W.entries[k])
            ]
            for r in range(n):  # U: col k += factor * col i
                U.entries[r][k] = U.entries[r][k] + factor * U.entries[r][i]
        for j in range(n):
            if j == k:
                continue
            e = W.entries[k][j]
            if e.is_zero():
                continue
            factor = e / pivot
            for r in range(n):
                W.entries[r][j] = W.entries[r][j] - factor * W.entries[r][k]
            # V: row k += factor * row j
            V.entries[k] = [
                x + factor * y for x, y in zip(V.entries[k], V.entries[j])
            ]
        exps.append(mu)
    # re-sort decreasing via the reversal permutation
    order = sorted(range(n), key=lambda i: exps[i], reverse=True)
    Uo = WittMatrix(ring, [[U.entries[r][order[c]] for c in range(n)] for r in range(n)])
    Vo = WittMatrix(ring, [list(V.entries[order[r]]) for r in range(n)])
    return Uo, tuple(exps[i] for i in order), Vo


def diag_p_matrix(ring, exps, prec):
    n = len(exps)
    zprec = prec + max(list(exps) + [0])
    ents = [
        [
            padic_p_power(ring, exps[i], prec) if i == j else padic_zero(ring, zprec)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return WittMatrix(ring, ents)


def classify_cell(g):
    """Dominant cocharacter of the lattice spanned by the columns of g."""
    _, mu, _ = smith_normal_form(g)
    if sum(mu) != 0:
        raise DetValuationMismatch(
            f"elementary divisor exponents {mu} do not sum to zero; "
            "classify_cell expects a determinant-one basis"
        )
    return mu


def dominant_or_raise(lam):
    if sum(lam) != 0 or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise NotDominant(f"{lam} is not a dominant cocharacter")


def bruhat_leq(lam, mu):
    """Dominance order: all partial sums of lam bounded by those of mu."""
    dominant_or_raise(lam)
    dominant_or_raise(mu)
    if len(lam) != len(mu):
        raise NotDominant("cocharacters of different rank")
    acc_l = acc_m = 0
    for a, b in zip(lam, mu):
        acc_l += a
        acc_m += b
        if acc_l > acc_m:
            return False
    return True


def stabilizes_standard(g):
    """True iff g fixes the standard lattice: all of g, g^{-1} integral."""
    return all(v == 0 for v in classify_cell(g))


def normalize_basis(M, big_lambda, prec=None, pad=None):
    """Turn an integral basis with det valuation big_lambda into a det-1 basis.

    M is a matrix of WittVectors over W_N(F_q).  The entries are zero-padded
    to the working precision, the matrix is divided by p^(big_lambda/n), and
    the first column is divided by the (unit) determinant.  By the geometric
    series perturbation bound the classified cell does not depend on the
    padding digits.
    """
    n = len(M)
    if big_lambda % n:
        raise DetValuationMismatch(
            f"det valuation {big_lambda} is not a multiple of the rank {n}"
        )
    N = M[0][0].length
    prec = prec if prec is not None else N + big_lambda + 2
    A = WittMatrix.from_witt_rows(M, prec=prec, pad=pad)
    d = A.det()
    dval = d.val_or_none()
    if dval != big_lambda:
        raise DetValuationMismatch(
            f"determinant valuation is {dval}, expected {big_lambda}"
        )
    g = A.p_times(-(big_lambda // n))
    u = g.det()  # a unit at precision
    uinv = u.inv()
    for i in range(n):
        g.entries[i][0] = g.entries[i][0] * uinv
    return g


# ---------------------------------------------------------------------------
# the degeneration family
# ---------------------------------------------------------------------------

def degeneration_family(e, d, p=2, q=None, N=None):
    """Matrices (A, diag(p^e, p^d), C) over W_N(F_q[t,1/t]) with
    A*diag*C = [[p^(e-1), t^2 p^d], [0, p^(d+1)]], verified exactly.

    The product connects the diagonal lattice of type (e, d) to one of type
    (d+1, e-1); letting t specialize to 0 is the degeneration step.
    """
    if e <= d:
        raise UsageError("degeneration family needs e > d")
    if N is None:
        N = e - d + 2
    if N < e - d + 2:
        raise PrecisionLoss(f"working length {N} too small; need at least {e - d + 2}")
    field = GF(q if q is not None else p)
    if field.p != p:
        raise UsageError("q must be a power of p")
    L = LaurentRing(field)

    def tei(k):
        return padic_from_witt(teichmuller(L, L.monomial(k), N))

    def tei_p(k, s):
        return PadicWittNumber(L, s, teichmuller(L, L.monomial(k), N).coords)

    zero = padic_zero(L, N + abs(e) + abs(d) + 2)
    A = WittMatrix(L, [[zero, tei(1)], [-tei(-1), tei_p(-1, 1)]])
    D = WittMatrix(L, [
        [PadicWittNumber(L, e, teichmuller(L, L.one, N).coords), zero],
        [zero, PadicWittNumber(L, d, teichmuller(L, L.one, N).coords)],
    ])
    C = WittMatrix(L, [[tei(-1), zero], [tei_p(-1, e - d - 1), tei(1)]])
    rhs = degeneration_rhs(e, d, p, q, N)
    prod = A.mul(D).mul(C)
    if not prod.eq_at_precision(rhs):
        raise ArithmeticError("degeneration identity failed to verify")
    return A, D, C


def degeneration_rhs(e, d, p=2, q=None, N=None):
    """[[p^(e-1), t^2 p^d], [0, p^(d+1)]] over W_N(F_q[t,1/t])."""
    if N is None:
        N = e - d + 2
    field = GF(q if q is not None else p)
    L = LaurentRing(field)
    one = teichmuller(L, L.one, N).coords
    zero = padic_zero(L, N + abs(e) + abs(d) + 2)
    return WittMatrix(L, [
        [
            PadicWittNumber(L, e - 1, one),
            PadicWittNumber(L, d, teichmuller(L, L.monomial(2), N).coords),
        ],
        [zero, PadicWittNumber(L, d + 1, one)],
    ])


# ---------------------------------------------------------------------------
# lattices: canonical forms, enumeration
# ---------------------------------------------------------------------------

def column_reduce(columns, n, prec, ring):
    """Reduce a list of integral padic columns; returns pivot exponents and
    reduced basis columns (one per pivot row, rows without pivot omitted)."""
    cols = [list(c) for c in columns]
    basis = []
    exps = {}
    for row in range(n):
        # pick the column whose entry in this row has minimal valuation
        best = None
        best_val = None
        for idx, c in enumerate(cols):
            v = c[row].val_or_none()
            if v is None:
                continue
            if best_val is None or v < best_val:
                best, best_val = idx, v
        if best is None or best_val >= prec:
            continue
        piv_col = cols.pop(best)
        unit = piv_col[row].unit_part()
        uinv = unit.inv()
        piv_col = [x * uinv for x in piv_col]
        for c in cols:
            if c[row].is_zero():
                continue
            factor = c[row] / piv_col[row]
            for r in range(n):
                c[r] = c[r] - factor * piv_col[r]
        exps[row] = best_val
        basis.append((row, piv_col))
    return exps, basis


class Lattice:
    """A lattice p^N_w W^n <= L <= p^-N_w W^n given by a column basis."""

    def __init__(self, basis, window):
        self.basis = basis  # WittMatrix, columns span L
        self.window = window
        self._canon = None

    @property
    def n(self):
        return self.basis.n

    def cell(self):
        _, mu, _ = smith_normal_form(self.basis)
        return mu

    def is_special(self):
        return sum(self.cell()) == 0

    def canonical_key(self):
        """Column Hermite normal form rendered as a hashable key."""
        if self._canon is not None:
            return self._canon
        n = self.n
        W = self.basis.copy()
        pivots = []
        for i in range(n):
            best = None
            best_val = None
            for j in range(i, n):
                v = W.entries[i][j].val_or_none()
                if v is None:
                    continue
                if best_val is None or v < best_val:
                    best, best_val = j, v
            if best is None:
                raise PrecisionLoss("basis is singular at this precision")
            if best != i:
                for r in range(n):
                    W.entries[r][i], W.entries[r][best] = (
                        W.entries[r][best],
                        W.entries[r][i],
                    )
            unit = W.entries[i][i].unit_part()
            uinv = unit.inv()
            for r in range(n):
                W.entries[r][i] = W.entries[r][i] * uinv
            a_i = W.entries[i][i].val()
            pivots.append(a_i)
            for j in range(n):
                if j == i:
                    continue
                ent = W.entries[i][j]
                if ent.is_zero():
                    continue
                if j > i:
                    factor = ent / W.entries[i][i]
                else:
                    _, factor = ent.split(a_i)  # reduce mod p^{a_i}
                if factor.is_zero():
                    continue
                for r in range(n):
                    W.entries[r][j] = W.entries[r][j] - factor * W.entries[r][i]
        # render digits up to the window-determined precision
        horizon = self.window * self.n + 1
        key = []
        for i in range(n):
            row = []
            for j in range(n):
                ent = W.entries[i][j]
                digits = []
                if not ent.is_zero():
                    v = ent.val()
                    for k, c in enumerate(ent.mantissa):
                        if v + k < horizon:
                            digits.append((v + k, c))
                row.append(tuple(digits))
            key.append(tuple(row))
        self._canon = (n, self.window, tuple(key))
        return self._canon

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return f"Lattice(window={self.window}, cell={self.cell()})\n{self.basis!r}"


def standard_lattice(ring, n, window=0, prec=None):
    prec = prec if prec is not None else 2 * n * max(window, 1) + 2
    return Lattice(WittMatrix.identity(ring, n, prec), window)


def lattice_from_columns(columns, n, window, ring, prec):
    """Build a lattice from integral generating columns plus p^(2*window) W^n."""
    exps, basis = column_reduce(columns, n, prec, ring)
    forced = 2 * window
    cols = []
    have = {row: col for row, col in basis}
    for row in range(n):
        if row in have and exps[row] <= forced:
            cols.append(have[row])
        else:
            col = [padic_zero(ring, prec + forced) for _ in range(n)]
            col[row] = padic_p_power(ring, forced, prec)
            cols.append(col)
    mat = WittMatrix(ring, [[cols[j][i] for j in range(n)] for i in range(n)])
    return Lattice(mat.p_times(-window), window)


def enumerate_lattices(n, q, window):
    """All special lattices with p^window W^n <= L <= p^-window W^n.

    Brute force: enumerate the submodules of W_{2*window}(F_q)^n by closure
    (precomputed index tables make ring operations array lookups), keep those
    whose basis determinant has valuation n*window, and classify each by its
    Smith normal form.  Returns (Lattice, cell) pairs, each lattice once.
    """
    field = GF(q)
    if window == 0:
        lat = standard_lattice(field, n)
        return [(lat, tuple([0] * n))]
    P = 2 * window
    msize = field.q ** (P * n)
    if msize * msize > ENUM_GUARD:
        raise SizeGuard(f"module of size {msize} exceeds the enumeration guard")
    # enough digits to detect pivots up to p^(2w) and to render canonical keys
    prec = 2 * window + n

    ring_elems = [
        WittVector(field, coords)
        for coords in itertools.product(field.elements(), repeat=P)
    ]
    index = {w: i for i, w in enumerate(ring_elems)}
    m = len(ring_elems)
    add_t = [[index[ring_elems[i] + ring_elems[j]] for j in range(m)] for i in range(m)]
    mul_t = [[index[ring_elems[i] * ring_elems[j]] for j in range(m)] for i in range(m)]
    zero_idx = index[WittVector(field, (field.zero,) * P)]

    zero_vec = (zero_idx,) * n
    all_elems = list(itertools.product(range(m), repeat=n))

    def extend(S, v):
        out = set(S)
        for c in range(m):
            cv = tuple(mul_t[c][a] for a in v)
            for s in S:
                out.add(tuple(add_t[x][y] for x, y in zip(s, cv)))
        return frozenset(out)

    start = frozenset([zero_vec])
    seen = {start}
    queue = [start]
    submodules = []
    while queue:
        S = queue.pop()
        submodules.append(S)
        for v in all_elems:
            if v in S:
                continue
            T = extend(S, v)
            if T not in seen:
                seen.add(T)
                queue.append(T)

    out = []
    for S in submodules:
        columns = [
            [
                PadicWittNumber(
                    field,
                    0,
                    ring_elems[a].coords + (field.zero,) * (prec - P),
                )
                for a in vec
            ]
            for vec in S
            if vec != zero_vec
        ]
        for row in range(n):  # forced sublattice p^P W^n
            col = [padic_zero(field, prec) for _ in range(n)]
            col[row] = padic_p_power(field, P, prec)
            columns.append(col)
        lat = lattice_from_columns(columns, n, window, field, prec)
        mu = lat.cell()
        if sum(mu) != 0:
            continue  # not special
        out.append((lat, mu))
    return out
