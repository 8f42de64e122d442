"""Truncated Witt vectors W_N(A) over characteristic-p coefficient rings.

Arithmetic is evaluation of the universal structure polynomials (reduced mod
p) at the operand coordinates, so it works uniformly over finite fields,
polynomial rings and Laurent rings.  Inversion is the componentwise triangular
solve: the n-th component of a product depends on the n-th component of the
second factor only through the term a_0^(p^n) * b_n.
"""

from __future__ import annotations

from .errors import NonUnit, NotPerfect, RingMismatch
from .structure import MAX_SLOTS, StructurePolynomialTable


class WittVector:
    """Length-N Witt vector with coordinates in a coefficient ring."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring, coords):
        self.ring = ring
        self.coords = tuple(coords)

    @property
    def length(self):
        return len(self.coords)

    def __add__(self, other):
        return witt_arith("add", self, other)

    def __sub__(self, other):
        return witt_arith("add", self, witt_arith("neg", other))

    def __mul__(self, other):
        return witt_arith("mul", self, other)

    def __neg__(self):
        return witt_arith("neg", self)

    def __pow__(self, n):
        if n < 0:
            return witt_inv(self) ** (-n)
        acc = witt_one(self.ring, self.length)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, WittVector)
            and self.ring is other.ring
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((id(self.ring), self.coords))

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def is_unit(self):
        return self.coords[0].is_unit()

    def __repr__(self):
        return "(" + ",".join(repr(c) for c in self.coords) + ")"


def witt_zero(ring, N):
    return WittVector(ring, (ring.zero,) * N)


def witt_one(ring, N):
    return WittVector(ring, (ring.one,) + (ring.zero,) * (N - 1))


def teichmuller(ring, c, N):
    """The multiplicative lift c -> (c, 0, ..., 0)."""
    return WittVector(ring, (c,) + (ring.zero,) * (N - 1))


def witt_from_int(ring, n, N):
    """Image of the integer n in W_N(ring), via double-and-add."""
    if n < 0:
        return -witt_from_int(ring, -n, N)
    acc = witt_zero(ring, N)
    one = witt_one(ring, N)
    for bit in bin(n)[2:]:
        acc = acc + acc
        if bit == "1":
            acc = acc + one
    return acc


def _eval_level(terms, ring, acoords, bcoords):
    """Evaluate one reduced structure polynomial at the given coordinates."""
    zero = ring.zero
    acc = zero
    powers = {}
    for exps, c in terms:
        prod = ring.from_int(c)
        dead = False
        for slot, e in exps:
            coord = acoords[slot] if slot < MAX_SLOTS else bcoords[slot - MAX_SLOTS]
            if coord.is_zero():
                dead = True
                break
            key = (slot, e)
            pw = powers.get(key)
            if pw is None:
                pw = coord**e
                powers[key] = pw
            prod = prod * pw
        if not dead:
            acc = acc + prod
    return acc


def witt_arith(op, a, b=None):
    """Apply a structure-polynomial operation; op in {add, mul, neg}."""
    if op == "neg":
        if b is not None:
            raise RingMismatch("neg takes a single operand")
        b = a
    elif b is None:
        raise RingMismatch(f"{op} needs two operands")
    if a.ring is not b.ring:
        raise RingMismatch("operands live over different coefficient rings")
    if a.length != b.length:
        raise RingMismatch(f"length mismatch: {a.length} vs {b.length}")
    ring = a.ring
    table = StructurePolynomialTable.get(ring.p, a.length)
    reduced = table.reduced(op)
    coords = [
        _eval_level(reduced[n], ring, a.coords, b.coords) for n in range(a.length)
    ]
    return WittVector(ring, coords)


def witt_inv(a):
    """Two-sided inverse of a unit, by the triangular componentwise solve."""
    if not a.coords[0].is_unit():
        raise NonUnit("leading Witt component is not invertible")
    ring = a.ring
    N = a.length
    p = ring.p
    table = StructurePolynomialTable.get(p, N)
    inv0 = a.coords[0].inv()
    bcoords = [inv0] + [ring.zero] * (N - 1)
    target_one = [ring.one] + [ring.zero] * (N - 1)
    for n in range(1, N):
        partial = _eval_level(table.mul_p[n], ring, a.coords, bcoords)
        # product component n = a_0^(p^n) * b_n + partial (b_n currently 0)
        bcoords[n] = (target_one[n] - partial) * (inv0 ** (p**n))
    return WittVector(ring, bcoords)


def frobenius(a):
    """F((a_i)) = (a_i^p); requires a perfect coefficient ring."""
    ring = a.ring
    if not ring.is_perfect:
        raise NotPerfect("frobenius requires a perfect coefficient ring")
    p = ring.p
    return WittVector(ring, tuple(c**p for c in a.coords))


def verschiebung(a):
    """V((a_0, ..., a_{N-2}, a_{N-1})) = (0, a_0, ..., a_{N-2})."""
    ring = a.ring
    return WittVector(ring, (ring.zero,) + a.coords[:-1])


def p_shift(a):
    """Multiplication by p on W_N: (a_i) -> (0, a_0^p, ..., a_{N-2}^p).

    Only valid verbatim over perfect rings; elsewhere multiply by the constant
    p through witt_arith(mul, ...) instead.
    """
    ring = a.ring
    if not ring.is_perfect:
        raise NotPerfect(
            "p_shift requires a perfect coefficient ring; "
            "use generic multiplication by the constant p instead"
        )
    p = ring.p
    return WittVector(ring, (ring.zero,) + tuple(c**p for c in a.coords[:-1]))


def witt_random(ring, N, rng):
    return WittVector(ring, tuple(ring.random(rng) for _ in range(N)))


# ---------------------------------------------------------------------------
# small dense matrices over W_N(A)
# ---------------------------------------------------------------------------

def mat_identity(ring, n, N):
    one, zero = witt_one(ring, N), witt_zero(ring, N)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, m, k = len(A), len(B[0]), len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = A[i][0] * B[0][j]
            for l in range(1, k):
                acc = acc + A[i][l] * B[l][j]
            row.append(acc)
        out.append(row)
    return out


def mat_det(A):
    """Determinant by expansion along the first row (desk-scale n)."""
    n = len(A)
    if n == 1:
        return A[0][0]
    acc = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in A[1:]]
        term = A[0][j] * mat_det(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def mat_inv(A):
    """Inverse of a matrix over W_N(A) whose determinant is a unit.

    Gauss-Jordan with unit pivots; a unit pivot exists in every column of an
    invertible matrix over the local ring W_N.
    """
    n = len(A)
    ring = A[0][0].ring
    N = A[0][0].length
    work = [list(row) for row in A]
    inv = mat_identity(ring, n, N)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if work[r][col].is_unit():
                piv = r
                break
        if piv is None:
            raise NonUnit("matrix is not invertible over W_N")
        work[col], work[piv] = work[piv], work[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = witt_inv(work[col][col])
        work[col] = [x * scale for x in work[col]]
        inv[col] = [x * scale for x in inv[col]]
        for r in range(n):
            if r == col:
                continue
            factor = work[r][col]
            if factor.is_zero():
                continue
            work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
            inv[r] = [x - factor * y for x, y in zip(inv[r], inv[col])]
    return inv


def random_sl(ring, n, N, rng):
    """Random element of SL_n(W_N(ring)).

    Draw random integral matrices until the determinant is a unit, then divide
    the first column by the determinant.
    """
    while True:
        A = [[witt_random(ring, N, rng) for _ in range(n)] for _ in range(n)]
        d = mat_det(A)
        if d.is_unit():
            break
    dinv = witt_inv(d)
    for i in range(n):
        A[i][0] = A[i][0] * dinv
    return A
