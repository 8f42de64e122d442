"""Universal Witt structure polynomials, generated exactly over the integers.

The addition/multiplication/negation laws of length-N Witt vectors are given
by integer polynomials S_n, M_n, N_n in X_0..X_n, Y_0..Y_n, determined by the
ghost identities

    w_n(S) = w_n(X) + w_n(Y),   w_n(M) = w_n(X) * w_n(Y),   w_n(N) = -w_n(X),

where w_n(Z) = sum_{i<=n} p^i * Z_i^(p^(n-i)).  Each level is solved
triangularly: the level-n polynomial is (target - sum of lower-level ghost
contributions) / p^n, and the division must be exact over Z (any remainder is
a hard internal error).

Integer polynomials here are dicts mapping a packed exponent key to an int
coefficient.  Exponents are packed 16 bits per variable slot; X_i occupies
slot i and Y_i occupies slot MAX_SLOTS + i.  This keeps monomial products a
single integer addition.

Generated tables are cached on disk, one polynomial per line, in the format
``ADD n: <integer polynomial>``.  Cache writes are atomic (write a temp file,
then rename), so concurrent processes can share a cache directory.

Generation cost is governed by the number of monomials of weighted degree p^n
(weights deg X_i = p^i).  That count explodes combinatorially: for p = 5 the
level-4 addition polynomial already has more than 10^8 potential terms with
coefficients of hundreds of digits, which no desk machine materializes in
reasonable time.  Generation therefore refuses, with TableLimit, any level
whose potential support exceeds a configurable bound (default 200,000
monomials, which admits p=2 up to length 6, p=3 up to length 5 and p=5 up to
length 4) instead of grinding without hope of finishing.
"""

from __future__ import annotations

import os
import tempfile

from .errors import CacheCorrupt, TableLimit, UsageError
from .fields import SUPPORTED_PRIMES

MAX_N = 8
MAX_SLOTS = 8          # one block of variable slots per letter
SHIFT = 16             # bits per exponent field
EXP_MASK = (1 << SHIFT) - 1

DEFAULT_TERM_LIMIT = 200_000
_ENV_CACHE = "WITTGRASS_CACHE_DIR"
_ENV_LIMIT = "WITTGRASS_TABLE_LIMIT"


# ---------------------------------------------------------------------------
# packed-key integer polynomials
# ---------------------------------------------------------------------------

def xvar(i):
    return 1 << (SHIFT * i)


def yvar(i):
    return 1 << (SHIFT * (MAX_SLOTS + i))


def key_exponents(key):
    """Decode a packed key to ((slot, exponent), ...); slot >= MAX_SLOTS is Y."""
    out = []
    slot = 0
    while key:
        e = key & EXP_MASK
        if e:
            out.append((slot, e))
        key >>= SHIFT
        slot += 1
    return tuple(out)


def ip_add_inplace(acc, other, scale=1):
    for k, c in other.items():
        v = acc.get(k, 0) + scale * c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)
    return acc


def ip_mul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = k1 + k2
            v = get(k, 0) + c1 * c2
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def ip_pow(a, n):
    if n == 0:
        return {0: 1}
    if n == 1:
        return dict(a)
    half = ip_pow(a, n // 2)
    out = ip_mul(half, half)
    if n & 1:
        out = ip_mul(out, a)
    return out


def ip_eq(a, b):
    return a == b


def ghost(p, n, var):
    """w_n as a packed polynomial in one letter block (var = xvar or yvar)."""
    out = {}
    for i in range(n + 1):
        out[var(i) * (p ** (n - i))] = p**i
    return out


# ---------------------------------------------------------------------------
# support-size estimates (drive the generation guard)
# ---------------------------------------------------------------------------

def one_sided_count(p, n):
    """Number of monomials in X_0..X_n of weighted degree exactly p^n."""
    deg = p**n
    cnt = [0] * (deg + 1)
    cnt[0] = 1
    for i in range(n + 1):
        w = p**i
        for d in range(w, deg + 1):
            cnt[d] += cnt[d - w]
    return cnt[deg]


def two_sided_count(p, n):
    """Number of monomials in X_0..X_n, Y_0..Y_n of weighted degree exactly p^n."""
    deg = p**n
    cnt = [0] * (deg + 1)
    cnt[0] = 1
    for i in range(n + 1):
        w = p**i
        for _ in range(2):
            for d in range(w, deg + 1):
                cnt[d] += cnt[d - w]
    return cnt[deg]


def level_cost(p, n, op):
    if op == "neg":
        return one_sided_count(p, n)
    if op == "add":
        return two_sided_count(p, n)
    return one_sided_count(p, n) ** 2  # mul: bidegree (p^n, p^n)


def term_limit():
    raw = os.environ.get(_ENV_LIMIT)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_TERM_LIMIT


# ---------------------------------------------------------------------------
# triangular ghost solve
# ---------------------------------------------------------------------------

def _ghost_target(p, n, op):
    if op == "add":
        out = ghost(p, n, xvar)
        ip_add_inplace(out, ghost(p, n, yvar))
        return out
    if op == "mul":
        return ip_mul(ghost(p, n, xvar), ghost(p, n, yvar))
    if op == "neg":
        out = ghost(p, n, xvar)
        return {k: -c for k, c in out.items()}
    raise UsageError(f"unknown Witt operation {op!r}")


def _check_limits(p, n, op, limit):
    cost = level_cost(p, n, op)
    if cost > limit:
        raise TableLimit(
            f"structure table {op} level {n} for p={p} has a potential support of "
            f"{cost} monomials, beyond the limit of {limit}; this is out of reach "
            f"for exact generation (set {_ENV_LIMIT} to override at your own risk)"
        )


def solve_levels(p, op, N, known=None):
    """Return levels 0..N-1 of the op table, reusing any known prefix.

    Raises TableLimit before starting a level whose potential monomial support
    exceeds the configured bound.
    """
    if p not in SUPPORTED_PRIMES:
        raise TableLimit(f"prime {p} not supported; supported: {SUPPORTED_PRIMES}")
    if not (1 <= N <= MAX_N):
        raise TableLimit(f"table length {N} outside 1..{MAX_N}")
    limit = term_limit()
    levels = [dict(t) for t in (known or [])][:N]
    # pow_cache[i] holds T_i^(p^(n-1-i)) while processing level n
    pow_cache = {}
    for n in range(len(levels), N):
        _check_limits(p, n, op, limit)
        numerator = _ghost_target(p, n, op)
        for i in range(n):
            prev = pow_cache.get(i)
            if prev is None:
                prev = ip_pow(levels[i], p ** (n - 1 - i)) if n - 1 > i else dict(levels[i])
            cur = ip_pow(prev, p)
            pow_cache[i] = cur
            ip_add_inplace(numerator, cur, scale=-(p**i))
        q = p**n
        level = {}
        for k, c in numerator.items():
            d, r = divmod(c, q)
            if r:
                raise ArithmeticError(
                    f"ghost solve failed: coefficient {c} at level {n} not divisible by {q}"
                )
            level[k] = d
        levels.append(level)
    return levels


def verify_ghost(p, op, levels):
    """Re-expand the ghost identity for every level; True iff all hold exactly.

    Independent of the solve in the sense that it re-multiplies everything out
    and compares to the closed-form targets.
    """
    pow_cache = {}
    for n in range(len(levels)):
        acc = {}
        for i in range(n + 1):
            if i == n:
                cur = dict(levels[i])
            else:
                prev = pow_cache.get(i)
                if prev is None:
                    prev = dict(levels[i])
                cur = ip_pow(prev, p)
            pow_cache[i] = cur
            ip_add_inplace(acc, cur, scale=p**i)
        if not ip_eq(acc, _ghost_target(p, n, op)):
            return False
    return True


def check_triangular(levels, op):
    """Each level-n polynomial may only mention X_i, Y_i with i <= n."""
    for n, poly in enumerate(levels):
        for key in poly:
            for slot, _ in key_exponents(key):
                if slot % MAX_SLOTS > n:
                    return False
                if op == "neg" and slot >= MAX_SLOTS:
                    return False
    return True


# ---------------------------------------------------------------------------
# text format and disk cache
# ---------------------------------------------------------------------------

def render_ip(poly):
    if not poly:
        return "0"
    parts = []
    for key in sorted(poly):
        c = poly[key]
        bits = [str(c)]
        for slot, e in key_exponents(key):
            name = f"X{slot}" if slot < MAX_SLOTS else f"Y{slot - MAX_SLOTS}"
            bits.append(name if e == 1 else f"{name}^{e}")
        parts.append("*".join(bits))
    return " + ".join(parts)


def parse_ip(text):
    text = text.strip()
    if text == "0":
        return {}
    poly = {}
    for part in text.split(" + "):
        bits = part.strip().split("*")
        try:
            c = int(bits[0])
        except ValueError as exc:
            raise CacheCorrupt(f"bad coefficient in {part!r}") from exc
        key = 0
        for tok in bits[1:]:
            if "^" in tok:
                name, _, es = tok.partition("^")
                e = int(es)
            else:
                name, e = tok, 1
            if not name or name[0] not in "XY" or not name[1:].isdigit():
                raise CacheCorrupt(f"bad variable token {tok!r}")
            slot = int(name[1:]) + (0 if name[0] == "X" else MAX_SLOTS)
            key += e << (SHIFT * slot)
        if key in poly:
            raise CacheCorrupt(f"repeated monomial in {part!r}")
        poly[key] = c
    return poly


def resolve_cache_dir(explicit=None):
    if explicit:
        return explicit
    env = os.environ.get(_ENV_CACHE)
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "wittgrass")


def _cache_path(cache_dir, p):
    return os.path.join(cache_dir, f"structure_p{p}.txt")


def load_cache(p, cache_dir):
    """Read cached levels for prime p; returns {op: [levels...]} (may be empty)."""
    path = _cache_path(cache_dir, p)
    tables = {"add": [], "mul": [], "neg": []}
    if not os.path.exists(path):
        return tables
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                head, _, body = line.partition(":")
                opname, ns = head.split()
                n = int(ns)
            except ValueError as exc:
                raise CacheCorrupt(f"malformed cache line {line[:60]!r}") from exc
            op = opname.lower()
            if op not in tables:
                raise CacheCorrupt(f"unknown op {opname!r} in cache")
            if n != len(tables[op]):
                raise CacheCorrupt(f"{opname} levels out of order in cache")
            tables[op].append(parse_ip(body))
    return tables


def write_cache(p, cache_dir, tables):
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, p)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, prefix=f".structure_p{p}.", text=True)
    try:
        with os.fdopen(fd, "w", encoding="ascii") as fh:
            fh.write(f"# wittgrass structure polynomials, p={p}\n")
            for op in ("add", "mul", "neg"):
                for n, poly in enumerate(tables[op]):
                    fh.write(f"{op.upper()} {n}: {render_ip(poly)}\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------------------
# the table object used by Witt arithmetic
# ---------------------------------------------------------------------------

class StructurePolynomialTable:
    """Integer structure polynomials for (p, N) plus mod-p evaluation forms.

    ``add``/``mul``/``neg`` hold the exact integer levels; ``add_p`` etc hold
    the mod-p reductions as lists of (exponent-assignment, coefficient) pairs
    ready for evaluation over any ring of characteristic p.
    """

    _registry: dict = {}

    def __init__(self, p, N, tables):
        self.p = p
        self.N = N
        self.add = tables["add"][:N]
        self.mul = tables["mul"][:N]
        self.neg = tables["neg"][:N]
        self.add_p = [self._reduce(t) for t in self.add]
        self.mul_p = [self._reduce(t) for t in self.mul]
        self.neg_p = [self._reduce(t) for t in self.neg]

    def _reduce(self, poly):
        out = []
        p = self.p
        for key, c in poly.items():
            cp = c % p
            if cp:
                out.append((key_exponents(key), cp))
        out.sort()
        return out

    def levels(self, op):
        return {"add": self.add, "mul": self.mul, "neg": self.neg}[op]

    def reduced(self, op):
        return {"add": self.add_p, "mul": self.mul_p, "neg": self.neg_p}[op]

    @classmethod
    def get(cls, p, N, cache_dir=None):
        key = (p, N)
        hit = cls._registry.get(key)
        if hit is not None:
            return hit
        cdir = resolve_cache_dir(cache_dir)
        try:
            cached = load_cache(p, cdir)
        except CacheCorrupt:
            raise
        except OSError:
            cached = {"add": [], "mul": [], "neg": []}
        need_write = False
        for op in ("add", "mul", "neg"):
            if len(cached[op]) < N:
                cached[op] = solve_levels(p, op, N, known=cached[op])
                need_write = True
        if need_write:
            try:
                write_cache(p, cdir, cached)
            except OSError:
                pass  # cache is an optimization; arithmetic works without it
        table = cls(p, N, cached)
        cls._registry[key] = table
        return table

    @classmethod
    def drop_registry(cls):
        cls._registry.clear()


def gen_structure_polys(p, N, op, cache_dir=None):
    """Levels 0..N-1 of the requested operation table (exact integer polys)."""
    if op not in ("add", "mul", "neg"):
        raise UsageError(f"op must be add, mul or neg, not {op!r}")
    return StructurePolynomialTable.get(p, N, cache_dir=cache_dir).levels(op)
