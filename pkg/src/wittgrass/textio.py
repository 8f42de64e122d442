"""Text formats for the CLI: ring-element, Witt-vector and matrix literals.

Witt vectors print and parse as ``(a0,a1,...)`` with one coefficient-ring
literal per coordinate (``u+1`` in F_4, ``t^-2+1`` over Laurent coefficients).
Valuation-shifted numbers are ``p^v*(a0,...)``; matrices are semicolon-
separated rows of comma-separated entries, commas inside parentheses binding
to their entry.  Every printer output parses back to an equal value.
"""

from __future__ import annotations

from .errors import UsageError
from .lattice import PadicWittNumber, WittMatrix
from .poly import PolyRing, parse_polynomial
from .rings import LaurentRing, RationalFunctionField
from .witt import WittVector


def scalar_resolver(ring):
    """Resolver mapping u (field generator) and t (Laurent/rational variable)
    into the coefficient ring ``ring``."""

    def resolve(name, indices):
        if indices is not None:
            raise UsageError(f"unexpected indexed symbol {name}[..] in a scalar")
        if name == "u":
            if isinstance(ring, LaurentRing):
                return ("coeff", ring.const(ring.field.gen()))
            if isinstance(ring, RationalFunctionField):
                return ("coeff", ring.const(ring.base.gen()))
            return ("coeff", ring.gen())
        if name == "t":
            if isinstance(ring, LaurentRing):
                return ("coeff", ring.monomial(1))
            if isinstance(ring, RationalFunctionField):
                return ("coeff", ring.t_power(1))
        raise UsageError(f"unknown scalar symbol {name!r}")

    return resolve


def parse_scalar(ring, text):
    """Parse a coefficient-ring literal (a polynomial expression in u, t)."""
    shell = PolyRing(ring, (), ())
    poly = parse_polynomial(shell, text, resolve=scalar_resolver(ring))
    if poly.is_zero():
        return ring.zero
    return poly.terms[()]


def split_top_level(text, sep):
    """Split on sep at parenthesis depth zero."""
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise UsageError("unbalanced parentheses")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    if depth:
        raise UsageError("unbalanced parentheses")
    return parts


def parse_witt_vector(ring, text, N=None):
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise UsageError(f"Witt vector literal must be parenthesized: {text!r}")
    coords = [
        parse_scalar(ring, part.strip() or "0")
        for part in split_top_level(text[1:-1], ",")
    ]
    if N is not None and len(coords) != N:
        raise UsageError(f"expected {N} coordinates, found {len(coords)}")
    return WittVector(ring, coords)


def render_witt_vector(w):
    return repr(w)


def parse_padic(ring, text, N=None):
    """``p^v*(a0,...)`` or plain ``(a0,...)``; v may be negative."""
    text = text.strip()
    shift = 0
    if text.startswith("p"):
        head, _, rest = text.partition("*")
        rest = rest.strip()
        spec = head.strip()
        if spec == "p":
            shift = 1
        elif spec.startswith("p^"):
            try:
                shift = int(spec[2:])
            except ValueError:
                raise UsageError(f"bad shift {spec!r}") from None
        else:
            raise UsageError(f"bad shift prefix {spec!r}")
        if not rest:
            rest = "(1" + ",0" * ((N or 1) - 1) + ")"
        text = rest
    w = parse_witt_vector(ring, text, N)
    return PadicWittNumber(ring, shift, w.coords)


def parse_padic_matrix(ring, text, N=None):
    rows = []
    width = None
    for row_text in text.split(";"):
        entries = [
            parse_padic(ring, part, N)
            for part in split_top_level(row_text.strip(), ",")
        ]
        if width is None:
            width = len(entries)
        elif len(entries) != width:
            raise UsageError("ragged matrix literal")
        rows.append(entries)
    if len(rows) != width:
        raise UsageError("matrix literal must be square")
    return WittMatrix(ring, rows)


def parse_cocharacter(text):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"bad cocharacter literal {text!r}") from None


def coordinate_resolver(ring, scalar_ring):
    """Resolver for ideal/family polynomial text: x[i,j] are variables,
    u and t are scalars."""
    fallback = scalar_resolver(scalar_ring)

    def resolve(name, indices):
        if name == "x" and indices is not None:
            display = f"x[{indices[0]},{indices[1]}]"
            return ("var", ring.index_of(display))
        return fallback(name, indices)

    return resolve


def parse_coordinate_poly(ring, text):
    return parse_polynomial(ring, text, resolve=coordinate_resolver(ring, ring.coeff))
