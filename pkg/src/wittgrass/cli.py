"""Command-line front end.

Subcommands mirror the package layout: witt, greenberg, lattice, hilbert,
grass and selftest.  Exit status 0 on success, 1 on domain errors (guards,
precision, non-units), 2 on usage errors.  Output is deterministic for fixed
inputs and seeds; --format json switches to a stable machine-readable schema
(schema version in the "schema" field).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import UsageError, WittgrassError
from .fields import GF
from .greenberg import parse_witt_map, realize_ideal, realize_poly_map
from .grassmann import image_check, witt_cell_table, zadic_cell_table
from .hilbert import (
    GradedIdeal,
    ambient_ring,
    default_bound,
    family_ring,
    flat_limit,
    hilbert_function,
    ideal_I_lambda,
    is_module_stable,
)
from .lattice import classify_cell, enumerate_lattices, smith_normal_form
from .rings import LaurentRing
from .structure import _ENV_CACHE
from .textio import (
    parse_coordinate_poly,
    parse_cocharacter,
    parse_padic_matrix,
    parse_witt_vector,
)
from .witt import witt_arith, witt_inv
from . import selftest as selftest_mod

SCHEMA = "wittgrass/1"


def _field(args):
    q = getattr(args, "q", None) or args.p
    field = GF(q)
    if field.p != args.p:
        raise UsageError(f"q={q} is not a power of p={args.p}")
    return field


def _coeff_ring(args):
    field = _field(args)
    if getattr(args, "laurent", False):
        return LaurentRing(field)
    return field


def _emit(args, payload, text):
    if getattr(args, "format", "text") == "json":
        payload = dict(payload)
        payload["schema"] = SCHEMA
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- witt ----------------------------------------------------------------

def cmd_witt(args):
    ring = _coeff_ring(args)
    a = parse_witt_vector(ring, args.vector, args.N)
    if args.op in ("add", "mul"):
        if args.other is None:
            raise UsageError(f"witt {args.op} needs two vectors")
        b = parse_witt_vector(ring, args.other, args.N)
        out = witt_arith(args.op, a, b)
    elif args.op == "neg":
        out = witt_arith("neg", a)
    elif args.op == "inv":
        out = witt_inv(a)
    else:
        raise UsageError(f"unknown witt op {args.op}")
    _emit(args, {"result": repr(out)}, repr(out))
    return 0


# -- greenberg -------------------------------------------------------------

def cmd_greenberg(args):
    field = _field(args)
    if args.map:
        polys = parse_witt_map(args.map, field, args.N)
        rmap = realize_poly_map(polys, args.N)
        lines = []
        for i, row in enumerate(rmap.components, start=1):
            for j, q in enumerate(row):
                lines.append(f"COMP {i} {j}: {q!r}")
    elif args.ideal:
        polys = parse_witt_map(args.ideal, field, args.N)
        rid = realize_ideal(polys, args.N)
        lines = [f"GEN {i}: {g!r}" for i, g in enumerate(rid.generators)]
    else:
        raise UsageError("greenberg realize needs --map or --ideal")
    _emit(args, {"lines": lines}, "\n".join(lines))
    return 0


# -- lattice ---------------------------------------------------------------

def cmd_lattice_snf(args):
    ring = _coeff_ring(args)
    A = parse_padic_matrix(ring, args.matrix, args.N)
    U, mu, V = smith_normal_form(A)
    text = f"exponents: {','.join(map(str, mu))}\nU:\n{U!r}\nV:\n{V!r}"
    _emit(args, {"exponents": list(mu), "U": repr(U), "V": repr(V)}, text)
    return 0


def cmd_lattice_classify(args):
    ring = _coeff_ring(args)
    A = parse_padic_matrix(ring, args.matrix, args.N)
    cell = classify_cell(A)
    _emit(args, {"cell": list(cell)}, ",".join(map(str, cell)))
    return 0


def cmd_lattice_enumerate(args):
    pairs = enumerate_lattices(args.n, args.q, args.window)
    counts = {}
    for _, cell in pairs:
        counts[cell] = counts.get(cell, 0) + 1
    cells = [
        {"lambda": list(c), "count": counts[c]} for c in sorted(counts)
    ]
    text = "\n".join(
        f"({','.join(map(str, c))}): {counts[c]}" for c in sorted(counts)
    )
    _emit(args, {"total": len(pairs), "cells": cells}, text)
    return 0


# -- hilbert ---------------------------------------------------------------

def _read_poly_lines(path):
    with open(path, "r", encoding="utf-8") as fh:
        return [line.strip() for line in fh if line.strip() and not line.startswith("#")]


def cmd_hilbert_hf(args):
    field = _field(args)
    lam = parse_cocharacter(args.lam)
    I = ideal_I_lambda(field, lam, args.N, allow_tight_window=args.tight)
    bound = args.bound if args.bound is not None else default_bound(field.p, args.N)
    hf = hilbert_function(I, bound)
    _emit(args, {"values": hf.values}, repr(hf))
    return 0


def cmd_hilbert_stable(args):
    field = _field(args)
    ring = ambient_ring(field, args.n, args.N)
    gens = [parse_coordinate_poly(ring, line) for line in _read_poly_lines(args.ideal_file)]
    I = GradedIdeal(ring, args.n, args.N, gens)
    ok = is_module_stable(I)
    _emit(args, {"stable": ok}, "stable" if ok else "not stable")
    return 0


def cmd_hilbert_limit(args):
    field = _field(args)
    ring = family_ring(field, args.n, args.N)
    gens = [parse_coordinate_poly(ring, line) for line in _read_poly_lines(args.family_file)]
    fam = GradedIdeal(ring, args.n, args.N, gens)
    limit = flat_limit(fam, bound=args.bound)
    lines = [repr(g) for g in limit.generators]
    _emit(args, {"generators": lines}, "\n".join(lines))
    return 0


# -- grass -----------------------------------------------------------------

def cmd_grass_count(args):
    tables = []
    if args.oracle in ("witt", "both"):
        tables.append(witt_cell_table(args.n, args.q, args.window))
    if args.oracle in ("z-adic", "both"):
        tables.append(zadic_cell_table(args.n, args.q, args.window))
    payload = {"tables": [t.as_dict() for t in tables]}
    if len(tables) == 2:
        payload["agree"] = tables[0].same_counts(tables[1])
    text_lines = [f"[{t.provenance}] {t!r}" for t in tables]
    if "agree" in payload:
        text_lines.append(f"agree: {payload['agree']}")
    _emit(args, payload, "\n".join(text_lines))
    return 0


def cmd_grass_image(args):
    lam = parse_cocharacter(args.lam)
    rep = image_check(lam, q=args.q, samples=args.samples, seed=args.seed)
    payload = {
        "lambda": rep["lambda"],
        "q": rep["q"],
        "seed": rep["seed"],
        "samples": rep["samples"],
        "observed": [
            {"lambda": list(c), "count": n} for c, n in sorted(rep["observed"].items())
        ],
        "realized": [
            {"lambda": list(c), "via": how} for c, how in sorted(rep["realized"].items())
        ],
        "bruhat_ok": rep["bruhat_ok"],
        "standard_fiber_ideals": rep["standard_fiber_ideals"],
    }
    text = "\n".join(
        [
            f"observed: "
            + ", ".join(f"({','.join(map(str, c))}): {v}" for c, v in sorted(rep["observed"].items())),
            f"bruhat order respected: {rep['bruhat_ok']}",
            f"distinct stable ideals over the standard lattice: {rep['standard_fiber_ideals']}",
        ]
    )
    _emit(args, payload, text)
    return 0


def cmd_selftest(args):
    failures = selftest_mod.run_selftest(quick=args.quick)
    if failures:
        print(f"{failures} properties failed", file=sys.stderr)
        return 1
    return 0


def build_parser():
    top = argparse.ArgumentParser(
        prog="wittgrass",
        description="Exact Witt-vector arithmetic and desk-scale p-adic Grassmannian computations",
    )
    top.add_argument("--cache-dir", help="structure-polynomial cache directory")
    sub = top.add_subparsers(dest="command", required=True)

    def add_common(p, N=True, q=True, laurent=False):
        p.add_argument("--p", type=int, required=True, help="prime")
        if N:
            p.add_argument("--N", type=int, required=True, help="truncation length")
        if q:
            p.add_argument("--q", type=int, help="field size (default: p)")
        if laurent:
            p.add_argument(
                "--laurent", action="store_true",
                help="coefficients in F_q[t,1/t] instead of F_q",
            )
        p.add_argument("--format", choices=("text", "json"), default="text")

    w = sub.add_parser("witt", help="Witt vector arithmetic")
    w.add_argument("op", choices=("add", "mul", "neg", "inv"))
    add_common(w, laurent=True)
    w.add_argument("vector")
    w.add_argument("other", nargs="?")
    w.set_defaults(fn=cmd_witt)

    g = sub.add_parser("greenberg", help="coordinate-wise realization")
    gsub = g.add_subparsers(dest="gcmd", required=True)
    gr = gsub.add_parser("realize")
    add_common(gr)
    gr.add_argument("--map", help="semicolon-separated Witt polynomials in T1..Td")
    gr.add_argument("--ideal", help="semicolon-separated ideal generators")
    gr.set_defaults(fn=cmd_greenberg)

    l = sub.add_parser("lattice", help="p-adic lattices")
    lsub = l.add_subparsers(dest="lcmd", required=True)
    ls = lsub.add_parser("snf")
    add_common(ls, laurent=True)
    ls.add_argument("matrix", help="rows ';', entries like p^v*(a0,a1,...)")
    ls.set_defaults(fn=cmd_lattice_snf)
    lc = lsub.add_parser("classify")
    add_common(lc, laurent=True)
    lc.add_argument("matrix")
    lc.set_defaults(fn=cmd_lattice_classify)
    le = lsub.add_parser("enumerate")
    le.add_argument("--n", type=int, required=True)
    le.add_argument("--q", type=int, required=True)
    le.add_argument("--window", type=int, required=True)
    le.add_argument("--format", choices=("text", "json"), default="text")
    le.set_defaults(fn=cmd_lattice_enumerate)

    h = sub.add_parser("hilbert", help="graded ideals and Hilbert functions")
    hsub = h.add_subparsers(dest="hcmd", required=True)
    hh = hsub.add_parser("hf")
    hh.add_argument("--lambda", dest="lam", required=True)
    hh.add_argument("--n", type=int, required=True)
    add_common(hh)
    hh.add_argument("--bound", type=int)
    hh.add_argument("--tight", action="store_true", help="allow N = max shifted exponent")
    hh.set_defaults(fn=cmd_hilbert_hf)
    hs = hsub.add_parser("stable")
    hs.add_argument("--ideal-file", required=True)
    hs.add_argument("--n", type=int, required=True)
    add_common(hs)
    hs.set_defaults(fn=cmd_hilbert_stable)
    hl = hsub.add_parser("limit")
    hl.add_argument("--family-file", required=True)
    hl.add_argument("--n", type=int, required=True)
    add_common(hl)
    hl.add_argument("--bound", type=int)
    hl.set_defaults(fn=cmd_hilbert_limit)

    gr2 = sub.add_parser("grass", help="cell tables and the image report")
    grsub = gr2.add_subparsers(dest="grcmd", required=True)
    gc = grsub.add_parser("count")
    gc.add_argument("--n", type=int, required=True)
    gc.add_argument("--q", type=int, required=True)
    gc.add_argument("--window", type=int, required=True)
    gc.add_argument("--oracle", choices=("witt", "z-adic", "both"), default="both")
    gc.add_argument("--format", choices=("text", "json"), default="text")
    gc.set_defaults(fn=cmd_grass_count)
    gi = grsub.add_parser("image")
    gi.add_argument("--lambda", dest="lam", required=True)
    gi.add_argument("--q", type=int, default=2)
    gi.add_argument("--samples", type=int, default=20)
    gi.add_argument("--seed", type=int, default=7)
    gi.add_argument("--format", choices=("text", "json"), default="text")
    gi.set_defaults(fn=cmd_grass_image)

    st = sub.add_parser("selftest", help="run the invariant suite")
    st.add_argument("--quick", action="store_true")
    st.add_argument("--p", type=int, help="reject unsupported parameters early")
    st.add_argument("--N", type=int)
    st.set_defaults(fn=cmd_selftest)

    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache_dir:
        os.environ[_ENV_CACHE] = args.cache_dir
    if args.command == "selftest" and (args.p is not None or args.N is not None):
        from .fields import SUPPORTED_PRIMES
        from .structure import MAX_N

        if args.p is not None and args.p not in SUPPORTED_PRIMES:
            parser.error(f"prime {args.p} unsupported; choose from {SUPPORTED_PRIMES}")
        if args.N is not None and not (1 <= args.N <= MAX_N):
            parser.error(f"length {args.N} outside 1..{MAX_N}")
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except WittgrassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
