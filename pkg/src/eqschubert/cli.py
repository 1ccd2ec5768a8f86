"""Command-line front end.

Exit codes: 0 success, 1 a check or cross-method comparison failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
from pathlib import Path

from . import __version__
from .eyd import ExcitationKind, energy, enumerate_Rv, enumerate_eyd, kind_for, render
from .factorial import giambelli_pfaffian, localize_factorial
from .latticepaths import (
    enumerate_path_tuples, eyd_to_paths, path_pfaffian_check, render_paths,
)
from .localization import localize_billey, localize_eyd, verify_chevalley
from .multiplicity import multiplicity_report
from .polyalg import Polynomial, format_monomial
from .shapes import Partition, StrictPartition, contains
from .weyl import SchubertContext, SignedPermutation, parse_window

SCHEMA = 1
METHODS = ("eyd", "billey", "factorial")
SUITES = ("crosscheck", "chevalley", "giambelli", "oracle", "paths", "multiplicity")


class UsageError(Exception):
    pass


# -- parsing helpers ----------------------------------------------------------


def parse_parts(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()")
    if text in ("", "0", "-"):
        return ()
    return tuple(int(t) for t in text.replace(" ", "").split(",") if t)


def build_context(args) -> SchubertContext:
    if args.type is None or args.n is None:
        raise UsageError("--type and --n are required")
    t = args.type.upper()
    if t == "A":
        if args.d is None:
            raise UsageError("type A needs --d")
        return SchubertContext.A(args.n, args.d)
    if args.d is not None:
        raise UsageError("--d only applies to type A")
    return SchubertContext(t, args.n)


def _element(ctx: SchubertContext, shape_text, window_text, label: str, required=True):
    if shape_text is not None and window_text is not None:
        raise UsageError(f"give {label} either as a shape or as a window, not both")
    if shape_text is not None:
        shape = ctx.coerce_shape(parse_parts(shape_text))
        return ctx.element(shape)
    if window_text is not None:
        v = parse_window(window_text)
        ctx.check_element(v)
        ctx.shape(v)
        return v
    if required:
        raise UsageError(f"missing {label}")
    return None


def poly_doc(p: Polynomial) -> dict:
    return {
        "value": str(p),
        "terms": [[format_monomial(m), str(c)] for m, c in p.sorted_terms()],
    }


def ctx_doc(ctx: SchubertContext) -> dict:
    doc = {"type": ctx.lie_type, "n": ctx.n}
    if ctx.d is not None:
        doc["d"] = ctx.d
    return doc


def shape_list(shape) -> list[int]:
    return list(shape.parts)


# -- factorial cache ------------------------------------------------------------


class FactorialCache:
    """On-disk memo of factorial-formula restrictions, one JSON file per key."""

    def __init__(self, root: str | None):
        self.root = Path(root) if root else None
        if self.root:
            self.root.mkdir(parents=True, exist_ok=True)

    def get(self, ctx: SchubertContext, w: SignedPermutation, v: SignedPermutation) -> Polynomial:
        if self.root is None:
            return localize_factorial(ctx, w, v)
        key = f"{ctx}|{w.to_text()}|{v.to_text()}"
        path = self.root / (hashlib.sha256(key.encode()).hexdigest()[:24] + ".json")
        if path.exists():
            doc = json.loads(path.read_text(encoding="utf-8"))
            if doc.get("key") == key:
                return Polynomial.parse(doc["value"])
        value = localize_factorial(ctx, w, v)
        path.write_text(json.dumps({"key": key, "value": str(value)}), encoding="utf-8")
        return value


def compute(ctx, w, v, method: str, cache: FactorialCache) -> Polynomial:
    if method == "eyd":
        return localize_eyd(ctx, w, v)
    if method == "billey":
        return localize_billey(ctx, w, v)
    return cache.get(ctx, w, v)


# -- subcommands -----------------------------------------------------------------


def cmd_eyd(args, ctx):
    w = _element(ctx, args.lam, args.w, "lambda/w")
    v = _element(ctx, args.mu, args.v, "mu/v")
    lam, mu = ctx.shape(w), ctx.shape(v)
    kind = ExcitationKind.parse(args.kind) if args.kind else kind_for(ctx)
    states = enumerate_eyd(lam, mu, kind)
    doc = {
        "command": "eyd", "context": ctx_doc(ctx), "lambda": shape_list(lam),
        "mu": shape_list(mu), "kind": kind.value, "count": len(states),
        "states": [
            {"cells": [list(c) for c in s.sorted_cells()], "energy": str(energy(s, lam))}
            for s in states
        ],
    }
    text = [f"count: {len(states)}"]
    if args.format == "ascii":
        text += ["", "\n\n".join(render(s, mu) for s in states)]
    else:
        text += [" ".join(f"({i},{j})" for i, j in s.sorted_cells()) for s in states]
    return doc, "\n".join(text), 0


def cmd_localize(args, ctx, cache):
    w = _element(ctx, args.lam, args.w, "lambda/w")
    v = _element(ctx, args.mu, args.v, "mu/v")
    methods = METHODS if args.method == "all" else (args.method,)
    values = {m: compute(ctx, w, v, m, cache) for m in methods}
    agree = len(set(values.values())) == 1
    first = values[methods[0]]
    doc = {
        "command": "localize", "context": ctx_doc(ctx), "w": list(w.window), "v": list(v.window),
        "lambda": shape_list(ctx.shape(w)), "mu": shape_list(ctx.shape(v)),
        "methods": {m: str(p) for m, p in values.items()}, "agree": agree, **poly_doc(first),
    }
    if agree:
        text = str(first)
    else:
        text = "\n".join(f"{m}: {p}" for m, p in values.items()) + "\nMISMATCH"
    return doc, text, 0 if agree else 1


def cmd_mult(args, ctx):
    w = _element(ctx, args.lam, args.w, "lambda/w")
    v = _element(ctx, args.mu, args.v, "mu/v")
    rep = multiplicity_report(ctx, w, v)
    doc = {
        "command": "mult", "context": ctx_doc(ctx), "w": list(w.window), "v": list(v.window),
        "count": rep.count, "methods": rep.methods, "consistent": rep.consistent,
    }
    text = f"{rep.count}" + ("" if rep.consistent else f"\nMISMATCH {rep.methods}")
    return doc, text, 0 if rep.consistent else 1


def cmd_giambelli(args, ctx):
    if ctx.lie_type == "A":
        raise UsageError("giambelli needs type B, C or D")
    w = _element(ctx, args.lam, args.w, "lambda/w")
    lam = ctx.shape(w)
    v = _element(ctx, args.mu, args.v, "mu/v", required=False)
    points = [v] if v is not None else ctx.grassmannian_elements()
    records = []
    for point in points:
        res = giambelli_pfaffian(ctx, lam, point)
        records.append({
            "v": list(point.window), "pfaffian": str(res.pfaffian),
            "expected": str(res.expected), "holds": res.holds,
            "matrix": [[str(e) for e in row] for row in res.matrix],
        })
    ok = all(r["holds"] for r in records)
    doc = {"command": "giambelli", "context": ctx_doc(ctx), "lambda": shape_list(lam),
           "points": records, "ok": ok}
    text = "\n".join(f"{','.join(map(str, r['v']))}: {'pass' if r['holds'] else 'FAIL'} {r['pfaffian']}"
                     for r in records)
    return doc, text, 0 if ok else 1


def cmd_paths(args, ctx):
    if ctx.lie_type == "A":
        raise UsageError("paths needs type B, C or D")
    w = _element(ctx, args.lam, args.w, "lambda/w")
    v = _element(ctx, args.mu, args.v, "mu/v")
    lam, mu = ctx.shape(w), ctx.shape(v)
    kind = ExcitationKind.parse(args.kind) if args.kind else kind_for(ctx)
    tuples = enumerate_path_tuples(lam, mu, kind)
    check = path_pfaffian_check(lam, mu, kind)
    doc = {
        "command": "paths", "context": ctx_doc(ctx), "lambda": shape_list(lam),
        "mu": shape_list(mu), "kind": kind.value, "count": len(tuples),
        "tuples": [
            {"paths": [[list(u) for u in p] for p in t.paths],
             "cells": [list(c) for c in sorted(t.cells_used())]}
            for t in tuples
        ],
        "pfaffian_identity": check.holds,
    }
    text = [f"count: {len(tuples)}", f"pfaffian identity: {'pass' if check.holds else 'FAIL'}"]
    if args.format == "ascii":
        text += ["", "\n\n".join(render_paths(t, mu) for t in tuples)]
    return doc, "\n".join(text), 0 if check.holds else 1


def _pairs(ctx, sample, rng):
    elems = ctx.grassmannian_elements()
    pairs = [(w, v) for v in elems for w in elems]
    if sample and sample < len(pairs):
        pairs = rng.sample(pairs, sample)
    return pairs


def run_suite(name: str, ctx: SchubertContext, sample: int | None, seed: int, cache) -> dict:
    rng = random.Random(seed)
    failures, checks = [], 0
    shifted = ctx.lie_type != "A"
    if name == "crosscheck":
        for w, v in _pairs(ctx, sample, rng):
            vals = {m: compute(ctx, w, v, m, cache) for m in METHODS}
            checks += 1
            if len(set(vals.values())) != 1:
                failures.append({"w": list(w.window), "v": list(v.window)})
    elif name == "chevalley":
        rep = verify_chevalley(ctx, ctx.top_shape)
        checks = len(rep.equations)
        failures = [shape_list(lam) for lam in rep.failures]
        return {"checks": checks, "failures": failures,
                "nonunit": [[shape_list(a), shape_list(b), str(c)] for a, b, c in rep.nonunit]}
    elif name == "giambelli" and shifted:
        for w, v in _pairs(ctx, sample, rng):
            checks += 1
            if not giambelli_pfaffian(ctx, ctx.shape(w), v).holds:
                failures.append({"w": list(w.window), "v": list(v.window)})
    elif name == "oracle":
        kind = kind_for(ctx)
        for w, v in _pairs(ctx, sample, rng):
            lam, mu = ctx.shape(w), ctx.shape(v)
            if not contains(mu, lam):
                continue
            checks += 1
            states = sorted((s.cells for s in enumerate_eyd(lam, mu, kind)), key=sorted)
            if states != enumerate_Rv(w, v, ctx):
                failures.append({"w": list(w.window), "v": list(v.window)})
    elif name == "paths" and shifted:
        kind = kind_for(ctx)
        for w, v in _pairs(ctx, sample, rng):
            lam, mu = ctx.shape(w), ctx.shape(v)
            if not contains(mu, lam):
                continue
            checks += 1
            states = enumerate_eyd(lam, mu, kind)
            tuples = enumerate_path_tuples(lam, mu, kind)
            ok = sorted(sorted(t.cells_used()) for t in tuples) == sorted(s.sorted_cells() for s in states)
            ok = ok and all(eyd_to_paths(t.cells_used(), lam, mu, kind) == t for t in tuples)
            ok = ok and path_pfaffian_check(lam, mu, kind).holds
            if not ok:
                failures.append({"w": list(w.window), "v": list(v.window)})
    elif name == "multiplicity":
        for w, v in _pairs(ctx, sample, rng):
            if not contains(ctx.shape(v), ctx.shape(w)):
                continue
            checks += 1
            if not multiplicity_report(ctx, w, v).consistent:
                failures.append({"w": list(w.window), "v": list(v.window)})
    else:
        return {"checks": 0, "failures": [], "skipped": True}
    return {"checks": checks, "failures": failures}


def cmd_verify(args, ctx, cache):
    names = SUITES if args.suite == "all" else (args.suite,)
    results = {name: run_suite(name, ctx, args.sample, args.seed, cache) for name in names}
    ok = all(not r["failures"] for r in results.values())
    doc = {"command": "verify", "context": ctx_doc(ctx), "suites": results, "ok": ok}
    lines = []
    for name, r in results.items():
        if r.get("skipped"):
            lines.append(f"{name}: skipped")
        else:
            status = "pass" if not r["failures"] else f"FAIL ({len(r['failures'])})"
            lines.append(f"{name}: {status} [{r['checks']} checks]")
    return doc, "\n".join(lines), 0 if ok else 1


# -- entry point ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", choices=["A", "B", "C", "D", "a", "b", "c", "d"])
    common.add_argument("--n", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--lambda", dest="lam", help="shape of the Schubert class, e.g. 3,1")
    common.add_argument("--mu", help="shape of the fixed point")
    common.add_argument("--w", help="window of the Schubert class, e.g. 1,3,-4,-2")
    common.add_argument("--v", help="window of the fixed point")
    common.add_argument("--format", choices=["text", "json", "ascii"], default="text")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--cache", help="directory memoising factorial-formula values")

    parser = argparse.ArgumentParser(prog="eqschubert", description=__doc__.splitlines()[0] if __doc__ else None)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("eyd", parents=[common], help="enumerate excited Young diagrams")
    p.add_argument("--kind", choices=["ordinary", "I", "II"])
    p = sub.add_parser("localize", parents=[common], help="restriction of a Schubert class to a fixed point")
    p.add_argument("--method", choices=list(METHODS) + ["all"], default="eyd")
    sub.add_parser("mult", parents=[common], help="multiplicity at a fixed point")
    sub.add_parser("giambelli", parents=[common], help="check the Pfaffian formula")
    p = sub.add_parser("paths", parents=[common], help="nonintersecting lattice paths")
    p.add_argument("--kind", choices=["I", "II"])
    p = sub.add_parser("verify", parents=[common], help="run a verification suite over a context")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--sample", type=int, help="random pairs to check instead of all")
    p.add_argument("--seed", type=int, default=0)
    return parser


VALUE_FLAGS = ("--w", "--v", "--lambda", "--mu")


def _glue_values(argv: list[str]) -> list[str]:
    """Attach window values such as ``-4,-3`` to their flag so argparse sees a value."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1][:1] == "-" and argv[i + 1][1:2].isdigit():
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = _glue_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        ctx = build_context(args)
        cache = FactorialCache(args.cache)
        if args.command == "eyd":
            doc, text, code = cmd_eyd(args, ctx)
        elif args.command == "localize":
            doc, text, code = cmd_localize(args, ctx, cache)
        elif args.command == "mult":
            doc, text, code = cmd_mult(args, ctx)
        elif args.command == "giambelli":
            doc, text, code = cmd_giambelli(args, ctx)
        elif args.command == "paths":
            doc, text, code = cmd_paths(args, ctx)
        else:
            doc, text, code = cmd_verify(args, ctx, cache)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    if args.format == "json":
        body = json.dumps({"schema": SCHEMA, "version": __version__, **doc}, indent=2, ensure_ascii=False)
    else:
        body = text
    if args.out:
        Path(args.out).write_text(body + "\n", encoding="utf-8")
    else:
        print(body, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
