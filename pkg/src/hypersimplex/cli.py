"""Command-line surface: JSON/CSV emission, on-disk result cache, report runner.

Exit codes: 0 success, 1 computational inconsistency or failed report,
2 usage error, 3 resource budget exceeded. Payloads are deterministic
(timings go to stderr, never into the JSON).
"""

import argparse
import hashlib
import json
import os
import sys
import tempfile
import time
from pathlib import Path

from . import __version__
from .acceptance import run_all
from .ehrhart import count_lattice_points, ehrhart_hstar
from .errors import (HypersimplexError, InternalInconsistencyError,
                     ParameterError, ResourceBudgetError)
from .hstar import METHODS, hstar_closed_form, hstar_via_shelling, inhibition_diagram, stab3_discrepancy
from .orders import check_general_conjecture, conjectured_order
from .polynomials import cycle_graph, independence_poly, path_graph
from .shelling import shelling_order, verify_shelling
from .triangulation import enumerate_triangulation

USAGE_ERROR, INCONSISTENCY, RESOURCE = 2, 1, 3


def _canonical_json(payload) -> str:
    return json.dumps(payload, separators=(",", ":"), sort_keys=False)


def _cache_dir(args) -> Path | None:
    if getattr(args, "cache_dir", None):
        return Path(args.cache_dir)
    env = os.environ.get("HYPERSIMPLEX_CACHE")
    if env:
        return Path(env)
    return None


def _cache_key(verb: str, params: dict) -> str:
    blob = _canonical_json({"verb": verb, "params": dict(sorted(params.items())),
                            "version": __version__})
    return hashlib.sha256(blob.encode()).hexdigest()


def _cache_load(cache: Path | None, key: str):
    if cache is None:
        return None
    path = cache / key[:2] / f"{key}.json"
    if path.exists():
        return path.read_text()
    return None


def _cache_store(cache: Path | None, key: str, text: str) -> None:
    if cache is None:
        return
    path = cache / key[:2] / f"{key}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)  # atomic publish
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text + "\n")
    else:
        print(text)


def _poly_csv(rows) -> str:
    lines = ["n,k,r,method,degree,coeff"]
    for n, k, r, method, coeffs in rows:
        for degree, coeff in enumerate(coeffs):
            lines.append(f"{n},{k},{r},{method},{degree},{coeff}")
    return "\n".join(lines)


def _params(args, names) -> dict:
    return {name: getattr(args, name) for name in names if getattr(args, name, None) is not None}


def _run_cached(args, verb: str, params: dict, compute) -> int:
    cache = _cache_dir(args)
    key = _cache_key(verb, params)
    fmt = getattr(args, "format", "json")
    cached = _cache_load(cache, key) if fmt == "json" else None
    if cached is not None:
        _emit(args, cached)
        return 0
    payload = compute()
    if fmt == "csv":
        if not isinstance(payload, dict) or "coeffs" not in payload:
            raise ParameterError("csv output is only defined for polynomial results")
        text = _poly_csv([(payload.get("n"), payload.get("k"), payload.get("r"),
                           payload.get("method", ""), payload["coeffs"])])
    else:
        text = _canonical_json(payload)
    if fmt == "json":
        _cache_store(cache, key, text)
    _emit(args, text)
    return 0


def _cmd_hstar(args) -> int:
    method = args.method or "shelling"
    if method not in METHODS:
        raise ParameterError(f"unknown method {method!r}; choose from {METHODS}")
    if args.k != 2:
        raise ParameterError(f"h* formulas are defined for k=2, got k={args.k}")

    def compute():
        if method == "shelling":
            res = hstar_via_shelling(args.n, args.r)
        else:
            res = hstar_closed_form(args.n, args.r, method)
        return res.to_json()

    return _run_cached(args, "hstar", _params(args, ("n", "k", "r")) | {"method": method}, compute)


def _cmd_triangulate(args) -> int:
    def compute():
        return enumerate_triangulation(args.n, args.k, args.r).to_json()
    return _run_cached(args, "triangulate", _params(args, ("n", "k", "r")), compute)


def _cmd_shelling(args) -> int:
    order = args.order or "paper"

    def compute():
        if order == "paper":
            steps = shelling_order(args.n, args.r)
            return [s.to_json() for s in steps]
        cells, _ = conjectured_order(args.n, args.k, args.r)
        return [{"omega": list(s.omega)} for s in cells]

    return _run_cached(args, "shelling",
                       _params(args, ("n", "k", "r")) | {"order": order}, compute)


def _cmd_verify_shelling(args) -> int:
    order = args.order or "paper"

    def compute():
        if order == "paper":
            if args.k != 2:
                raise ParameterError("the explicit shelling order needs k=2")
            cells = [s.simplex for s in shelling_order(args.n, args.r)]
        else:
            cells, _ = conjectured_order(args.n, args.k, args.r)
        res = verify_shelling(cells)
        out = res.to_json()
        out["count"] = len(cells)
        return out

    return _run_cached(args, "verify-shelling",
                       _params(args, ("n", "k", "r")) | {"order": order}, compute)


def _cmd_independence(args) -> int:
    def compute():
        if args.graph:
            if args.m is None:
                raise ParameterError("--graph needs --m")
            g = cycle_graph(args.m) if args.graph == "cycle" else path_graph(args.m)
            poly = independence_poly(g)
            return {"graph": args.graph, "m": args.m, "coeffs": list(poly.coeffs)}
        if args.n is None or args.r is None or args.ell is None:
            raise ParameterError("need --graph/--m or --n/--r/--ell")
        diagram = inhibition_diagram(args.n, args.r, args.ell)
        if diagram is None:
            return {"n": args.n, "r": args.r, "ell": args.ell, "exists": False}
        poly = diagram.independence()
        return {"n": args.n, "r": args.r, "ell": args.ell, "exists": True,
                "vertices": diagram.graph.num_vertices,
                "edges": sorted(sorted(e) for e in diagram.graph.edges),
                "coeffs": list(poly.coeffs)}

    return _run_cached(args, "independence",
                       _params(args, ("n", "r", "ell", "graph", "m")), compute)


def _cmd_ehrhart(args) -> int:
    def compute():
        if args.t is not None:
            count = count_lattice_points(args.n, args.k, args.r, args.t)
            return {"n": args.n, "k": args.k, "r": args.r, "t": args.t, "count": count}
        return ehrhart_hstar(args.n, args.k, args.r).to_json()
    return _run_cached(args, "ehrhart", _params(args, ("n", "k", "r", "t")), compute)


def _cmd_conjecture(args) -> int:
    def compute():
        rep = check_general_conjecture(args.n, args.k, args.r,
                                       budget_seconds=args.budget_seconds)
        return rep.to_json()
    return _run_cached(args, "conjecture", _params(args, ("n", "k", "r")), compute)


def _cmd_report(args) -> int:
    max_n = args.max_n
    started = time.monotonic()
    results = run_all(max_n)
    flag = stab3_discrepancy(9) if max_n >= 9 else None
    payload = {
        "max_n": max_n,
        "criteria": [r.to_json() for r in results],
        "advisory_flags": ([{"kind": "stab3_closed_vs_examples", **flag}] if flag else []),
        "all_ok": all(r.ok for r in results),
    }
    for r in results:
        print(r.line(), file=sys.stderr)
    if all(r.vacuous for r in results):
        print(f"warning: no supported instances at max_n={max_n}; vacuous pass",
              file=sys.stderr)
    print(f"report wall time {time.monotonic() - started:.1f}s", file=sys.stderr)
    _emit(args, _canonical_json(payload))
    return 0 if payload["all_ok"] else INCONSISTENCY


def _add_common(p, *, n=False, k=False, r=False):
    if n:
        p.add_argument("--n", type=int, required=True)
    if k:
        p.add_argument("--k", type=int, default=2)
    if r:
        p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", type=str, default=None)
    p.add_argument("--cache-dir", dest="cache_dir", type=str, default=None)
    p.add_argument("--budget-seconds", dest="budget_seconds", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypersimplex",
        description="Exact stable-hypersimplex toolkit: triangulations, shellings, h*.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("hstar", help="h*-polynomial by a chosen route")
    _add_common(p, n=True, k=True, r=True)
    p.add_argument("--method", choices=METHODS, default=None)
    p.set_defaults(fn=_cmd_hstar)

    p = sub.add_parser("triangulate", help="enumerate the stable triangulation")
    _add_common(p, n=True, k=True, r=True)
    p.set_defaults(fn=_cmd_triangulate)

    p = sub.add_parser("shelling", help="emit a shelling order")
    _add_common(p, n=True, k=True, r=True)
    p.add_argument("--order", choices=("paper", "general"), default="paper")
    p.set_defaults(fn=_cmd_shelling)

    p = sub.add_parser("verify-shelling", help="verify a shelling order")
    _add_common(p, n=True, k=True, r=True)
    p.add_argument("--order", choices=("paper", "general"), default="paper")
    p.set_defaults(fn=_cmd_verify_shelling)

    p = sub.add_parser("independence", help="independence polynomials and diagrams")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--graph", choices=("cycle", "path"), default=None)
    p.add_argument("--m", type=int, default=None)
    _add_common(p)
    p.set_defaults(fn=_cmd_independence)

    p = sub.add_parser("ehrhart", help="lattice-point counts and the oracle h*")
    _add_common(p, n=True, k=True, r=True)
    p.add_argument("--t", type=int, default=None)
    p.set_defaults(fn=_cmd_ehrhart)

    p = sub.add_parser("conjecture", help="generalized shelling-order harness")
    _add_common(p, n=True, k=True, r=True)
    p.set_defaults(fn=_cmd_conjecture)

    p = sub.add_parser("report", help="run the acceptance suite")
    p.add_argument("--max-n", dest="max_n", type=int, default=13)
    _add_common(p)
    p.set_defaults(fn=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except ResourceBudgetError as exc:
        print(_canonical_json({"error": {"kind": "resource", "detail": str(exc)}}),
              file=sys.stderr)
        return RESOURCE
    except (ParameterError, HypersimplexError) as exc:
        kind = "inconsistency" if isinstance(exc, InternalInconsistencyError) else "usage"
        print(_canonical_json({"error": {"kind": kind, "detail": str(exc)}}),
              file=sys.stderr)
        return INCONSISTENCY if kind == "inconsistency" else USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
