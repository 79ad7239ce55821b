"""Command-line interface.

Subcommands::

    spectrum GRAPH.json          print the Steklov spectrum of a graph file
    bounds GRAPH.json            sigma_1 next to every lower bound
    family KIND ...              generate a family graph as JSON
    sweep KIND ...               CSV table over a parameter range
    verify                       run the full reproduction suite
    search                       exhaustive minimizer search on small graphs

Exit codes: 0 success, 1 graph parse/read error, 2 graph validation
failure, 3 numerical failure, 4 invalid parameters.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, families, verify
from .errors import (EigenConvergenceError, GraphFormatError, NotSPDError,
                     NumericalError)
from .graphs import (GraphWithBoundary, boundary_diameter, graph_to_json,
                     load_graph, validate)
from .steklov import Normalization, steklov_spectrum

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_NUMERIC = 3
EXIT_PARAMS = 4

SWEEP_HEADER = "family,b,d_B,n,sigma1,thm1,thm2,weighted,closed_form,slack"


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with the parameter code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARAMS, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    """Human-readable float: 12 significant digits."""
    return format(float(x), ".12g")


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _norm(args) -> Normalization:
    return Normalization.from_string(args.norm)


def _load_validated(path):
    g = load_graph(path)
    violations = validate(g)
    if violations:
        for v in violations:
            print(f"validation: {v.message}", file=sys.stderr)
        return None
    return g


def _parse_range(text: str) -> list[int]:
    """'7' -> [7]; '3:9' -> [3..9]; '3:9:2' -> [3,5,7,9]."""
    parts = text.split(":")
    if not 1 <= len(parts) <= 3:
        raise ValueError(f"bad range {text!r}; use START[:END[:STEP]]")
    try:
        nums = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"bad range {text!r}; entries must be integers") from None
    if len(nums) == 1:
        return nums
    start, end = nums[0], nums[1]
    step = nums[2] if len(nums) == 3 else 1
    if step < 1 or end < start:
        raise ValueError(f"bad range {text!r}; need END >= START and STEP >= 1")
    return list(range(start, end + 1, step))


def cmd_spectrum(args) -> int:
    g = _load_validated(args.graph)
    if g is None:
        return EXIT_VALIDATION
    spec = steklov_spectrum(g, _norm(args))
    sigmas = [float(s) for s in spec.sigmas]
    if args.format == "json":
        _emit(args, json.dumps({"norm": args.norm, "b": g.b, "sigmas": sigmas},
                               indent=2) + "\n")
    elif args.format == "csv":
        lines = ["k,sigma"] + [f"{k},{s!r}" for k, s in enumerate(sigmas)]
        _emit(args, "\n".join(lines) + "\n")
    else:
        lines = [f"norm: {args.norm}", f"b: {g.b}"]
        lines += [f"sigma[{k}] = {_fmt(s)}" for k, s in enumerate(sigmas)]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = _load_validated(args.graph)
    if g is None:
        return EXIT_VALIDATION
    report = bounds.check_bounds(g, _norm(args))
    weighted = "" if report.weighted is None else repr(report.weighted)
    if args.format == "json":
        payload = {
            "norm": args.norm,
            "b": report.b,
            "d_B": report.d_b,
            "sigma1": report.sigma1,
            "thm1": report.thm1,
            "thm2": report.thm2,
            "weighted": report.weighted,
            "slack": report.slack_thm2,
            "violated": list(report.violated),
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        header = "b,d_B,sigma1,thm1,thm2,weighted,slack,violated"
        row = (f"{report.b},{report.d_b},{report.sigma1!r},{report.thm1!r},"
               f"{report.thm2!r},{weighted},{report.slack_thm2!r},"
               f"{';'.join(report.violated)}")
        _emit(args, header + "\n" + row + "\n")
    else:
        lines = [
            f"norm: {args.norm}",
            f"b: {report.b}",
            f"d_B: {report.d_b}",
            f"sigma1: {_fmt(report.sigma1)}",
            f"thm1: {_fmt(report.thm1)}",
            f"thm2: {_fmt(report.thm2)}",
            f"weighted: {'-' if report.weighted is None else _fmt(report.weighted)}",
            f"slack: {_fmt(report.slack_thm2)}",
            f"violated: {', '.join(report.violated) if report.violated else 'none'}",
        ]
        _emit(args, "\n".join(lines) + "\n")
    if report.violated:
        print(f"warning: bounds violated: {', '.join(report.violated)}",
              file=sys.stderr)
    return EXIT_OK


def _build_family(args) -> GraphWithBoundary:
    kind = args.kind
    if kind == "path":
        if args.n is None:
            raise ValueError("family 'path' needs --n")
        return families.path_graph(args.n)
    if kind == "d":
        if args.n is None:
            raise ValueError("family 'd' needs --n")
        return families.d_family(args.n)
    if kind == "h":
        if args.b is None or args.dB is None:
            raise ValueError("family 'h' needs --b and --dB")
        return families.h_family(args.b, args.dB)
    if kind == "random":
        if None in (args.interior, args.b, args.p, args.seed):
            raise ValueError("family 'random' needs --interior, --b, --p and --seed")
        return families.random_valid_graph(args.interior, args.b, args.p,
                                           args.seed, args.weighted)
    raise ValueError(f"unknown family kind {kind!r}")


def cmd_family(args) -> int:
    g = _build_family(args)
    _emit(args, graph_to_json(g) + "\n")
    return EXIT_OK


def _sweep_rows(args):
    norm = _norm(args)
    measure = norm is Normalization.MEASURE

    def row(family, b, d_b, n, sigma, closed):
        t1 = bounds.thm1_bound(b, d_b)
        t2 = bounds.thm2_bound(b, d_b)
        return (family, str(b), str(d_b), "" if n is None else str(n),
                repr(sigma), repr(t1), repr(t2), "", closed, repr(sigma - t2))

    if args.kind == "path":
        for n in _parse_range(args.n):
            g = families.path_graph(n)
            sigma = float(steklov_spectrum(g, norm).sigmas[1])
            yield row("path", 2, n, n, sigma, repr(2 / n))
    elif args.kind == "d":
        for n in _parse_range(args.n):
            g = families.d_family(n)
            sigma = float(steklov_spectrum(g, norm).sigmas[1])
            yield row("d", 2, 2, n, sigma, repr(1.0))
    elif args.kind == "h":
        for b in _parse_range(args.b):
            for d in _parse_range(args.dB):
                g = families.h_family(b, d)
                sigma = float(steklov_spectrum(g, norm).sigmas[1])
                yield row("h", b, d, None, sigma,
                          repr(families.h_family_sigma1(b, d)))
    elif args.kind == "random":
        for i in range(args.count):
            g = families.random_valid_graph(args.interior, args.b, args.p,
                                            args.seed + i, args.weighted)
            sigma = float(steklov_spectrum(g, norm).sigmas[1])
            d_b = boundary_diameter(g)
            out = list(row("random", g.b, d_b, g.n, sigma, ""))
            if measure:
                out[7] = repr(bounds.weighted_bound(g))
            yield tuple(out)
    else:
        raise ValueError(f"unknown family kind {args.kind!r}")


def cmd_sweep(args) -> int:
    if args.kind in ("path", "d") and args.n is None:
        raise ValueError(f"sweep '{args.kind}' needs --n")
    if args.kind == "h" and (args.b is None or args.dB is None):
        raise ValueError("sweep 'h' needs --b and --dB")
    if args.kind == "random" and None in (args.interior, args.b_int, args.p, args.seed):
        raise ValueError("sweep 'random' needs --interior, --b, --p and --seed")
    if args.kind == "random":
        args.b = args.b_int
    lines = [SWEEP_HEADER]
    lines += [",".join(r) for r in _sweep_rows(args)]
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    rows = verify.run_verification(quick=args.quick)
    width = max(len(r.name) for r in rows)
    for r in rows:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<{width}}  expected: {r.expected}  got: {r.got}")
    failed = sum(1 for r in rows if not r.passed)
    print(f"{len(rows) - failed}/{len(rows)} checks passed")
    return EXIT_OK if failed == 0 else 1


def cmd_search(args) -> int:
    res = families.exhaustive_minimizer_search(args.b, args.dB, args.max_vertices)
    if args.format == "json":
        payload = {
            "b": res.b,
            "d_B": res.d_b,
            "max_vertices": res.max_vertices,
            "graphs_searched": res.graphs_searched,
            "sigma1_min": res.sigma1_min,
            "minimizer_count": len(res.minimizers),
            "h_family_among_minimizers": res.h_family_minimizer,
            "minimizers": [json.loads(graph_to_json(g)) for g in res.minimizers],
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        lines = [
            f"b={res.b} d_B={res.d_b} max_vertices={res.max_vertices}",
            f"graphs searched: {res.graphs_searched}",
            "no graphs matched" if res.sigma1_min is None
            else f"minimum sigma1: {_fmt(res.sigma1_min)}",
            f"minimizer classes: {len(res.minimizers)}",
        ]
        if res.h_family_minimizer is not None:
            lines.append("two-hub family among minimizers: "
                         + ("yes" if res.h_family_minimizer else "no"))
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _add_common(p, fmt=True):
    p.add_argument("--norm", choices=("unit", "measure"), default="unit",
                   help="boundary normalization (default unit)")
    if fmt:
        p.add_argument("--format", choices=("json", "csv", "text"),
                       default="text", help="output format")
    p.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="steklov-graph",
                     description="Steklov spectra and sigma_1 lower bounds on graphs with boundary")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("spectrum", help="Steklov spectrum of a graph file")
    p.add_argument("graph", help="path to a graph JSON file")
    _add_common(p)
    p.set_defaults(handler=cmd_spectrum)

    p = sub.add_parser("bounds", help="sigma_1 and its lower bounds for a graph file")
    p.add_argument("graph", help="path to a graph JSON file")
    _add_common(p)
    p.set_defaults(handler=cmd_bounds)

    p = sub.add_parser("family", help="generate a family graph as JSON")
    p.add_argument("kind", choices=("path", "d", "h", "random"))
    p.add_argument("--n", type=int, help="path length / pendant length")
    p.add_argument("--b", type=int, help="boundary size")
    p.add_argument("--dB", type=int, help="boundary diameter")
    p.add_argument("--interior", type=int, help="interior size (random)")
    p.add_argument("--p", type=float, help="extra-edge probability (random)")
    p.add_argument("--seed", type=int, help="RNG seed (random; required)")
    p.add_argument("--weighted", action="store_true",
                   help="draw random edge weights in [0.5, 2)")
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("sweep", help="CSV sweep over family parameters")
    p.add_argument("kind", choices=("path", "d", "h", "random"))
    p.add_argument("--n", help="range START[:END[:STEP]] for path/d")
    p.add_argument("--b", help="range START[:END[:STEP]] for h", dest="b")
    p.add_argument("--dB", help="range START[:END[:STEP]] for h")
    p.add_argument("--interior", type=int, help="interior size (random)")
    p.add_argument("--b-size", type=int, dest="b_int",
                   help="boundary size (random)")
    p.add_argument("--p", type=float, help="extra-edge probability (random)")
    p.add_argument("--count", type=int, default=10,
                   help="number of random graphs (random)")
    p.add_argument("--seed", type=int, help="RNG seed (random; required)")
    p.add_argument("--weighted", action="store_true")
    _add_common(p, fmt=False)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("verify", help="run the reproduction suite")
    p.add_argument("--quick", action="store_true",
                   help="smaller ensembles and grids (testing convenience)")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("search", help="exhaustive sigma_1 minimizer search")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--dB", type=int, required=True)
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.set_defaults(handler=cmd_search)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotSPDError, EigenConvergenceError, NumericalError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
