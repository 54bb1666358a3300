"""Command-line interface.

Every subcommand reads graph6 lines from the given paths, or from standard
input when none are given.  Data goes to standard output (or ``--output``),
diagnostics to standard error.  Exit status: 0 ok, 2 bad input, 3 budget
exceeded, 4 identity or contract violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence, TextIO

from .census import Census, build_table, classify_orbits, euler_transform, unimodality_scan
from .circle import is_circle_graph
from .codes import (
    METRICS_CSV_HEADER,
    bordered_paley,
    delta_upper_bound,
    gamma,
    metrics,
    paley_graph,
    parse_adjacency_matrix,
    parse_circulant,
    q4_upper_bound,
)
from .graph import Graph, GraphError, parse_graph6
from .interlace import (
    IdentityViolation,
    InterlaceCache,
    MemoBudgetExceeded,
    Polynomial,
    evaluate,
    interlace_Q,
    interlace_q,
)
from .orbits import DEFAULT_BUDGET, OrbitBudgetExceeded, format_orbit_dump, orbit

EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_CONTRACT = 4

log = logging.getLogger("lcgraphs")


class InputError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _order(text: str) -> int:
    v = _positive(text)
    if v > 32:
        raise argparse.ArgumentTypeError("n must be at most 32")
    return v


# input


def _lines(paths: Sequence[str]) -> Iterator[str]:
    if not paths:
        yield from sys.stdin
        return
    for p in paths:
        if p == "-":
            yield from sys.stdin
            continue
        try:
            with open(p) as fh:
                yield from fh
        except OSError as e:
            raise InputError(f"{p}: {e.strerror}") from e


def _graphs(paths: Sequence[str]) -> Iterator[Graph]:
    for line in _lines(paths):
        line = line.strip()
        if line and not line.startswith("#"):
            yield parse_graph6(line)


def _is_polynomial_line(line: str) -> bool:
    return bool(line) and (line[0] in "-0123456789x[{")


def _polynomial_from_line(line: str) -> Polynomial:
    if line[0] == "[":
        return Polynomial.from_json(line)
    if line[0] == "{":
        return Polynomial.from_json(json.loads(line)["poly"])
    return Polynomial.parse(line)


def _parse_x(text: str) -> int | Fraction:
    try:
        return Fraction(text) if "/" in text else int(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"not an integer or fraction: {text!r}") from e


# workers (top level so they pickle)

_worker_cache: InterlaceCache | None = None


def _init_worker(max_entries: int | None) -> None:
    global _worker_cache
    _worker_cache = InterlaceCache(max_entries)


def _poly_job(args: tuple[str, str]) -> Polynomial:
    g6, kind = args
    g = parse_graph6(g6)
    return (interlace_q if kind == "q" else interlace_Q)(g, _worker_cache)


def _metrics_job(args: tuple[str, int]):
    g6, budget = args
    return metrics(parse_graph6(g6), budget, _worker_cache)


def _circle_job(args: tuple[str, int]) -> bool:
    g6, budget = args
    return is_circle_graph(parse_graph6(g6), budget)


def _map(fn: Callable, items: Iterable, threads: int, memo: int | None) -> Iterator:
    """Ordered map; a process pool when ``threads > 1``."""
    if threads <= 1:
        _init_worker(memo)
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(threads, initializer=_init_worker, initargs=(memo,)) as pool:
        yield from pool.map(fn, items, chunksize=16)


# subcommands


def cmd_poly(a: argparse.Namespace, out: TextIO) -> None:
    kind = _poly_kind(a.kind)
    graphs = [g.to_graph6() for g in _graphs(a.inputs)]
    if a.format == "csv":
        out.write("graph6,coefficients\n")
    for g6, p in zip(graphs, _map(_poly_job, [(g, kind) for g in graphs], a.threads, a.budget_memo)):
        if a.format == "csv":
            out.write(f"{g6},{' '.join(str(c) for c in p.coeffs)}\n")
        elif a.format == "json":
            out.write(json.dumps({"graph6": g6, "kind": kind, "poly": [str(c) for c in p.coeffs]}) + "\n")
        else:
            out.write(f"{p}\n")


def _poly_kind(kind: str | None) -> str:
    if kind in (None, "q"):
        return "q"
    if kind == "Q":
        return "Q"
    raise InputError(f"--kind must be q or Q here, got {kind}")


def cmd_eval(a: argparse.Namespace, out: TextIO) -> None:
    kind = _poly_kind(a.kind)
    cache = InterlaceCache(a.budget_memo)
    for line in _lines(a.inputs):
        line = line.strip()
        if not line or line.startswith("#") or line.startswith("graph6,"):
            continue
        if _is_polynomial_line(line):
            p = _polynomial_from_line(line)
        else:
            g = parse_graph6(line)
            p = (interlace_q if kind == "q" else interlace_Q)(g, cache)
        out.write(f"{evaluate(p, a.x)}\n")


def _orbit_kind(kind: str | None) -> str:
    if kind in (None, "lc"):
        return "LC"
    if kind == "elc":
        return "ELC"
    raise InputError(f"--kind must be lc or elc here, got {kind}")


def cmd_orbit(a: argparse.Namespace, out: TextIO) -> None:
    kind = _orbit_kind(a.kind)
    for g in _graphs(a.inputs):
        out.write(format_orbit_dump(orbit(g, kind, a.budget_orbit)))


def cmd_metrics(a: argparse.Namespace, out: TextIO) -> None:
    graphs = [g.to_graph6() for g in _graphs(a.inputs)]
    if a.format == "csv":
        out.write(METRICS_CSV_HEADER + "\n")
    for g6, m in zip(graphs, _map(_metrics_job, [(g, a.budget_orbit) for g in graphs], a.threads, a.budget_memo)):
        if a.format == "csv":
            out.write(m.csv_row() + "\n")
        elif a.format == "json":
            out.write(json.dumps({
                "graph6": g6, "n": m.n, "delta": m.delta, "degQ": m.degQ, "q4norm": m.q4_norm,
                "cmf": [m.cmf.numerator, m.cmf.denominator], "type": m.type,
            }) + "\n")
        else:
            out.write(f"{g6}: n={m.n} delta={m.delta} degQ={m.degQ} Q(4)/2^n={m.q4_norm} "
                      f"CMF={m.cmf} type={m.type}\n")


def cmd_circle(a: argparse.Namespace, out: TextIO) -> None:
    graphs = [g.to_graph6() for g in _graphs(a.inputs)]
    for g6, ok in zip(graphs, _map(_circle_job, [(g, a.budget_orbit) for g in graphs], a.threads, None)):
        if ok != a.invert:
            out.write(g6 + "\n")


def _census_n_values(a: argparse.Namespace) -> tuple[int, int]:
    if a.n is not None and a.n_max is not None:
        raise InputError("give --n or --n-max, not both")
    n_max = a.n if a.n is not None else a.n_max
    if n_max is None:
        raise InputError("census needs --n or --n-max")
    return n_max, (a.n if a.n is not None else 1)


def cmd_census(a: argparse.Namespace, out: TextIO) -> None:
    n_max, _ = _census_n_values(a)
    cache = InterlaceCache(a.budget_memo)
    lc = Census("LC", a.cache_dir, a.budget_orbit, circle_max=min(n_max, a.circle_max), cache=cache)
    elc = Census("ELC", a.cache_dir, a.budget_orbit, cache=cache)
    if a.table is not None:
        out.write(build_table(a.table, n_max, lc, elc).render(a.format))
        return
    census = lc if _orbit_kind(a.kind) == "LC" else elc
    if a.inputs:
        if a.n is None:
            raise InputError("seeding from graph6 input needs --n")
        recs = census.classify(a.n, _graphs(a.inputs))
        reps = [r.rep for r in recs]
    else:
        if a.n is None:
            raise InputError("representative listing needs --n (or use --table)")
        _, reps = classify_orbits(a.n, census.kind, a.connected_only, census, a.budget_orbit)
    if a.format == "json":
        out.write(json.dumps({"kind": census.kind, "n": a.n, "count": len(reps), "representatives": reps}) + "\n")
    else:
        out.write(f"# kind={census.kind} n={a.n} count={len(reps)}\n")
        out.write("".join(r + "\n" for r in reps))


def cmd_unimodal(a: argparse.Namespace, out: TextIO) -> None:
    if a.n is None:
        raise InputError("unimodal needs --n")
    cache = InterlaceCache(a.budget_memo)
    elc = Census("ELC", a.cache_dir, a.budget_orbit, cache=cache)
    lc = Census("LC", a.cache_dir, a.budget_orbit, circle_max=0, cache=cache)
    rep = unimodality_scan(a.n, elc, lc, connected_only=a.connected_only)
    fields = {
        "q": rep.non_unimodal_q,
        "Q": rep.non_unimodal_Q,
        "x*q(x+1)": rep.non_unimodal_shifted_q,
    }
    if a.format == "json":
        out.write(json.dumps({
            "n": a.n,
            "checked": rep.polynomials_checked,
            "non_unimodal": {k: [{"witness": w, "coefficients": list(s)} for w, s in v] for k, v in fields.items()},
        }) + "\n")
    elif a.format == "csv":
        out.write("polynomial,witness,coefficients\n")
        for k, v in fields.items():
            for w, s in v:
                out.write(f"{k},{w},{' '.join(map(str, s))}\n")
    else:
        out.write(f"n={a.n}: {rep.polynomials_checked} distinct polynomials checked\n")
        for k, v in fields.items():
            out.write(f"non-unimodal {k}: {len(v)}\n")
            for w, s in v:
                out.write(f"  {w}  ({','.join(map(str, s))})\n")


def cmd_euler(a: argparse.Namespace, out: TextIO) -> None:
    text = " ".join(a.sequence) if a.sequence else "".join(_lines(a.inputs))
    try:
        seq = [int(t) for t in text.replace(",", " ").split()]
    except ValueError as e:
        raise InputError(f"sequence must be integers: {e}") from e
    if not seq:
        raise InputError("empty sequence")
    t = euler_transform(seq)
    if a.format == "json":
        out.write(json.dumps(t) + "\n")
    else:
        out.write(",".join(map(str, t)) + "\n")


def cmd_construct(a: argparse.Namespace, out: TextIO) -> None:
    what = a.what
    if what in ("paley", "bordered-paley"):
        if len(a.args) != 1:
            raise InputError(f"{what} takes one prime")
        try:
            p = int(a.args[0])
        except ValueError as e:
            raise InputError(f"not an integer: {a.args[0]!r}") from e
        g = paley_graph(p) if what == "paley" else bordered_paley(p)
    elif what == "circulant":
        if len(a.args) != 1:
            raise InputError("circulant takes one first row like (0110)")
        g = parse_circulant(a.args[0])
    else:
        text = "".join(_lines(a.args))
        g = parse_adjacency_matrix(text)
    out.write(g.to_graph6() + "\n")


def cmd_bound(a: argparse.Namespace, out: TextIO) -> None:
    try:
        n = int(a.n_arg)
    except ValueError as e:
        raise InputError(f"not an integer: {a.n_arg!r}") from e
    if a.which == "delta":
        out.write(f"{delta_upper_bound(n, a.value)}\n")
        return
    try:
        v = int(a.value)
    except ValueError as e:
        raise InputError(f"not an integer: {a.value!r}") from e
    if a.which == "gamma":
        out.write(f"{gamma(n, v)}\n")
    else:
        b = q4_upper_bound(n, v)
        out.write(f"{b}\n" if a.format != "json" else json.dumps([b.numerator, b.denominator]) + "\n")


# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kind", choices=["q", "Q", "lc", "elc"])
    common.add_argument("--n", type=_order)
    common.add_argument("--n-max", type=_order)
    common.add_argument("--connected-only", action="store_true")
    common.add_argument("--table", choices=["1", "2", "3", "4", "5", "7", "8", "7c"])
    common.add_argument("--format", choices=["csv", "json", "text"], default="text")
    common.add_argument("--budget-orbit", type=_positive, default=DEFAULT_BUDGET, metavar="N",
                        help="maximum orbit size")
    common.add_argument("--budget-memo", type=_positive, default=None, metavar="N",
                        help="maximum memo entries (default unlimited)")
    common.add_argument("--threads", type=_positive, default=os.cpu_count() or 1, metavar="N")
    common.add_argument("--output", metavar="PATH")
    common.add_argument("--cache-dir", metavar="DIR", help="persist census levels here")
    common.add_argument("--circle-max", type=_order, default=8,
                        help="largest order for which census orbits get a circle verdict")
    common.add_argument("-v", "--verbose", action="store_true", help="progress on standard error")

    p = argparse.ArgumentParser(prog="lcgraphs", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=fn)
        return sp

    add("poly", cmd_poly, "interlace polynomial of each graph").add_argument("inputs", nargs="*")
    sp = add("eval", cmd_eval, "evaluate polynomials (or graphs' polynomials) at x")
    sp.add_argument("x", type=_parse_x)
    sp.add_argument("inputs", nargs="*")
    add("orbit", cmd_orbit, "dump the LC or ELC orbit of each graph").add_argument("inputs", nargs="*")
    add("metrics", cmd_metrics, "code metrics of each graph's LC orbit").add_argument("inputs", nargs="*")
    sp = add("circle", cmd_circle, "keep only circle graphs")
    sp.add_argument("--invert", action="store_true", help="keep only non-circle graphs")
    sp.add_argument("inputs", nargs="*")
    add("census", cmd_census, "orbit census tables or representatives").add_argument("inputs", nargs="*")
    add("unimodal", cmd_unimodal, "scan polynomials of order n for non-unimodal coefficients")
    sp = add("euler", cmd_euler, "Euler transform of a sequence")
    sp.add_argument("sequence", nargs="*")
    sp.set_defaults(inputs=[])
    sp = add("construct", cmd_construct, "build a graph")
    sp.add_argument("what", choices=["paley", "bordered-paley", "circulant", "matrix"])
    sp.add_argument("args", nargs="*")
    sp = add("bound", cmd_bound, "gamma(n,d), the Q(G,4) bound, or the delta bound")
    sp.add_argument("which", choices=["gamma", "q4", "delta"])
    sp.add_argument("n_arg", metavar="n")
    sp.add_argument("value", metavar="d|delta|type")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(message)s")
    out = open(a.output, "w") if a.output else sys.stdout
    try:
        a.func(a, out)
        out.flush()
    except (OrbitBudgetExceeded, MemoBudgetExceeded) as e:
        print(f"lcgraphs: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except IdentityViolation as e:
        print(f"lcgraphs: identity violated: {e}", file=sys.stderr)
        return EXIT_CONTRACT
    except (InputError, GraphError, ValueError) as e:
        print(f"lcgraphs: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as e:
        print(f"lcgraphs: {e}", file=sys.stderr)
        return EXIT_CONTRACT
    finally:
        if a.output:
            out.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
