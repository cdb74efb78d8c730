"""Command-line entry point: ``semicoclass {census,graph,analyze,verify,export}``.

Data goes to files (or standard output when no ``--out`` is given); progress
and timings go to standard error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import acceptance
from . import algebra as alg
from . import graph as gr
from . import semigroup as sg
from .linalg import is_prime

log = logging.getLogger("semicoclass")

EXIT_OK, EXIT_CONFIG, EXIT_COMPUTE, EXIT_VERIFY = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


def _validate(args):
    r = getattr(args, "coclass", None)
    if r is not None and r < 0:
        raise ConfigError("--coclass must be nonnegative")
    p = getattr(args, "prime", None)
    if p is not None and not is_prime(p):
        raise ConfigError(f"--prime {p} is not prime")
    d = getattr(args, "generators", None)
    if d is not None and r is not None and not 1 <= d <= r + 1:
        raise ConfigError(f"--generators must lie in 1..{r + 1} for coclass {r}")
    n = getattr(args, "max_order", None)
    if n is not None and r is not None and n < 2 * r + 1:
        raise ConfigError(f"--max-order must be at least {2 * r + 1}")
    if getattr(args, "workers", 1) < 1:
        raise ConfigError("--workers must be positive")


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)
        log.info("wrote %s", path)


def _read_graph(path: str) -> gr.CoclassGraph:
    try:
        return gr.import_json(Path(path).read_text())
    except FileNotFoundError:
        raise ConfigError(f"no such graph file: {path}") from None
    except (json.JSONDecodeError, KeyError) as exc:
        raise ConfigError(f"{path} is not a graph file: {exc}") from None


def census_lines(r: int, d: int, max_order: int, workers: int = 1) -> str:
    levels = sg.census(r, d, max_order, workers=workers, log=log.info)
    recs = [sg.census_record(t) for n in sorted(levels) for t in levels[n]]
    return "".join(json.dumps(rec, sort_keys=True) + "\n" for rec in recs)


def cmd_census(args) -> int:
    _write(args.out, census_lines(args.coclass, args.generators, args.max_order, args.workers))
    return EXIT_OK


def _load_levels(path: str) -> dict[int, list]:
    levels: dict[int, list] = {}
    for line in Path(path).read_text().splitlines():
        if line.strip():
            t = sg.table_from_record(json.loads(line))
            levels.setdefault(t.order, []).append(t)
    return levels


def cmd_graph(args) -> int:
    levels = _load_levels(args.census) if args.census else None
    g = gr.build_graph(args.coclass, args.prime, args.generators, args.max_order,
                       workers=args.workers, levels=levels)
    out = args.out or f"G_{args.coclass}_{args.prime}_{args.generators}_{args.max_order}"
    _write(out + ".json", gr.export_json(g))
    _write(out + ".dot", gr.export_dot(g))
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = _read_graph(args.graph)
    reports = gr.analyze(g, args.horizon, args.max_defect, args.max_period, args.degree_bound,
                         reach=args.reach)
    for rep in reports:
        if isinstance(rep, gr.PeriodicityReport):
            kind = "strong" if rep.strong else "weak"
            log.info("tree %s: (l, k) = (%d, %d), %s, families: %s", rep.root, rep.defect,
                     rep.period, kind, ", ".join(str(f) for f in rep.families))
        else:
            log.info("tree %s: %s", rep["root"], rep["message"])
    doc = [r.to_dict() if isinstance(r, gr.PeriodicityReport) else r for r in reports]
    _write(args.out, json.dumps(doc, indent=1, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_export(args) -> int:
    g = _read_graph(args.graph)
    if args.format == "dot":
        text = gr.export_dot(g, rankdir=args.rankdir)
    else:
        text = gr.export_json(g)
    _write(args.out, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    numbers = sorted(set(args.criteria)) if args.criteria else None
    bad = [k for k in numbers or [] if k not in acceptance.CRITERIA]
    if bad:
        raise ConfigError(f"unknown criteria {bad}; choose from {sorted(acceptance.CRITERIA)}")
    results = acceptance.run(numbers, report=print)
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_VERIFY if failed else EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="semicoclass", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = ap.add_subparsers(dest="command", required=True)

    def family(p, order_default=9):
        p.add_argument("--coclass", type=int, required=True)
        p.add_argument("--generators", type=int, required=True)
        p.add_argument("--max-order", type=int, default=order_default)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--out")

    c = sub.add_parser("census", help="JSON-lines census of nilpotent semigroups")
    family(c)
    c.set_defaults(func=cmd_census)

    g = sub.add_parser("graph", help="build a coclass graph; writes OUT.json and OUT.dot")
    family(g)
    g.add_argument("--prime", type=int, required=True)
    g.add_argument("--census", help="reuse a census file instead of recomputing")
    g.set_defaults(func=cmd_graph)

    a = sub.add_parser("analyze", help="periodicity report per maximal coclass tree")
    a.add_argument("graph", help="graph JSON written by the graph subcommand")
    a.add_argument("--horizon", type=int)
    a.add_argument("--reach", type=int, help="dimension a branch must reach to count as alive")
    a.add_argument("--max-defect", type=_positive, default=6)
    a.add_argument("--max-period", type=_positive, default=4)
    a.add_argument("--degree-bound", type=_positive, default=2)
    a.add_argument("--out")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run the acceptance checks")
    v.add_argument("--criteria", type=int, nargs="*", help="subset of criterion numbers")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="re-emit a stored graph as DOT or JSON")
    e.add_argument("graph")
    e.add_argument("--format", choices=("dot", "json"), default="dot")
    e.add_argument("--rankdir", choices=("TB", "LR"), default="TB")
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:          # argparse uses 2 for usage errors; keep 2 for compute failures
        return EXIT_CONFIG if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    t0 = time.perf_counter()
    try:
        _validate(args)
        code = args.func(args)
    except (ConfigError, gr.InvalidParameters, sg.BadParameter) as exc:
        log.error("%s", exc)
        return EXIT_CONFIG
    except gr.EmptyGraph as exc:
        log.error("%s", exc)
        return EXIT_CONFIG
    except (sg.NotNilpotent, alg.Exhausted, gr.EdgeMismatch) as exc:
        log.error("computation failed: %s: %s", type(exc).__name__, exc)
        return EXIT_COMPUTE
    log.info("%s done in %.2fs", args.command, time.perf_counter() - t0)
    return code


if __name__ == "__main__":
    sys.exit(main())
