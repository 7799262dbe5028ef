"""Command line interface.

Subcommands:
  run FILE      execute every task in a script, print the JSON report
  corpus        replay built-in worked examples against recorded values
  gb FILE       print the reduced basis of every ideal a script declares

Exit codes: 0 the run completed (whatever the verdicts, including tasks
reported not-applicable); 1 a corpus fixture disagreed with its recorded
values; 2 the input was rejected (parse error, failed precondition,
missing file, exhausted budget); 3 an internal invariant failed.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

from .budget import budget_scope
from .corpus import corpus_names, run_fixture
from .dsl import build_environment, parse_script
from .errors import InternalError, LiftcheckError, ParseError
from .ideals import reduced_groebner
from .report import build_corpus_report, build_report, render_report
from .tasks import run_task


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="liftcheck",
        description="Exact weak-liftability checker for cyclic modules "
        "over hypersurface quotients.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute a task script")
    run.add_argument("file", help="script file")
    run.add_argument("--json", metavar="OUT", help="also write the report here")
    run.add_argument("--max-degree", type=int, metavar="D",
                     help="abort basis steps past this degree")
    run.add_argument("--timeout", type=float, metavar="S",
                     help="wall-clock budget in seconds")
    run.add_argument("--timings", action="store_true",
                     help="include wall-clock seconds per task (output is "
                     "no longer byte-reproducible)")

    cor = sub.add_parser("corpus", help="replay the built-in examples")
    cor.add_argument("--name", action="append", metavar="NAME",
                     help="fixture to run (repeatable; default: all)")
    cor.add_argument("--all", action="store_true", help="run every fixture")
    cor.add_argument("--list", action="store_true", help="list fixture names")
    cor.add_argument("--json", metavar="OUT", help="also write the report here")
    cor.add_argument("--timings", action="store_true",
                     help="include wall-clock seconds per fixture")

    gb = sub.add_parser("gb", help="print reduced bases for a script's ideals")
    gb.add_argument("file", help="script file")
    return ap


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _emit(report: dict, json_path: Optional[str], out) -> None:
    text = render_report(report)
    out.write(text)
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_run(args, out) -> int:
    source = _read_file(args.file)
    script = parse_script(source)
    env = build_environment(script)
    results = []
    timings: list[float] = []
    with budget_scope(max_degree=args.max_degree, timeout=args.timeout):
        for index, task in enumerate(script.tasks):
            t0 = time.monotonic()
            results.append(run_task(env, task, index))
            timings.append(time.monotonic() - t0)
    report = build_report(
        args.file, source, results, timings if args.timings else None
    )
    _emit(report, args.json, out)
    return 0


def _cmd_corpus(args, out) -> int:
    if args.list:
        for name in corpus_names():
            out.write(name + "\n")
        return 0
    names = corpus_names() if (args.all or not args.name) else list(args.name)
    for name in names:
        if name not in corpus_names():
            raise ParseError(f"unknown corpus fixture {name!r}")
    results = []
    timings: list[float] = []
    for name in names:
        t0 = time.monotonic()
        results.append(run_fixture(name))
        timings.append(time.monotonic() - t0)
    report = build_corpus_report(results, timings if args.timings else None)
    _emit(report, args.json, out)
    return 0 if report["ok"] else 1


def _cmd_gb(args, out) -> int:
    source = _read_file(args.file)
    env = build_environment(parse_script(source))
    for name, handle in env.ideals.items():
        basis = reduced_groebner(handle)
        out.write(f"{name}: " + ", ".join(str(e) for e in basis.elements) + "\n")
        if basis.relations_adjoined:
            rels = ", ".join(str(r) for r in handle.ring.relation_polys())
            out.write(f"  (modulo {rels})\n")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "run":
            return _cmd_run(args, out)
        if args.command == "corpus":
            return _cmd_corpus(args, out)
        return _cmd_gb(args, out)
    except InternalError as exc:
        print(f"liftcheck: internal error: {exc}", file=sys.stderr)
        return 3
    except LiftcheckError as exc:
        print(f"liftcheck: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
