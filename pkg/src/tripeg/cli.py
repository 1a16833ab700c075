"""Command-line front end.

Subcommands::

    construct   build a strategy for (a, b, c)          [--explain]
    verify      check a strategy file for feasibility
    analyze     profiles, types, blocks, patterns, certificate, filters
    dimension   bounds and exact value for (a, b, c)    [--witness]
    search      exhaustive minimum-size search
    table       bounds for every triple with a+b+c <= N
    augment     extend one peg's color range by one color
    project     merge two colors on one peg

Strategies travel in the plain text format (header "a b c", one "q1 q2 q3"
line per question, '#' comments) or as the JSON object emitted with
``--format json``; ``verify``, ``analyze``, ``augment`` and ``project``
accept either, and read stdin when the file argument is "-" or omitted.

Output is deterministic: sets are printed sorted, and nothing in the data
stream carries a timestamp.  Notices (peg reordering, projection warnings)
go to stderr.

Exit codes: 0 success — including a verify run whose verdict is
"infeasible"; 1 domain errors; 2 search budget exceeded; 64 usage errors;
65 unparseable strategy input.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .analysis import (build_strategy_graph, certify_feasible,
                       check_structural_filters, classify_questions,
                       detect_patterns, missing_colors)
from .bounds import DimensionResult, dimension, iter_table, lower_bound, upper_bound
from .constructors import construct
from .core import (Params, Strategy, StrategyParseError, format_strategy,
                   parse_strategy, verify_feasible)
from .search import (BUDGET, EXHAUSTED, FOUND, Budget, SearchOutcome,
                     exists_feasible, min_feasible_size)
from .transforms import augment_peg, check_projectable, project


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with BSD-style exit code 64 for usage problems."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(64, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------

def _params_from_args(args: argparse.Namespace) -> Params:
    try:
        params = Params(args.a, args.b, args.c)
    except ValueError as exc:
        raise _UsageError(str(exc))
    if not params.is_canonical:
        canon, _ = params.canonicalize()
        print(f"note: pegs reordered to canonical order {canon.astuple()} "
              f"internally; output uses the requested order {params.astuple()}",
              file=sys.stderr)
    return params


def _strategy_to_json(strat: Strategy) -> Dict[str, Any]:
    return {"params": list(strat.params.astuple()),
            "questions": [list(q) for q in strat.questions]}


def _strategy_from_json(text: str) -> Strategy:
    try:
        obj = json.loads(text)
        params = obj["params"]
        questions = obj["questions"]
        if not isinstance(params, list) or len(params) != 3:
            raise ValueError("'params' must be a list of three integers")
        return Strategy(Params(*(int(v) for v in params)),
                        tuple(tuple(int(x) for x in q) for q in questions))
    except (KeyError, TypeError, ValueError) as exc:
        raise StrategyParseError(1, f"invalid JSON strategy: {exc}")


def _read_strategy(path: str) -> Strategy:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        return _strategy_from_json(text)
    return parse_strategy(text)


def _emit_json(obj: Any) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _require_format(args: argparse.Namespace, *allowed: str) -> None:
    if args.format not in allowed:
        raise _UsageError(f"--format {args.format} is not supported by "
                          f"'{args.command}' (use {' or '.join(allowed)})")


def _budget_from_args(args: argparse.Namespace) -> Budget:
    time_limit = args.time_budget if args.time_budget > 0 else None
    node_limit = args.node_budget if args.node_budget > 0 else None
    return Budget(time_limit, node_limit)


# ---------------------------------------------------------------------------
# Command handlers
# ---------------------------------------------------------------------------

def _cmd_construct(args: argparse.Namespace) -> int:
    _require_format(args, "text", "json")
    params = _params_from_args(args)
    strat = construct(params)
    if not args.explain:
        if args.format == "json":
            _emit_json(_strategy_to_json(strat))
        else:
            sys.stdout.write(format_strategy(strat))
        return 0
    graph = build_strategy_graph(strat)
    block_of = {}
    for bi, block in enumerate(graph.blocks):
        for v in block.vertices:
            block_of[v] = (bi, block.kind)
    types = [t for _, t in classify_questions(strat)]
    if args.format == "json":
        obj = _strategy_to_json(strat)
        obj["explain"] = [
            {"index": i, "type": types[i],
             "block": block_of[i][0], "block_kind": block_of[i][1]}
            for i in range(len(strat.questions))]
        _emit_json(obj)
        return 0
    lines = ["%d %d %d" % params.astuple()]
    for i, q in enumerate(strat.questions):
        bi, kind = block_of[i]
        lines.append("%d %d %d  # type %s, block %d (%s)"
                     % (q + (types[i], bi, kind)))
    print("\n".join(lines))
    return 0


def _verdict_line(strat: Strategy, feasible: bool, witness) -> str:
    a, b, c = strat.params.astuple()
    head = f"{a} {b} {c}: "
    tail = f" ({len(strat.questions)} questions)"
    if feasible:
        return head + "feasible" + tail
    u, v = witness
    return head + f"infeasible, witness ({u[0]},{u[1]},{u[2]})/({v[0]},{v[1]},{v[2]})" + tail


def _cmd_verify(args: argparse.Namespace) -> int:
    _require_format(args, "text", "json")
    strat = _read_strategy(args.file)
    res = verify_feasible(strat)
    if args.format == "json":
        _emit_json({"params": list(strat.params.astuple()),
                    "size": len(strat.questions),
                    "feasible": res.feasible,
                    "witness": None if res.witness is None
                    else [list(res.witness[0]), list(res.witness[1])]})
    else:
        print(_verdict_line(strat, res.feasible, res.witness))
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    _require_format(args, "text", "json")
    strat = _read_strategy(args.file)
    profs = classify_questions(strat)
    miss = missing_colors(strat)
    graph = build_strategy_graph(strat)
    report = detect_patterns(strat)
    cert = certify_feasible(strat)
    violations = check_structural_filters(strat)
    if args.format == "json":
        _emit_json({
            "params": list(strat.params.astuple()),
            "size": len(strat.questions),
            "questions": [list(q) for q in strat.questions],
            "profiles": [list(p) for p, _ in profs],
            "types": [t for _, t in profs],
            "missing_colors": [sorted(m) for m in miss],
            "blocks": [{"vertices": list(b.vertices), "kind": b.kind}
                       for b in graph.blocks],
            "patterns_applicable": report.applicable,
            "pattern_hits": [{"pattern": h.pattern,
                              "questions": list(h.indices),
                              "note": h.note} for h in report.hits],
            "certificate": {"status": cert.status, "pattern": cert.pattern},
            "filter_violations": violations,
        })
        return 0
    a, b, c = strat.params.astuple()
    print(f"params: {a} {b} {c}")
    print(f"size: {len(strat.questions)}")
    for peg in range(3):
        shown = " ".join(str(v) for v in sorted(miss[peg])) or "-"
        print(f"missing colors, peg {peg + 1}: {shown}")
    for i, q in enumerate(strat.questions):
        prof, ty = profs[i]
        print(f"q{i} = ({q[0]},{q[1]},{q[2]})  profile={prof}  type={ty}")
    for bi, block in enumerate(graph.blocks):
        verts = " ".join(str(v) for v in block.vertices)
        print(f"block {bi}: {block.kind}  questions {verts}")
    if not report.applicable:
        print("patterns: not applicable (strategy is not ABC-only)")
    elif not report.hits:
        print("patterns: none")
    else:
        for hit in report.hits:
            idx = " ".join(str(v) for v in hit.indices)
            note = f"  ({hit.note})" if hit.note else ""
            print(f"pattern {hit.pattern}: questions {idx}{note}")
    print(f"certificate: {cert}")
    print("filters violated: " + (" ".join(violations) if violations else "none"))
    return 0


def _dimension_json(res: DimensionResult) -> Dict[str, Any]:
    a, b, c = res.params.astuple()
    obj: Dict[str, Any] = {
        "a": a, "b": b, "c": c,
        "case": res.case.value,
        "lower": res.lower, "lower_provenance": res.lower_provenance,
        "upper": res.upper, "upper_provenance": res.upper_provenance,
        "exact": res.exact, "exact_provenance": res.exact_provenance,
        "open": not res.is_closed,
    }
    if res.witness is not None:
        obj["witness"] = _strategy_to_json(res.witness)
    return obj


def _cmd_dimension(args: argparse.Namespace) -> int:
    _require_format(args, "text", "json")
    params = _params_from_args(args)
    res = dimension(params, with_witness=args.witness)
    if args.format == "json":
        _emit_json(_dimension_json(res))
        return 0
    a, b, c = params.astuple()
    line = (f"({a},{b},{c}) case={res.case.value} "
            f"lower={res.lower} [{res.lower_provenance}] "
            f"upper={res.upper} [{res.upper_provenance}] ")
    if res.is_closed:
        line += f"exact={res.exact} [{res.exact_provenance}]"
    else:
        line += f"open: exact in [{res.lower}, {res.upper}]"
    print(line)
    if res.witness is not None:
        sys.stdout.write(format_strategy(res.witness))
    return 0


def _search_capped(params: Params, cap: int, budget: Budget,
                   threads: int) -> SearchOutcome:
    """Iterative deepening stopped at ``cap`` (only sizes <= cap searched)."""
    t0 = time.perf_counter()
    deadline = t0 + budget.time_limit if budget.time_limit is not None else None
    lo, _ = lower_bound(params)
    up, _ = upper_bound(params)
    if cap >= up:
        return min_feasible_size(params, budget, threads)
    total = 0
    exhausted_up_to = lo - 1
    for k in range(lo, cap + 1):
        time_left = None
        if deadline is not None:
            time_left = deadline - time.perf_counter()
            if time_left <= 0:
                return SearchOutcome(BUDGET, exhausted_up_to, None, total,
                                     time.perf_counter() - t0)
        nodes_left = None
        if budget.node_limit is not None:
            nodes_left = budget.node_limit - total
            if nodes_left <= 0:
                return SearchOutcome(BUDGET, exhausted_up_to, None, total,
                                     time.perf_counter() - t0)
        out = exists_feasible(params, k, Budget(time_left, nodes_left), threads)
        total += out.nodes_explored
        if out.status == FOUND:
            return SearchOutcome(FOUND, k, out.witness, total,
                                 time.perf_counter() - t0)
        if out.status == BUDGET:
            return SearchOutcome(BUDGET, exhausted_up_to, None, total,
                                 time.perf_counter() - t0)
        exhausted_up_to = k
    return SearchOutcome(EXHAUSTED, cap, None, total, time.perf_counter() - t0)


def _cmd_search(args: argparse.Namespace) -> int:
    _require_format(args, "text", "json")
    params = _params_from_args(args)
    if args.threads < 1:
        raise _UsageError("--threads must be at least 1")
    budget = _budget_from_args(args)
    if args.max_size is None:
        out = min_feasible_size(params, budget, args.threads)
    else:
        if args.max_size < 0:
            raise _UsageError("--max-size must be nonnegative")
        out = _search_capped(params, args.max_size, budget, args.threads)
    if args.format == "json":
        obj: Dict[str, Any] = {"status": out.status, "size": out.size,
                               "nodes_explored": out.nodes_explored}
        if out.witness is not None:
            obj["witness"] = _strategy_to_json(out.witness)
        _emit_json(obj)
    else:
        print(f"status={out.status} size={out.size} nodes={out.nodes_explored}")
    if out.witness is not None and args.emit_witness is not None:
        text = format_strategy(out.witness)
        if args.emit_witness == "-":
            sys.stdout.write(text)
        else:
            Path(args.emit_witness).write_text(text, encoding="utf-8")
    return 2 if out.status == BUDGET else 0


_TABLE_COLUMNS = ("a", "b", "c", "case", "lower", "upper", "exact",
                  "provenance", "open")


def _table_row(res: DimensionResult) -> List[str]:
    a, b, c = res.params.astuple()
    if res.is_closed:
        prov = res.exact_provenance
    else:
        prov = f"{res.lower_provenance}|{res.upper_provenance}"
    return [str(a), str(b), str(c), res.case.value,
            str(res.lower), str(res.upper),
            "" if res.exact is None else str(res.exact),
            prov, "true" if not res.is_closed else "false"]


def _cmd_table(args: argparse.Namespace) -> int:
    if args.max_sum < 3:
        raise _UsageError("--max-sum must be at least 3")
    rows = list(iter_table(args.max_sum))
    if args.format == "json":
        _emit_json([_dimension_json(r) for r in rows])
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(_TABLE_COLUMNS)
        for res in rows:
            writer.writerow(_table_row(res))
    else:
        cells = [list(_TABLE_COLUMNS)] + [_table_row(r) for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(_TABLE_COLUMNS))]
        for row in cells:
            print("  ".join(val.ljust(w) for val, w in zip(row, widths)).rstrip())
    return 0


def _cmd_augment(args: argparse.Namespace) -> int:
    _require_format(args, "text", "json")
    strat = _read_strategy(args.file)
    result = augment_peg(strat, args.peg, source=args.source)
    if args.format == "json":
        _emit_json(_strategy_to_json(result))
    else:
        sys.stdout.write(format_strategy(result))
    return 0


def _cmd_project(args: argparse.Namespace) -> int:
    _require_format(args, "text", "json")
    strat = _read_strategy(args.file)
    i, j = args.colors
    if not check_projectable(strat, args.peg, i, j):
        if not args.force:
            print(f"error: merging colors {i} and {j} on peg {args.peg} fails "
                  "the projection coverage condition; pass --force to project "
                  "anyway (feasibility is then not guaranteed)", file=sys.stderr)
            return 1
        print(f"note: coverage condition fails for colors {i},{j} on peg "
              f"{args.peg}; projecting anyway", file=sys.stderr)
    result = project(strat, args.peg, i, j)
    if args.format == "json":
        _emit_json(_strategy_to_json(result))
    else:
        sys.stdout.write(format_strategy(result))
    return 0


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------

def _add_abc(p: argparse.ArgumentParser) -> None:
    p.add_argument("-a", type=int, required=True, help="colors on peg 1")
    p.add_argument("-b", type=int, required=True, help="colors on peg 2")
    p.add_argument("-c", type=int, required=True, help="colors on peg 3")


def _add_file(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", default="-",
                   help="strategy file (text or JSON); '-' or omitted = stdin")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tripeg",
                     description="Construct, verify, analyze and search "
                                 "question strategies for three-peg "
                                 "black-peg Mastermind.")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--format", choices=("text", "json", "csv"),
                       default="text", help="output format (default text)")
        return p

    p = add("construct", "build a strategy for (a, b, c)")
    _add_abc(p)
    p.add_argument("--explain", action="store_true",
                   help="annotate each question with its type and block")
    p.set_defaults(func=_cmd_construct)

    p = add("verify", "check a strategy for feasibility")
    _add_file(p)
    p.set_defaults(func=_cmd_verify)

    p = add("analyze", "report profiles, types, blocks, patterns and filters")
    _add_file(p)
    p.set_defaults(func=_cmd_analyze)

    p = add("dimension", "bounds and exact value for (a, b, c)")
    _add_abc(p)
    p.add_argument("--witness", action="store_true",
                   help="attach a constructed strategy of the upper-bound size")
    p.set_defaults(func=_cmd_dimension)

    p = add("search", "exhaustive minimum-size feasible-strategy search")
    _add_abc(p)
    p.add_argument("--max-size", type=int, default=None,
                   help="search no size beyond this cap")
    p.add_argument("--time-budget", type=float, default=60.0,
                   help="wall-clock seconds (<= 0 disables; default 60)")
    p.add_argument("--node-budget", type=int, default=100_000_000,
                   help="search-node limit (<= 0 disables; default 1e8)")
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads (default 1; results are identical "
                        "for any thread count)")
    p.add_argument("--emit-witness", metavar="FILE", default=None,
                   help="write the witness strategy to FILE ('-' = stdout)")
    p.set_defaults(func=_cmd_search)

    p = add("table", "bounds for every triple with a+b+c <= N")
    p.add_argument("--max-sum", type=int, required=True,
                   help="largest a+b+c to include")
    p.set_defaults(func=_cmd_table)

    p = add("augment", "extend one peg's color range by one color")
    _add_file(p)
    p.add_argument("--peg", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--source", type=int, default=-1,
                   help="index of the question to copy (default: last)")
    p.set_defaults(func=_cmd_augment)

    p = add("project", "merge color j into color i on one peg")
    _add_file(p)
    p.add_argument("--peg", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--colors", type=int, nargs=2, required=True,
                   metavar=("I", "J"), help="keep color I, merge color J into it")
    p.add_argument("--force", action="store_true",
                   help="project even when the coverage condition fails")
    p.set_defaults(func=_cmd_project)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 64
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 64
    except StrategyParseError as exc:
        print(f"{parser.prog}: parse error: {exc}", file=sys.stderr)
        return 65
    except OSError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
