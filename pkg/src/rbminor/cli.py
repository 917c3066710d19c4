"""Command-line front end.

Every subcommand prints exactly one JSON document to stdout:
{"status": "ok"|"certificate"|"error", "payload": {...}, "elapsed_ms": n}.
The payload is deterministic for fixed inputs and seeds; elapsed_ms is
the only field allowed to vary between runs.  Short human summaries go
to stderr.  Exit codes: 0 success, 2 bad input, 3 instance too large,
4 budget or pool exhausted, 5 unexpected internal failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import mpmath

from . import constructions, extract, io, models, oracles, rb, topological
from .errors import (
    BudgetExhausted,
    FormulaUndefined,
    HostTooSmall,
    InstanceTooLarge,
    NotAModel,
    NotInLift,
    ParseError,
    PoolExhausted,
)
from .graphs import Bipartition, Graph, is_bipartite

_USAGE_ERRORS = (ParseError, NotAModel, NotInLift, HostTooSmall, FormulaUndefined, ValueError, KeyError, OSError)


def _read(path: str) -> str:
    return Path(path).read_text()


def _model_payload(host: Graph, model: models.MinorModel) -> dict:
    return {
        "host": io.graph_json(host),
        "parts": [list(p) for p in model.parts],
        "roots": list(model.roots),
    }


def _aux_payload(aux: models.AuxiliaryGraph) -> dict:
    return {
        "colored": io.colored_json(aux.colored),
        "paths": [
            {"pair": [i, j], "path": list(path)}
            for (i, j), path in sorted(aux.path_table.items())
        ],
    }


def _pipeline_payload(report: extract.PipelineReport) -> dict:
    return {
        "m_achieved": report.m_achieved,
        "parts": [list(p) for p in report.parts],
        "roots": list(report.roots),
        "lift_edges": [list(e) for e in report.lift_edges],
        "partition": io.side_json(report.partition_witness.side),
        "reserve_size": report.reserve_size,
        "budget": {k: v for k, v in report.budget_used},
        "from_witness": report.from_witness,
    }


def _tk_payload(model: topological.TopologicalModel) -> dict:
    return {
        "branch": list(model.branch),
        "paths": [
            {"pair": [a, b], "path": list(path)}
            for (a, b), path in sorted(model.paths.items())
        ],
        "side": io.side_json(model.side),
        "host_order": model.host_order,
        "escape": model.escape,
        "used": len(model.used_vertices()),
    }


def _cmd_certify(args) -> tuple[str, dict]:
    cg = io.expect_colored(io.parse_graph(_read(args.file)))
    result = rb.rb_certify(cg)
    if isinstance(result, rb.RBBipartition):
        print(f"certify: RB-bipartite on {cg.graph.vertex_count} vertices", file=sys.stderr)
        return "ok", {"kind": "partition", "side": io.side_json(result.side)}
    print(f"certify: R-odd circuit of length {len(result.walk) - 1}", file=sys.stderr)
    return "certificate", {
        "kind": "r_odd",
        "walk": list(result.walk),
        "red_count": result.red_count,
    }


def _cmd_extract_half(args) -> tuple[str, dict]:
    cg = io.expect_colored(io.parse_graph(_read(args.file)))
    order = tuple(range(cg.graph.vertex_count))
    sub, partition = rb.rb_extract_half(cg, order)
    stats = rb.extraction_stats(cg, sub, partition)
    print(
        f"extract-half: kept {stats['kept_edges']} of {stats['total_edges']} edges",
        file=sys.stderr,
    )
    return "ok", {
        "subgraph": io.colored_json(sub),
        "side": io.side_json(partition.side),
        "stats": stats,
    }


def _cmd_aux(args) -> tuple[str, dict]:
    model = io.parse_model(_read(args.file))
    host_min, model_min = models.minimize_model(model.host, model)
    aux = models.build_auxiliary(model_min)
    print(f"aux: {aux.order} parts", file=sys.stderr)
    return "ok", {
        "minimized": _model_payload(host_min, model_min),
        "auxiliary": _aux_payload(aux),
    }


def _parse_edge_subset(text: str, order: int) -> list[tuple[int, int]]:
    if text == "all":
        return [(i, j) for i in range(order) for j in range(i + 1, order)]
    if text == "none":
        return []
    pairs = []
    for chunk in text.split(","):
        a, _, b = chunk.partition("-")
        try:
            pairs.append((int(a), int(b)))
        except ValueError as exc:
            raise ParseError(f"bad edge selector {chunk!r}") from exc
    return pairs


def _cmd_lift(args) -> tuple[str, dict]:
    model = io.parse_model(_read(args.file))
    host_min, model_min = models.minimize_model(model.host, model)
    aux = models.build_auxiliary(model_min)
    sub = _parse_edge_subset(args.edges, aux.order)
    lifted = models.lift_subgraph(model_min, aux, sub)
    verdict = is_bipartite(lifted)
    payload = {
        "minimized_host": io.graph_json(host_min),
        "graph": io.graph_json(lifted),
        "aux_edges": [list(e) for e in sub],
    }
    if isinstance(verdict, Bipartition):
        payload["bipartite"] = True
        payload["witness"] = io.bipartition_json(verdict)
        print("lift: bipartite", file=sys.stderr)
        return "ok", payload
    payload["bipartite"] = False
    payload["witness"] = io.odd_cycle_json(verdict)
    print(f"lift: odd cycle of length {len(verdict)}", file=sys.stderr)
    return "certificate", payload


def _cmd_pipeline(args) -> tuple[str, dict]:
    text = _read(args.file)
    try:
        model = io.parse_model(text)
    except ParseError:
        # plain graph: treat every vertex as its own part (complete hosts)
        g = io.expect_plain(io.parse_graph(text))
        model = models.MinorModel.create(g, [(v,) for v in range(g.vertex_count)])
    host = model.host
    report = extract.bipartite_minor_pipeline(host, model, args.epsilon)
    checks = extract.validate_pipeline_report(host, report)
    payload = _pipeline_payload(report)
    payload["checks"] = checks
    print(
        f"pipeline: bipartite K_{report.m_achieved} minor"
        f" (reserve {report.reserve_size}, budget {payload['budget']})",
        file=sys.stderr,
    )
    return "ok", payload


def _cmd_tk_build(args) -> tuple[str, dict]:
    cg = io.expect_colored(io.parse_graph(_read(args.file)))
    model = topological.rb_topological_clique(cg, args.t)
    _, used = topological.validate_topological_model(
        cg, model, args.t, topological.budget_cap(args.t)
    )
    payload = _tk_payload(model)
    payload["budget_cap"] = topological.budget_cap(args.t)
    print(f"tk-build: TK_{args.t} using {used} vertices", file=sys.stderr)
    return "ok", payload


def _cmd_tk_bound(args) -> tuple[str, dict]:
    bound = constructions.bipartite_tk_min_order(args.t)
    print(f"tk-bound: min order {bound.min_order}", file=sys.stderr)
    return "ok", {
        "t": bound.t,
        "per_side": list(bound.per_side),
        "min_order": bound.min_order,
        "argmin_side": bound.argmin_side,
    }


def _cmd_gh(args) -> tuple[str, dict]:
    h = io.expect_plain(io.parse_graph(_read(args.file)))
    host, parts = constructions.build_gh(h)
    payload = {
        "input": io.graph_json(h),
        "host": io.graph_json(host),
        "parts": [list(p) for p in parts],
        "subdivisions": host.vertex_count - h.vertex_count,
    }
    try:
        payload["hadwiger"] = oracles.hadwiger_oracle(host)
    except InstanceTooLarge:
        payload["hadwiger"] = None
    print(
        f"gh: host on {host.vertex_count} vertices"
        f" ({payload['subdivisions']} subdivisions)",
        file=sys.stderr,
    )
    return "ok", payload


def _cmd_oracle(args) -> tuple[str, dict]:
    g = io.expect_plain(io.parse_graph(_read(args.file)))
    if args.kind == "hadwiger":
        value = oracles.hadwiger_oracle(g)
        payload = {"kind": args.kind, "value": value}
    elif args.kind == "tcl":
        value = oracles.tcl_oracle(g)
        payload = {"kind": args.kind, "value": value}
    else:
        value, side = oracles.max_bipartite_hadwiger(g)
        payload = {
            "kind": args.kind,
            "value": value,
            "side": io.side_json(side.side),
        }
    print(f"oracle {args.kind}: {value}", file=sys.stderr)
    return "ok", payload


def _cmd_bound(args) -> tuple[str, dict]:
    ev = constructions.bce_probability_bound(args.n)
    hp = constructions.bce_probability_bound_hp(args.n)
    rel = abs(float(hp) - ev.log_failure_bound) / abs(float(hp))
    print(
        f"bound: log failure {ev.log_failure_bound:.6g}"
        f" ({'certifies' if ev.certifies else 'does not certify'})",
        file=sys.stderr,
    )
    return "ok", {
        "n": ev.n,
        "s": ev.s,
        "log2_radicand": ev.log2_radicand,
        "log_failure_bound": ev.log_failure_bound,
        "log_failure_bound_hp": mpmath.nstr(hp, 24),
        "relative_error": rel,
        "certifies": ev.certifies,
    }


def _cmd_experiment(args) -> tuple[str, dict]:
    result = constructions.theorem_lb_experiment(args.n, args.trials, args.seed)
    rows = [
        {
            "trial": t.trial,
            "seed": t.seed,
            "edges": t.edge_count,
            "hadwiger": t.hadwiger,
            "best_bipartite": t.best_bipartite,
        }
        for t in result.trials
    ]
    if args.jsonl:
        # the side file carries wall clock; the payload stays byte-stable
        with open(args.jsonl, "w") as fh:
            for t in result.trials:
                fh.write(
                    io.dumps(
                        {
                            "seed": t.seed,
                            "h": t.hadwiger,
                            "bipartite_h": t.best_bipartite,
                            "runtime_ms": t.runtime_ms,
                        }
                    )
                    + "\n"
                )
    print(
        f"experiment: n={args.n}, {args.trials} trials,"
        f" min gap {result.min_gap}",
        file=sys.stderr,
    )
    return "ok", {
        "n": result.n,
        "trials": rows,
        "min_gap": result.min_gap,
        "max_bipartite": result.max_bipartite,
    }


def _cmd_verify(args) -> tuple[str, dict]:
    doc = json.loads(_read(args.json))
    if args.kind == "pipeline":
        g = io.expect_plain(io.parse_graph(_read(args.graph)))
        report = extract.PipelineReport(
            m_achieved=doc["m_achieved"],
            parts=tuple(tuple(p) for p in doc["parts"]),
            roots=tuple(doc["roots"]),
            lift_edges=tuple((e[0], e[1]) for e in doc["lift_edges"]),
            partition_witness=Bipartition(io.side_from_json(doc["partition"])),
            reserve_size=doc["reserve_size"],
            budget_used=tuple(sorted(doc["budget"].items())),
            from_witness=doc["from_witness"],
        )
        checks = extract.validate_pipeline_report(g, report)
        print(f"verify pipeline: {'ok' if checks['all'] else 'FAILED'}", file=sys.stderr)
        return ("ok" if checks["all"] else "error"), {"checks": checks}
    cg = io.expect_colored(io.parse_graph(_read(args.graph)))
    model = topological.TopologicalModel(
        branch=tuple(doc["branch"]),
        paths={
            (row["pair"][0], row["pair"][1]): tuple(row["path"])
            for row in doc["paths"]
        },
        side=io.side_from_json(doc["side"]),
        host_order=doc["host_order"],
        escape=doc["escape"],
    )
    t = len(model.branch)
    topological.validate_topological_model(cg, model, t, doc.get("budget_cap"))
    print("verify tk: ok", file=sys.stderr)
    return "ok", {"checks": {"all": True}, "t": t}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rbminor",
        description="Red/Blue bipartite graph toolkit",
    )
    parser.add_argument(
        "--format",
        choices=["json"],
        default="json",
        help="output format (only json for now)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="RB-bipartition or R-odd circuit")
    p.add_argument("file")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("extract-half", help="RB-bipartite subgraph with half the edges")
    p.add_argument("file")
    p.set_defaults(func=_cmd_extract_half)

    p = sub.add_parser("aux", help="auxiliary graph of a minimized model")
    p.add_argument("file")
    p.set_defaults(func=_cmd_aux)

    p = sub.add_parser("lift", help="host subgraph for an auxiliary edge subset")
    p.add_argument("file")
    p.add_argument("edges", help="'all', 'none', or pairs like 0-1,1-2")
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("pipeline", help="bipartite clique minor from a model")
    p.add_argument("file")
    p.add_argument("--epsilon", type=float, default=0.25)
    p.set_defaults(func=_cmd_pipeline)

    p = sub.add_parser("tk-build", help="RB-bipartite topological clique")
    p.add_argument("file")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_tk_build)

    p = sub.add_parser("tk-bound", help="minimum order for a bipartite TK_t")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_tk_bound)

    p = sub.add_parser("gh", help="complete a graph by subdividing non-edges")
    p.add_argument("file")
    p.set_defaults(func=_cmd_gh)

    p = sub.add_parser("oracle", help="exact small-instance parameters")
    p.add_argument("kind", choices=["hadwiger", "tcl", "bip-hadwiger"])
    p.add_argument("file")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("bound", help="counting bound evaluation")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("experiment", help="gap experiment on subdivision hosts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--jsonl", help="also write one JSON line per trial")
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("verify", help="re-check a serialized result")
    p.add_argument("kind", choices=["pipeline", "tk"])
    p.add_argument("json", help="path to a payload document")
    p.add_argument("--graph", required=True, help="host graph file")
    p.set_defaults(func=_cmd_verify)

    return parser


def _emit(status: str, payload: dict, started: float) -> None:
    elapsed = int((time.monotonic() - started) * 1000)
    doc = {"status": status, "payload": payload, "elapsed_ms": elapsed}
    print(io.dumps(doc))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        status, payload = args.func(args)
    except _USAGE_ERRORS as exc:
        _emit("error", {"code": type(exc).__name__, "message": str(exc)}, started)
        return 2
    except InstanceTooLarge as exc:
        _emit("error", {"code": "InstanceTooLarge", "message": str(exc)}, started)
        return 3
    except (BudgetExhausted, PoolExhausted) as exc:
        _emit("error", {"code": type(exc).__name__, "message": str(exc)}, started)
        return 4
    except Exception as exc:  # pragma: no cover - internal invariants
        _emit("error", {"code": "Internal", "message": f"{type(exc).__name__}: {exc}"}, started)
        return 5
    _emit(status, payload, started)
    return 0 if status in ("ok", "certificate") else 2


if __name__ == "__main__":
    sys.exit(main())
