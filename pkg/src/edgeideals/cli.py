"""Command line front end: `edgeideals betti|verify|ideal ...`.

Exit codes: 0 success, 1 a (non-probe) claim failed, 2 bad input,
3 a construction was requested outside its hypotheses.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field

from . import graphs as G
from . import theorems as T
from .groebner import buchberger, colon_ideal
from .ideals import (
    IDEAL_KINDS,
    HypothesisError,
    build_ideal,
    check_colon_hypotheses,
    colon_generators_combinatorial,
    colon_generators_phi,
    edge_polynomial,
    eta_ideal,
    phi_ideal,
)
from .resolution import betti_table_koszul, betti_table_schreyer
from .ring import RingError, is_prime, make_ring

CHAR_ENV = "EDGEIDEALS_CHAR"
EXIT_OK, EXIT_CLAIM_FAILED, EXIT_INPUT, EXIT_HYPOTHESIS = 0, 1, 2, 3


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    graph: G.Graph = None
    kind: str = "parity"
    characteristic: int = T.DEFAULT_CHARACTERISTIC
    order: str = "degrevlex"
    fmt: str = "text"
    j_max: int = None
    claims: list = field(default_factory=list)
    n_max: int = 5
    jobs: int = 1


def default_characteristic() -> int:
    raw = os.environ.get(CHAR_ENV)
    if raw is None:
        return T.DEFAULT_CHARACTERISTIC
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{CHAR_ENV}={raw!r} is not an integer") from None


def _characteristic(value: int) -> int:
    if value != 0 and not is_prime(value):
        raise InputError(f"characteristic must be 0 or a prime, got {value}")
    return value


def read_graph(args) -> G.Graph:
    sources = [s for s in (args.family, args.graph6, args.edges) if s is not None]
    if len(sources) != 1:
        raise InputError("give exactly one of --family, --graph6, --edges")
    try:
        if args.family is not None:
            return G.named_graph(args.family)
        if args.graph6 is not None:
            return G.from_graph6(args.graph6)
        text = sys.stdin.read() if args.edges == "-" else open(args.edges).read()
        return G.parse_edge_list(text)
    except (G.GraphError, OSError) as exc:
        raise InputError(str(exc)) from exc


def _add_graph_args(p):
    src = p.add_argument_group("graph input (exactly one)")
    src.add_argument("--family", help="named family: path:n, cycle:n, complete:n, complete_bipartite:a,b, "
                                      "claw, diamond, paw, empty:n; join with '+' for disjoint unions")
    src.add_argument("--graph6", help="graph6 string")
    src.add_argument("--edges", help="edge-list file (first line n, then 'i j' per edge); '-' for stdin")
    p.add_argument("--ideal", "--kind", dest="kind", default="parity", choices=IDEAL_KINDS)
    p.add_argument("--char", dest="characteristic", type=int, default=None,
                   help=f"0 or a prime (default ${CHAR_ENV} or {T.DEFAULT_CHARACTERISTIC})")
    p.add_argument("--order", default="degrevlex", choices=("degrevlex", "lex"))
    p.add_argument("--format", dest="fmt", default="text", choices=("text", "json"))


def _config(args) -> RunConfig:
    char = args.characteristic if args.characteristic is not None else default_characteristic()
    return RunConfig(
        graph=read_graph(args),
        kind=args.kind,
        characteristic=_characteristic(char),
        order=args.order,
        fmt=args.fmt,
    )


def _ring(cfg: RunConfig):
    return make_ring(cfg.graph.n, cfg.characteristic, cfg.order)


# ----------------------------------------------------------------------


def cmd_betti(args, out) -> int:
    cfg = _config(args)
    ideal = build_ideal(cfg.kind, cfg.graph, _ring(cfg))
    if args.oracle == "koszul":
        j_max = args.j_max
        if j_max is None:
            # cover everything the Schreyer table can see
            j_max = max(2, 2 * betti_table_schreyer(ideal).projective_dimension())
        table = betti_table_koszul(ideal, j_max)
    else:
        table = betti_table_schreyer(ideal)
    if cfg.fmt == "text":
        label = "complete" if table.complete else f"partial, internal degrees <= {table.j_max}"
        print(f"{cfg.kind} ideal of {cfg.graph} over char {cfg.characteristic} ({args.oracle}, {label})", file=out)
        print(table.diagram(), file=out)
    print(table.to_json(), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    names = [c.strip() for c in args.claims.split(",") if c.strip()] if args.claims else list(T.CLAIMS)
    if names == ["all"]:
        names = list(T.CLAIMS)
    unknown = [c for c in names if c not in T.CLAIMS]
    if unknown:
        print(f"unknown claim(s): {', '.join(unknown)}", file=sys.stderr)
        print(f"valid claims: {', '.join(T.CLAIMS)}", file=sys.stderr)
        return EXIT_INPUT
    if not 1 <= args.n_max <= T.N_MAX_CEILING:
        raise InputError(f"--n-max must lie in 1..{T.N_MAX_CEILING}")
    char = args.characteristic if args.characteristic is not None else default_characteristic()
    config = T.CheckConfig(characteristic=_characteristic(char))

    def progress(r):
        if r.verdict == "fail":
            tag = "probe counterexample" if r.probe else "FAIL"
            print(f"{tag}: {r.claim_id} on {G.to_graph6(r.graph)} {json.dumps(r.witness)}", file=sys.stderr)

    result = T.sweep(args.n_max, names, config, jobs=args.jobs, progress=progress)
    if args.sample:
        rng = random.Random(args.seed)
        result.reports = rng.sample(result.reports, min(args.sample, len(result.reports)))
    if args.output:
        with open(args.output, "w") as fh:
            result.write_jsonl(fh)
    if args.fmt == "json":
        result.write_jsonl(out)
    else:
        for cid, s in result.summary["claims"].items():
            flag = " (probe)" if s["probe"] else ""
            warn = "  [no graph met the hypotheses]" if s["vacuous"] else ""
            print(f"{cid}{flag}: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped{warn}", file=out)
            for g6 in s["failures"]:
                print(f"    failing graph6: {g6}", file=out)
        print(json.dumps({"summary": result.summary["total"]}), file=out)
    return EXIT_CLAIM_FAILED if result.failed else EXIT_OK


def _parse_edge(text: str):
    try:
        u, v = (int(t) for t in text.replace("-", ",").split(","))
    except ValueError:
        raise InputError(f"edge must look like 'u,v', got {text!r}") from None
    return (min(u, v), max(u, v))


def _positive_lead(f):
    if f and f.ring.signed(f.leading_coefficient()) < 0:
        return -f
    return f


def cmd_ideal(args, out) -> int:
    cfg = _config(args)
    ring = _ring(cfg)
    g = cfg.graph
    if args.colon_edge:
        e = _parse_edge(args.colon_edge)
        if args.colon_method == "combinatorial":
            ideal = colon_generators_combinatorial(g, e, ring)
        elif args.colon_method == "phi":
            ideal = colon_generators_phi(g, e, ring)
        else:
            check_colon_hypotheses(g, e)
            rest = build_ideal("parity", G.delete_edge(g, e), ring)
            ideal = colon_ideal(rest, edge_polynomial("gbar", e[0], e[1], ring))
    else:
        ideal = build_ideal(cfg.kind, g, ring)
        if args.phi:
            parts = G.bipartition(g)
            if parts is None:
                raise HypothesisError("Phi needs a bipartite graph")
            ideal = phi_ideal(ideal, parts)
        if args.eta:
            ideal = eta_ideal(ideal)
    polys = buchberger(ideal).basis if args.show == "gb" else [_positive_lead(f) for f in ideal.gens]
    lines = [str(f) for f in polys]
    if cfg.fmt == "json":
        print(json.dumps({"ring_vars": list(ring.var_names), "characteristic": ring.characteristic,
                          "show": args.show, "polynomials": lines}), file=out)
    else:
        for line in lines:
            print(line, file=out)
    return EXIT_OK


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgeideals",
                                     description="Betti tables and claim checks for graph binomial edge ideals")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("betti", help="Betti table of S/I for one graph")
    _add_graph_args(b)
    b.add_argument("--oracle", default="schreyer", choices=("schreyer", "koszul"))
    b.add_argument("--j-max", type=int, default=None, help="degree bound for the Koszul oracle")
    b.set_defaults(func=cmd_betti)

    v = sub.add_parser("verify", help="sweep claims over all small graphs")
    v.add_argument("--claims", default=None, help="comma separated claim ids (default: all)")
    v.add_argument("--n-max", type=int, default=5)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--char", dest="characteristic", type=int, default=None)
    v.add_argument("--format", dest="fmt", default="text", choices=("text", "json"))
    v.add_argument("--output", help="write the JSON-lines report here")
    v.add_argument("--sample", type=int, default=0, help="keep a random subset of this many reports")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("ideal", help="print generators, Groebner bases, colon ideals, Phi/eta images")
    _add_graph_args(i)
    i.add_argument("--show", default="gens", choices=("gens", "gb"))
    i.add_argument("--colon-edge", help="u,v: print (I_{G-e} : gbar_e)")
    i.add_argument("--colon-method", default="combinatorial", choices=("combinatorial", "groebner", "phi"))
    i.add_argument("--phi", action="store_true", help="apply Phi (needs a bipartite graph)")
    i.add_argument("--eta", action="store_true", help="apply eta (not in characteristic 2)")
    i.set_defaults(func=cmd_ideal)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except HypothesisError as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except RingError as exc:
        # eta in characteristic 2, ring/graph size mismatches
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
