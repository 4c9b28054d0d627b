"""Command line interface.

Subcommands: gen (alias generate), metrics, check-cover, search, curves,
sts, verify.  Exit codes: 0 success / all pass, 1 verification failure,
2 usage error, 3 budget exceeded.  Environment: HYPERCOVER_THREADS,
HYPERCOVER_OUTDIR (flags take precedence).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import constructions as cons
from . import cover, formulas, oracle, rgraph, steiner, verifier

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    """Accept p/q or a terminating decimal string, converted exactly."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational: {text!r} ({exc})") from None


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("HYPERCOVER_THREADS")
    return int(env) if env else 1


def _outdir(args) -> Path:
    if getattr(args, "out", None):
        return Path(args.out)
    env = os.environ.get("HYPERCOVER_OUTDIR")
    return Path(env) if env else Path.cwd()


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------


def _build_construction(args):
    name = args.construction
    if name == "k4m-lower":
        return cons.k4minus_lower(args.n, args.d, args.seed), f"k4m-lower-n{args.n}-d{args.d}"
    if name == "k4-link":
        return cons.k4_lower_linkgraph(args.n, args.seed), f"k4-link-n{args.n}"
    if name == "lift":
        if not args.input:
            raise UsageError("lift requires --input FILE")
        G = rgraph.load(args.input)
        return cons.lift_link(G), f"lift-n{G.n + 1}"
    if name == "c5-lower":
        return cons.c5_lower(args.n), f"c5-lower-n{args.n}"
    if name == "k5-lower":
        return cons.k5_lower(args.n), f"k5-lower-n{args.n}"
    if name == "sts-blowup":
        if args.input:
            base = steiner.load_sts(args.input).triples
            tag = f"sts-blowup-ext-n{args.n}"
        else:
            if args.order is None:
                raise UsageError("sts-blowup requires --order T or --input FILE")
            base = steiner.sts(args.order).triples
            tag = f"sts-blowup-{args.order}-n{args.n}"
        return cons.blowup_sts(base, args.n), tag
    if name == "tau-lower":
        rho = parse_rational(args.rho)
        return (
            cons.tau_lower_interval(args.n, rho, args.r, args.seed),
            f"tau-lower-n{args.n}-r{args.r}",
        )
    if name == "tau-upper":
        rho = parse_rational(args.rho)
        phi = None
        if args.phi:
            phi = tuple(int(x) - 1 for x in args.phi.split(","))
        return (
            cons.tau_upper_interval(args.n, rho, args.r, phi, args.seed),
            f"tau-upper-n{args.n}-r{args.r}",
        )
    if name == "efg":
        factors = [int(x) for x in args.factors.split(",")]
        return cons.efg_graph(factors, args.t), f"efg-{args.factors.replace(',', '_')}-t{args.t}"
    raise UsageError(f"unknown construction {name!r}")


def cmd_gen(args) -> int:
    (graph, manifest), stem = _build_construction(args)
    outdir = _outdir(args)
    outdir.mkdir(parents=True, exist_ok=True)
    gpath = outdir / f"{stem}.hg"
    mpath = outdir / f"{stem}.manifest.json"
    rgraph.save(graph, gpath)
    mpath.write_text(_dump(manifest.to_json()) + "\n")
    print(
        f"{manifest.construction}: n={graph.n} r={graph.r} m={len(graph.edges)} "
        f"-> {gpath} (+ manifest)"
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# metrics / check-cover
# ---------------------------------------------------------------------------


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def cmd_metrics(args) -> int:
    G = rgraph.load(args.file)
    report: dict = {"file": str(args.file), "r": G.r, "n": G.n, "m": len(G.edges)}
    if args.delta is not None:
        md = rgraph.min_i_degree(G, args.delta)
        report[f"delta{args.delta}"] = md.value
        report[f"delta{args.delta}_witness"] = list(md.witness)
    if args.density:
        report["density"] = _frac_str(rgraph.edge_density(G))
    if args.tmax:
        value, arg = cover.t_max(G)
        report["t_max"] = value
        report["t_max_vertex"] = arg
    if args.book:
        value, edge = cover.book_number(G)
        report["book_number"] = value
        report["book_edge"] = list(edge) if edge else None
    if args.alpha:
        value, witness = cover.independence_number(G)
        report["alpha"] = value
        report["alpha_witness"] = list(witness)
    if args.cover:
        F = cover.parse_motif(args.cover)
        rep = cover.uncovered_vertices(G, F)
        report["cover_motif"] = F.name
        report["uncovered"] = list(rep.uncovered)
    print(_dump(report))
    return EXIT_OK


def cmd_check_cover(args) -> int:
    G = rgraph.load(args.file)
    F = cover.parse_motif(args.motif)
    rep = cover.uncovered_vertices(G, F)
    print(
        _dump(
            {
                "file": str(args.file),
                "motif": F.name,
                "uncovered": list(rep.uncovered),
                "witnesses": {str(v): list(w) for v, w in rep.witness_per_vertex.items()},
            }
        )
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


def cmd_search(args) -> int:
    workers = _threads(args)
    try:
        if args.objective == "max-delta1":
            if not args.motif:
                raise UsageError("max-delta1 requires --motif")
            res = oracle.max_delta1_no_cover(
                args.n, cover.parse_motif(args.motif), workers=workers, budget=args.budget
            )
        elif args.objective == "min-tmax":
            res = oracle.min_tmax(args.n, args.m, workers=workers, budget=args.budget)
        elif args.objective == "min-book":
            res = oracle.min_book(args.n, args.m, workers=workers, budget=args.budget)
        else:
            raise UsageError(f"unknown objective {args.objective!r}")
    except oracle.BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(_dump(res.to_json()))
    if args.witness_out:
        rgraph.save(res.witness, args.witness_out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# curves
# ---------------------------------------------------------------------------


def cmd_curves(args) -> int:
    start = parse_rational(args.start)
    stop = parse_rational(args.stop)
    csv_text = formulas.render_curves_csv(start, stop, args.steps)
    meta = formulas.curves_metadata(start, stop, args.steps)
    out = getattr(args, "out", None)
    if out:
        path = Path(out)
        path.write_text(csv_text)
        meta_path = path.with_suffix(path.suffix + ".meta.json")
        meta_path.write_text(_dump(meta) + "\n")
        print(f"wrote {args.steps + 1} rows to {path} (+ {meta_path.name})")
    else:
        sys.stdout.write(csv_text)
        sys.stderr.write(_dump(meta) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# sts
# ---------------------------------------------------------------------------


def cmd_sts(args) -> int:
    if args.verify:
        H = rgraph.load(args.verify)
        ok, pair = steiner.verify_sts(H)
        print(_dump({"file": str(args.verify), "valid": ok, "violating_pair": pair}))
        return EXIT_OK if ok else EXIT_VERIFY_FAIL
    if args.load:
        system = steiner.load_sts(args.load)
        print(
            _dump(
                {
                    "order": system.order,
                    "provenance": system.provenance,
                    "alpha": system.alpha,
                    "meets_min_alpha": system.meets_min_alpha,
                }
            )
        )
        return EXIT_OK
    if args.order is None:
        raise UsageError("sts requires --order, --verify, or --load")
    system = steiner.sts(args.order)
    report: dict = {
        "order": system.order,
        "provenance": system.provenance,
        "triples": len(system.triples.edges),
    }
    if args.alpha:
        system = steiner.measure_alpha(system)
        report["alpha"] = system.alpha
        report["meets_min_alpha"] = system.meets_min_alpha
    if args.out:
        rgraph.save(system.triples, args.out)
        report["file"] = str(args.out)
    print(_dump(report))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    seed = verifier.DEFAULT_SEED
    if args.fresh_seed:
        import time

        seed = int(time.time_ns() % (1 << 30))
    outcomes = verifier.run_suite(
        args.suite, budget=args.budget, seed=seed, workers=_threads(args)
    )
    sys.stdout.write(verifier.report_table(outcomes))
    if args.json:
        Path(args.json).write_text(verifier.report_json(outcomes))
    return EXIT_VERIFY_FAIL if any(o.status == "FAIL" for o in outcomes) else EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypercover", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", aliases=["generate"], help="generate a construction")
    g.add_argument(
        "construction",
        choices=[
            "k4m-lower", "k4-link", "lift", "c5-lower", "k5-lower",
            "sts-blowup", "tau-lower", "tau-upper", "efg",
        ],
    )
    g.add_argument("--n", type=int)
    g.add_argument("--d", type=int)
    g.add_argument("--r", type=int, default=2)
    g.add_argument("--t", type=int, default=1)
    g.add_argument("--order", type=int)
    g.add_argument("--rho", type=str)
    g.add_argument("--phi", type=str, help="1-based permutation, e.g. 2,3,1")
    g.add_argument("--factors", type=str)
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("--input", type=str)
    g.add_argument("--out", type=str)
    g.set_defaults(fn=cmd_gen)

    m = sub.add_parser("metrics", help="measure a hypergraph file")
    m.add_argument("file")
    m.add_argument("--delta", type=int, metavar="I")
    m.add_argument("--density", action="store_true")
    m.add_argument("--tmax", action="store_true")
    m.add_argument("--book", action="store_true")
    m.add_argument("--alpha", action="store_true")
    m.add_argument("--cover", type=str, metavar="MOTIF")
    m.set_defaults(fn=cmd_metrics)

    c = sub.add_parser("check-cover", help="full covering report")
    c.add_argument("file")
    c.add_argument("--motif", required=True)
    c.set_defaults(fn=cmd_check_cover)

    s = sub.add_parser("search", help="exhaustive extremal search")
    s.add_argument("objective", choices=["max-delta1", "min-tmax", "min-book"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int)
    s.add_argument("--motif", type=str)
    s.add_argument("--budget", type=float, default=None, help="seconds")
    s.add_argument("--threads", type=int, default=None)
    s.add_argument("--witness-out", type=str)
    s.set_defaults(fn=cmd_search)

    cv = sub.add_parser("curves", help="emit reference curve CSV")
    cv.add_argument("--from", dest="start", required=True)
    cv.add_argument("--to", dest="stop", required=True)
    cv.add_argument("--steps", type=int, required=True)
    cv.add_argument("--out", type=str)
    cv.set_defaults(fn=cmd_curves)

    st = sub.add_parser("sts", help="Steiner triple systems")
    st.add_argument("--order", type=int)
    st.add_argument("--alpha", action="store_true")
    st.add_argument("--out", type=str)
    st.add_argument("--verify", type=str, metavar="FILE")
    st.add_argument("--load", type=str, metavar="FILE")
    st.set_defaults(fn=cmd_sts)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all")
    v.add_argument("--budget", type=float, default=600.0)
    v.add_argument("--json", type=str)
    v.add_argument("--threads", type=int, default=None)
    v.add_argument("--fresh-seed", action="store_true")
    v.set_defaults(fn=cmd_verify)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except (UsageError, rgraph.HypergraphError, formulas.FormulaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except oracle.OracleLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
