"""Command-line front end.

Every subcommand computes a JSON-serializable result, wraps it in an
envelope recording the command, its parameters and the format version, and
renders it as json, csv or a plain-text table.  Results are cached on disk
when a cache directory is configured; a cache hit replays the stored
result, so hit or miss can only change timing, never output.

Exit codes: 0 on success, 2 on invalid parameters, 3 when a verification
subcommand finds a genuine failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional

from . import FORMAT_VERSION, __version__
from .cache import ResultCache, cache_key
from .cells import cell_histogram, chow_ranks_decomposition, \
    enumerate_orbit_signatures, orbit_dimension, \
    verify_restriction_bounds_degenerate
from .errors import OutsideValidityError, VerificationError
from .loci import AmbientData, MorphismSetup, betti_degeneracy, \
    betti_orthogonal_special, betti_skew, thresholds_report, \
    verify_growth_sweep
from .partitions import count_box_partitions, verify_doubling_bijection
from .rings import graded_table, grassmannian_presentation, \
    isotropic_dimension, isotropic_presentation, restriction_report
from .worked import run_examples

EXIT_OK = 0
EXIT_BAD_PARAMS = 2
EXIT_VERIFICATION = 3


# ---------------------------------------------------------------------------
# ambient-space argument


def parse_ambient(spec: str) -> AmbientData:
    """Read an ambient-space description.

    Accepted forms: ``point``, ``pn:N`` (projective N-space), ``torus:G``
    (complex torus of dimension G) and ``file:PATH`` (JSON object with
    ``dim`` and a ``betti`` list).
    """
    if spec == "point":
        return AmbientData.point()
    if spec.startswith("pn:"):
        return AmbientData.projective_space(int(spec[3:]))
    if spec.startswith("torus:"):
        return AmbientData.abelian_variety(int(spec[6:]))
    if spec.startswith("file:"):
        with open(spec[5:], encoding="utf-8") as handle:
            data = json.load(handle)
        return AmbientData(int(data["dim"]), tuple(data["betti"]))
    raise ValueError(
        f"cannot read ambient space {spec!r}; "
        "use point, pn:N, torus:G or file:PATH")


# ---------------------------------------------------------------------------
# subcommand implementations: each returns (parameters, compute) where
# compute produces the JSON-ready result.  Renderers work on that JSON, so
# cached and fresh results print identically.


def _cmd_thresholds(args) -> tuple[dict, Callable[[], dict]]:
    params = {"kind": args.kind, "dimx": args.dimx, "e": args.e,
              "f": args.f, "r": args.r, "max_rank": args.max_rank,
              "ambient_jump": args.ambient_jump}

    def compute() -> dict:
        setup = MorphismSetup(args.kind, e=args.e, f=args.f, r=args.r,
                              max_rank=args.max_rank,
                              ambient_jump=args.ambient_jump)
        return thresholds_report(setup, args.dimx).to_json_obj()

    return params, compute


def _cmd_betti(args) -> tuple[dict, Callable[[], dict]]:
    if args.variant == "general":
        params = {"ambient": args.ambient, "e": args.e, "f": args.f,
                  "r": args.r}

        def compute() -> dict:
            return betti_degeneracy(parse_ambient(args.ambient),
                                    args.e, args.f, args.r).to_json_obj()
    elif args.variant == "skew":
        params = {"ambient": args.ambient, "e": args.e, "r": args.r}

        def compute() -> dict:
            return betti_skew(parse_ambient(args.ambient),
                              args.e, args.r).to_json_obj()
    else:
        params = {"ambient": args.ambient, "case": args.case}

        def compute() -> dict:
            return betti_orthogonal_special(parse_ambient(args.ambient),
                                            args.case).to_json_obj()
    return params, compute


def _cmd_ring(args) -> tuple[dict, Callable[[], dict]]:
    if args.variant == "grassmannian":
        params = {"d": args.d, "n": args.n, "max_degree": args.max_degree}

        def compute() -> dict:
            pres = grassmannian_presentation(args.d, args.n)
            return graded_table(pres, args.max_degree).to_json_obj()
    else:
        params = {"d": args.d, "r": args.r, "max_degree": args.max_degree}

        def compute() -> dict:
            pres = isotropic_presentation(args.d, args.r)
            return graded_table(pres, args.max_degree).to_json_obj()
    return params, compute


def _cmd_restriction(args) -> tuple[dict, Callable[[], dict]]:
    n = 2 * args.r if args.n is None else args.n
    params = {"d": args.d, "n": n, "r": args.r, "up_to": args.up_to}

    def compute() -> dict:
        return restriction_report(args.d, n, args.r, args.up_to).to_json_obj()

    return params, compute


def _cmd_cells(args) -> tuple[dict, Callable[[], dict]]:
    params = {"n": args.n, "d": args.d, "r": args.r}
    if args.variant == "enumerate":
        def compute() -> dict:
            sigs = enumerate_orbit_signatures(args.n, args.d, args.r)
            return {
                "n": args.n, "d": args.d, "r": args.r,
                "cells": [
                    {"jumps": list(sig.jumps),
                     "dimension": orbit_dimension(sig, args.n, args.d, args.r)}
                    for sig in sigs
                ],
                "total": len(sigs),
            }
    elif args.variant == "chow":
        params["p_max"] = args.p_max

        def compute() -> dict:
            table = chow_ranks_decomposition(args.n, args.d, args.r,
                                             p_max=args.p_max)
            return table.to_json_obj()
    else:
        params["p_max"] = args.p_max

        def compute() -> dict:
            report = verify_restriction_bounds_degenerate(
                args.n, args.d, args.r, p_max=args.p_max)
            return report.to_json_obj()

    return params, compute


def _cmd_partitions(args) -> tuple[dict, Callable[[], dict]]:
    if args.variant == "count":
        params = {"weight": args.weight, "max_part": args.max_part,
                  "max_length": args.max_length}

        def compute() -> dict:
            count = count_box_partitions(args.weight, args.max_part,
                                         args.max_length)
            return dict(params, count=count)
    else:
        params = {"q_max": args.q_max, "max_part": args.max_part}

        def compute() -> dict:
            return verify_doubling_bijection(args.q_max,
                                             args.max_part).to_json_obj()

    return params, compute


def _cmd_examples(args) -> tuple[dict, Callable[[], list]]:
    params = {"name": args.name}

    def compute() -> list:
        return [rep.to_json_obj() for rep in run_examples(args.name)]

    return params, compute


def _verify_all() -> dict:
    """Fast self-test battery touching every calculator; any failure is a
    regression, not a tuning matter."""
    checks: list[dict] = []

    def record(name: str, passed: bool, detail: Optional[str] = None):
        checks.append({"name": name, "passed": passed, "detail": detail})

    growth = verify_growth_sweep(max_rank=8, t_max=100)
    record("growth-inequalities", growth.passed, growth.failure)

    doubling = verify_doubling_bijection(20, 6)
    record("doubling-bijection", doubling.passed, doubling.failure)

    for rep in run_examples():
        label = "-".join([rep.name] + [str(v) for v in rep.parameters.values()
                                       if not isinstance(v, dict)])
        record(f"example-{label}", rep.match, rep.first_mismatch)

    for r in range(1, 5):
        for d in range(1, r + 1):
            try:
                restriction_report(d, 2 * r, r)
                record(f"restriction-{d}-{r}", True)
            except VerificationError as exc:
                record(f"restriction-{d}-{r}", False, str(exc))

    for n in range(2, 7):
        for r in range(0, (n - 1) // 2 + 1):
            for d in range(1, n - r + 1):
                rep = verify_restriction_bounds_degenerate(n, d, r)
                record(f"cells-{n}-{d}-{r}", rep.passed, rep.first_violation)

    for r in range(1, 4):
        for d in range(1, r + 1):
            dim = isotropic_dimension(d, r)
            table = graded_table(isotropic_presentation(d, r), 2 * dim)
            hist = cell_histogram(2 * r, d, r)
            agree = all(table.rank(2 * q) == hist.get(dim - q, 0)
                        for q in range(dim + 1))
            record(f"ring-vs-cells-{d}-{r}", agree,
                   None if agree else "Hilbert function disagrees with cells")

    return {"checks": checks, "passed": all(c["passed"] for c in checks)}


def _cmd_verify(args) -> tuple[dict, Callable[[], dict]]:
    return {"scope": args.scope}, _verify_all


# ---------------------------------------------------------------------------
# rendering


def _result_ok(result) -> bool:
    if isinstance(result, list):
        return all(_result_ok(item) for item in result)
    if isinstance(result, dict):
        if result.get("passed") is False or result.get("match") is False:
            return False
    return True


def _render_json(envelope: dict) -> str:
    return json.dumps(envelope, indent=2, sort_keys=True) + "\n"


def _csv_lines(header: str, rows) -> str:
    return "\n".join([header] + [",".join(str(x) for x in row)
                                 for row in rows]) + "\n"


def _render_csv(command: str, result) -> str:
    if command == "thresholds":
        rows = [[k, v] for k, v in sorted(result.items())
                if k not in ("setup", "epsilon_table", "notes")]
        rows += [[f"epsilon[{m}]", v] for m, v in result["epsilon_table"]]
        return _csv_lines("quantity,value", rows)
    if command.startswith("betti") or command == "cells chow":
        return _csv_lines("degree,rank", result["betti"])
    if command.startswith("ring"):
        return _csv_lines("degree,rank,torsion", [
            [row["degree"], row["rank"],
             ";".join(str(t) for t in row["torsion"])]
            for row in result["rows"]])
    if command == "restriction":
        return _csv_lines("half_degree,rank_source,rank_target,bijective", [
            [row["half_degree"], row["rank_source"], row["rank_target"],
             row["bijective"]]
            for row in result["rows"]])
    if command == "cells enumerate":
        return _csv_lines("jumps,dimension", [
            [" ".join(str(j) for j in cell["jumps"]), cell["dimension"]]
            for cell in result["cells"]])
    if command == "cells verify":
        return _csv_lines("dimension,rank_restricted,rank_ambient",
                          result["rows"])
    if command == "partitions count":
        keys = ["weight", "max_part", "max_length", "count"]
        return _csv_lines(",".join(keys), [[result[k] for k in keys]])
    if command == "partitions bijection":
        return _csv_lines("quantity,value", sorted(result.items()))
    if command == "examples run":
        return _csv_lines("name,parameters,match,first_mismatch", [
            [rep["name"],
             " ".join(f"{k}={v}" for k, v in rep["parameters"].items()),
             rep["match"], rep["first_mismatch"] or ""]
            for rep in result])
    if command == "verify all":
        return _csv_lines("check,passed,detail", [
            [c["name"], c["passed"], c["detail"] or ""]
            for c in result["checks"]])
    raise ValueError(f"no csv form for {command!r}")


def _pretty_betti(result: dict) -> list[str]:
    lines = []
    for key, value in sorted(result["setup"].items()):
        lines.append(f"{key}: {value}")
    bound = result["valid_below"]
    lines.append("complete table" if bound is None
                 else f"valid for degrees strictly below {bound}")
    for p, rank in result["betti"]:
        lines.append(f"  degree {p:3d}  rank {rank}")
    for note in result["assumptions"]:
        lines.append(f"assuming: {note}")
    return lines


def _render_pretty(command: str, result) -> str:
    lines: list[str] = []
    if command.startswith("betti") or command == "cells chow":
        lines = _pretty_betti(result)
    elif command == "thresholds":
        for key in ("dim_x", "expected_dimension", "expected_codimension",
                    "max_lefschetz", "connectivity_offset",
                    "connected_if_dim_above"):
            lines.append(f"{key}: {result[key]}")
        if result["epsilon_table"]:
            eps = ", ".join(f"{m}:{v}" for m, v in result["epsilon_table"])
            lines.append(f"allowance by degree: {eps}")
        for note in result["notes"]:
            lines.append(f"note: {note}")
    elif command.startswith("ring"):
        lines.append(f"{result['label']} "
                     + " ".join(f"{k}={v}" for k, v in
                                sorted(result["params"].items())))
        for row in result["rows"]:
            if row["degree"] % 2:
                continue
            tor = ("" if not row["torsion"]
                   else "  torsion " + "x".join(f"Z/{t}" for t in row["torsion"]))
            lines.append(f"  degree {row['degree']:3d}  rank {row['rank']}{tor}")
    elif command == "restriction":
        lines.append(f"restriction in half-degrees 0..{len(result['rows']) - 1} "
                     f"(bijective guaranteed through half-degree "
                     f"{result['bijective_bound']})")
        for row in result["rows"]:
            status = "bijective" if row["bijective"] else "surjective only"
            lines.append(f"  half-degree {row['half_degree']:3d}  "
                         f"{row['rank_source']} -> {row['rank_target']}  "
                         f"[{status}]")
    elif command == "cells enumerate":
        lines.append(f"{result['total']} cells")
        for cell in result["cells"]:
            jumps = ",".join(str(j) for j in cell["jumps"])
            lines.append(f"  jumps ({jumps})  dimension {cell['dimension']}")
    elif command == "cells verify":
        lines.append("passed" if result["passed"]
                     else f"FAILED: {result['first_violation']}")
        for p, lg, g in result["rows"]:
            lines.append(f"  dimension {p:3d}  rank {lg} <= {g}")
    elif command == "partitions count":
        lines.append(str(result["count"]))
    elif command == "partitions bijection":
        lines.append("passed" if result["passed"]
                     else f"FAILED: {result['failure']}")
        lines.append(f"checked {result['pairs_checked']} pairs "
                     f"across {result['weights_checked']} weights")
    elif command == "examples run":
        for rep in result:
            tag = "ok" if rep["match"] else f"FAILED: {rep['first_mismatch']}"
            args_str = " ".join(f"{k}={v}" for k, v in rep["parameters"].items())
            lines.append(f"{rep['name']} {args_str}: {tag}")
    elif command == "verify all":
        for check in result["checks"]:
            tag = "ok" if check["passed"] else f"FAILED: {check['detail']}"
            lines.append(f"{check['name']}: {tag}")
        lines.append("all checks passed" if result["passed"]
                     else "verification FAILED")
    else:
        lines.append(json.dumps(result, indent=2, sort_keys=True))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenloci",
        description="Exact Betti tables, cohomology rings and cell counts "
                    "for rank-drop loci of vector-bundle morphisms.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv", "pretty"),
                       default="pretty", help="output format")
        p.add_argument("--cache-dir", metavar="DIR", default=None,
                       help="directory for cached results "
                            "(default: $DEGENLOCI_CACHE_DIR, else no cache)")

    p = sub.add_parser("thresholds",
                       help="expected dimension, Lefschetz degree and "
                            "connectedness bound of one setup")
    p.add_argument("--kind", required=True,
                   choices=("general", "skew", "orthogonal"))
    p.add_argument("--dimx", required=True, type=int,
                   help="dimension of the ambient space")
    p.add_argument("--e", type=int, help="rank of the source bundle")
    p.add_argument("--f", type=int, help="rank of the target bundle")
    p.add_argument("--r", type=int, default=0, help="rank bound of the locus")
    p.add_argument("--max-rank", type=int,
                   help="rank bound holding everywhere on the ambient space")
    p.add_argument("--ambient-jump", type=int,
                   help="intersection jump holding everywhere (orthogonal)")
    output_flags(p)
    p.set_defaults(run=_cmd_thresholds, label=lambda a: "thresholds")

    p = sub.add_parser("betti", help="Betti table of a rank-drop locus")
    bsub = p.add_subparsers(dest="variant", required=True)
    for variant in ("general", "skew", "orthogonal"):
        q = bsub.add_parser(variant)
        q.add_argument("--ambient", required=True,
                       help="point, pn:N, torus:G or file:PATH")
        if variant == "general":
            q.add_argument("--e", required=True, type=int)
            q.add_argument("--f", required=True, type=int)
            q.add_argument("--r", required=True, type=int)
        elif variant == "skew":
            q.add_argument("--e", required=True, type=int)
            q.add_argument("--r", required=True, type=int)
        else:
            q.add_argument("--case", required=True, choices=("even", "odd"))
        output_flags(q)
        q.set_defaults(run=_cmd_betti, label=lambda a: f"betti {a.variant}")

    p = sub.add_parser("ring", help="graded ranks of a cohomology ring")
    rsub = p.add_subparsers(dest="variant", required=True)
    q = rsub.add_parser("grassmannian")
    q.add_argument("--d", required=True, type=int)
    q.add_argument("--n", required=True, type=int)
    q.add_argument("--max-degree", required=True, type=int)
    output_flags(q)
    q.set_defaults(run=_cmd_ring, label=lambda a: "ring grassmannian")
    q = rsub.add_parser("isotropic")
    q.add_argument("--d", required=True, type=int)
    q.add_argument("--r", required=True, type=int)
    q.add_argument("--max-degree", required=True, type=int)
    output_flags(q)
    q.set_defaults(run=_cmd_ring, label=lambda a: "ring isotropic")

    p = sub.add_parser("restriction",
                       help="rank comparison along restriction from the "
                            "ordinary to the isotropic Grassmannian")
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--r", required=True, type=int)
    p.add_argument("--n", type=int, help="defaults to 2r")
    p.add_argument("--up-to", type=int, metavar="P",
                   help="largest half-degree to compare")
    output_flags(p)
    p.set_defaults(run=_cmd_restriction, label=lambda a: "restriction")

    p = sub.add_parser("cells",
                       help="cell decomposition of an isotropic "
                            "Grassmannian in a degenerate form")
    csub = p.add_subparsers(dest="variant", required=True)
    for variant in ("enumerate", "chow", "verify"):
        q = csub.add_parser(variant)
        q.add_argument("--n", required=True, type=int)
        q.add_argument("--d", required=True, type=int)
        q.add_argument("--r", required=True, type=int)
        if variant != "enumerate":
            q.add_argument("--p-max", type=int)
        output_flags(q)
        q.set_defaults(run=_cmd_cells, label=lambda a: f"cells {a.variant}")

    p = sub.add_parser("partitions", help="partition counting utilities")
    psub = p.add_subparsers(dest="variant", required=True)
    q = psub.add_parser("count")
    q.add_argument("--weight", required=True, type=int)
    q.add_argument("--max-part", required=True, type=int)
    q.add_argument("--max-length", type=int)
    output_flags(q)
    q.set_defaults(run=_cmd_partitions, label=lambda a: "partitions count")
    q = psub.add_parser("bijection")
    q.add_argument("--q-max", required=True, type=int)
    q.add_argument("--max-part", required=True, type=int)
    output_flags(q)
    q.set_defaults(run=_cmd_partitions, label=lambda a: "partitions bijection")

    p = sub.add_parser("examples", help="run the bundled worked examples")
    esub = p.add_subparsers(dest="variant", required=True)
    q = esub.add_parser("run")
    q.add_argument("name", nargs="?", default=None,
                   help="one example family; all of them when omitted")
    output_flags(q)
    q.set_defaults(run=_cmd_examples, label=lambda a: "examples run")

    p = sub.add_parser("verify", help="run the self-test battery")
    p.add_argument("scope", choices=("all",))
    output_flags(p)
    p.set_defaults(run=_cmd_verify, label=lambda a: "verify all")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    command = args.label(args)
    try:
        params, compute = args.run(args)
    except ValueError as exc:
        print(f"degenloci: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS

    cache = ResultCache.from_environment(args.cache_dir)
    key = cache_key(command, params, FORMAT_VERSION)
    envelope = cache.load(key)
    if envelope is None:
        try:
            result = compute()
        except (ValueError, OutsideValidityError) as exc:
            print(f"degenloci: {exc}", file=sys.stderr)
            return EXIT_BAD_PARAMS
        except VerificationError as exc:
            print(f"degenloci: verification failed: {exc}", file=sys.stderr)
            return EXIT_VERIFICATION
        envelope = {"format_version": FORMAT_VERSION, "command": command,
                    "parameters": params, "result": result}
        cache.store(key, envelope)
    result = envelope["result"]

    if args.format == "json":
        sys.stdout.write(_render_json(envelope))
    elif args.format == "csv":
        try:
            sys.stdout.write(_render_csv(command, result))
        except ValueError as exc:
            print(f"degenloci: {exc}", file=sys.stderr)
            return EXIT_BAD_PARAMS
    else:
        sys.stdout.write(_render_pretty(command, result))

    return EXIT_OK if _result_ok(result) else EXIT_VERIFICATION


if __name__ == "__main__":
    sys.exit(main())
