"""Command-line front end.

Exit codes: 0 when every check passes, 1 when some check fails, 2 on usage
errors (unknown type, malformed Coxeter word, bad flags).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import checks, level0
from .cambrian import doubled_fan, sortable_elements
from .cluster import explorer, initial_seed, mutate_path
from .roots import CartanData, cartan, check_coxeter_word

WORKERS_ENV = "CLUSTERMINORS_WORKERS"


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _cartan(args) -> CartanData:
    if getattr(args, "config", None):
        try:
            return CartanData.from_json(args.config)
        except (OSError, ValueError, KeyError) as err:
            raise UsageError(f"bad Cartan config {args.config}: {err}") from None
    try:
        return cartan(args.type)
    except KeyError as err:
        raise UsageError(err.args[0]) from None


def _cox(args, cd: CartanData, default_all: bool = False):
    if args.cox is None:
        return None if default_all else tuple(range(cd.n))
    word = tuple(i - 1 for i in _int_list(args.cox))
    try:
        return check_coxeter_word(cd, word)
    except ValueError as err:
        raise UsageError(f"malformed Coxeter word {args.cox!r}: {err}") from None


def _emit(out, lines):
    for line in lines:
        out.write(line + "\n")
    out.flush()


# subcommands


def cmd_fan(args, out) -> int:
    cd = _cartan(args)
    c_word = _cox(args, cd)
    cones = [cone.describe() for cone in doubled_fan(cd, c_word, args.bound)]
    if args.format == "text":
        _emit(out, [f"{c['sign']} {c['sortable_word'] or 'e'}: {c['generators']}" for c in cones])
    else:
        _emit(out, [json.dumps(cones)])
    return 0


def cmd_sortable(args, out) -> int:
    cd = _cartan(args)
    c_word = _cox(args, cd)
    words = [[i + 1 for i in w.reduced_word] for w in sortable_elements(cd, c_word, args.bound)]
    if args.format == "text":
        _emit(out, [f"{len(words)} sortable elements"] + [" ".join(f"s{i}" for i in w) or "e" for w in words])
    else:
        _emit(out, [json.dumps({"count": len(words), "elements": words})])
    return 0


def _seed_json(seed) -> dict:
    return {
        "path": [k + 1 for k in seed.path],
        "variables": [str(v) for v in seed.vars],
        "gvectors": [list(g) for g in seed.gvecs],
        "exchange_matrix": [list(r) for r in seed.ex_matrix],
    }


def cmd_mutate(args, out) -> int:
    cd = _cartan(args)
    c_word = _cox(args, cd)
    path = tuple(k - 1 for k in _int_list(args.path or ""))
    if any(not 0 <= k < cd.n for k in path):
        raise UsageError(f"mutation path {args.path!r} out of range")
    seed = mutate_path(initial_seed(cd, c_word), path)
    data = _seed_json(seed)
    if args.format == "text":
        lines = [f"x{k + 1} = {v}  (g = {g})" for k, (v, g) in enumerate(zip(data["variables"], data["gvectors"]))]
        _emit(out, lines + ["B = " + str(data["exchange_matrix"])])
    else:
        _emit(out, [json.dumps(data)])
    return 0


def cmd_monomial(args, out) -> int:
    cd = _cartan(args)
    c_word = _cox(args, cd)
    if args.gvec is None:
        raise UsageError("monomial needs --gvec")
    lam = _int_list(args.gvec)
    if len(lam) != cd.n:
        raise UsageError(f"g-vector {args.gvec!r} has the wrong length for rank {cd.n}")
    mono = explorer(cd, c_word).find(lam, args.bound)
    if mono is None:
        _emit(out, [json.dumps({"gvec": list(lam), "found": False, "depth": args.bound})])
        return 1
    factors = [{"variable": str(v), "gvec": list(g), "power": e} for (v, e), (g, _) in zip(mono.factorization, mono.factor_gvecs())]
    data = {"gvec": list(lam), "found": True, "expansion": str(mono.value), "factors": factors, "seed_path": [k + 1 for k in mono.seed.path]}
    if args.format == "text":
        _emit(out, [data["expansion"]] + [f"  ({f['variable']})^{f['power']}  g = {f['gvec']}" for f in factors])
    else:
        _emit(out, [json.dumps(data)])
    return 0


def cmd_tables(args, out) -> int:
    n = args.n or 4
    regimes = {kind: level0.d_table(n, level0.s_table(n, level0.e_constraints(kind, n))) for kind in level0.KINDS}
    brute = level0.d_table(n, level0.s_table(n))
    rows = []
    for m in range(n + 1):
        for k in range(m + 1):
            row = {"m": m, "k": k, "brute_force": level0.format_value(brute[(m, k)])}
            row.update({kind: level0.format_value(regimes[kind][(m, k)]) for kind in level0.KINDS})
            rows.append(row)
    if args.format == "json":
        _emit(out, [json.dumps(r) for r in rows])
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        out.write(buf.getvalue())
    return 0


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _jobs(targets, opts, cd):
    jobs = []
    for name in targets:
        job_opts = dict(opts)
        if name in ("intro-example", "minor-formula", "basis", "remark-identity", "binomial", "negative-control"):
            job_opts.pop("type", None)
        if cd is not None and checks.splits_by_word(name) and opts.get("cox") is None:
            for c_word in checks.coxeter_words(cd):
                jobs.append((name, {**job_opts, "cox": c_word}))
        else:
            jobs.append((name, job_opts))
    return jobs


def _run_job(job):
    name, opts = job
    return checks.run_target(name, opts)


def _format_reports(reports, fmt, timings):
    if fmt == "json":
        return [r.to_json(timings) for r in reports]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["check", "status", "instance", "witness"])
        for r in reports:
            writer.writerow([r.check, r.status, json.dumps(r.instance, sort_keys=True), json.dumps(r.witness, sort_keys=True) if r.witness else ""])
        return buf.getvalue().splitlines()
    return [f"{r.status.upper():7} {r.check} {json.dumps(r.instance, sort_keys=True)}" + (f" {json.dumps(r.witness)}" if r.witness else "") for r in reports]


def cmd_verify(args, out) -> int:
    if args.list_checks:
        _emit(out, [json.dumps(entry) for entry in checks.manifest()])
        return 0
    if not args.target:
        raise UsageError("verify needs a target (see --list-checks)")
    targets = list(checks.TARGETS) if args.target == "all" else [args.target]
    if targets[0] not in checks.TARGETS:
        raise UsageError(f"unknown check {args.target!r}; see --list-checks")
    opts = {"max_coeff": args.max_coeff, "bound": args.bound, "n": args.n, "kind": args.kind, "seed": args.seed}
    cd = None
    if args.type is not None or args.config:
        cd = _cartan(args)
        opts["type"] = cd
        opts["cox"] = _cox(args, cd, default_all=True)
    elif args.cox is not None:
        raise UsageError("--cox needs --type")
    if args.gvec is not None:
        opts["gvec"] = _int_list(args.gvec)
    if args.target == "all":
        # each target keeps its own default type
        opts = {k: v for k, v in opts.items() if k not in ("type", "cox")}
        cd = None
    if cd is None and len(targets) == 1 and "type" in checks.TARGETS[targets[0]].defaults:
        cd = checks.resolve_type(checks.TARGETS[targets[0]].defaults["type"])
    jobs = _jobs(targets, opts, cd)
    workers = _worker_count()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_job, jobs))
    else:
        results = []
        for job in jobs:
            results.append(_run_job(job))
            if args.stream:
                _emit(out, _format_reports(results[-1], args.format, args.timings))
    reports = [r for batch in results for r in batch]
    if "basis" in targets and args.format == "json":
        kinds = level0.KINDS if args.kind in (None, "all") else (args.kind,)
        for kind in kinds:
            for n in [args.n] if args.n else range(1, 6):
                computed, shown = level0.coefficient_tables(kind, n)
                table = {"kind": kind, "n": n, "computed": level0.table_json(computed), "displayed": level0.table_json(shown)}
                out.write(json.dumps({"coefficient_table": table}, sort_keys=True) + "\n")
    if not (args.stream and workers == 1):
        _emit(out, _format_reports(reports, args.format, args.timings))
    failed = sum(not r.ok for r in reports)
    print(f"{len(reports) - failed} passed, {failed} failed", file=sys.stderr)
    return 1 if failed else 0


# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clusterminors", description="Exact checks of cluster monomials against generalized minors.")
    parser.add_argument("--list-checks", action="store_true", help="print the verification targets and what they cover")
    sub = parser.add_subparsers(dest="command")

    def common(p, type_default="A2"):
        p.add_argument("--type", default=type_default, help="Cartan type: A1..A4, B2, G2, A1~, A2~")
        p.add_argument("--config", help="JSON file with rank, matrix and symmetrizer for a custom Cartan matrix")
        p.add_argument("--cox", help="Coxeter word as a 1-based permutation, e.g. 1,2,3")
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--out", help="write output to this file instead of standard output")
        p.add_argument("--seed", type=int, default=0, help="random seed for sampled checks")

    p = sub.add_parser("fan", help="maximal cones of the doubled Cambrian fan")
    common(p)
    p.add_argument("--bound", type=int, default=8, help="length bound on sortable elements")
    p = sub.add_parser("sortable", help="c-sortable elements up to a length bound")
    common(p)
    p.add_argument("--bound", type=int, default=8)
    p = sub.add_parser("mutate", help="mutate the initial seed along a path")
    common(p)
    p.add_argument("--path", help="1-based mutation directions, e.g. 1,2,1")
    p = sub.add_parser("monomial", help="cluster monomial with a given g-vector")
    common(p)
    p.add_argument("--gvec", help="g-vector in fundamental weight coordinates, e.g. -1,0")
    p.add_argument("--bound", type=int, default=12, help="mutation depth for the search")
    p = sub.add_parser("verify", help="run a verification target (or 'all')")
    common(p, type_default=None)
    p.add_argument("target", nargs="?")
    p.add_argument("--list-checks", action="store_true")
    p.add_argument("--max-coeff", type=int, help="check all g-vectors with entries in [-k, k]")
    p.add_argument("--bound", type=int)
    p.add_argument("--n", type=int, help="level-zero tensor rank")
    p.add_argument("--kind", choices=level0.KINDS + ("all",))
    p.add_argument("--gvec")
    p.add_argument("--timings", action="store_true", help="include elapsed times (output is then not byte-reproducible)")
    p.add_argument("--stream", action="store_true", help="emit each batch as soon as it finishes")
    p = sub.add_parser("tables", help="d(m,k) under each elementary symmetric regime")
    common(p)
    p.set_defaults(format="csv")
    p.add_argument("--n", type=int, default=4)
    return parser


COMMANDS = {
    "fan": cmd_fan,
    "sortable": cmd_sortable,
    "mutate": cmd_mutate,
    "monomial": cmd_monomial,
    "verify": cmd_verify,
    "tables": cmd_tables,
}


def _glue_negative_values(argv):
    """Let "--gvec -1,0" through argparse, which reads "-1,0" as a flag."""
    out = list(argv)
    for i in range(len(out) - 1):
        if out[i] in ("--gvec", "--cox", "--path") and out[i + 1].startswith("-"):
            out[i : i + 2] = [f"{out[i]}={out[i + 1]}", ""]
    return [a for a in out if a != ""]


def run(argv=None, stdout=None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)
    if args.list_checks and args.command is None:
        _emit(stdout or sys.stdout, [json.dumps(e) for e in checks.manifest()])
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    handle = open(args.out, "w") if args.out else None
    out = handle or stdout or sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    finally:
        if handle:
            handle.close()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
