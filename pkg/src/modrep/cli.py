"""Command-line front end: list, dim, build, verify, residues."""

from __future__ import annotations

import argparse
import json
import sys

from .combinatorics import SHIFTED, STRAIGHT, Partition, classify, parse_partition, partitions_enum
from .export import dumps, rep_document, residue_diagram, write_atomic
from .field import is_prime
from .sergeev import build_V, dim_M
from .symrep import build_D, dim_D, radical_dim
from .verify import (
    check_jm,
    check_relations,
    cross_check_suite,
    find_proper_graded_submodule,
    super_commutant_dim,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2  # argparse's own code
EXIT_BAD_PRIME = 3
EXIT_BAD_SHAPE = 4
EXIT_NO_OUTPUT = 5

DEFAULT_SEED = 20240611


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modrep",
        description="Modular representations of symmetric groups and Sergeev superalgebras (n <= p).",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(sp, shape_required=True):
        sp.add_argument("--p", type=int, required=True, help="odd prime")
        sp.add_argument("--algebra", choices=("sym", "sergeev"), default="sym")
        if shape_required:
            sp.add_argument("--shape", required=True, help="comma-separated parts, e.g. 4,1")

    sp = sub.add_parser("list", help="classify all partitions of n")
    common(sp, shape_required=False)
    sp.add_argument("--n", type=int, help="size of the partitions (default: p)")
    sp.add_argument("--json", action="store_true", help="emit JSON instead of a table")

    sp = sub.add_parser("dim", help="closed-form dimension of one module")
    common(sp)

    sp = sub.add_parser("build", help="construct a module and export its matrices")
    common(sp)
    sp.add_argument("--out", help="output JSON path")

    sp = sub.add_parser("verify", help="run the verification checks on one module")
    common(sp)
    sp.add_argument("--out", help="write the JSON report here (default: stdout)")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--cap", type=int, default=128, help="largest dim for the commutant solve")
    sp.add_argument("--suite", action="store_true", help="also run the classification cross-checks")
    sp.add_argument("--suite-n-max", type=int, default=12)

    sp = sub.add_parser("residues", help="print the residue-labelled diagram")
    common(sp)
    return parser


def _prime(p: int) -> int:
    if p < 3 or not is_prime(p):
        raise CliError(f"invalid p: {p} is not an odd prime", EXIT_BAD_PRIME)
    return p


def _shape(text: str) -> Partition:
    try:
        lam = parse_partition(text)
    except ValueError as exc:
        raise CliError(f"illegal shape {text!r}: {exc}", EXIT_BAD_SHAPE) from None
    if not lam:
        raise CliError("illegal shape: empty partition", EXIT_BAD_SHAPE)
    return lam


def _build(algebra: str, lam: Partition, p: int):
    try:
        return build_D(lam, p) if algebra == "sym" else build_V(lam, p)
    except ValueError as exc:
        raise CliError(f"illegal shape {list(lam)} for p = {p}: {exc}", EXIT_BAD_SHAPE) from None


def _dim(algebra: str, lam: Partition, p: int):
    try:
        return dim_D(lam, p) if algebra == "sym" else dim_M(lam, p)
    except ValueError as exc:
        raise CliError(f"illegal shape {list(lam)} for p = {p}: {exc}", EXIT_BAD_SHAPE) from None


def cmd_list(args, out) -> int:
    p = _prime(args.p)
    n = p if args.n is None else args.n
    if n < 1:
        raise CliError(f"illegal size n = {n}", EXIT_BAD_SHAPE)
    rows = []
    strict_only = args.algebra == "sergeev"
    for lam in partitions_enum(n, "strict" if strict_only else "all"):
        info = classify(lam, p)
        row = {"shape": list(lam), **info.to_json()}
        if args.algebra == "sym":
            row["dim"] = dim_D(lam, p) if info.in_CP_p and n <= p else None
            row["radical_dim"] = radical_dim(lam, p) if info.in_CP_p and n == p else None
        else:
            if info.in_CPs_p and n <= p:
                row["dim"], row["type"] = dim_M(lam, p)
            else:
                row["dim"], row["type"] = None, None
        rows.append(row)
    if args.json:
        out.write(json.dumps({"p": p, "n": n, "algebra": args.algebra, "rows": rows}, indent=1) + "\n")
        return EXIT_OK
    if args.algebra == "sym":
        out.write(f"{'shape':<20} {'p-reg':>5} {'chi':>4} {'CP_p':>5} {'dim':>6} {'rad':>5}\n")
        for r in rows:
            out.write(f"{_fmt_shape(r['shape']):<20} {_yn(r['p_regular']):>5} {r['chi']:>4} "
                      f"{_yn(r['in_CP_p']):>5} {_opt(r['dim']):>6} {_opt(r['radical_dim']):>5}\n")
    else:
        out.write(f"{'shape':<20} {'p-str':>5} {'p-res':>5} {'CPs_p':>5} {'b':>3} {'dim':>6} {'type':>4}\n")
        for r in rows:
            out.write(f"{_fmt_shape(r['shape']):<20} {_yn(r['p_strict']):>5} {_yn(r['p_restricted']):>5} "
                      f"{_yn(r['in_CPs_p']):>5} {r['b']:>3} {_opt(r['dim']):>6} {_opt(r['type']):>4}\n")
    return EXIT_OK


def _fmt_shape(parts) -> str:
    return "(" + ",".join(map(str, parts)) + ")"


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _opt(value) -> str:
    return "-" if value is None else str(value)


def cmd_dim(args, out) -> int:
    p = _prime(args.p)
    lam = _shape(args.shape)
    value = _dim(args.algebra, lam, p)
    out.write(f"{value if args.algebra == 'sym' else value[0]}\n")
    return EXIT_OK


def cmd_build(args, out) -> int:
    p = _prime(args.p)
    lam = _shape(args.shape)
    if not args.out:
        raise CliError("missing output path: pass --out FILE", EXIT_NO_OUTPUT)
    rep = _build(args.algebra, lam, p)
    write_atomic(args.out, dumps(rep_document(rep)))
    out.write(f"wrote {args.algebra} module {_fmt_shape(lam)} (dim {rep.dim}) to {args.out}\n")
    return EXIT_OK


def run_checks(rep, algebra: str, seed: int, trials: int, cap: int) -> dict:
    """Run every check on one module; returns the report document."""
    checks = {}
    rel = check_relations(rep)
    checks["relations"] = {"pass": rel.ok, **rel.to_json()}
    jm = check_jm(rep)
    checks["jucys_murphy"] = {"pass": jm.ok, **jm.to_json()}
    if rep.dim <= cap:
        comm = super_commutant_dim(rep, cap=cap, seed=seed)
        expected = (1, 0) if algebra == "sym" or rep.module_type == "M" else (1, 1)
        checks["commutant"] = {"pass": comm.as_tuple() == expected,
                               "even_dim": comm.even_dim, "odd_dim": comm.odd_dim,
                               "expected": list(expected)}
    else:
        checks["commutant"] = {"pass": True, "skipped": f"dim {rep.dim} > cap {cap}"}
    witness = find_proper_graded_submodule(rep, trials, seed)
    checks["submodule_search"] = {"pass": witness is None, "trials": trials, "seed": seed,
                                  "witness_dim": None if witness is None else witness.shape[0]}
    return checks


def cmd_verify(args, out) -> int:
    p = _prime(args.p)
    lam = _shape(args.shape)
    if args.trials < 1:
        raise CliError("--trials must be at least 1", EXIT_USAGE)
    rep = _build(args.algebra, lam, p)
    checks = run_checks(rep, args.algebra, args.seed, args.trials, args.cap)
    report = {"p": p, "algebra": args.algebra, "shape": list(lam), "dim": rep.dim, "checks": checks}
    if args.suite:
        suite = cross_check_suite([p], args.suite_n_max)
        report["suite"] = suite.to_json()
        checks["suite"] = {"pass": suite.ok}
    ok = all(c["pass"] for c in checks.values())
    report["ok"] = ok
    text = json.dumps(report, indent=1) + "\n"
    if args.out:
        write_atomic(args.out, text)
    else:
        out.write(text)
    for name, c in checks.items():
        sys.stderr.write(f"{name}: {'pass' if c['pass'] else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_residues(args, out) -> int:
    p = _prime(args.p)
    lam = _shape(args.shape)
    kind = STRAIGHT if args.algebra == "sym" else SHIFTED
    if kind == SHIFTED and not lam.is_strict():
        raise CliError(f"illegal shape {list(lam)}: shifted diagrams need a strict partition",
                       EXIT_BAD_SHAPE)
    out.write(residue_diagram(lam, p, kind) + "\n")
    return EXIT_OK


COMMANDS = {"list": cmd_list, "dim": cmd_dim, "build": cmd_build,
            "verify": cmd_verify, "residues": cmd_residues}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = _build_parser().parse_args(argv)
    try:
        return COMMANDS[args.verb](args, out)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
