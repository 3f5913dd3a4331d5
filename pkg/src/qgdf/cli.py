"""Command line entry point ``qgdf``.

Every number in JSON output is a decimal string so that big integers
survive any JSON reader.  Exit codes: 0 success, 1 failed verification,
2 usage error, 3 invalid input, 4 search budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import cells, counting, oracle, poincare, quiver, typea
from .linalg import FieldMismatchError
from .qpoly import eval_int


EXIT_VERIFY, EXIT_USAGE, EXIT_INPUT, EXIT_BUDGET = 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ints(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _s(x):
    return str(x)


def _emit(obj, out):
    out.write(json.dumps(obj, sort_keys=False) + "\n")


# ------------------------------------------------------------------ inputs

def _add_config_args(p, rep=False):
    g = p.add_argument_group("input (exactly one)")
    g.add_argument("--type-a", type=int, metavar="N", help="complete degenerate flag: a = b = (1,...,1) on A_N")
    g.add_argument("--flag", type=_ints, metavar="D1,...,DS", help="partial flag steps (needs --ambient)")
    g.add_argument("--ambient", type=int, help="ambient dimension n+1 for --flag")
    g.add_argument("--a", type=_ints, help="multiplicities of P_1..P_n (with --b)")
    g.add_argument("--b", type=_ints, help="multiplicities of I_1..I_n (with --a)")
    if rep:
        g.add_argument("--rep", help="representation JSON file (with --e)")
        g.add_argument("--e", type=_ints, help="dimension vector for --rep")


def _config(args):
    given = [args.type_a is not None, args.flag is not None,
             args.a is not None or args.b is not None,
             getattr(args, "rep", None) is not None]
    if sum(given) != 1:
        raise UsageError("give exactly one of --type-a, --flag/--ambient, --a/--b" +
                         (", --rep/--e" if hasattr(args, "rep") else ""))
    if args.type_a is not None:
        if args.type_a < 1:
            raise ValueError("--type-a needs N >= 1")
        return typea.PIConfig.complete_flag(args.type_a)
    if args.flag is not None:
        if args.ambient is None:
            raise UsageError("--flag needs --ambient")
        return typea.flag_to_pi(typea.FlagSpec(args.ambient, args.flag))
    if args.a is not None or args.b is not None:
        if args.a is None or args.b is None:
            raise UsageError("--a and --b go together")
        return typea.PIConfig(args.a, args.b)
    return None


def _rep_input(args):
    """(config or None, representation, dimension vector)."""
    cfg = _config(args)
    if cfg is not None:
        return cfg, typea.build_pi(cfg), cfg.dim_p()
    if args.e is None:
        raise UsageError("--rep needs --e")
    return None, quiver.load_rep(args.rep), args.e


# ---------------------------------------------------------------- commands

def cmd_poincare(args, out):
    cfg = _config(args)
    poly = poincare.poincare_x(cfg, args.exponent_convention)
    if args.format == "text":
        out.write(str(poly) + "\n")
        return 0
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["degree", "cells"])
        for k, c in enumerate(poly.coeffs):
            w.writerow([k, c])
        return 0
    _emit({"a": [_s(x) for x in cfg.a], "b": [_s(x) for x in cfg.b],
           "coeffs": [_s(c) for c in poly.coeffs], "dim": _s(poly.degree),
           "euler": _s(eval_int(poly, 1))}, out)
    return 0


def _n_range(text):
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def cmd_genocchi(args, out):
    methods = counting.METHODS if args.method == "all" else (args.method,)
    ns = _n_range(args.n)
    if min(ns) < 1:
        raise ValueError("n must be positive")
    rows = []
    for n in ns:
        values = {m: counting.genocchi(n, m) for m in methods}
        rows.append((n, values, len(set(values.values())) == 1))
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", *methods, "agree"])
        for n, values, agree in rows:
            w.writerow([n, *(values[m] for m in methods), str(agree).lower()])
        return 0
    for n, values, agree in rows:
        if args.format == "text":
            out.write(f"h_{n} = " + ", ".join(f"{m}: {v}" for m, v in values.items()) + "\n")
        else:
            _emit({"n": _s(n), "values": {m: _s(v) for m, v in values.items()}, "agree": agree}, out)
    return 0


def _degrees(args, cfg, m):
    if args.degrees == "gt":
        if cfg is None:
            raise ValueError("--degrees gt only applies to type A inputs")
        return typea.type_a_gt_degrees(cfg)
    if args.degrees == "reversed":
        if cfg is None:
            raise ValueError("--degrees reversed only applies to type A inputs")
        return typea.type_a_gt_degrees(cfg, reverse=True)
    if args.degrees == "generic":
        return cells.generic_degrees(m)
    if args.degrees is None:
        if cfg is not None:
            return typea.type_a_gt_degrees(cfg, reverse=True)
        return cells.generic_degrees(m)
    with open(args.degrees) as fh:
        deg = {str(k): int(v) for k, v in json.load(fh).items()}
    cells.check_degrees(m, deg, hom_rule=False)
    return deg


def cmd_cells(args, out):
    cfg, m, e = _rep_input(args)
    deg = _degrees(args, cfg, m)
    summands = cells.thin_summands(m)
    infos = cells.classify_all(m, deg, e)
    counts = {}
    for ci in infos:
        counts[ci.cell_dim] = counts.get(ci.cell_dim, 0) + 1
    poly = [counts.get(k, 0) for k in range(max(counts) + 1)] if counts else []
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["fixed_point", "cell_dim", "stratum", "tangent_dim", "singular"])
        for ci in infos:
            w.writerow([json.dumps(ci.fixed_point.to_json(summands), sort_keys=True), ci.cell_dim,
                        ",".join(map(str, ci.stratum)), ci.tangent_dim, str(ci.singular).lower()])
        return 0
    if args.list:
        for ci in infos:
            _emit({"fixedPoint": ci.fixed_point.to_json(summands), "cellDim": _s(ci.cell_dim),
                   "stratum": [_s(x) for x in ci.stratum], "tangentDim": _s(ci.tangent_dim),
                   "singular": ci.singular}, out)
    _emit({"cellPoly": [_s(x) for x in poly], "count": _s(len(infos)),
           "degrees": {k: _s(v) for k, v in deg.items()}}, out)
    return 0


def cmd_orbits(args, out):
    cfg = _config(args)
    if args.list:
        labels = counting.orbit_enumerate(cfg)
        for lab in labels:
            _emit(lab.to_json(), out)
        count = len(labels)
    else:
        count = counting.orbit_count(cfg)
    _emit({"count": _s(count)}, out)
    return 0


def cmd_oracle(args, out):
    cfg, m, e = _rep_input(args)
    result = {}
    if args.per_stratum:
        strata = oracle.stratum_counts(m, e, args.q, args.budget)
        result["count"] = _s(sum(strata.values()))
        result["strata"] = {",".join(map(str, f)) if f is not None else "all": _s(c)
                            for f, c in strata.items()}
    else:
        result["count"] = _s(oracle.count_subreps_fq(m, e, args.q, args.budget, args.threads))
    _emit(result, out)
    return 0


def cmd_emit_rep(args, out):
    cfg = _config(args)
    m = typea.build_pi(cfg)
    data = quiver.rep_to_json(m)
    data["e"] = list(cfg.dim_p())
    _emit(data, out)
    return 0


def cmd_tangent(args, out):
    m = quiver.load_rep(args.rep)
    with open(args.sub) as fh:
        raw = json.load(fh)
    cols = {int(v): [[quiver.linalg.scalar(x, m.p) for x in c] for c in vecs]
            for v, vecs in raw["basis"].items()}
    u = quiver.SubrepBasis({v: cols.get(v, []) for v in range(1, m.quiver.n + 1)})
    tdim = quiver.tangent_dim(m, u)
    gdim = quiver.generic_grass_dim(m.quiver, u.dim_vector(m.quiver.n), m.dims)
    _emit({"tangentDim": _s(tdim), "genericDim": _s(gdim), "singular": tdim > gdim}, out)
    return 0


def verify_chain(cfg, q=2, budget=oracle.DEFAULT_BUDGET, threads=1):
    """Formula vs cells vs fixed points vs orbits vs F_q point count."""
    m = typea.build_pi(cfg)
    e = cfg.dim_p()
    px = poincare.poincare_x(cfg)
    deg = typea.type_a_gt_degrees(cfg, reverse=True)
    cp = cells.cell_polynomial(m, deg, e)
    nfix = len(cells.enumerate_fixed_points(m, e))
    checks = {
        "cells_equal_formula": cp == px,
        "fixed_points_equal_euler": nfix == eval_int(px, 1),
        "orbits_equal_euler": counting.orbit_count(cfg) == eval_int(px, 1),
        "degree_equals_dimension": px.degree == poincare.expected_dimension(cfg),
        "oracle_equals_formula": oracle.count_subreps_fq(m, e, q, budget, threads) == eval_int(px, q),
    }
    if cfg.a == cfg.b and set(cfg.a) == {1}:
        checks["complete_flag_formula"] = poincare.poincare_complete_flag(cfg.n) == px
    return px, checks


def cmd_verify(args, out):
    cfg = _config(args)
    px, checks = verify_chain(cfg, args.q, args.budget, args.threads)
    ok = all(checks.values())
    _emit({"coeffs": [_s(c) for c in px.coeffs], "checks": checks, "ok": ok}, out)
    return 0 if ok else EXIT_VERIFY


def build_parser():
    parser = _Parser(prog="qgdf", description="Invariants of quiver Grassmannians Gr_{dim P}(P + I).")
    parser.add_argument("--threads", type=int, default=oracle.default_threads(),
                        help="worker processes for the point-count oracle")
    parser.add_argument("--format", choices=("json", "text", "csv"), default="json")
    # the same options are accepted after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("json", "text", "csv"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("poincare", parents=[common], help="closed-form Poincare polynomial")
    _add_config_args(p)
    p.add_argument("--exponent-convention", choices=("euler", "printed"), default="euler")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("genocchi", parents=[common], help="normalized median Genocchi numbers")
    p.add_argument("--n", required=True, help="index N or range LO..HI")
    p.add_argument("--method", choices=counting.METHODS + ("all",), default="all")
    p.set_defaults(func=cmd_genocchi)

    p = sub.add_parser("cells", parents=[common], help="torus fixed points and cell dimensions")
    _add_config_args(p, rep=True)
    p.add_argument("--degrees", help="gt | reversed | generic | path to a JSON {label: degree}")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("orbits", parents=[common], help="G-orbit labels (Q_P, N_I)")
    _add_config_args(p)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("oracle", parents=[common], help="brute-force counts over F_q")
    osub = p.add_subparsers(dest="oracle_command", parser_class=_Parser)
    pc = osub.add_parser("count", parents=[common])
    _add_config_args(pc, rep=True)
    pc.add_argument("--q", type=int, default=2)
    pc.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    pc.add_argument("--per-stratum", action="store_true")
    pc.set_defaults(func=cmd_oracle)

    p = sub.add_parser("emit-rep", parents=[common], help="print the P + I representation as JSON")
    _add_config_args(p)
    p.set_defaults(func=cmd_emit_rep)

    p = sub.add_parser("verify", parents=[common], help="cross-check every method on one type A input")
    _add_config_args(p)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tangent", parents=[common], help="tangent space dimension at a subrepresentation")
    p.add_argument("--rep", required=True)
    p.add_argument("--sub", required=True, help='JSON {"basis": {vertex: [[entries...], ...]}}')
    p.set_defaults(func=cmd_tangent)
    return parser


def _fail(code, kind, message):
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return code


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("missing command")
        if args.threads < 1:
            raise UsageError("--threads must be positive")
        if getattr(args, "budget", 1) < 1:
            raise UsageError("--budget must be positive")
        return args.func(args, out)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "usage", str(exc))
    except oracle.BudgetExceededError as exc:
        return _fail(EXIT_BUDGET, "budget", str(exc))
    except (quiver.DimensionError, quiver.StabilityError, cells.UnsupportedInputError,
            oracle.ConfigurationError, FieldMismatchError, ValueError, KeyError,
            OSError, ZeroDivisionError) as exc:
        return _fail(EXIT_INPUT, type(exc).__name__, str(exc))


if __name__ == "__main__":
    sys.exit(main())
