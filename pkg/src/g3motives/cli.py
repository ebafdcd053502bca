"""Command-line interface.

Commands
--------
* ``compute a3 --lambda A,B,C``: solve one abelian-threefold local system
  and write ``out/a3/A_B_C.json``.
* ``compute m3 --n N [--mu P]``: run the pointed genus-3 pipeline through
  N points; write per-component tables.
* ``boundary --g G --n N [--engine gk|direct|both]``: boundary classes;
  ``both`` asserts the two engines agree.
* ``verify counts --q Q --genus G``: run the census for (G, Q) and check
  its weighted traces against the closed forms or pinned values.
* ``verify data``: run every table validation.
* ``report --n N``: render the full table of components for N points.

Exit codes: 0 success, 2 validation failure, 3 solve failure, 4 missing
data.  Failures print a machine-readable JSON error object.  All output
files embed the tool version, input-data hashes, solve diagnostics, and
the banner marking results conditional on Conjecture 3.2 (completeness
of the motive generator monoid).
"""

import argparse
import json
import os
import sys

from . import __version__ as VERSION
from . import counts, interp, lowgenus, strata
from .errors import (G3Error, MissingData, MonoidViolation,
                     NonIntegralSolution, ResidualNonzero, SingularSystem,
                     ValidationError)
from .motives import (PRIME_POWERS, MotiveExpr, expand_lift, expr_to_str,
                      frob_table, load_motives, trace)
from .partitions import partitions

BANNER = ("Conditional on Conjecture 3.2: the motive generator monoid is "
          "assumed complete in the relevant weight range.")

EXIT_VALIDATION = 2
EXIT_SOLVE = 3
EXIT_MISSING = 4


def _data_dir():
    return os.path.join(os.path.dirname(__file__), "data")


def _atomic_write_json(path, obj):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True, default=str)
        fh.write("\n")
    os.replace(tmp, path)


def _envelope(payload):
    return {"version": VERSION, "banner": BANNER,
            "data_hashes": strata._data_hashes(), **payload}


def _parse_partition(s):
    if not s:
        return ()
    return tuple(sorted((int(x) for x in s.split(",")), reverse=True))


def _diag_json(diag):
    out = dict(diag)
    out["coefficients"] = {
        "%d,%d" % kj: c for kj, c in diag["coefficients"].items()}
    return out


# ---------------------------------------------------------------------------
# commands


def cmd_compute_a3(args):
    lam = _parse_partition(args.lam)
    data = interp.DataBundle.from_dir(args.data or _data_dir())
    expr, diag = interp.pipeline_a3(lam, data)
    s = expr_to_str(expr)
    print(s)
    out = os.path.join(args.out, "a3",
                       "_".join(str(x) for x in lam) + ".json")
    _atomic_write_json(out, _envelope({
        "lambda": list(lam), "expression": s,
        "diagnostics": _diag_json(diag)}))
    return 0


def cmd_compute_m3(args):
    data = interp.DataBundle.from_dir(args.data or _data_dir())
    closed, opens = interp.pipeline_m3(args.n, data)
    want = _parse_partition(args.mu) if args.mu else None
    tables = {}
    for m in sorted(closed):
        tables[str(m)] = {
            "closed": {",".join(map(str, mu)): expr_to_str(e)
                       for mu, e in sorted(closed[m].items())},
            "open": {",".join(map(str, mu)): expr_to_str(e)
                     for mu, e in sorted(opens[m].items())},
        }
    if want is not None:
        print("closed:", expr_to_str(closed[args.n][want]))
        print("open:  ", expr_to_str(opens[args.n][want]))
    else:
        for mu in sorted(closed[args.n]):
            print(",".join(map(str, mu)) or "()", "->",
                  expr_to_str(closed[args.n][mu]))
    out = os.path.join(args.out, "m3", "n%d.json" % args.n)
    _atomic_write_json(out, _envelope({"n": args.n, "tables": tables}))
    return 0


def cmd_boundary(args):
    engines = ("gk", "direct") if args.engine == "both" else (args.engine,)
    results = {}
    for eng in engines:
        results[eng] = strata.boundary_cached(args.g, args.n, engine=eng)
    if len(results) == 2:
        keys = set(results["gk"]) | set(results["direct"])
        for mu in keys:
            a = results["gk"].get(mu, MotiveExpr.zero())
            b = results["direct"].get(mu, MotiveExpr.zero())
            if {k: v for k, v in a.terms.items() if v} != \
                    {k: v for k, v in b.terms.items() if v}:
                raise ValidationError(
                    "engine mismatch at (%d,%d) mu=%r" % (args.g, args.n, mu))
        print("engines agree on (%d,%d)" % (args.g, args.n))
    table = results[engines[0]]
    for mu in sorted(table):
        print(",".join(map(str, mu)) or "()", "->", expr_to_str(table[mu]))
    out = os.path.join(args.out, "boundary", "g%d_n%d.json" % (args.g, args.n))
    _atomic_write_json(out, _envelope({
        "g": args.g, "n": args.n, "engine": args.engine,
        "classes": {",".join(map(str, mu)): expr_to_str(e)
                    for mu, e in sorted(table.items())}}))
    return 0


def _verify_counts(q, g):
    """Census for (g, q) diffed against closed forms; returns diff count."""
    diffs = []
    if g == 1:
        census = counts.enum_genus1(q)
        total = counts.mass_trace((), q, census)
        if total != q:
            diffs.append(("mass", total, q))
        for a in range(0, 21, 2):
            got = counts.mass_trace((a,), q, census)
            want = trace(lowgenus.ec_a1(a), q)
            if got != want:
                diffs.append(((a,), got, want))
    elif g == 2:
        census = counts.enum_hyperelliptic(2, q)
        if counts.mass_trace((), q, census) != q ** 3:
            diffs.append(("mass", counts.mass_trace((), q, census), q ** 3))
        for tot in range(0, 15):
            for lam in partitions(tot):
                if len(lam) > 2:
                    continue
                got = counts.mass_trace(lam, q, census)
                want = 0 if tot % 2 else trace(lowgenus.ec_m2_local(lam), q)
                if got != want:
                    diffs.append((lam, got, want))
    elif g == 3:
        census = counts.census_genus3(q)
        if counts.mass_trace((), q, census) != q ** 6 + q ** 5 + 1:
            diffs.append(("mass", counts.mass_trace((), q, census),
                          q ** 6 + q ** 5 + 1))
        if q == 3:
            got = counts.mass_trace((2, 1, 0), q, census)
            if got != 720:
                diffs.append(((2, 1, 0), got, 720))
    else:
        raise ValidationError("genus must be 1, 2 or 3")
    return diffs


def cmd_verify_counts(args):
    diffs = _verify_counts(args.q, args.genus)
    if diffs:
        raise ValidationError("census diffs: %r" % diffs)
    print("census (g=%d, q=%d): zero diffs" % (args.genus, args.q))
    return 0


def cmd_verify_data(args):
    # motive tables: load performs functional-equation and weight checks
    load_motives()
    tab = frob_table()
    # q-expansion pin: the discriminant form has Hecke eigenvalue -24 at 2
    t2 = trace(MotiveExpr.gen("S[12]"), 2)
    if t2 != -24:
        raise ValidationError("tau(2) = %s, expected -24" % t2)
    # Saito-Kurokawa: Tr(S[0,10]) = Tr(S[18]) + p^9 + p^8 by construction;
    # check the lift stays consistent at every supported prime power
    for q in PRIME_POWERS:
        lhs = trace(expand_lift("S[0,10]"), q)
        rhs = trace(MotiveExpr.gen("S[18]"), q) + q ** 9 + q ** 8
        if lhs != rhs:
            raise ValidationError("Saito-Kurokawa failure at q=%d" % q)
    # genus-2 table: load performs monoid-containment validation
    a2 = lowgenus.a2_table()
    print("a2 table: %d entries valid" % len(a2))
    # shipped censuses: reading validates every functional equation
    ddir = _data_dir()
    ncen = 0
    for name in sorted(os.listdir(ddir)):
        if name.startswith("census_"):
            counts.read_census(os.path.join(ddir, name))
            ncen += 1
    print("censuses: %d files valid" % ncen)
    print("motive table: %d generators with Frobenius data" % len(tab))
    print("all validations passed")
    return 0


def cmd_report(args):
    data = interp.DataBundle.from_dir(args.data or _data_dir())
    closed, opens = interp.pipeline_m3(args.n, data)
    print(BANNER)
    print("components for n = %d:" % args.n)
    for mu in sorted(closed[args.n]):
        name = ",".join(map(str, mu)) or "()"
        print("  [%s]" % name)
        print("    closed: %s" % expr_to_str(closed[args.n][mu]))
        print("    open:   %s" % expr_to_str(opens[args.n][mu]))
    return 0


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="g3motives", description=__doc__)
    p.add_argument("--out", default="out", help="output directory")
    p.add_argument("--data", default=None,
                   help="directory with ingested data tables")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="solve interpolation targets")
    csub = pc.add_subparsers(dest="target", required=True)
    pa3 = csub.add_parser("a3")
    pa3.add_argument("--lambda", dest="lam", required=True,
                     help="highest weight, e.g. 14,2,0")
    pa3.set_defaults(func=cmd_compute_a3)
    pm3 = csub.add_parser("m3")
    pm3.add_argument("--n", type=int, required=True)
    pm3.add_argument("--mu", default=None, help="partition of n, e.g. 2,1,1")
    pm3.set_defaults(func=cmd_compute_m3)

    pb = sub.add_parser("boundary", help="boundary pushforward classes")
    pb.add_argument("--g", type=int, required=True)
    pb.add_argument("--n", type=int, required=True)
    pb.add_argument("--engine", choices=("gk", "direct", "both"),
                    default="gk")
    pb.set_defaults(func=cmd_boundary)

    pv = sub.add_parser("verify", help="verification commands")
    vsub = pv.add_subparsers(dest="what", required=True)
    pvc = vsub.add_parser("counts")
    pvc.add_argument("--q", type=int, required=True)
    pvc.add_argument("--genus", type=int, required=True)
    pvc.set_defaults(func=cmd_verify_counts)
    pvd = vsub.add_parser("data")
    pvd.set_defaults(func=cmd_verify_data)

    pr = sub.add_parser("report", help="render a full component table")
    pr.add_argument("--n", type=int, required=True)
    pr.set_defaults(func=cmd_report)
    return p


def _error_exit(exc):
    if isinstance(exc, MissingData):
        code = EXIT_MISSING
    elif isinstance(exc, (SingularSystem, NonIntegralSolution,
                          ResidualNonzero)):
        code = EXIT_SOLVE
    else:
        code = EXIT_VALIDATION
    err = {"error": type(exc).__name__, "message": str(exc), "exit": code}
    if isinstance(exc, MissingData):
        err["key"] = repr(exc.key)
    print(json.dumps(err, sort_keys=True))
    return code


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except G3Error as exc:
        return _error_exit(exc)


if __name__ == "__main__":
    sys.exit(main())
