"""Command-line interface.

Subcommands: curve, family, sweep, residues, verify-c2c2, stats.
Exit codes: 0 success, 1 violation found (sweep / verify-c2c2), 2 input error.
"""

import argparse
import json
import sys

from .classify import (
    C2XC2_CASE1,
    C2XC2_CASE2,
    allowed_rmm,
    c2c2_symbolic_check,
    residue_classification,
    sweep_verify,
)
from .curves import WeierstrassModel, compute_invariants, reduction_type
from .dataset import distribution_from_lines
from .errors import RmmError
from .families import TorsionStructure, build_model, family_signature, validate_params
from .minimal import minimize, reduced_model, rmm_index


def _curve_summary(model):
    sig = compute_invariants(model)[3]
    sig_min, u = minimize(sig)
    cls = rmm_index(sig_min)
    return {
        "a_invariants": list(model.a_invariants()),
        "signature": [sig.c4, sig.c6, sig.delta],
        "minimal_signature": [sig_min.c4, sig_min.c6, sig_min.delta],
        "u": u,
        "rmm": cls.index,
        "rmm_triple": list(cls.triple),
        "reduced_model": list(reduced_model(sig_min).a_invariants()),
        "reduction": {str(p): reduction_type(sig_min, p).value for p in (2, 3)},
    }


def cmd_curve(args):
    ainvs = [int(v) for v in args.a_invariants.split(",")]
    if len(ainvs) != 5:
        raise RmmError("--a-invariants needs 5 comma-separated integers")
    print(json.dumps(_curve_summary(WeierstrassModel(*ainvs))))
    return 0


def cmd_family(args):
    T = TorsionStructure.parse(args.torsion)
    params = validate_params(T, args.a, args.b, args.d)
    model = build_model(params)
    out = _curve_summary(model)
    out["torsion"] = T.value
    out["params"] = {k: v for k, v in
                     (("a", params.a), ("b", params.b), ("d", params.d),
                      ("c", params.c), ("e", params.e)) if v is not None}
    print(json.dumps(out))
    return 0


def cmd_sweep(args):
    T = TorsionStructure.parse(args.torsion)
    report = sweep_verify(T, args.bound, threads=args.threads)
    print(json.dumps({
        "torsion": T.value,
        "bound": report.bound,
        "total": report.total,
        "degenerate": report.degenerate,
        "counts": {str(i): n for i, n in sorted(report.counts.items())},
        "witnesses": {str(i): list(w) for i, w in sorted(report.witnesses.items())},
        "allowed": sorted(allowed_rmm(T)),
        "missing_allowed": sorted(report.missing_allowed),
        "violations": [[list(t), i] for t, i in report.violations],
    }, default=str))
    return 1 if report.violations else 0


def cmd_residues(args):
    T = TorsionStructure.parse(args.torsion)
    table = residue_classification(T, args.modulus, args.samples)
    print(json.dumps({
        "torsion": T.value,
        "modulus": table.modulus,
        "samples_per_class": table.samples_per_class,
        "classes": {f"{','.join(map(str, res))}|u={u}": idx
                    for (res, u), idx in sorted(table.classes.items())},
        "empty_classes": [",".join(map(str, res)) for res in table.empty_classes],
        "inconsistent": [f"{','.join(map(str, res))}|u={u}"
                         for res, u in table.inconsistent_keys],
        "observed_indices": sorted(table.observed_indices),
    }))
    return 0


def cmd_verify_c2c2(args):
    ok = c2c2_symbolic_check()
    print(json.dumps({
        "verified": ok,
        "case1_u1": {str(k): v for k, v in C2XC2_CASE1.items()},
        "case2_u2": {str(k): v for k, v in C2XC2_CASE2.items()},
    }))
    return 0 if ok else 1


def _tsv_report(report):
    indices = list(range(1, 13))
    lines = ["\t".join(["T", "n_T"] + [f"R{i}" for i in indices])]
    for t in sorted(report.rows, key=lambda t: t.value):
        pct = report.percentages(t)
        lines.append("\t".join(
            [t.value, str(report.totals[t])] + [f"{pct[i]:.1f}%" for i in indices]))
    return "\n".join(lines)


def cmd_stats(args):
    with open(args.input, encoding="ascii") as fh:
        report, results = distribution_from_lines(fh)
    if args.format == "tsv":
        print(_tsv_report(report))
        for lineno, _line, reason in report.skipped:
            print(f"# skipped line {lineno}: {reason}", file=sys.stderr)
        return 0
    for r in results:
        print(json.dumps({
            "conductor": r.record.conductor,
            "class": r.record.iso_class,
            "number": r.record.number,
            "torsion": r.torsion.value,
            "rmm": r.index,
            "u": r.u,
            "reduced_model": list(r.reduced.a_invariants()),
        }))
    print(json.dumps({
        "report": {
            t.value: {"n": report.totals[t],
                      "counts": {str(i): c for i, c in sorted(row.items())}}
            for t, row in sorted(report.rows.items(), key=lambda kv: kv[0].value)
        },
        "skipped": [{"line": n, "reason": why} for n, _l, why in report.skipped],
    }))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rmm",
        description="Reduced minimal models of elliptic curves over Q")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curve", help="classify a curve given by a-invariants")
    p.add_argument("--a-invariants", required=True, metavar="a1,a2,a3,a4,a6")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("family", help="build and classify a torsion-family curve")
    p.add_argument("--torsion", required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int)
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("sweep", help="exhaustive parameter sweep against the allowed-class table")
    p.add_argument("--torsion", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("residues", help="empirical residue-class table")
    p.add_argument("--torsion", required=True)
    p.add_argument("--modulus", type=int, choices=(24, 48), default=24)
    p.add_argument("--samples", type=int, default=2)
    p.set_defaults(func=cmd_residues)

    p = sub.add_parser("verify-c2c2", help="check the C2xC2 congruence case tables")
    p.set_defaults(func=cmd_verify_c2c2)

    p = sub.add_parser("stats", help="distribution report over an allcurves file")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RmmError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
