"""Command-line interface.

Forms are read from ``--form <path>`` or standard input as JSON (see
formio).  Results are printed as JSON on stdout; membership answers are
data, never exit codes.  Exit status: 0 on success, 1 on usage or format
errors, 2 on internal assertion failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import apolarity, binary, formio, varieties
from .catalecticant import build_cat, emit_minors
from .forms import Form, dim_forms
from .linalg import rank
from .sampling import SampleSpec, sample
from .suites import SUITES, run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with 2; we want 1
        raise UsageError(message)


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _load_form(args) -> Form:
    if args.form:
        try:
            return formio.read_form(args.form)
        except OSError as exc:
            raise UsageError(f"cannot read form: {exc}") from exc
    try:
        data = json.load(sys.stdin)
    except json.JSONDecodeError as exc:
        raise UsageError(f"stdin is not valid JSON: {exc}") from exc
    return formio.form_from_dict(data)


def _emit(payload: dict):
    json.dump(payload, sys.stdout, indent=1)
    sys.stdout.write("\n")


def _cmd_cat(args):
    f = _load_form(args)
    cat = build_cat(f, args.i)
    _emit(
        {
            "n": f.n,
            "d": f.d,
            "i": args.i,
            "rows": [[_frac_str(x) for x in cat.body.row(r)] for r in range(cat.body.rows)],
        }
    )


def _cmd_rank(args):
    f = _load_form(args)
    cat = build_cat(f, args.i)
    _emit({"i": args.i, "rank": rank(cat.body)})


def _cmd_hilbert(args):
    f = _load_form(args)
    _emit({"entries": list(apolarity.hilbert_sequence(f).entries)})


def _cmd_member(args):
    f = _load_form(args)
    if args.family == "vr":
        if args.r is None:
            raise UsageError("--family vr needs --r")
        result = varieties.member_vr(f, args.r)
        _emit({"family": "vr", "r": args.r, "member": result})
    elif args.family == "ps2":
        _emit({"family": "ps2", "member": varieties.member_ps2(f)})
    elif args.family == "gor":
        if args.s is None:
            raise UsageError("--family gor needs --s")
        result = varieties.member_gor_leq(f, args.s)
        _emit({"family": "gor", "s": args.s, "member": result})
    else:
        raise UsageError(f"unknown family {args.family!r}")


def _cmd_classify(args):
    f = _load_form(args)
    cls = varieties.classify_ps2(f)
    witnesses = None
    if cls.witnesses is not None:
        witnesses = [[str(c) for c in w] for w in cls.witnesses]
    _emit({"tag": cls.tag, "witnesses": witnesses})


def _decomposition_payload(dec: binary.Decomposition) -> dict:
    components = []
    for g_poly, pair, e in dec.components:
        components.append(
            {
                "G": [
                    {"exp": list(w), "coeff": _frac_str(c)}
                    for w, c in sorted(g_poly.coeffs.items(), reverse=True)
                ],
                "L": [_frac_str(pair[0]), _frac_str(pair[1])],
                "exponent": e,
            }
        )
    apolar = None
    if dec.apolar_form is not None:
        apolar = [
            {"exp": list(v), "coeff": _frac_str(c)}
            for v, c in sorted(dec.apolar_form.coeffs.items(), reverse=True)
        ]
    embedding = None
    if dec.embedding is not None:
        embedding = [
            [_frac_str(dec.embedding[i, j]) for j in range(dec.embedding.cols)]
            for i in range(dec.embedding.rows)
        ]
    return {
        "kind": dec.kind,
        "n": dec.n,
        "d": dec.d,
        "components": components,
        "apolar_form": apolar,
        "embedding": embedding,
        "classification": dec.classification,
    }


def _cmd_decompose(args):
    f = _load_form(args)
    dec = varieties.decompose_form(f)
    payload = _decomposition_payload(dec)
    payload["verified"] = binary.verify_decomposition(dec, f)
    _emit(payload)


def _cmd_tangent(args):
    f = _load_form(args)
    if args.family == "vr":
        if args.r is None:
            raise UsageError("--family vr needs --r")
        i = args.i if args.i is not None else 1
        dim = apolarity.tangent_dim_vr(f, i, args.r)
        _emit(
            {
                "family": "vr",
                "i": i,
                "r": args.r,
                "tangent_dim": dim,
                "variety_dim": varieties.dim_vr(args.r, f.d, f.n),
            }
        )
        return
    if args.family == "gor-hilbert":
        _emit({"family": "gor-hilbert", "tangent_dim": apolarity.tangent_dim_gor(f)})
        return
    report = varieties.singular_test(f, args.family, r=args.r, s=args.s)
    _emit(
        {
            "family": report.family,
            "tangent_dim": report.tangent_dim,
            "variety_dim": report.variety_dim,
            "singular": report.singular,
        }
    )


def _cmd_minors(args):
    gens = emit_minors(args.n, args.d, args.i, args.size)
    if args.out:
        formio.export_generators(gens, args.out)
        _emit({"n": args.n, "d": args.d, "i": args.i, "size": args.size,
               "count": len(gens), "out": args.out})
    else:
        for p in gens.minors:
            sys.stdout.write(formio.minor_to_text(p) + "\n")


def _cmd_sample(args):
    spec = SampleSpec(
        family=args.family,
        n=args.n,
        d=args.d,
        seed=args.seed,
        coeff_bound=args.bound,
        r=args.r,
        s=args.s,
    )
    f = sample(spec)
    _emit(formio.form_to_dict(f))


def _cmd_verify(args):
    report = run_suite(args.suite, args.trials, args.seed)
    _emit(
        {
            "suite": report.suite,
            "trials": report.trials,
            "failures": [
                {"trial": t, "seed": s, "message": m} for t, s, m in report.failures
            ],
            "wall_time": round(report.wall_time, 3),
        }
    )
    if report.failures:
        sys.exit(2)


def _cmd_dims(args):
    if args.family == "vr":
        if None in (args.r, args.d, args.n):
            raise UsageError("--family vr needs --r --d --n")
        dim = varieties.dim_vr(args.r, args.d, args.n)
        ambient = dim_forms(args.n, args.d)
        _emit({"family": "vr", "dim": dim, "ambient": ambient, "codim": ambient - dim})
    elif args.family == "ps2":
        if args.n is None:
            raise UsageError("--family ps2 needs --n")
        _emit({"family": "ps2", "dim": varieties.dim_ps2(args.n)})
    elif args.family == "gor":
        if None in (args.s, args.d, args.n):
            raise UsageError("--family gor needs --s --d --n")
        _emit(
            {
                "family": "gor",
                "dim": varieties.dim_gor_leq(args.s, args.d, args.n),
                "sequence": list(varieties.t2s_sequence(args.d, args.s).entries),
            }
        )
    else:
        raise UsageError(f"unknown family {args.family!r}")


def build_parser() -> _Parser:
    parser = _Parser(prog="catkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_form(p):
        p.add_argument("--form", help="path to a form JSON file (default: stdin)")
        return p

    p = with_form(sub.add_parser("cat", help="print a catalecticant matrix"))
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(fn=_cmd_cat)

    p = with_form(sub.add_parser("rank", help="rank of a catalecticant"))
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(fn=_cmd_rank)

    p = with_form(sub.add_parser("hilbert", help="Hilbert sequence of R/Ann(f)"))
    p.set_defaults(fn=_cmd_hilbert)

    p = with_form(sub.add_parser("member", help="family membership test"))
    p.add_argument("--family", required=True, choices=["vr", "ps2", "gor"])
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.set_defaults(fn=_cmd_member)

    p = with_form(sub.add_parser("classify", help="classify a rank-<=2 form"))
    p.set_defaults(fn=_cmd_classify)

    p = with_form(sub.add_parser("decompose", help="binary/essential decomposition"))
    p.set_defaults(fn=_cmd_decompose)

    p = with_form(sub.add_parser("tangent", help="tangent-space dimension"))
    p.add_argument(
        "--family", required=True, choices=["vr", "ps2", "gor", "gor-hilbert"]
    )
    p.add_argument("--i", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.set_defaults(fn=_cmd_tangent)

    p = sub.add_parser("minors", help="emit symbolic minor generators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--out", help="write the export format to this path")
    p.set_defaults(fn=_cmd_minors)

    p = sub.add_parser("sample", help="draw a seeded family sample")
    p.add_argument("--family", required=True,
                   choices=["power", "ps", "tangent", "gor", "generic"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.set_defaults(fn=_cmd_sample)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("dims", help="dimension formulas")
    p.add_argument("--family", required=True, choices=["vr", "ps2", "gor"])
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(fn=_cmd_dims)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    except AssertionError as exc:
        print(f"internal assertion failure: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
