"""Command-line driver.

Subcommands: witt-polys, classify, hopf, duality, selfcheck.  JSON output is
byte-stable for identical inputs and seeds (timing goes to stderr only).
Exit codes: 0 ok, 1 failed verification, 2 budget/guard exhausted or usage
error.  The env var WD_GUARD_DIM overrides the dimension guard.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .acceptance import run_all
from .emodule import GuardError, VerificationError, classify, kernel_fv_params
from .ffield import field_create
from .hopf import (
    build_kernel_hopf_presentation,
    build_noncommutative_example,
    build_selfdual_example,
    build_witt_hopf,
    dual_hopf,
    invariant_report,
    verify_hopf_axioms,
)
from .wittpoly import structure_polys_json

EXIT_OK, EXIT_FAILED, EXIT_BUDGET = 0, 1, 2


def _emit(obj, as_json):
    if as_json:
        sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(_pretty(obj) + "\n")


def _pretty(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        return "\n".join(
            f"{pad}{k}:" + ("\n" + _pretty(v, indent + 1) if isinstance(v, (dict, list)) else f" {v}")
            for k, v in obj.items()
        )
    if isinstance(obj, list):
        return "\n".join(
            pad + "- " + (("\n" + _pretty(v, indent + 1)) if isinstance(v, (dict, list)) else str(v))
            for v in obj
        )
    return pad + str(obj)


def _stringify_coeffs(tree):
    """Coefficients as decimal strings, recursively, for witt-polys output."""
    if isinstance(tree, dict):
        return {k: _stringify_coeffs(v) for k, v in tree.items()}
    if isinstance(tree, list):
        if len(tree) == 2 and isinstance(tree[0], list) and isinstance(tree[1], int):
            return [tree[0], str(tree[1])]
        return [_stringify_coeffs(v) for v in tree]
    return tree


def cmd_witt_polys(args):
    payload = _stringify_coeffs(structure_polys_json(args.p, args.len))
    _emit(payload, args.json)
    return EXIT_OK


def cmd_classify(args):
    try:
        report = classify(args.p, args.n, args.field_deg, extension_budget=args.budget)
    except GuardError as exc:
        _emit({"status": "budget-exceeded", "error": str(exc)}, args.json)
        return EXIT_BUDGET
    except VerificationError as exc:
        _emit({"status": "failed", "error": str(exc)}, args.json)
        return EXIT_FAILED
    _emit(report, args.json)
    return EXIT_OK if report["status"] == "ok" else EXIT_FAILED


def _presentation_payload(A):
    alg = A.pres.alg
    gens = list(alg.names)
    relations = []
    for j, cap in enumerate(alg.caps):
        lhs = f"{alg.names[j]}^{cap}"
        r = alg.repls[j]
        if r is None:
            relations.append(f"{lhs} = 0")
        else:
            parts = [
                f"{alg.names[t]}^{e}" if e > 1 else alg.names[t]
                for t, e in enumerate(r)
                if e
            ]
            relations.append(f"{lhs} = " + ("*".join(parts) if parts else "1"))
    comul = {}
    ng = alg.g
    for j, elt in enumerate(A.pres.comul_gens):
        terms = []
        for mono, c in sorted(elt.terms.items()):
            terms.append([list(mono[:ng]), list(mono[ng:]), str(c.coeffs[0])])
        comul[alg.names[j]] = terms
    return {"generators": gens, "relations": relations, "comultiplication": comul}


def _mono_text(names, exps):
    parts = [names[t] if e == 1 else f"{names[t]}^{e}" for t, e in enumerate(exps) if e]
    return "*".join(parts) if parts else "1"


def _comul_text(payload, names):
    out = {}
    for gen, terms in payload["comultiplication"].items():
        out[gen] = " + ".join(
            (f"{c}*" if c != "1" else "")
            + f"{_mono_text(names, left)}(x){_mono_text(names, right)}"
            for left, right, c in terms
        )
    return out


def cmd_hopf(args):
    base = field_create(args.p, 1)
    try:
        if args.family == "witt":
            if args.n is None:
                raise ValueError("--family witt needs --n")
            A = build_witt_hopf(args.p, args.n, base, args.m or args.n)
        elif args.family == "kernel":
            if args.r is None or args.s is None or args.m is None:
                raise ValueError("--family kernel needs --r --s --m")
            A = build_kernel_hopf_presentation(args.p, args.r, args.s, args.m, base)
        elif args.family == "noncomm":
            if args.n is None:
                raise ValueError("--family noncomm needs --n")
            A, _, _ = build_noncommutative_example(args.p, args.n, base)
        elif args.family == "selfdual-example":
            A = build_selfdual_example(args.p, base)
        else:
            raise ValueError(f"unknown family {args.family}")
    except GuardError as exc:
        _emit({"status": "budget-exceeded", "error": str(exc)}, args.json)
        return EXIT_BUDGET
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BUDGET
    payload = _presentation_payload(A)
    payload["invariants"] = invariant_report(A).as_dict()
    axioms = verify_hopf_axioms(A)
    payload["axioms_pass"] = axioms["all_pass"]
    if not args.json:
        payload["comultiplication"] = _comul_text(payload, A.pres.alg.names)
    _emit(payload, args.json)
    return EXIT_OK if axioms["all_pass"] else EXIT_FAILED


def cmd_duality(args):
    base = field_create(args.p, 1)
    try:
        n, nprime = kernel_fv_params(args.r, args.s, args.m)
        A = build_kernel_hopf_presentation(args.p, args.r, args.s, args.m, base)
        swapped = build_kernel_hopf_presentation(args.p, args.s, args.r, args.m, base)
    except GuardError as exc:
        _emit({"status": "budget-exceeded", "error": str(exc)}, args.json)
        return EXIT_BUDGET
    Ad = dual_hopf(A)
    dim_ok = A.dim == args.p ** (args.s * nprime) == args.p ** (args.r * n)
    inv_dual = invariant_report(Ad).as_dict()
    inv_swapped = invariant_report(swapped).as_dict()
    payload = {
        "p": args.p,
        "r": args.r,
        "s": args.s,
        "m": args.m,
        "n": n,
        "nprime": nprime,
        "dim": A.dim,
        "dimension_identity": dim_ok,
        "dual_invariants": inv_dual,
        "swapped_presentation_invariants": inv_swapped,
        "invariants_match": inv_dual == inv_swapped,
        "status": "ok" if dim_ok and inv_dual == inv_swapped else "failed",
    }
    _emit(payload, args.json)
    return EXIT_OK if payload["status"] == "ok" else EXIT_FAILED


def cmd_selfcheck(args):
    t0 = time.time()
    results = run_all(seed=args.seed)
    budget = any(r["status"] == "budget-exceeded" for r in results)
    failed = [r for r in results if r["status"] != "pass"]
    if args.json:
        payload = {
            "status": "budget-exceeded" if budget else ("failed" if failed else "ok"),
            "results": results,
        }
        _emit(payload, True)
    else:
        for r in results:
            mark = {"pass": "PASS", "fail": "FAIL", "budget-exceeded": "BUDGET"}[r["status"]]
            sys.stdout.write(f"criterion {r['criterion']:2d}  {mark:6s}  {r['name']}\n")
        if failed:
            first = failed[0]
            sys.stdout.write(
                "first failure detail: "
                + json.dumps(first["detail"], sort_keys=True, separators=(",", ":"))
                + "\n"
            )
    sys.stderr.write(f"selfcheck completed in {time.time() - t0:.1f}s\n")
    if budget:
        return EXIT_BUDGET
    return EXIT_FAILED if failed else EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="wittlab")
    sub = ap.add_subparsers(dest="subcommand")

    wp = sub.add_parser("witt-polys", help="structure polynomials A, P, N")
    wp.add_argument("--p", type=int, required=True)
    wp.add_argument("--len", type=int, required=True)
    wp.add_argument("--json", action="store_true")
    wp.set_defaults(fn=cmd_witt_polys)

    cl = sub.add_parser("classify", help="order-p^n classification report")
    cl.add_argument("--p", type=int, required=True)
    cl.add_argument("--n", type=int, required=True)
    cl.add_argument("--field-deg", type=int, required=True)
    cl.add_argument("--budget", type=int, default=None)
    cl.add_argument("--json", action="store_true")
    cl.set_defaults(fn=cmd_classify)

    hp = sub.add_parser("hopf", help="Hopf-algebra presentation and invariants")
    hp.add_argument("--p", type=int, required=True)
    hp.add_argument("--family", required=True,
                    choices=["witt", "kernel", "noncomm", "selfdual-example"])
    hp.add_argument("--r", type=int)
    hp.add_argument("--s", type=int)
    hp.add_argument("--m", type=int)
    hp.add_argument("--n", type=int)
    hp.add_argument("--i", type=int)
    hp.add_argument("--json", action="store_true")
    hp.set_defaults(fn=cmd_hopf)

    du = sub.add_parser("duality", help="dual-pair report for the kernel family")
    du.add_argument("--p", type=int, required=True)
    du.add_argument("--r", type=int, required=True)
    du.add_argument("--s", type=int, required=True)
    du.add_argument("--m", type=int, required=True)
    du.add_argument("--json", action="store_true")
    du.set_defaults(fn=cmd_duality)

    sc = sub.add_parser("selfcheck", help="run the full verification suite")
    sc.add_argument("--seed", type=int, default=0)
    sc.add_argument("--json", action="store_true")
    sc.set_defaults(fn=cmd_selfcheck)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if not getattr(args, "fn", None):
        ap.print_usage(sys.stderr)
        return EXIT_BUDGET
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
