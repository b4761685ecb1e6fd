"""Command line front end.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 on bad input.  ``--json`` output is canonical (sorted keys, fixed
separators), so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import deformation, modular, padic, psl2
from .deformation import Signature, SpecialDeformationDatum, sdd_is_special, sdd_search, sdd_validate
from .field import build_field
from .graph import graph_validate_special_shape, load_graph
from .modular import DEFAULT_PRIME_CAP

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _prime(args, minimum: int = 5) -> int:
    if args.prime is None:
        raise UsageError("--prime is required")
    cap = None if args.allow_large else DEFAULT_PRIME_CAP
    try:
        modular.check_prime(args.prime, minimum=minimum, cap=cap)
    except ValueError as exc:
        msg = str(exc)
        if "cap" in msg:
            msg += " (pass --allow-large to override)"
        raise UsageError(msg) from None
    if args.allow_large and args.prime > DEFAULT_PRIME_CAP:
        print(f"warning: p={args.prime} is above the default cap {DEFAULT_PRIME_CAP}; this may be slow",
              file=sys.stderr)
    return args.prime


def _signature(args, p: int) -> Signature:
    if not args.signature:
        raise UsageError("--signature is required (comma separated exponents)")
    try:
        sig = Signature.parse(args.signature)
    except ValueError:
        raise UsageError(f"cannot parse signature {args.signature!r}") from None
    bad = sig.violations(p, args.allow_degenerate)
    if "signature-sum" in bad:
        raise UsageError(f"signature sum {sum(sig.a)} ≠ p−1 = {p - 1}")
    if bad:
        raise UsageError(f"signature {args.signature} invalid for p={p}: {', '.join(bad)}")
    return sig


def _seed() -> int:
    raw = os.environ.get("SRW_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"SRW_SEED must be an integer, got {raw!r}") from None


# -- commands ----------------------------------------------------------------


def cmd_hasse(args) -> tuple[dict, dict, dict]:
    p = _prime(args)
    cap = None if args.allow_large else DEFAULT_PRIME_CAP
    hp = modular.hasse_polynomial(p, cap=cap)
    report = modular.verify_x2p_theorem(p, cap=cap)
    roots = report.lambdas
    invariant_agree = True
    if p <= 13 or args.allow_large:
        F = build_field(p, 2)
        root_set = set(roots)
        invariant_agree = all(
            (x in root_set) == modular.legendre_hasse_invariant(x).is_zero()
            for x in F if not x.is_zero() and x != 1
        )
    results = {
        "p": p,
        "r": hp.r,
        "phi": hp.coefficients(),
        "field": roots[0].field.to_json() if roots else None,
        "lambdas": [lam.to_json() for lam in roots],
    }
    checks = {
        "roots-match-point-count": report.checks["roots-match-point-count"],
        "roots-match-hasse-invariant": invariant_agree,
        "root-count-equals-r": report.checks["root-count-equals-r"],
        "phi-squarefree": hp.over(roots[0].field).is_squarefree() if roots else False,
    }
    return {"prime": p}, results, checks


def cmd_verify_x2p(args):
    p = _prime(args)
    cap = None if args.allow_large else DEFAULT_PRIME_CAP
    report = modular.verify_x2p_theorem(p, cap=cap)
    degree = padic.modular_field_degree(p, cap=cap)
    bound = padic.tame_degree_bound(p, [2] * report.r)
    threshold = padic.disk_exponent(p, 2)
    katz = padic.katz_consistency_check(p, cap=cap)
    results = {
        "p": p,
        "r": report.r,
        "phi": report.phi,
        "lambdas": [lam.to_json() for lam in report.lambdas],
        "field-degree": degree,
        "tame-bound": bound,
        "ratio": _frac(Fraction(bound, degree)),
        "disk-threshold": str(threshold),
        "genus-good-component": psl2.curve_genus(p),
    }
    checks = dict(report.checks)
    checks["field-degree-is-(p^2-1)/2"] = degree * 2 == p * p - 1
    checks["tame-bound-ratio-2"] = Fraction(bound, degree) == 2
    checks.update({f"disk-{k}": v for k, v in katz.checks.items()})
    return {"prime": p}, results, checks


def cmd_search(args):
    p = _prime(args, minimum=3)
    sig = _signature(args, p)
    k = args.ext or 1
    try:
        res = sdd_search(p, sig, k, allow_degenerate=args.allow_degenerate)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    F = build_field(p, k)
    reverified = True
    for tup in res.tuples:
        d = SpecialDeformationDatum(F, tup, res.signature, None, None, args.allow_degenerate)
        reverified &= sdd_validate(d).valid and sdd_is_special(d)
    results = res.to_json()
    results["tuples-with-c-in-field"] = [
        deformation.normalizing_constant(g) is not None for g in res.eigenvalues
    ]
    checks = {"results-reverify": reverified}
    return {"prime": p, "signature": list(sig.a), "ext": k}, results, checks


def cmd_disks(args):
    p = _prime(args, minimum=3)
    sig = _signature(args, p)
    exps = [padic.disk_exponent(p, a, allow_degenerate=args.allow_degenerate) for a in sig.a]
    bound = padic.tame_degree_bound(p, sig, allow_degenerate=args.allow_degenerate)
    results = {
        "p": p,
        "signature": list(sig.a),
        "disk-exponents": [str(e) for e in exps],
        "tame-bound": bound,
    }
    checks = {
        "disks-nested": all(e > 0 for e in exps),
        "boundary-inside": all(padic.in_too_supersingular_disk(e, p, a, allow_degenerate=args.allow_degenerate)
                               for e, a in zip(exps, sig.a)),
    }
    if p >= 5:
        degree = padic.modular_field_degree(p, cap=None)
        results["modular-degree"] = degree
        results["ratio"] = _frac(Fraction(bound, degree))
    return {"prime": p, "signature": list(sig.a)}, results, checks


def cmd_action(args):
    p = _prime(args)
    samples = 1000 if args.samples is None else args.samples
    if samples < 1:
        raise UsageError("--samples must be positive")
    k = args.ext or 2
    seed = _seed()
    rep = psl2.verify_action_axioms(p, k, samples, seed=seed)
    return {"prime": p, "samples": samples, "ext": k, "seed": seed}, rep.to_json(), dict(rep.checks)


def cmd_graph_check(args):
    if not args.input:
        raise UsageError("--input is required")
    try:
        g, p = load_graph(args.input, args.prime)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read graph: {exc}") from None
    rep = graph_validate_special_shape(g, p)
    results = {"p": p, "components": len(g.nodes), "tails": len(g.tails()), "violations": rep.violations}
    return {"input": str(args.input), "prime": p}, results, dict(rep.checks)


COMMANDS = {
    "hasse": cmd_hasse,
    "verify-x2p": cmd_verify_x2p,
    "search": cmd_search,
    "disks": cmd_disks,
    "action": cmd_action,
    "graph-check": cmd_graph_check,
}


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# -- output -------------------------------------------------------------------


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _render_text(report: dict) -> str:
    lines = [f"== {report['command']} =="]
    for key, value in report["inputs"].items():
        lines.append(f"  {key:<12} {value}")
    lines.append("results:")
    for key, value in report["results"].items():
        if isinstance(value, list) and value and isinstance(value[0], list) and len(value) > 1:
            lines.append(f"  {key}:")
            lines.extend(f"    {item}" for item in value)
        else:
            lines.append(f"  {key:<24} {value}")
    lines.append("checks:")
    for key, ok in report["checks"].items():
        lines.append(f"  [{'PASS' if ok else 'FAIL'}] {key}")
    if "elapsed-ms" in report:
        lines.append(f"elapsed: {report['elapsed-ms']} ms")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit canonical JSON")
    common.add_argument("--prime", type=int)
    common.add_argument("--ext", type=int, help="extension degree k of F_{p^k}")
    common.add_argument("--signature", help="comma separated exponents, e.g. 2,2,2")
    common.add_argument("--samples", type=int)
    common.add_argument("--allow-large", action="store_true", help=f"allow primes above {DEFAULT_PRIME_CAP}")
    common.add_argument("--allow-degenerate", action="store_true", help="accept exponents a_i = 1")
    common.add_argument("--input", help="graph JSON file")
    common.add_argument("--timing", action="store_true", help="include elapsed-ms (breaks byte stability)")
    parser = argparse.ArgumentParser(prog="stabred", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "hasse": "Hasse polynomial and supersingular lambdas with oracle agreement",
        "verify-x2p": "check the X(2p) statements: supersingular points, omega_0, field degree, disks",
        "search": "exhaustive search for special deformation data",
        "disks": "too-supersingular disk exponents and tame degree bound",
        "action": "verify the PSL_2(p) action on y^((p+1)/2) = x^p - x",
        "graph-check": "validate a reduction graph JSON file",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        inputs, results, checks = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {"command": args.command, "inputs": inputs, "results": results, "checks": checks}
    if args.timing or not args.json:
        report["elapsed-ms"] = int((time.perf_counter() - t0) * 1000)
    print(dumps_canonical(report) if args.json else _render_text(report))
    return EXIT_OK if all(checks.values()) else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
