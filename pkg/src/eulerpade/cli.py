"""Command-line front end with JSON output.

Grammar:
    eulerpade <pade|eval|certify|bounds|limsup|fib|residue> [options]

All numeric inputs are exact rational strings ("3", "-1/2", "1/2,1/2" for
field elements) except --logH, which is a float.  Exit codes: 0 on
success, 2 when a certificate search ends undetermined, 1 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certify import (
    ValuationSetDescriptor,
    certify_nonvanishing,
    constants_c1_c2,
    even_factorial_linear_form,
    fibonacci_linear_form,
    limsup_sequence,
    monotone_decrease_onset,
    residue_condition,
    effective_bounds,
)
from .errors import EulerPadeError
from .numfield import QuadraticField
from .pade import pade_construct, pade_order_check
from .padics import euler_eval_certified
from .places import places_above


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # input errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _field(args) -> QuadraticField:
    return QuadraticField(args.field)


def _parse_elems(K: QuadraticField, text: str):
    return tuple(K.parse(part) for part in text.split(";") if part.strip())


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(human)


def _cmd_pade(args) -> int:
    K = _field(args)
    alphas = _parse_elems(K, args.alphas)
    system = pade_construct(args.m, args.l, args.mu, alphas)
    cutoff = args.cutoff if args.cutoff else system.order_target + 6
    order = pade_order_check(system, cutoff)
    payload = system.to_json()
    payload["order"] = order
    payload["order_target"] = system.order_target
    lines = [f"Pade system m={args.m} l={args.l} mu={args.mu} alphas={args.alphas}"]
    for i, poly in enumerate(system.B):
        lines.append(f"  B_{i}: {poly.to_json()['coeffs']}")
    lines.append(f"  remainder order {order} (target >= {system.order_target})")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_eval(args) -> int:
    K = _field(args)
    alpha = K.parse(args.alpha)
    results = [
        euler_eval_certified(v, alpha, args.prec).to_json()
        for v in places_above(K, args.p)
    ]
    lines = [
        f"F(alpha) at {r['place']}@{r['p']}: residue {r['residue']} mod {args.p}^{r['N']}, "
        f"tail valuation >= {r['tail_valuation_bound']} ({r['terms_used']} terms)"
        for r in results
    ]
    _emit(args, {"values": results}, "\n".join(lines))
    return 0


def _certificate_exit(args, cert) -> int:
    payload = cert.to_json()
    if cert.status == "nonzero":
        human = (
            f"nonzero at {cert.place} (precision {cert.precision}): "
            f"partial valuation {cert.partial_valuation} < tail bound {cert.tail_valuation_bound}"
        )
    else:
        human = "undetermined: no certifying place found in the scanned range"
    _emit(args, payload, human)
    return 0 if cert.status == "nonzero" else 2


def _cmd_certify(args) -> int:
    K = _field(args)
    lambdas = _parse_elems(K, args.lambdas)
    alphas = _parse_elems(K, args.alphas)
    p_min, p_max = _prime_window(args)
    cert = certify_nonvanishing(K, lambdas, alphas, p_min, p_max, args.prec)
    return _certificate_exit(args, cert)


def _prime_window(args) -> tuple[int, int]:
    if args.p is not None:
        return args.p, args.p
    return args.pmin, args.pmax


def _cmd_bounds(args) -> int:
    report = effective_bounds(args.m, args.kappa, args.c1, args.logH)
    human = (
        f"s = {report.s}, ell = {report.ell}, N(ell) = {report.n_ell:.6g}, "
        f"N(ell+1) = {report.n_ell_plus_1:.6g}\n"
        f"prime interval ]{report.interval_lo:.6g}, {report.interval_hi:.6g}[\n"
        f"lower-bound exponent {report.exponent:.9g}"
    )
    _emit(args, report.to_json(), human)
    return 0


def _cmd_limsup(args) -> int:
    K = _field(args)
    alphas = _parse_elems(K, args.alphas)
    if args.exclude_p:
        excluded = []
        for p_text in args.exclude_p.split(","):
            excluded.extend(places_above(K, int(p_text)))
        descriptor = ValuationSetDescriptor.cofinite(excluded)
    else:
        descriptor = ValuationSetDescriptor.all_places()
    values = limsup_sequence(K, alphas, descriptor, args.lmax)
    onset = monotone_decrease_onset(values)
    c1, c2 = constants_c1_c2(K, alphas, descriptor)
    payload = {
        "c1": c1,
        "c2": c2,
        "log_values": values,
        "decreasing_from": onset,
        "note": "finite-prefix evidence for the decay condition, not a proof",
    }
    lines = [f"c1 = {c1:.6g}, c2 = {c2:.6g} (evidence only, finite prefix)"]
    for i, val in enumerate(values, start=1):
        lines.append(f"  l = {i}: log value {val:.6g}")
    lines.append(
        f"strictly decreasing from l = {onset}" if onset else "no decreasing tail yet"
    )
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_fib(args) -> int:
    K, lambdas, alphas = fibonacci_linear_form(args.a, args.b)
    p_min, p_max = _prime_window(args)
    cert = certify_nonvanishing(K, lambdas, alphas, p_min, p_max, args.prec)
    return _certificate_exit(args, cert)


def _cmd_evenfact(args) -> int:
    K, lambdas, alphas = even_factorial_linear_form(args.a, args.b)
    p_min, p_max = _prime_window(args)
    cert = certify_nonvanishing(K, lambdas, alphas, p_min, p_max, args.prec)
    return _certificate_exit(args, cert)


def _cmd_residue(args) -> int:
    ok, slope = residue_condition(args.n, args.r, args.m)
    payload = {"n": args.n, "r": args.r, "m": args.m, "ok": ok, "slope": slope}
    human = (
        f"r = {args.r} classes mod {args.n} with m = {args.m}: "
        f"{'sufficient' if ok else 'not sufficient'} (slope {slope:.6g})"
    )
    _emit(args, payload, human)
    return 0


def _add_common(p, field=True, jsonf=True):
    if field:
        p.add_argument("--field", type=int, default=None, help="squarefree d of Q(sqrt(d)); omit for Q")
    if jsonf:
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")


def _add_prime_window(p):
    p.add_argument("--p", type=int, default=None, help="single prime to scan")
    p.add_argument("--pmin", type=int, default=2)
    p.add_argument("--pmax", type=int, default=50)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eulerpade", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pade", help="construct a Pade system and check its remainder order")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--alphas", required=True, help='evaluation points "x,y;x,y;..."')
    p.add_argument("--cutoff", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_pade)

    p = sub.add_parser("eval", help="certified residue of Euler's series at a point")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--prec", type=int, default=8)
    _add_common(p)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("certify", help="search for a non-vanishing certificate")
    p.add_argument("--lambdas", required=True, help='coefficients "l0;l1;..."')
    p.add_argument("--alphas", required=True)
    p.add_argument("--prec", type=int, default=64, help="precision ladder cap")
    _add_prime_window(p)
    _add_common(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("bounds", help="explicit interval and exponent at a given height")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--c1", type=float, required=True)
    p.add_argument("--logH", type=float, required=True)
    _add_common(p, field=False)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("limsup", help="diagnostic decay sequence (evidence, not proof)")
    p.add_argument("--alphas", required=True)
    p.add_argument("--lmax", type=int, default=40)
    p.add_argument("--exclude-p", default="", help='primes whose places leave V, e.g. "2,3"')
    _add_common(p)
    p.set_defaults(func=_cmd_limsup)

    p = sub.add_parser("fib", help="certify sum n! f_n != a/b over Q(sqrt(5))")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--prec", type=int, default=64)
    _add_prime_window(p)
    _add_common(p, field=False)
    p.set_defaults(func=_cmd_fib)

    p = sub.add_parser("evenfact", help="certify sum (2n)! != a/b over Q")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--prec", type=int, default=64)
    _add_prime_window(p)
    _add_common(p, field=False)
    p.set_defaults(func=_cmd_evenfact)

    p = sub.add_parser("residue", help="residue-class sufficiency test")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_common(p, field=False)
    p.set_defaults(func=_cmd_residue)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EulerPadeError, ValueError, ZeroDivisionError) as exc:
        print(f"eulerpade: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
