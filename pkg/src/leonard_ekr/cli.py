"""Command-line entry point.  Every scalar is printed as an exact "p/q" string.

Exit codes: 0 success, 2 malformed input, 3 invalid parameter array,
4 inadmissible for the EKR basis, 5 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from .ekr import EkrSystem, ekr_coefficients
from .families import (DualHahnParams, KrawtchoukParams, QRacahParams, build,
                       hamming_preset, johnson_preset)
from .lp import bound_closed_form, dual_vector
from .parameters import (Inadmissible, InvalidParameterArray, ParameterArray, apply_d4,
                         base_class, ekr_admissible, fraction_str, parse_fraction,
                         require_admissible, validate)
from .realization import ConsistencyError, realize
from .verify import verify_all

EXIT_MALFORMED, EXIT_INVALID, EXIT_INADMISSIBLE, EXIT_CONSISTENCY = 2, 3, 4, 5

COMMANDS = ("validate", "info", "realize", "ekr", "bound", "verify", "d4")


class Malformed(ValueError):
    pass


_SCALAR_FLAGS = ("--r", "--s", "--s-star", "--h", "--h-star", "--r1", "--r2", "--q",
                 "--theta0", "--theta0-star")


def _bind_negative_scalars(argv: list[str]) -> list[str]:
    """Rewrite '--s-star -7/2' as '--s-star=-7/2'; argparse reads '-7/2' as a flag."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _SCALAR_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="leonard-ekr",
        description="Leonard systems, their EKR basis and the LP bound, in exact arithmetic.",
        epilog="D4 words are whitespace-separated generators (star, down, ddown) "
               "applied left to right.")
    ap.add_argument("command", choices=COMMANDS)
    src = ap.add_argument_group("input (exactly one source)")
    src.add_argument("--input", metavar="FILE", help="parameter array JSON ('-' for stdin)")
    src.add_argument("--family", choices=("dual-hahn", "krawtchouk", "q-racah"))
    src.add_argument("--preset", choices=("johnson", "hamming"))
    for flag in ("--d", "--v", "--n"):
        ap.add_argument(flag, type=int)
    for flag in _SCALAR_FLAGS:
        ap.add_argument(flag, type=str)
    ap.add_argument("--t", type=int, help="intersection parameter 0..d")
    ap.add_argument("--g", help='D4 word, e.g. "down" or "star ddown"')
    ap.add_argument("--output", metavar="FILE", help="write JSON here instead of stdout")
    ap.add_argument("--decimal", type=int, metavar="K",
                    help="also print approximate K-digit decimals of top-level scalars")
    return ap


def _frac(args, name, default=None):
    raw = getattr(args, name)
    if raw is None:
        if default is None:
            raise Malformed(f"--{name.replace('_', '-')} is required")
        return Fraction(default)
    try:
        return parse_fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise Malformed(f"--{name.replace('_', '-')}: not a rational number: {raw!r}") from None


def _need(args, name):
    val = getattr(args, name)
    if val is None:
        raise Malformed(f"--{name} is required")
    return val


def family_params(args):
    """Family or preset parameters from the flags; None for file input."""
    if args.preset == "johnson":
        return johnson_preset(_need(args, "v"), _need(args, "d"))
    if args.preset == "hamming":
        return hamming_preset(_need(args, "n"), _need(args, "d"))
    d = _need(args, "d")
    base = {"theta0": _frac(args, "theta0", 0), "theta0_star": _frac(args, "theta0_star", 0)}
    if args.family == "dual-hahn":
        return DualHahnParams(d, _frac(args, "r"), _frac(args, "s"), _frac(args, "s_star"),
                              h=_frac(args, "h", 1), **base)
    if args.family == "krawtchouk":
        return KrawtchoukParams(d, _frac(args, "r"), _frac(args, "s"), _frac(args, "s_star"),
                                **base)
    hs = {"h": _frac(args, "h", 1), "h_star": _frac(args, "h_star", 1)}
    q, s, ss, r1 = (_frac(args, k) for k in ("q", "s", "s_star", "r1"))
    if args.r2 is None:
        return QRacahParams.with_r2_from_constraint(d, q, s, ss, r1, **hs, **base)
    return QRacahParams(d, q, s, ss, r1, _frac(args, "r2"), **hs, **base)


def load_input(args):
    """(ParameterArray, family params or None)."""
    sources = [x for x in (args.input, args.family, args.preset) if x is not None]
    if len(sources) != 1:
        raise Malformed("give exactly one of --input, --family, --preset")
    if args.input is not None:
        try:
            text = sys.stdin.read() if args.input == "-" else open(args.input).read()
            return ParameterArray.from_json(text), None
        except OSError as e:
            raise Malformed(f"cannot read {args.input}: {e.strerror}") from None
        except (ValueError, TypeError) as e:
            if isinstance(e, InvalidParameterArray):
                raise
            raise Malformed(f"malformed parameter array: {e}") from None
    try:
        params = family_params(args)
    except (ValueError, TypeError) as e:
        if isinstance(e, (InvalidParameterArray, Malformed)):
            raise
        raise Malformed(str(e)) from None
    return build(params), params


def params_json(params) -> dict:
    out = {"family": params.family}
    for k, v in vars(params).items():
        out[k] = v if isinstance(v, int) else fraction_str(v)
    return out


def _need_t(args, d: int) -> int:
    t = _need(args, "t")
    if not 0 <= t <= d:
        raise Malformed(f"--t must lie in 0..{d}, got {t}")
    return t


def ekr_json(sys_: EkrSystem, t: int) -> dict:
    r = sys_.r
    fs = fraction_str
    return {
        "t": t,
        "w_split": [fs(x) for x in sys_.w[t]],
        "w_dual_standard": [fs(x) for x in ekr_coefficients(r, t, "dual_standard")],
        "w_standard": [fs(x) for x in ekr_coefficients(r, t, "standard")],
        "delta": [fs(x) for x in sys_.delta],
    }


def run(args) -> tuple[int, dict]:
    if args.command == "validate":
        try:
            p, params = load_input(args)
        except InvalidParameterArray as e:
            return EXIT_INVALID, {"valid": False, "failures": e.failures}
        report = validate(p)
        out = {"valid": report.ok, "failures": list(report.failures)}
        return (0 if report.ok else EXIT_INVALID), out

    p, params = load_input(args)
    validate(p).raise_if_invalid()
    out: dict = {}
    if params is not None:
        out["params"] = params_json(params)
    cmd = args.command

    if cmd == "info":
        bc = base_class(p)
        out.update({
            "d": p.d,
            "beta": None if bc.beta is None else fraction_str(bc.beta),
            "base_class": bc.tag.value,
            "vartheta": [fraction_str(p.vartheta(i)) for i in range(1, p.d + 1)],
            "ekr_admissible": ekr_admissible(p),
        })
    elif cmd == "realize":
        out.update(realize(p).to_json())
    elif cmd == "d4":
        try:
            out.update(apply_d4(p, _need(args, "g")).to_json())
        except ValueError as e:
            raise Malformed(f"bad D4 word: {e}") from None
    elif cmd == "verify":
        checks = verify_all(p, params)
        out["checks"] = [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]
        out["all_passed"] = all(c.passed for c in checks)
        return (0 if out["all_passed"] else EXIT_CONSISTENCY), out
    else:
        require_admissible(p)
        sys_ = EkrSystem.build(realize(p))
        if cmd == "ekr":
            if args.t is None:
                out["systems"] = [ekr_json(sys_, t) for t in range(p.d + 1)]
            else:
                out.update(ekr_json(sys_, _need_t(args, p.d)))
        else:
            t = _need_t(args, p.d)
            dv = dual_vector(sys_, t)
            out.update(dv.to_json())
            if params is not None:
                closed = bound_closed_form(params, t)
                out["bound_closed_form"] = fraction_str(closed)
                out["match"] = closed == dv.bound
                if not out["match"]:
                    return EXIT_CONSISTENCY, out
            else:
                # without family data the closed scalar read off the standard expansion
                out["bound_closed_form"] = fraction_str(dv.bound_scalar)
                out["match"] = dv.bound_scalar == dv.bound
    return 0, out


def _decimal(x: Fraction, k: int) -> str:
    with localcontext() as ctx:
        ctx.prec = max(50, k + 30)
        q = Decimal(x.numerator) / Decimal(x.denominator)
        return f"{q:.{k}f}"


def add_decimals(out: dict, k: int) -> None:
    approx = {}
    for key, val in out.items():
        try:
            if isinstance(val, str):
                approx[key] = _decimal(Fraction(val), k)
            elif isinstance(val, list) and val and all(isinstance(x, str) for x in val):
                approx[key] = [_decimal(Fraction(x), k) for x in val]
        except (ValueError, ZeroDivisionError):
            continue
    if approx:
        out["approximate_decimal"] = approx


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_bind_negative_scalars(argv))
    try:
        code, out = run(args)
    except Malformed as e:
        code, out = EXIT_MALFORMED, {"error": "malformed input", "detail": str(e)}
    except InvalidParameterArray as e:
        code, out = EXIT_INVALID, {"error": "invalid parameter array", "failures": e.failures}
    except Inadmissible as e:
        code, out = EXIT_INADMISSIBLE, {"error": "inadmissible", "detail": str(e)}
    except (ConsistencyError, ZeroDivisionError) as e:
        code, out = EXIT_CONSISTENCY, {"error": "consistency failure", "detail": str(e)}
    if args.decimal is not None and code == 0:
        add_decimals(out, args.decimal)
    text = json.dumps(out, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
