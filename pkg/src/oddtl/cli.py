"""``oddtl`` command line.

Exit status is 0 when every requested check passes, 1 when a check fails and
2 on bad input; failures are also reported as a JSON object on stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import checks, expr, jones_wenzl, osp, tl


class CheckFailed(Exception):
    def __init__(self, report: dict):
        super().__init__("some checks failed")
        self.report = report


def _q_value(text: str):
    if text == "symbolic":
        return None
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"--q must be a rational number or 'symbolic', not {text!r}")
    if abs(q) in (0, 1):
        raise argparse.ArgumentTypeError("--q must satisfy |q| not in {0, 1}")
    return q


def _common(suppress: bool) -> argparse.ArgumentParser:
    """Shared flags; subcommands suppress defaults so global flags survive."""
    def d(value):
        return argparse.SUPPRESS if suppress else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--category", choices=["stl", "brauer"], default=d("stl"))
    common.add_argument("--classical", action="store_true", default=d(False),
                        help="use eps = +1 with even generators")
    common.add_argument("--q", type=_q_value, default=d(None), metavar="RATIONAL|symbolic",
                        help="specialise q (default: symbolic)")
    common.add_argument("--output", choices=["text", "json"], default=d("text"))
    common.add_argument("--seed", type=int, default=d(0))
    common.add_argument("--max-n", type=int, default=d(None))
    return common


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _error("usage", message)
        self.exit(2)


def build_parser() -> argparse.ArgumentParser:
    sub_common = [_common(True)]
    p = _Parser(prog="oddtl", parents=[_common(False)],
                description="Odd Temperley-Lieb diagram calculus.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    s = sub.add_parser("eval", parents=sub_common, help="normalise a diagram expression")
    s.add_argument("expression")
    s = sub.add_parser("jw", parents=sub_common, help="print the projector f_n")
    s.add_argument("n", type=int)
    s = sub.add_parser("dims", parents=sub_common, help="number of basis diagrams m -> n")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s = sub.add_parser("decompose", parents=sub_common, help="decompose V^{⊗n}")
    s.add_argument("n", type=int)
    sub.add_parser("k0", parents=sub_common, help="Grothendieck ring identities")
    sub.add_parser("verify", parents=sub_common, help="run the property suites")
    sub.add_parser("envelope-check", parents=sub_common, help="Π-envelope interchange and round trip")
    return p


# --------------------------------------------------------------------------
# Rendering
# --------------------------------------------------------------------------
def _fraction_text(x) -> str:
    return str(Fraction(x))


def _morphism_payload(f, q):
    if q is None:
        return f.to_json()
    data = f.to_json()
    for term, (d, c) in zip(data["terms"], f.sorted_terms()):
        term["coeff"] = _fraction_text(c.evaluate(q))
    data["terms"] = [t for t in data["terms"] if t["coeff"] != "0"]
    data["q"] = _fraction_text(q)
    return data


def _morphism_text(f, q) -> str:
    if q is None:
        return str(f)
    parts = []
    for d, c in f.sorted_terms():
        v = c.evaluate(q)
        if v:
            label = "[" + (", ".join(f"{a}-{b}" for a, b in d.pairs()) or "empty") + "]"
            parts.append(f"({_fraction_text(v)}) · {label}")
    return " + ".join(parts) or "0"


def _emit(args, payload, text: str) -> None:
    if args.output == "json":
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _emit_report(args, report: dict[str, bool]) -> None:
    text = "\n".join(f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in report.items())
    _emit(args, {"checks": report, "ok": all(report.values())}, text)
    if not all(report.values()):
        raise CheckFailed(report)


def _module_name(n: int, pi: int) -> str:
    return ("Π" if pi else "") + f"V({n})"


# --------------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------------
def cmd_eval(args, eps):
    f = expr.evaluate(expr.parse(args.expression), args.category, eps)
    _emit(args, _morphism_payload(f, args.q), _morphism_text(f, args.q))


def cmd_jw(args, eps):
    if args.n < 0:
        raise ValueError("n must be nonnegative")
    f = jones_wenzl.jw(args.n, eps)
    _emit(args, _morphism_payload(f, args.q), _morphism_text(f, args.q))


def cmd_dims(args, eps):
    from . import brauer

    if args.m < 0 or args.n < 0:
        raise ValueError("arities must be nonnegative")
    if args.category == "stl":
        count = len(tl.enumerate_basis(args.m, args.n))
    else:
        count = len(brauer.enumerate_diagrams(args.m, args.n))
    _emit(args, {"source": args.m, "target": args.n, "category": args.category,
                 "count": count}, str(count))


def cmd_decompose(args, eps):
    if args.n < 0:
        raise ValueError("n must be nonnegative")
    parts = osp.decompose_tensor_power(args.n, eps)
    text = " ⊕ ".join(_module_name(w, pi) if m == 1 else f"{m}·{_module_name(w, pi)}"
                      for w, pi, m in parts) or "0"
    payload = {"module": f"V^{args.n}",
               "summands": [{"k": w, "pi": pi, "mult": m} for w, pi, m in parts]}
    _emit(args, payload, text)


def cmd_k0(args, eps):
    _emit_report(args, checks.k0_report(args.max_n or 8))


def cmd_verify(args, eps):
    n = args.max_n or 5
    report = dict(checks.relation_report(eps))
    report["super interchange (random)"] = checks.random_interchange(
        200, args.seed, min(n, 4), eps) == 0
    report.update(checks.jw_report(n, eps))
    report.update(checks.osp_report(eps=eps))
    report.update(checks.k0_report())
    report.update(checks.idempotent_report(min(n, 6), eps))
    _emit_report(args, report)


def cmd_envelope(args, eps):
    _emit_report(args, checks.envelope_report(args.max_n or 3, seed=args.seed, eps=eps))


COMMANDS = {"eval": cmd_eval, "jw": cmd_jw, "dims": cmd_dims, "decompose": cmd_decompose,
            "k0": cmd_k0, "verify": cmd_verify, "envelope-check": cmd_envelope}


def _error(kind: str, message: str, **extra) -> None:
    print(json.dumps({"error": kind, "message": message, **extra}, sort_keys=True,
                     ensure_ascii=False), file=sys.stderr)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else 2
    eps = 1 if args.classical else -1
    try:
        COMMANDS[args.command](args, eps)
    except CheckFailed as exc:
        _error("check_failed", str(exc), failed=[k for k, v in exc.report.items() if not v])
        return 1
    except expr.ExprSyntaxError as exc:
        _error("syntax", str(exc), position=exc.position)
        return 2
    except expr.ArityError as exc:
        _error("arity", str(exc), subterm=expr.to_text(exc.subterm))
        return 2
    except jones_wenzl.RootOfUnityError as exc:
        _error("root_of_unity", str(exc))
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        _error("invalid", str(exc))
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
