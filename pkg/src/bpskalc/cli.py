"""bpskalc command line.  Indices on the command line are 1-based."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exactpoly import BinFraction, LaurentPoly, NotDivisible, NotPolynomial

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, text: str, obj) -> None:
    if args.format == "json":
        print(json.dumps(obj, separators=(",", ":"), sort_keys=True))
    else:
        print(text)


def _poly_obj(f: LaurentPoly) -> dict:
    return f.to_json_obj()


def _frac(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _need(args, *names):
    for n in names:
        if getattr(args, n, None) is None:
            raise UsageError(f"missing -{n}" if len(n) == 1 else f"missing --{n}")


# ---- subcommands ------------------------------------------------------------

def cmd_a_element(args) -> int:
    from .shuffle import a_element
    _need(args, "d", "v")
    f = a_element(args.d, args.v, jobs=args.jobs).value
    _emit(args, f.to_text(), _poly_obj(f))
    return EXIT_OK


def cmd_e_class(args) -> int:
    from .shuffle import e_class
    _need(args, "d", "v")
    f = e_class(args.d, args.v, jobs=args.jobs).value
    _emit(args, f.to_text(), _poly_obj(f))
    return EXIT_OK


def cmd_p_element(args) -> int:
    from .shuffle import p_element
    _need(args, "d", "v", "n")
    f = p_element(args.d, args.v, args.n).value
    _emit(args, f.to_text(), _poly_obj(f))
    return EXIT_OK


def _read_poly(path: str) -> LaurentPoly:
    with open(path) as fh:
        return LaurentPoly.from_json(fh.read())


def cmd_shuffle_mul(args) -> int:
    from .shuffle import shuffle_mul
    _need(args, "lhs", "rhs")
    f, g = _read_poly(args.lhs), _read_poly(args.rhs)
    res = shuffle_mul(f, g, args.kernel)
    if isinstance(res, BinFraction):
        den = [[i + 1, j + 1, c[0], c[1], m] for (i, j, c), m in sorted(res.den.items())]
        text = res.num.to_text()
        if den:
            text += "\n/ " + " * ".join(f"(z{j} - q1^{a}*q2^{b}*z{i})^{m}" for i, j, a, b, m in den)
        _emit(args, text, {"numerator": _poly_obj(res.num), "denominator": den})
    else:
        _emit(args, res.to_text(), _poly_obj(res))
    return EXIT_OK


def cmd_bwb_expand(args) -> int:
    from .bwb import a_via_bwb_expansion
    from .schur import expansion_to_text, from_schur
    from .shuffle import a_element
    _need(args, "n", "d", "v")
    exp = a_via_bwb_expansion(args.n, args.d, args.v)
    obj = {"expansion": [{"weight": list(k), "coeff": c.to_json_obj()} for k, c in sorted(exp.items())]}
    text = expansion_to_text(exp)
    code = EXIT_OK
    if args.compare_shuffle:
        same = from_schur(exp, args.n * args.d) == a_element(args.n * args.d, args.n * args.v).value
        obj["matches_shuffle"] = same
        text += f"\nmatches shuffle: {'yes' if same else 'no'}"
        code = EXIT_OK if same else EXIT_FAIL
    _emit(args, text, obj)
    return code


def cmd_divcheck(args) -> int:
    from .divisibility import check_divisible, primitivity_check
    from .shuffle import e_class
    _need(args, "d", "v")
    r = check_divisible(e_class(args.d, args.v), args.d)
    if not r:
        _emit(args, f"NotDivisible: factor {r.factor} (divided {r.times} times)",
              {"divisible": False, "factor": r.factor, "times": r.times})
        return EXIT_FAIL
    p = primitivity_check(r.quotient)
    _emit(args, f"quotient: {r.quotient.to_text()}\nprimitive: {'yes' if p else 'no (' + p.detail + ')'}",
          {"divisible": True, "quotient": _poly_obj(r.quotient), "primitive": p.passed})
    return EXIT_OK if p else EXIT_FAIL


def cmd_wheel(args) -> int:
    from .divisibility import AllEqual, wheel_substitute
    from .shuffle import e_class
    _need(args, "d", "v", "indices")
    try:
        i, j, k = (int(x) - 1 for x in args.indices.split(","))
    except ValueError:
        raise UsageError("--indices expects three comma-separated integers")
    try:
        out = wheel_substitute(e_class(args.d, args.v), i, j, k, args.variant)
    except (AllEqual, IndexError) as exc:
        raise UsageError(str(exc))
    _emit(args, out.to_text(), {"result": _poly_obj(out), "vanishes": out.is_zero()})
    return EXIT_OK if out.is_zero() else EXIT_FAIL


def cmd_coproduct_check(args) -> int:
    from .coproduct import check_1236bis, check_cor44, check_primitive_shuffle
    _need(args, "n", "d", "v")
    n, d, v = args.n, args.d, args.v
    if args.mode == "1236bis":
        a = args.a if args.a is not None else 1
        b = args.b if args.b is not None else n - a
        r = check_1236bis(n, d, v, a, b)
    elif args.mode == "cor44":
        a = args.a if args.a is not None else 1
        b = args.b if args.b is not None else n - a
        c = args.c if args.c is not None else a
        e = args.e if args.e is not None else n - c
        if a + b != n or c + e != n:
            raise UsageError("block sizes must add up to n")
        r = check_cor44(a, b, c, e, d, v, route=args.route)
    else:
        r = check_primitive_shuffle(n, d, v)
    diff = r.diff.to_text() if isinstance(r.diff, LaurentPoly) else None
    text = f"{'Pass' if r else 'Fail'}: {r.detail}" + (f"\ndiff: {diff}" if diff else "")
    _emit(args, text, {"passed": r.passed, "detail": r.detail, "diff": diff})
    return EXIT_OK if r else EXIT_FAIL


def cmd_primitives(args) -> int:
    from .symfunc import newton_p, phi_consistency, primitives_dim, proportional
    _need(args, "n")
    dim, basis = primitives_dim(args.n)
    ok = dim == 1 and proportional(basis[0], newton_p(args.n))
    obj = {"dimension": dim,
           "basis": [{" ".join(map(str, k)): _frac(c) for k, c in sorted(b.terms.items())} for b in basis]}
    text = f"dimension {dim}\n" + "\n".join(repr(b) for b in basis)
    if args.shuffle:
        from .coproduct import check_primitive_shuffle
        _need(args, "d", "v")
        seeds = None if args.seed is None else (args.seed, args.seed + 1, args.seed + 2)
        r1 = check_primitive_shuffle(args.n, args.d, args.v)
        r2 = phi_consistency(args.n, args.d, args.v, seeds=seeds)
        obj["shuffle_candidate_primitive"] = r1.passed
        obj["kernel_dims"] = r2.kernel_dims
        text += f"\nshuffle candidate primitive: {'yes' if r1 else 'no'}\nkernel dims: {r2.kernel_dims}"
        ok = ok and r1.passed and r2.passed
    _emit(args, text, obj)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_magic_weights(args) -> int:
    from .weights import enumerate_magic_weights
    _need(args, "d", "w")
    ws = sorted(enumerate_magic_weights(args.d, args.w))
    rows = [[_frac(c) for c in chi] for chi in ws]
    _emit(args, "\n".join("(" + ", ".join(r) + ")" for r in rows) or "(none)", rows)
    return EXIT_OK


def cmd_dtseries(args) -> int:
    from .dtseries import a_d_enumerate, dt_series, macmahon
    _need(args, "N")
    N = args.N
    dt = list(dt_series(N).coeffs)
    mm = list(macmahon(N).coeffs)
    obj = {"dt": dt, "macmahon": mm}
    text = "DT:       " + " ".join(map(str, dt)) + "\nMacMahon: " + " ".join(map(str, mm))
    ok = True
    if args.check:
        ok = all(dt[d] == (-1) ** d * mm[d] for d in range(N + 1))
        if N <= 20:
            ad = a_d_enumerate(N)
            obj["a_d"] = ad
            text += "\na_d:      " + " ".join(map(str, ad))
            ok = ok and ad == mm
        obj["ok"] = ok
        text += f"\ncheck: {'ok' if ok else 'FAILED'}"
    _emit(args, text, obj)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_selftest(args) -> int:
    from .acceptance import run_all
    outcomes = run_all()
    if args.format == "json":
        _emit(args, "", [{"criterion": o.number, "title": o.title, "passed": o.passed,
                          "detail": o.detail} for o in outcomes])
    else:
        for o in outcomes:
            print(o.line())
    return EXIT_OK if all(o.passed for o in outcomes) else EXIT_FAIL


COMMANDS = {
    "a-element": cmd_a_element,
    "e-class": cmd_e_class,
    "p-element": cmd_p_element,
    "shuffle-mul": cmd_shuffle_mul,
    "bwb-expand": cmd_bwb_expand,
    "divcheck": cmd_divcheck,
    "wheel": cmd_wheel,
    "coproduct-check": cmd_coproduct_check,
    "primitives": cmd_primitives,
    "magic-weights": cmd_magic_weights,
    "dtseries": cmd_dtseries,
    "selftest": cmd_selftest,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-d", type=int)
    common.add_argument("-v", type=int)
    common.add_argument("-n", type=int)
    common.add_argument("-w", type=int)
    common.add_argument("-N", type=int)
    common.add_argument("-a", type=int)
    common.add_argument("-b", type=int)
    common.add_argument("-c", type=int)
    common.add_argument("-e", type=int)
    common.add_argument("--kernel", choices=["xi", "xip", "w"], default="xi")
    common.add_argument("--mode", choices=["1236bis", "cor44", "primitive"], default="1236bis")
    common.add_argument("--route", choices=["T", "S"], default="T")
    common.add_argument("--indices")
    common.add_argument("--variant", choices=["q1", "q2"], default="q1")
    common.add_argument("--lhs")
    common.add_argument("--rhs")
    common.add_argument("--compare-shuffle", action="store_true")
    common.add_argument("--shuffle", action="store_true")
    common.add_argument("--check", action="store_true")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int)

    p = _Parser(prog="bpskalc", description="Exact K-theoretic computations for the 3-loop quiver.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"bpskalc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotDivisible as exc:
        print(f"bpskalc: not divisible: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except NotPolynomial as exc:
        print(f"bpskalc: result is not a Laurent polynomial: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        # bounds and preconditions
        print(f"bpskalc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
