"""Command-line front end.

Exit codes: 0 success, 1 a verification found a counterexample, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import dcodes
from .pellquat import order, pellnums as pell, quaternion
from .recurrence import SequenceSpec, genfun_coefficients, profile, terms, terms_mod


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _spec(args) -> SequenceSpec:
    if args.preset:
        if any(v is not None for v in (args.a, args.b, args.c, args.seeds)):
            raise UsageError("--preset cannot be combined with --a/--b/--c/--seeds")
        try:
            return SequenceSpec.preset(args.preset)
        except KeyError as exc:
            raise UsageError(f"--preset: {exc.args[0]}") from None
    if args.a is None:
        raise UsageError("give --preset or --a")
    b = 1 if args.b is None else args.b
    c = 0 if args.c is None else args.c
    seeds = [0, 1] if args.seeds is None else args.seeds
    if len(seeds) == 2:
        x0, x1 = seeds
        x2 = args.a * x1 + b * x0
    elif len(seeds) == 3:
        x0, x1, x2 = seeds
    else:
        raise UsageError("--seeds takes two or three integers")
    return SequenceSpec(args.a, b, c, x0, x1, x2)


def _family_code(args) -> dcodes.DCyclicCode:
    if args.a is None or args.prime is None:
        raise UsageError("--a and --prime are required")
    return dcodes.build_code(dcodes.family_spec(args.a), args.prime)


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n} is required")


def _word(w) -> str:
    return ",".join(str(x) for x in w)


# each handler returns (payload for --json, text lines, exit code)

def cmd_terms(args):
    spec = _spec(args)
    count = 10 if args.n is None else args.n
    vals = terms_mod(spec, args.prime, count) if args.prime else terms(spec, count)
    return {"spec": spec.to_json(), "modulus": args.prime, "terms": vals}, [_word(vals)], 0


def cmd_period(args):
    _need(args, "prime")
    prof = profile(_spec(args), args.prime)
    line = f"l={prof.period} beta={prof.zeros}"
    if prof.preperiod:
        line += f" preperiod={prof.preperiod}"
    return prof.to_json(), [line, "residues: " + _word(prof.residues)], 0


def cmd_genfun_check(args):
    spec = _spec(args)
    count = 50 if args.n is None else args.n
    gf, rec = genfun_coefficients(spec, count), terms(spec, count)
    bad = [i for i, (x, y) in enumerate(zip(gf, rec)) if x != y]
    payload = {"spec": spec.to_json(), "count": count, "ok": not bad, "mismatches": bad}
    lines = [f"genfun coefficients match recurrence for {count} terms" if not bad
             else f"MISMATCH at indices {bad}"]
    return payload, lines, 1 if bad else 0


def cmd_dpoly(args):
    _need(args, "prime")
    dp = dcodes.build_dpoly(_spec(args), args.prime)
    return {"delta": list(dp.delta.coeffs), "profile": dp.profile.to_json()}, [str(dp.delta)], 0


def cmd_thm22_check(args):
    _need(args, "prime")
    rep = dcodes.check_delta_identity(_spec(args), args.prime, args.n)
    lines = [
        f"l={rep.length}",
        f"lhs         = {rep.lhs}",
        f"general rhs = {rep.general_rhs}  holds={rep.general_holds}",
        f"printed rhs = {rep.printed_rhs}  holds={rep.printed_holds}",
    ]
    return rep.to_json(), lines, 0 if rep.general_holds else 1


def cmd_code(args):
    code = _family_code(args)
    payload = code.to_json()
    payload["predicted_d"] = code.predicted_distance
    lines = [
        f"[{code.n},{code.k},{code.d}] over Z_{code.modulus} {'MDS' if code.mds else 'not MDS'}",
        f"generator: {code.generator}",
        f"check:     {code.check}",
        f"l - beta = {code.predicted_distance}",
    ]
    return payload, lines, 0 if code.d == code.predicted_distance else 1


def cmd_encode(args):
    _need(args, "message")
    code = _family_code(args)
    word = dcodes.encode(code, args.message)
    return {"message": args.message, "word": list(word)}, [_word(word)], 0


def cmd_decode(args):
    _need(args, "word")
    code = _family_code(args)
    tr = dcodes.decode(code, args.word)
    lines = [
        f"received:  {_word(tr.received)}",
        f"syndrome:  {tr.syndrome}",
    ]
    if tr.shift is not None:
        lines.append(f"shift i={tr.shift}: s_i = {tr.shifted_syndrome}")
    lines += [f"error:     {_word(tr.error)}", f"corrected: {_word(tr.corrected)}", f"status:    {tr.status}"]
    return tr.to_json(), lines, 1 if tr.status == "failure" else 0


def cmd_scan(args):
    _need(args, "primes")
    a_vals = None if args.a_max is None else range(1, args.a_max + 1)
    rows = dcodes.scan_codes(a_vals, args.primes)
    bad = [r for r in rows if r.d is not None and (r.d != r.predicted_d or r.mds != (r.zeros == 1))]
    lines = [f"{'p':>4} {'a':>4} {'l':>4} {'beta':>4}  code"]
    for r in rows:
        desc = f"skipped: {r.skipped}" if r.skipped else f"[{r.n},{r.k},{r.d}] {'MDS' if r.mds else '-'}"
        lines.append(f"{r.modulus:>4} {r.a:>4} {r.period:>4} {r.zeros:>4}  {desc}")
    for r in bad:
        lines.append(f"COUNTEREXAMPLE a={r.a} p={r.modulus}: d={r.d}, l-beta={r.predicted_d}")
    return [r.to_json() for r in rows], lines, 1 if bad else 0


def cmd_pell(args):
    _need(args, "n")
    pp = pell.pell(args.n)
    return {"n": pp.index, "P": pp.P, "Q": pp.Q}, [f"P_{pp.index}={pp.P} Q_{pp.index}={pp.Q}"], 0


def cmd_binet_check(args):
    upto = 200 if args.n is None else args.n
    bad = [k for k in range(upto + 1) if pell.binet(k) != (pell.pell(k).P, pell.pell(k).Q)]
    lines = [f"Binet matches recurrence for n <= {upto}" if not bad else f"MISMATCH at n={bad}"]
    return {"upto": upto, "ok": not bad, "mismatches": bad}, lines, 1 if bad else 0


def cmd_matpow(args):
    _need(args, "n")
    m = pell.matrix_power(args.n)
    ok = m == pell.pell_matrix_pattern(args.n)
    rows = [[str(x) for x in row] for row in m]
    lines = ["  ".join(f"{x:>12}" for x in row) for row in rows] + [f"pattern holds: {ok}"]
    return {"n": args.n, "matrix": rows, "pattern_holds": ok}, lines, 0 if ok else 1


def cmd_identities(args):
    upto = 30 if args.n is None else args.n
    result = {}
    failures = []
    for which in ("i", "ii", "iii", "iv"):
        reps = [pell.pell_identity(which, n, l) for n in range(upto + 1) for l in range(upto + 1)]
        bad = [(r.n, r.l) for r in reps if not r.holds]
        result[which] = {"cases": len(reps), "failures": bad}
        failures += bad
    lines = [f"({w}) {v['cases']} cases, {len(v['failures'])} failures" for w, v in result.items()]
    return {"upto": upto, "identities": result}, lines, 1 if failures else 0


def _algebra(args) -> quaternion.QuaternionAlgebra:
    al = Fraction(1) if args.alpha is None else args.alpha
    be = Fraction(1) if args.beta is None else args.beta
    return quaternion.QuaternionAlgebra(al, be)


def cmd_genpfl(args):
    _need(args, "p", "q", "n")
    r = pell.gen_pfl(args.p, args.q, args.n)
    R = quaternion.gen_pfl_quaternion(args.p, args.q, args.n, _algebra(args))
    payload = {"r": r, "quaternion": R.to_json(), "shift_identity": pell.check_shift_identity(args.p, args.q, args.n)}
    return payload, [f"r={r}", f"R={R}"], 0


def cmd_quat_mul(args):
    _need(args, "p", "q", "n", "pp", "qq", "m")
    alg = _algebra(args)
    x = quaternion.gen_pfl_quaternion(args.p, args.q, args.n, alg)
    y = quaternion.gen_pfl_quaternion(args.pp, args.qq, args.m, alg)
    z = quaternion.quat_mul(x, y)
    return {"left": x.to_json(), "right": y.to_json(), "product": z.to_json()}, [f"({x}) * ({y}) = {z}"], 0


def cmd_prop37_check(args):
    point = (args.n, args.m, args.p, args.q, args.pp, args.qq)
    if all(v is not None for v in point):
        rep = pell.scalar_product_decomposition(*point)
        printed = pell.scalar_product_decomposition(*point, as_printed=True)
        payload = {"corrected": rep.to_json(), "printed": printed.to_json()}
        lines = [
            f"lhs = {rep.lhs}",
            f"corrected terms {list(rep.terms)} sum {rep.total} residual {rep.residual}",
            f"printed   terms {list(printed.terms)} sum {printed.total} residual {printed.residual}",
        ]
        return payload, lines, 0 if rep.residual == 0 else 1
    if any(v is not None for v in point):
        raise UsageError("give all of --n --m --p --q --pp --qq, or none for the grid sweep")
    depth = 20 if args.depth is None else args.depth
    count, fails = pell.decomposition_sweep(depth, 5)
    payload = {"max_index": depth, "bound": 5, "cases": count, "failures": [f.to_json() for f in fails[:20]]}
    lines = [f"{count} cases, {len(fails)} with nonzero residual"]
    return payload, lines, 1 if fails else 0


def cmd_order_check(args):
    alg = _algebra(args)
    depth = 12 if args.depth is None else args.depth
    samples = 500 if args.samples is None else args.samples
    rep = order.order_closure_check(alg, depth, samples)
    lines = [
        f"alpha={alg.alpha} beta={alg.beta} depth={depth} lattice rank={rep.rank}",
        f"{rep.passed} products inside, {rep.failed} outside",
    ]
    if rep.rational_parameters:
        lines.append("note: non-integral algebra parameters")
    ce = rep.counterexamples()
    if ce:
        v = ce[0]
        lines.append(f"counterexample: {v['left']} * {v['right']} = ({', '.join(v['product'])})")
    return rep.to_json(), lines, 0 if rep.closed else 1


COMMANDS = {
    "terms": cmd_terms,
    "period": cmd_period,
    "genfun-check": cmd_genfun_check,
    "dpoly": cmd_dpoly,
    "thm22-check": cmd_thm22_check,
    "code": cmd_code,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "scan": cmd_scan,
    "pell": cmd_pell,
    "binet-check": cmd_binet_check,
    "matpow": cmd_matpow,
    "identities": cmd_identities,
    "genpfl": cmd_genpfl,
    "quat-mul": cmd_quat_mul,
    "prop37-check": cmd_prop37_check,
    "order-check": cmd_order_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", type=int)
    common.add_argument("--b", type=int)
    common.add_argument("--c", type=int)
    common.add_argument("--seeds", type=_ints)
    common.add_argument("--preset")
    common.add_argument("--prime", type=int)
    common.add_argument("--primes", type=_ints)
    common.add_argument("--a-max", type=int, dest="a_max")
    common.add_argument("--word", type=_ints)
    common.add_argument("--message", type=_ints)
    for flag in ("n", "m", "p", "q", "pp", "qq", "depth", "samples"):
        common.add_argument(f"--{flag}", type=int)
    common.add_argument("--alpha", type=Fraction)
    common.add_argument("--beta", type=Fraction)
    common.add_argument("--json", action="store_true")

    parser = argparse.ArgumentParser(prog="recurcodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, lines, code = COMMANDS[args.command](args)
    except (UsageError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"recurcodes {args.command}: error: {msg}", file=sys.stderr)
        return 2
    if args.json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
