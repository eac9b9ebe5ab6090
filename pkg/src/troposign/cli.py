"""Command-line interface: JSON in, JSON out.

Exit status is 0 on success, 1 when the computed verdict is negative (not a
member, infeasible, counterexample found) and 2 on bad input.  Indices in
JSON output are 1-based.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import cones, lift, opt, polar, sat
from .core import ZERO, Neg, Pos, TropicalError, rational
from .corpus import KINDS, gen_corpus
from .serialize import (
    decode_pair,
    decode_scalar,
    decode_signed_matrix,
    decode_signed_vec,
    decode_trop_matrix,
    decode_trop_vec,
    encode_certificate,
    encode_matrix,
    encode_scalar,
    encode_trop,
    encode_value,
    encode_vec,
)

DEFAULT_SEED = 20240917
SEED_ENV = "TROPOSIGN_SEED"

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def resolve_seed(flag: Optional[int]) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"{SEED_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_SEED


def _load(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: malformed JSON: {e}") from None


def _matrix_payload(obj):
    return obj["matrix"] if isinstance(obj, dict) else obj


def _emit(obj, out) -> None:
    out.write(json.dumps(encode_value(obj), ensure_ascii=False, indent=2) + "\n")


# -- cone -------------------------------------------------------------------

SIGNED_CONES = {
    "psd-signed": cones.is_psd_signed,
    "pd": cones.is_pd_signed,
    "copositive": cones.is_copositive,
}
TROP_CONES = {"psd": cones.is_psd_trop, "cp": cones.is_cp, "cpsd": cones.is_cpsd}


def cmd_cone_check(args, out) -> int:
    raw = _matrix_payload(_load(args.input))
    if args.cone in SIGNED_CONES:
        verdict = SIGNED_CONES[args.cone](decode_signed_matrix(raw))
    else:
        m = decode_trop_matrix(raw)
        verdict = TROP_CONES[args.cone](m)
    cert = dict(verdict.certificate)
    if "factor" in cert:
        cert["factor"] = encode_matrix(cert["factor"])
    _emit({"member": verdict.member, "certificate": encode_certificate(cert)}, out)
    return EXIT_OK if verdict.member else EXIT_FALSE


def cmd_cone_factorize(args, out) -> int:
    m = decode_trop_matrix(_matrix_payload(_load(args.input)))
    verdict = cones.is_cp(m)
    if not verdict.member:
        _emit({"member": False, "certificate": encode_certificate(verdict.certificate)}, out)
        return EXIT_FALSE
    y = cones.cp_factorize(m)
    _emit({"member": True, "Y": encode_matrix(y), "columns": len(y[0])}, out)
    return EXIT_OK


# -- polar ------------------------------------------------------------------


def _points(obj, key="A"):
    if key not in obj:
        raise InputError(f"input needs a {key!r} field")
    return [decode_trop_vec(a) for a in obj[key]]


def cmd_polar_member(args, out) -> int:
    obj = _load(args.input)
    ok = polar.polar_contains(_points(obj), decode_signed_vec(obj["query"]))
    _emit({"member": ok}, out)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_polar_two_sided(args, out) -> int:
    obj = _load(args.input)
    ok = polar.two_sided_contains(_points(obj), decode_pair(obj["query"]))
    _emit({"member": ok}, out)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_polar_one_sided(args, out) -> int:
    obj = _load(args.input)
    pairs = [decode_pair(p) for p in obj.get("B", [])]
    ok = polar.one_sided_contains(pairs, decode_trop_vec(obj["query"]))
    _emit({"member": ok}, out)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_polar_axioms(args, out) -> int:
    obj = _load(args.input)
    rng = random.Random(resolve_seed(args.seed))
    if "R" in obj:
        r = [decode_pair(p) for p in obj["R"]]
        report = polar.check_bend_axioms(r, rng=rng)
    else:
        pts = _points(obj)
        budget = int(obj.get("samples", args.samples))
        members = polar.sample_polar(pts, budget, rng)
        samples = [polar.SignedPair.from_vec(x) for x in members]
        report = polar.check_bend_axioms(
            polar.polar_predicate(pts), samples, dim=len(pts[0]), rng=rng
        )
    data = {"status": report.status, "samples_run": report.samples_run}
    ce = report.counterexample
    if ce is not None:
        data["counterexample"] = encode_certificate(ce)
        data["violated"] = sorted(report.violations)
    _emit(data, out)
    return EXIT_OK if report.consistent else EXIT_FALSE


def cmd_polar_separate(args, out) -> int:
    obj = _load(args.input)
    pts = _points(obj)
    z = decode_trop_vec(obj["query"])
    proj = polar.project_onto_hull(pts, z)
    u = polar.separate(pts, z)
    data = {"projection": [encode_trop(v) for v in proj], "in_hull": u is None}
    data["separator"] = None if u is None else encode_vec(u)
    _emit(data, out)
    return EXIT_FALSE if u is None else EXIT_OK


# -- opt --------------------------------------------------------------------


def _coeffs(path):
    obj = _load(path)
    if isinstance(obj, dict):
        obj = obj.get("coeffs")
    if not isinstance(obj, list):
        raise InputError("coefficients must be a JSON array, lowest degree first")
    return opt.signed_poly([decode_scalar(c) for c in obj])


def cmd_opt_poly(args, out) -> int:
    f = _coeffs(args.coeffs)
    res = opt.minimize_poly(f)
    data = {
        "value": encode_scalar(res.value),
        "attainment": res.attainment,
        "kind": res.kind,
        "roots": [encode_scalar(r) for r in opt.poly_roots(f)],
    }
    if res.point is not None:
        data["point"] = encode_scalar(res.point)
    if res.side is not None:
        data["side"] = res.side
    _emit(data, out)
    return EXIT_OK


def cmd_opt_quad(args, out) -> int:
    obj = _load(args.input)
    a = decode_signed_matrix(obj["A"])
    b = decode_signed_vec(obj["b"])
    sol = opt.solve_quadratic(a, b)
    _emit(
        {
            "value": sol.value,
            "xbar": list(sol.xbar),
            "xstar": list(sol.xstar) if sol.xstar is not None else "non-generic",
        },
        out,
    )
    return EXIT_OK


def cmd_opt_copositive_qp(args, out) -> int:
    a = decode_signed_matrix(_matrix_payload(_load(args.input)))
    value, witness = opt.copositive_qp_value(a)
    data = {"value": value, "copositive": witness is None}
    if witness is not None:
        data["witness"] = list(witness)
    _emit(data, out)
    return EXIT_OK


# -- sat --------------------------------------------------------------------


def system_to_json(system: sat.QuadSystem) -> dict:
    return {
        "nvars": system.nvars,
        "constraints": [
            {
                "quad": [[i + 1, j + 1, encode_scalar(a)] for (i, j), a in c.quad],
                "lin": [[i + 1, encode_scalar(b)] for i, b in c.lin],
                "const": encode_scalar(c.const),
                "rel": c.rel,
                "label": c.label,
            }
            for c in system.constraints
        ],
    }


def system_from_json(obj) -> sat.QuadSystem:
    try:
        nvars = int(obj["nvars"])
        cons = []
        for c in obj["constraints"]:
            quad = tuple(((int(i) - 1, int(j) - 1), decode_scalar(a)) for i, j, a in c.get("quad", []))
            lin = tuple((int(i) - 1, decode_scalar(b)) for i, b in c.get("lin", []))
            for (i, j), _ in quad:
                if not (0 <= i < nvars and 0 <= j < nvars):
                    raise InputError(f"unknown index out of range in {c.get('label', '')!r}")
            for i, _ in lin:
                if not 0 <= i < nvars:
                    raise InputError(f"unknown index out of range in {c.get('label', '')!r}")
            cons.append(
                sat.QuadConstraint(quad, lin, decode_scalar(c["const"]), c["rel"], c.get("label", ""))
            )
    except (KeyError, TypeError) as e:
        raise InputError(f"malformed system: {e}") from None
    return sat.QuadSystem(nvars, tuple(cons))


def cmd_sat_encode(args, out) -> int:
    try:
        text = Path(args.cnf).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {args.cnf}: {e.strerror}") from None
    nvars, clauses = sat.parse_dimacs(text)
    _emit(system_to_json(sat.encode_3sat(clauses, nvars)), out)
    return EXIT_OK


def parse_domain(text: str):
    if text == "01":
        return sat.DEFAULT_DOMAIN
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        raise InputError(f"domain must be '01' or a JSON array of scalars, got {text!r}") from None
    if not isinstance(obj, list) or not obj:
        raise InputError("domain must be a nonempty JSON array")
    return tuple(decode_scalar(v) for v in obj)


def cmd_sat_check(args, out) -> int:
    system = system_from_json(_load(args.system))
    res = sat.feasibility_bruteforce(system, parse_domain(args.domain))
    data = {"feasible": res.feasible}
    if res.feasible:
        data["witness"] = list(res.witness)
        if system.nvars % 2 == 0 and args.domain == "01":
            data["assignment"] = {
                str(v): b for v, b in sat.decode(res.witness, system.nvars // 2).items()
            }
    _emit(data, out)
    return EXIT_OK if res.feasible else EXIT_FALSE


# -- lift -------------------------------------------------------------------


def _lift_config(args) -> lift.RationalLift:
    try:
        t = Fraction(args.t)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad value for t: {args.t!r}") from None
    return lift.RationalLift(t, args.max_denominator)


def _report_json(report: lift.LiftReport) -> dict:
    return {
        "status": report.status,
        "checked": report.checked,
        "counterexamples": report.counterexamples,
        **({"details": report.details} if report.details else {}),
    }


def cmd_lift_verify_polar(args, out) -> int:
    obj = _load(args.A)
    pts = [decode_trop_vec(a) for a in (obj["A"] if isinstance(obj, dict) else obj)]
    report = lift.verify_polar_commutation(
        pts, _lift_config(args), args.samples, random.Random(resolve_seed(args.seed))
    )
    _emit(_report_json(report), out)
    return EXIT_OK if report.status == "consistent" else EXIT_FALSE


def cmd_lift_verify_collapse(args, out) -> int:
    report = lift.verify_collapse(
        args.n, _lift_config(args), args.samples, random.Random(resolve_seed(args.seed))
    )
    _emit(_report_json(report), out)
    return EXIT_OK if report.status == "consistent" else EXIT_FALSE


def cmd_lift_psd(args, out) -> int:
    a = decode_signed_matrix(_matrix_payload(_load(args.input)))
    res = lift.lift_psd(a, _lift_config(args))
    _emit(
        {
            "matrix": [[str(v) for v in row] for row in res.matrix],
            "t": str(res.t),
            "psd": res.psd,
            "attempts": [{"t": str(t), "psd": ok} for t, ok in res.attempts],
        },
        out,
    )
    return EXIT_OK if res.psd else EXIT_FALSE


# -- plot -------------------------------------------------------------------


def _parse_range(text: str) -> tuple[Fraction, Fraction]:
    try:
        lo, hi = text.split(":")
        lo, hi = rational(lo), rational(hi)
    except (ValueError, TypeError):
        raise InputError(f"range must look like LO:HI, got {text!r}") from None
    if lo > hi:
        raise InputError("empty range")
    return Fraction(lo), Fraction(hi)


def plot_rows(f, lo: Fraction, hi: Fraction, step: Fraction):
    """Points along the signed line: ⊖hi ... ⊖lo, zero, lo ... hi."""
    mags = []
    m = lo
    while m <= hi:
        mags.append(rational(m))
        m += step
    xs = [Neg(m) for m in reversed(mags)] + [ZERO] + [Pos(m) for m in mags]
    for x in xs:
        yield x, opt.eval_poly(f, x)


def cmd_plot_poly(args, out) -> int:
    f = _coeffs(args.coeffs)
    lo, hi = _parse_range(args.range)
    step = Fraction(rational(args.step))
    if step <= 0:
        raise InputError("step must be positive")
    out.write("x\tx_class\tx_modulus\tf\tf_class\tf_modulus\n")
    for x, y in plot_rows(f, lo, hi, step):
        out.write(
            f"{x}\t{_cls(x)}\t{_mod(x)}\t{y}\t{_cls(y)}\t{_mod(y)}\n"
        )
    return EXIT_OK


def _cls(a) -> str:
    return {"+": "positive", "-": "negative", "o": "balanced", "z": "zero"}[a.kind]


def _mod(a) -> str:
    return "-inf" if a.mag is None else str(a.mag)


# -- gen --------------------------------------------------------------------


def cmd_gen_corpus(args, out) -> int:
    paths = gen_corpus(args.kind, args.n, args.count, resolve_seed(args.seed), args.out)
    _emit({"kind": args.kind, "n": args.n, "files": [str(p) for p in paths]}, out)
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="troposign", description="Signed tropical polars, matrix cones and optimization."
    )
    sub = p.add_subparsers(dest="group", required=True)

    def add(group, name, func, help_):
        sp = group.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        return sp

    def lift_opts(sp):
        sp.add_argument("--t", default=str(lift.DEFAULT_T), help="evaluation point (rational > 1)")
        sp.add_argument("--max-denominator", type=int, default=lift.DEFAULT_MAX_DENOMINATOR)
        sp.add_argument("--seed", type=int, default=None)

    cone = sub.add_parser("cone", help="matrix cone membership").add_subparsers(dest="cmd", required=True)
    sp = add(cone, "check", cmd_cone_check, "test membership and print a certificate")
    sp.add_argument("--cone", required=True, choices=sorted([*SIGNED_CONES, *TROP_CONES]))
    sp.add_argument("--in", dest="input", required=True)
    sp = add(cone, "factorize", cmd_cone_factorize, "tropical CP factor Y with Y Yᵀ = X")
    sp.add_argument("--in", dest="input", required=True)

    pol = sub.add_parser("polar", help="polars and bend cones").add_subparsers(dest="cmd", required=True)
    for name, func, help_ in (
        ("member", cmd_polar_member, "signed polar membership"),
        ("two-sided", cmd_polar_two_sided, "two-sided polar membership of a pair"),
        ("one-sided", cmd_polar_one_sided, "one-sided polar membership of a point"),
        ("separate", cmd_polar_separate, "separate a point from a tropical cone"),
    ):
        sp = add(pol, name, func, help_)
        sp.add_argument("--in", dest="input", required=True)
    sp = add(pol, "axioms", cmd_polar_axioms, "sampled bend cone axiom check")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--samples", type=int, default=20)
    sp.add_argument("--seed", type=int, default=None)

    op = sub.add_parser("opt", help="signed tropical optimization").add_subparsers(dest="cmd", required=True)
    sp = add(op, "poly", cmd_opt_poly, "infimum of a univariate polynomial")
    sp.add_argument("--coeffs", required=True)
    sp = add(op, "quad", cmd_opt_quad, "closed-form quadratic program")
    sp.add_argument("--in", dest="input", required=True)
    sp = add(op, "copositive-qp", cmd_opt_copositive_qp, "copositivity as a quadratic program")
    sp.add_argument("--in", dest="input", required=True)

    st = sub.add_parser("sat", help="3-SAT encoding").add_subparsers(dest="cmd", required=True)
    sp = add(st, "encode", cmd_sat_encode, "encode a DIMACS CNF")
    sp.add_argument("--cnf", required=True)
    sp = add(st, "check", cmd_sat_check, "exhaustive feasibility check")
    sp.add_argument("--system", required=True)
    sp.add_argument("--domain", default="01")

    lf = sub.add_parser("lift", help="monomial lift checks").add_subparsers(dest="cmd", required=True)
    sp = add(lf, "verify-polar", cmd_lift_verify_polar, "sval/polar commutation on samples")
    sp.add_argument("--A", required=True)
    sp.add_argument("--samples", type=int, default=200)
    lift_opts(sp)
    sp = add(lf, "verify-collapse", cmd_lift_verify_collapse, "cone hierarchy collapse on samples")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--samples", type=int, default=100)
    lift_opts(sp)
    sp = add(lf, "psd", cmd_lift_psd, "lift a PSD_n(S) matrix and certify it")
    sp.add_argument("--in", dest="input", required=True)
    lift_opts(sp)

    pl = sub.add_parser("plot", help="plot data").add_subparsers(dest="cmd", required=True)
    sp = add(pl, "poly", cmd_plot_poly, "TSV samples of a polynomial along the signed line")
    sp.add_argument("--coeffs", required=True)
    sp.add_argument("--range", default="-6:6", help="modulus range LO:HI")
    sp.add_argument("--step", default="1/4")

    gn = sub.add_parser("gen", help="corpus generation").add_subparsers(dest="cmd", required=True)
    sp = add(gn, "corpus", cmd_gen_corpus, "write a deterministic corpus")
    sp.add_argument("--kind", required=True, choices=KINDS)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--out", required=True)
    return p


def _glue_ranges(argv: list) -> list:
    # "--range -6:6" would otherwise read the value as an option
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--range":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--range={nxt}")
        else:
            out.append(tok)
    return out


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = _glue_ranges(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    try:
        return args.func(args, out)
    except (InputError, TropicalError, ValueError, KeyError, TypeError, IndexError) as e:
        msg = f"missing field {e}" if isinstance(e, KeyError) else str(e)
        err.write(f"troposign: error: {msg}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
