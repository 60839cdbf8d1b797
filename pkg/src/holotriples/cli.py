"""Command line front end.

Every subcommand prints an aligned text report by default and a single JSON
document with ``--json``. Exit codes: 0 on success, 1 on a domain error, 2 on
malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional

from . import classify as cl
from . import quiver_oracle as qo
from . import regions as rg
from . import serre_dual as sd
from . import support as sp
from .errors import DomainError
from .gltilde import (
    Mat2,
    RhoPoint,
    charge_abcd,
    charge_eval,
    lift_from_charge,
    rho,
)
from .glue import alpha_charge, check_gluing, glued_charge, jealousy
from .kclass import curve_class, triple_class
from .rational import as_fraction, fmt_complex, fmt_plain, fmt_q, fmt_real
from .tiltgamma import GammaParams, distinguished_phases, zr_charge


class MalformedInput(Exception):
    pass


# ---------------------------------------------------------------- parsing helpers


def _load(text: str):
    try:
        return json.loads(text.replace("−", "-"))
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"not valid JSON: {text!r}") from exc


def _scalar(x) -> Fraction:
    try:
        return as_fraction(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(f"not a rational number: {x!r}") from exc


def _matrix(text) -> Mat2:
    rows = _load(text) if isinstance(text, str) else text
    if not (isinstance(rows, list) and len(rows) == 2 and all(isinstance(r, list) and len(r) == 2 for r in rows)):
        raise MalformedInput("matrix must be [[a,b],[c,d]]")
    return Mat2(*(_scalar(x) for row in rows for x in row))


def _vector(text, n: Optional[int] = None) -> List[Fraction]:
    v = _load(text) if isinstance(text, str) else text
    if not isinstance(v, list) or (n is not None and len(v) != n):
        raise MalformedInput(f"expected a list of {n} numbers")
    return [_scalar(x) for x in v]


def _int_vector(text, n: int) -> List[int]:
    v = _vector(text, n)
    if any(x.denominator != 1 for x in v):
        raise MalformedInput("class entries must be integers")
    return [int(x) for x in v]


def _input_doc(args) -> Any:
    if not args.input:
        return None
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise MalformedInput(str(exc)) from exc
    return _load(text)


def _need(value, flag: str):
    if value is None:
        raise MalformedInput(f"{flag} is required")
    return value


def _jsonable(x):
    if isinstance(x, Fraction):
        return fmt_q(x)
    if isinstance(x, float):
        return float(fmt_real(x))
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _text(x) -> str:
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        return fmt_plain(x)
    if isinstance(x, float):
        return fmt_real(x)
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_text(v) for v in x) + "]"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{k}: {_text(v)}" for k, v in x.items()) + "}"
    return str(x)


def _emit(args, result: Dict[str, Any]) -> None:
    if args.json:
        print(json.dumps(_jsonable(result), ensure_ascii=False))
        return
    width = max((len(k) for k in result), default=0)
    for k, v in result.items():
        print(f"{k.ljust(width)}  {_text(v)}")


# ---------------------------------------------------------------- subcommands


def cmd_classify(args) -> Dict[str, Any]:
    M = _matrix(_need(args.matrix, "--matrix"))
    f0 = _scalar(_need(args.f0, "--f0"))
    v = cl.trichotomy(cl.ConditionStarData(M, f0))
    out = v.to_json()
    if not args.json:
        out["certificates"] = "; ".join(v.certificates)
    return out


def cmd_glue_check(args) -> Dict[str, Any]:
    sod = int(args.sod)
    r1, r2 = _scalar(_need(args.r1, "--r1")), _scalar(_need(args.r2, "--r2"))
    try:
        holds = check_gluing(sod, r1, r2)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc
    return {"sod": sod, "r1": r1, "r2": r2, "gluing_holds": holds, "jealousy": jealousy(r1, r2)}


def cmd_charge_eval(args) -> Dict[str, Any]:
    x = _vector(_need(args.class_, "--class"))
    if any(v.denominator != 1 for v in x):
        raise MalformedInput("class entries must be integers")
    x = [int(v) for v in x]
    if args.mu:
        if len(x) != 2:
            raise MalformedInput("--mu needs a curve class [r,d]")
        z = charge_eval(Mat2(Fraction(1), Fraction(0), Fraction(0), Fraction(1)), curve_class(x))
    elif args.alpha is not None:
        if len(x) != 4:
            raise MalformedInput("--alpha needs a triple class [r1,d1,r2,d2]")
        z = glued_charge(alpha_charge(_scalar(args.alpha)), triple_class(x))
    elif args.regime == "Gamma":
        if len(x) != 4:
            raise MalformedInput("the tilted charge needs a triple class")
        z = zr_charge(GammaParams.from_matrix(_matrix(_need(args.matrix, "--matrix"))), triple_class(x))
    else:
        M = _matrix(_need(args.matrix, "--matrix (or --mu / --alpha)"))
        if len(x) != 2:
            raise MalformedInput("--matrix charges act on curve classes [r,d]")
        z = charge_eval(M, curve_class(x))
    return {"class": x, "charge": fmt_complex(z.re, z.im), "re": z.re, "im": z.im}


def cmd_support_check(args) -> Dict[str, Any]:
    tag = _need(args.regime, "--regime")
    if tag not in sp.REGIMES:
        raise MalformedInput(f"--regime must be one of {', '.join(sp.REGIMES)}")
    genus = args.genus if args.genus is not None else 1
    if args.matrix is None:
        rng = random.Random(args.seed if args.seed is not None else 0)
        n = args.samples if args.samples is not None else 100
        failures = 0
        for _ in range(n):
            reg = sp.random_regime(tag, rng)
            reg = sp.SupportRegime(tag, reg.M, genus=genus)
            if not sp.kernel_negdef(sp.build_Q(reg), reg.charge()).certified:
                failures += 1
        return {"regime": tag, "samples": n, "certified": n - failures, "counterexamples": failures}
    reg = sp.SupportRegime(tag, _matrix(args.matrix), genus=genus)
    Q = sp.build_Q(reg)
    rep = sp.kernel_negdef(Q, reg.charge())
    out = {"regime": tag, "Q": Q.to_json()}
    out.update(rep.to_json())
    return out


def cmd_bounds(args) -> Dict[str, Any]:
    e = triple_class(_int_vector(_need(args.class_, "--class"), 4))
    out: Dict[str, Any] = {"class": list(e)}
    if args.alpha is not None:
        A, B, C = sp.alpha_abc(_scalar(args.alpha))
        lo, hi = sp.trialpha_interval(e)
        out.update({"alpha": _scalar(args.alpha), "trialpha": [lo, hi]})
    else:
        M = _matrix(_need(args.matrix, "--matrix or --alpha"))
        A, B, C, D = charge_abcd(M)
        if args.degree is not None:
            out["lstar_stable"] = sp.lstar_line_bundle_stable(M, _scalar(args.degree))
    iv = sp.cotassp_interval(A, B, C, e)
    out.update({"interval": [iv["lo"], iv["hi"]], "minus_B": -B, "inside": iv["inside"], "via": iv["via"]})
    out["necessary"] = {name: ok for name, ok in sp.necessary_chain(A, B, C, e)}
    return out


def cmd_serre(args) -> Dict[str, Any]:
    e = triple_class(_int_vector(_need(args.class_, "--class"), 4))
    k = args.power if args.power is not None else 1
    genus = args.genus if args.genus is not None else 1
    img = sd.serre_class(e, genus) if k == 1 else sd.serre_power(e, k)
    return {"class": list(e), "power": k, "image": list(img), "cube_is_identity": sd.serre_power(e, 3) == e}


def cmd_dual(args) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    if args.class_:
        e = triple_class(_int_vector(args.class_, 4))
        out.update({"class": list(e), "dual": list(sd.dual_class(e)), "involution": sd.dual_class(sd.dual_class(e)) == e})
    if args.matrix:
        theta = _scalar(args.f0) if args.f0 is not None else Fraction(0)
        M2, th2, sh = sd.dual_curve_charge(_matrix(args.matrix), theta)
        out.update({"dual_matrix": [list(r) for r in M2.to_rows()], "theta": th2, "shift": sh})
    if not out:
        raise MalformedInput("--class or --matrix is required")
    return out


def cmd_hn_triangle(args) -> Dict[str, Any]:
    x = curve_class(_int_vector(_need(args.class_, "--class"), 2))
    if args.alpha is not None:
        res = sd.hn_triangle_glued(x, alpha_charge(_scalar(args.alpha)))
    else:
        p = GammaParams.from_matrix(_matrix(_need(args.matrix, "--matrix or --alpha")))
        res = sd.hn_triangle_gamma(x, p)
    return res


def cmd_audit(args) -> Dict[str, Any]:
    doc = _input_doc(args)
    if doc is None:
        doc = {}
    if not isinstance(doc, dict):
        raise MalformedInput("profile must be a JSON object")
    phases = doc.get("phases", [])
    if not isinstance(phases, list) or len(phases) > 6:
        raise MalformedInput("phases must be a list of at most six numbers or nulls")
    stable = doc.get("stable", {})
    if not isinstance(stable, dict) or any(k not in rg.TAGS for k in stable):
        raise MalformedInput(f"stable flags must be keyed by {', '.join(rg.TAGS)}")
    prof = rg.PhaseProfile.of([None if v is None else float(_scalar(v)) for v in phases], stable)
    viol = rg.audit(prof)
    return {"violations": [v.to_json() for v in viol], "count": len(viol)}


def cmd_region(args) -> Dict[str, Any]:
    if args.rho:
        p = RhoPoint(*(float(v) for v in _vector(args.rho, 4)))
        return {"rho": list(p), "delta": rg.delta(p), "in_Y": rg.in_Y(p)}
    M = _matrix(_need(args.matrix, "--matrix or --rho"))
    g = lift_from_charge(M, float(_scalar(_need(args.f0, "--f0"))))
    p = rho(g)
    out = {"f0": g.f0(), "rho": list(p), "delta": rg.delta(p), "in_L12": rg.in_L12(g), "in_Y": rg.in_Y(p)}
    if args.regime == "Gamma":
        out["phases"] = distinguished_phases(GammaParams.from_matrix(M))["phases"]
    return out


def cmd_trace(args) -> List[Dict[str, Any]]:
    doc = _input_doc(args) or {}
    start = _matrix(doc.get("start", _need(args.matrix, "--matrix")))
    end = _matrix(doc.get("end", _need(args.end, "--end")))
    f0 = _scalar(doc.get("f0", args.f0 if args.f0 is not None else 0))
    samples = int(doc.get("samples", args.samples if args.samples is not None else 200))
    events = rg.trace_path(cl.ConditionStarData(start, f0), end, samples)
    return [e.to_json() for e in events]


def _dimcharge(args) -> qo.DimCharge:
    return qo.DimCharge.of(*_vector(_need(args.charge, "--charge"), 4))


def _rep_from(args) -> qo.QuiverRep:
    doc = _input_doc(args)
    if doc is None and args.rep:
        doc = _load(args.rep)
    doc = _need(doc, "--rep or --input")
    try:
        return qo.QuiverRep.of(int(doc.get("p", 2)), tuple(doc["dims"]), doc.get("matrix"))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise MalformedInput(f"bad representation: {exc}") from exc


def cmd_oracle_hn(args) -> Dict[str, Any]:
    rep = _rep_from(args)
    Z = _dimcharge(args)
    hn = qo.hn_filtration(rep, Z)
    chains = qo.hn_exhaustive(rep, Z)
    return {
        "rep": rep.to_json(),
        "factors": [f.to_json() for f in hn],
        "unique": chains == [hn],
        "seesaw_violations": len(qo.seesaw_violations(rep, Z)),
    }


def cmd_oracle_torsion(args) -> Dict[str, Any]:
    n1, n2 = _int_vector(_need(args.dims, "--dims"), 2)
    p = args.p if args.p is not None else 2
    Z = _dimcharge(args)
    alpha = float("inf") if args.alpha in ("inf", "+inf") else _scalar(_need(args.alpha, "--alpha"))
    reps = [r for a in range(n1 + 1) for b in range(n2 + 1) for r in qo.all_reps(p, a, b)]
    return qo.truncation_pair(reps, Z, alpha).to_json()


COMMANDS = {
    "classify": cmd_classify,
    "glue-check": cmd_glue_check,
    "charge-eval": cmd_charge_eval,
    "support-check": cmd_support_check,
    "bounds": cmd_bounds,
    "serre": cmd_serre,
    "dual": cmd_dual,
    "hn-triangle": cmd_hn_triangle,
    "audit": cmd_audit,
    "region": cmd_region,
    "trace": cmd_trace,
    "oracle-hn": cmd_oracle_hn,
    "oracle-torsion": cmd_oracle_torsion,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--matrix", help='charge matrix, e.g. "[[0,-1],[1,0]]"')
    common.add_argument("--class", dest="class_", help='class, e.g. "[0,1]" or "[1,0,2,1]"')
    common.add_argument("--f0", help="value f(0) of the lift")
    common.add_argument("--alpha", help="alpha parameter")
    common.add_argument("--regime", help="support regime or Gamma")
    common.add_argument("--genus", type=int)
    common.add_argument("--samples", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--input", help="JSON input file, or - for standard input")

    parser = argparse.ArgumentParser(prog="holotriples", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = {name: sub.add_parser(name, parents=[common]) for name in COMMANDS}
    p["charge-eval"].add_argument("--mu", action="store_true", help="use Z_mu(r,d) = -d + ir")
    p["glue-check"].add_argument("--sod", type=int, default=12, choices=(12, 23, 31))
    p["glue-check"].add_argument("--r1")
    p["glue-check"].add_argument("--r2")
    p["bounds"].add_argument("--degree", help="line bundle degree for the l* test")
    p["serre"].add_argument("--power", type=int)
    p["region"].add_argument("--rho", help='"[m0,m1,phi0,phi1]"')
    p["trace"].add_argument("--end", help="end matrix of the path")
    for name in ("oracle-hn", "oracle-torsion"):
        p[name].add_argument("--charge", help='"[re1,im1,re2,im2]" for the two simples')
    p["oracle-hn"].add_argument("--rep", help='{"p":2,"dims":[1,1],"matrix":[[1]]}')
    p["oracle-torsion"].add_argument("--dims", help='"[n1,n2]": all reps up to these dims')
    p["oracle-torsion"].add_argument("--p", type=int, choices=qo.PRIMES)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 2
    try:
        result = COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (MalformedInput, ValueError, TypeError, ZeroDivisionError) as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, list):
        # one JSON object per line, in both modes
        for item in result:
            print(json.dumps(_jsonable(item), ensure_ascii=False))
    else:
        _emit(args, result)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
