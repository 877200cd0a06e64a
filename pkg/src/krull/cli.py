"""Command-line interface.

Subcommands: gb, invariants, decompose, check, verify-example.  Every run
emits one result document (human-readable by default, machine-readable with
--json); all numbers are exact.  Exit codes: 0 ok, 2 parse/validation error,
3 stabilization failure, 4 unsupported input, 5 assertion failure,
6 resource limit.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional, Tuple

from . import __version__
from .errors import (AlgebraError, NotStabilizedError, ParseError,
                     ResourceLimitError, UnsupportedInputError)
from .field import GF, QQ
from .groebner import (Ideal, buchberger, colon, intersect, krull_dim,
                       maximal_ideal, vdim_artinian)
from .invariants import (QuotientModule, h0m, hilbert_coeffs, hilbert_fit,
                         hs_series, ir_series, irreducible_fit, socle_dim)
from .monomial_ideal import (associated_primes, dimension_filtration,
                             irreducible_decomposition, is_monomial_ideal,
                             primary_decomposition, unmixed_component)
from .parse import parse_poly_list, parse_ring
from .poly import GREVLEX, LEX, MonomialOrder, RingSpec
from .sop import (cm_test, sample_distinguished_sop, sample_sop,
                  theorem_report)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_STABILIZED = 3
EXIT_UNSUPPORTED = 4
EXIT_ASSERTION = 5
EXIT_RESOURCE = 6


class VerificationFailure(AlgebraError):
    """An expected closed form did not match the computed value."""


# --- document plumbing ---------------------------------------------------------


def _jsonable(obj):
    if is_dataclass(obj) and not isinstance(obj, type):
        return _jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    return obj


def _pretty(obj, indent=0, out=None):
    pad = "  " * indent
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                out.append(f"{pad}{k}:")
                _pretty(v, indent + 1, out)
            else:
                out.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                out.append(f"{pad}-")
                _pretty(v, indent + 1, out)
            else:
                out.append(f"{pad}- {_scalar(v)}")
    else:
        out.append(f"{pad}{_scalar(obj)}")


def _scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, list) and not v:
        return "[]"
    if isinstance(v, dict) and not v:
        return "{}"
    return str(v)


def emit(doc: dict, args) -> None:
    doc = _jsonable(doc)
    if args.json:
        text = json.dumps(doc, indent=2, sort_keys=True)
    else:
        lines: List[str] = []
        _pretty(doc, 0, lines)
        text = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _document(command: str, job: dict, results: dict, started: float) -> dict:
    return {
        "schema": 1,
        "tool": {"name": "krull", "version": __version__},
        "command": command,
        "job": job,
        "results": results,
        "timing_ms": int((time.time() - started) * 1000),
    }


# --- shared input handling ------------------------------------------------------


def _effective_ring(args) -> RingSpec:
    if args.example_1 is not None or args.example_2 is not None:
        ring, _ = _example_ring_and_relations(args)
        return ring
    if not args.ring:
        raise ParseError("--ring is required (or use --example-1/--example-2)")
    ring = parse_ring(args.ring)
    if getattr(args, "field", None):
        field = QQ if args.field == "Q" else GF(int(args.field[1:]))
        ring = RingSpec(field, ring.names, ring.order)
    if getattr(args, "order", None):
        ring = RingSpec(ring.field, ring.names,
                        GREVLEX if args.order == "grevlex" else LEX)
    return ring


def _example_ring_and_relations(args) -> Tuple[RingSpec, Ideal]:
    field_text = getattr(args, "field", None) or "F32003"
    field = QQ if field_text == "Q" else GF(int(field_text[1:]))
    if args.example_1 is not None:
        d = args.example_1
        if d < 3:
            raise ParseError("example 1 requires d >= 3")
        ring = RingSpec(field, tuple(f"x{i}" for i in range(1, d + 1)) + ("y",))
        xs = Ideal(ring, [ring.var(i) for i in range(d)])
        y = Ideal(ring, [ring.var("y")])
        return ring, intersect(xs, y)
    a, b = args.example_2
    if a < 2 or b < 2:
        raise ParseError("example 2 requires a, b >= 2")
    ring = RingSpec(field, ("x", "y", "z"))
    x, y, z = ring.vars
    return ring, Ideal(ring, (x ** (a + 1), x ** a * y, x ** a * z, z ** b))


def _module_of(args, ring: RingSpec) -> QuotientModule:
    if args.example_1 is not None or args.example_2 is not None:
        ring2, J = _example_ring_and_relations(args)
        return QuotientModule(ring2, J)
    gens = parse_poly_list(args.module, ring) if args.module else ()
    return QuotientModule(ring, Ideal(ring, gens))


def _add_common(p: argparse.ArgumentParser, *, module_flag=False, sampling=False):
    p.add_argument("--ring", help="ring spec, e.g. 'Q[x,y,z] grevlex' or 'F32003[x,y]'")
    p.add_argument("--ideal", help="comma-separated generator list")
    if module_flag:
        p.add_argument("--module", help="relations J of the module M = S/J (default 0)")
    p.add_argument("--order", choices=["grevlex", "lex"])
    p.add_argument("--field", help="field override: Q or Fp (e.g. F32003)")
    p.add_argument("--example-1", type=int, metavar="D",
                   help="built-in example family 1: J = (x1..xD) ∩ (y)")
    p.add_argument("--example-2", type=int, nargs=2, metavar=("A", "B"),
                   help="built-in example family 2: J = (x^A)(x,y,z) + (z^B)")
    p.add_argument("--nmax", type=int, default=8)
    if sampling:
        p.add_argument("--samples", type=int, default=5)
        p.add_argument("--seed", type=int, default=7)
        p.add_argument("--degree", type=int, choices=[1, 2], default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="FILE")


# --- subcommands ------------------------------------------------------------------


def cmd_gb(args) -> int:
    started = time.time()
    ring = _effective_ring(args)
    if not args.ideal:
        raise ParseError("--ideal is required")
    ideal = Ideal(ring, parse_poly_list(args.ideal, ring))
    gb = buchberger(ideal)
    doc = _document("gb", {
        "ring": repr(ring), "ideal": [str(g) for g in ideal.gens],
        "fingerprint": ideal.fingerprint(),
    }, {
        "basis": [str(g) for g in gb.basis],
        "leading_monomials": [str(ring.monomial(m)) for m in gb.leads],
        "is_monomial_ideal": gb.is_monomial(),
    }, started)
    emit(doc, args)
    return EXIT_OK


def cmd_invariants(args) -> int:
    started = time.time()
    ring = _effective_ring(args)
    module = _module_of(args, ring)
    if not args.ideal:
        raise ParseError("--ideal is required")
    ideal = Ideal(ring, parse_poly_list(args.ideal, ring))
    job = {
        "ring": repr(module.ring),
        "module": [str(g) for g in module.relations.gens],
        "ideal": [str(g) for g in ideal.gens],
        "nmax": args.nmax,
        "fingerprints": {"module": module.fingerprint(),
                         "ideal": ideal.fingerprint()},
    }
    results: dict = {"dim": module.dim}
    hs = hs_series(module, ideal, args.nmax)
    irs = ir_series(module, ideal, args.nmax)
    results["hs_series"] = list(hs.values)
    results["ir_series"] = list(irs.values)
    results["socle_dim"] = socle_dim(module, ideal)
    K, h0len = h0m(module)
    results["h0m"] = {"saturation": [str(g) for g in buchberger(K).basis],
                      "length": h0len}
    try:
        efit, _ = hilbert_fit(module, ideal)
        results["e_coeffs"] = list(efit.coeffs)
        results["e_stable_from"] = efit.stable_from
        if module.dim >= 1:
            ffit, _ = irreducible_fit(module, ideal)
            results["f_coeffs"] = list(ffit.coeffs)
            results["f_stable_from"] = ffit.stable_from
    except NotStabilizedError as exc:
        results["error"] = f"not stabilized: {exc}"
        emit(_document("invariants", job, results, started), args)
        return EXIT_NOT_STABILIZED
    emit(_document("invariants", job, results, started), args)
    return EXIT_OK


def cmd_decompose(args) -> int:
    started = time.time()
    ring = _effective_ring(args)
    if args.ideal:
        ideal = Ideal(ring, parse_poly_list(args.ideal, ring))
    elif args.example_1 is not None or args.example_2 is not None:
        _, ideal = _example_ring_and_relations(args)
    else:
        raise ParseError("--ideal is required")
    if not is_monomial_ideal(ideal):
        raise UnsupportedInputError("unsupported: non-monomial ideal")
    comps = irreducible_decomposition(ideal)
    primaries = primary_decomposition(ideal)
    ass = associated_primes(ideal)
    chain = dimension_filtration(ideal)
    doc = _document("decompose", {
        "ring": repr(ring), "ideal": [str(g) for g in ideal.gens],
        "fingerprint": ideal.fingerprint(),
    }, {
        "irreducible_components": [c.describe(ring) for c in comps],
        "index_of_reducibility": len(comps),
        "primary_decomposition": [
            {"primary": [str(g) for g in prim.gens],
             "prime": [str(g) for g in rad.gens]}
            for prim, rad in primaries],
        "associated_primes": [[ring.names[i] for i in s] for s in ass],
        "assh_dims": sorted({ring.nvars - len(s) for s in ass}),
        "dimension_filtration": {
            "dims": list(chain.dims),
            "ideals": [[str(g) for g in I.gens] for I in chain.ideals],
        },
        "unmixed_component": [str(g) for g in unmixed_component(ideal).gens],
    }, started)
    emit(doc, args)
    return EXIT_OK


def cmd_check(args) -> int:
    started = time.time()
    ring = _effective_ring(args)
    module = _module_of(args, ring)
    report = theorem_report(module, args.samples, args.seed, args.degree)
    doc = _document("check", {
        "ring": repr(module.ring),
        "module": [str(g) for g in module.relations.gens],
        "samples": args.samples, "seed": args.seed, "degree": args.degree,
        "fingerprint": module.fingerprint(),
    }, {
        "dim": module.dim,
        "cm": {"is_cm": report.cm.is_cm, "reason": report.cm.reason,
               "h0_length": report.cm.h0_length},
        "records": list(report.records),
        "type_lower_bound": report.max_ir,
        "all_checks_hold": report.all_checks_hold,
    }, started)
    emit(doc, args)
    return EXIT_OK if report.all_checks_hold else EXIT_ASSERTION


def _assert_eq(failures: list, label: str, expected, computed):
    if expected != computed:
        failures.append({"check": label, "expected": expected, "computed": computed})


def _verify_example_1(args, results: dict, failures: list):
    d = args.d
    ring, J = _example_ring_and_relations(
        argparse.Namespace(example_1=d, example_2=None, field=args.field))
    module = QuotientModule(ring, J)
    results["ring"] = repr(ring)
    results["relations"] = [str(g) for g in J.gens]
    _assert_eq(failures, "dim R = d", d, module.dim)
    _, h0len = h0m(module)
    _assert_eq(failures, "H0 = 0 (depth >= 1)", 0, h0len)
    cm = cm_test(module, samples=2, seed=args.seed * 31 + 1)
    _assert_eq(failures, "R is not Cohen-Macaulay", False, cm.is_cm)

    systems = sample_distinguished_sop(module, args.samples, args.seed, degree=1)
    sample_rows = []
    for ps in systems:
        q = ps.ideal()
        ffit, series = irreducible_fit(module, q)
        window = list(range(ffit.stable_from, series.end + 1))
        # verified closed form for linear distinguished systems: C(n+d-1, d-1);
        # the classical display C(n+d-2, d-1)+1 does not match actual socles.
        expected = [comb(n + d - 1, d - 1) for n in window]
        got = [series.value(n) for n in window]
        _assert_eq(failures, "socle series C(n+d-1,d-1) on stabilized window",
                   expected, got)
        _assert_eq(failures, "f0 = 1", 1, ffit.coeffs[0])
        sample_rows.append({"generators": list(ps.texts()),
                            "ir_series": list(series.values),
                            "f_coeffs": list(ffit.coeffs)})
    results["linear_samples"] = sample_rows

    quad = sample_distinguished_sop(module, 1, args.seed + 1, degree=2)[0]
    q = quad.ideal()
    e_base = hilbert_coeffs(module, q)
    C = colon(module.relations + q, maximal_ideal(ring))
    e_col = hilbert_coeffs(module, C)
    ffit_q, _ = irreducible_fit(module, q)
    results["quadric_sample"] = {
        "generators": list(quad.texts()),
        "e_base": list(e_base), "e_colon": list(e_col),
        "e1_diff": e_col[1] - e_base[1], "f_coeffs": list(ffit_q.coeffs),
    }
    _assert_eq(failures, "e1(q:m) - e1(q) = 1 for q in m^2", 1, e_col[1] - e_base[1])
    _assert_eq(failures, "f0 = 1 for q in m^2", 1, ffit_q.coeffs[0])


def _verify_example_2(args, results: dict, failures: list):
    a, b = args.a, args.b
    ring, J = _example_ring_and_relations(
        argparse.Namespace(example_1=None, example_2=(a, b), field=args.field))
    module = QuotientModule(ring, J)
    results["ring"] = repr(ring)
    results["relations"] = [str(g) for g in J.gens]
    _assert_eq(failures, "dim R = 1", 1, module.dim)
    K, h0len = h0m(module)
    x, _, z = ring.vars
    expected_K = buchberger(Ideal(ring, (x ** a, z ** b))).basis
    _assert_eq(failures, "H0 numerator = (x^a, z^b)",
               [str(g) for g in expected_K], [str(g) for g in buchberger(K).basis])
    _assert_eq(failures, "H0 length = 1", 1, h0len)
    cm = cm_test(module, samples=2, seed=args.seed * 31 + 1)
    _assert_eq(failures, "R is not Cohen-Macaulay", False, cm.is_cm)

    systems = sample_sop(module, args.samples, args.seed, degree=1)
    irs = []
    degenerate = []
    for k, ps in enumerate(systems):
        f = ps.elements[0]
        ir = socle_dim(module, ps.ideal())
        irs.append(ir)
        y_coeff = f.coeff((0, 1, 0))
        if y_coeff == ring.field.zero or ir != 2:
            degenerate.append({"index": k, "generator": str(f), "ir": ir})
    results["ir_values"] = irs
    results["degenerate_samples"] = degenerate
    _assert_eq(failures, "ir = 2 for all sampled parameters",
               [2] * len(systems), irs)
    ffit, _ = irreducible_fit(module, systems[0].ideal())
    results["f_coeffs"] = list(ffit.coeffs)
    _assert_eq(failures, "f0 = 2", 2, ffit.coeffs[0])


def cmd_verify_example(args) -> int:
    started = time.time()
    results: dict = {}
    failures: list = []
    if args.example == 1:
        _verify_example_1(args, results, failures)
    else:
        _verify_example_2(args, results, failures)
    job = {"example": args.example, "seed": args.seed, "samples": args.samples,
           "field": args.field or "F32003"}
    if args.example == 1:
        job["d"] = args.d
    else:
        job["a"], job["b"] = args.a, args.b
    results["failures"] = failures
    results["verdict"] = "pass" if not failures else "fail"
    emit(_document("verify-example", job, results, started), args)
    return EXIT_OK if not failures else EXIT_ASSERTION


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="krull",
        description="Exact commutative algebra: Groebner bases, Hilbert and "
                    "irreducible coefficients, socles, parameter ideals.")
    ap.add_argument("--version", action="version", version=f"krull {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="reduced Groebner basis of an ideal")
    _add_common(p)
    p.set_defaults(fn=cmd_gb, module=None)

    p = sub.add_parser("invariants",
                       help="dim, series, e- and f-coefficients, socle, H0")
    _add_common(p, module_flag=True)
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("decompose",
                       help="irreducible/primary decomposition, Ass, filtration")
    _add_common(p)
    p.set_defaults(fn=cmd_decompose, module=None)

    p = sub.add_parser("check", help="Cohen-Macaulay test and inequality report")
    _add_common(p, module_flag=True, sampling=True)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("verify-example",
                       help="reproduce a built-in example family end to end")
    p.add_argument("--example", type=int, choices=[1, 2], required=True)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--a", type=int, default=2)
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--field", help="Q or Fp (default F32003)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(fn=cmd_verify_example)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "command", "") == "verify-example":
        if args.example == 1 and args.d < 3:
            print("error: example 1 requires d >= 3", file=sys.stderr)
            return EXIT_PARSE
        if args.example == 2 and (args.a < 2 or args.b < 2):
            print("error: example 2 requires a, b >= 2", file=sys.stderr)
            return EXIT_PARSE
        if args.samples is None:
            args.samples = 3 if args.example == 1 else 20
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotStabilizedError as exc:
        print(f"not stabilized: {exc}", file=sys.stderr)
        return EXIT_NOT_STABILIZED
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except UnsupportedInputError as exc:
        print(f"unsupported input: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
