"""Command-line entry point: ``hopfdual check | derive | fourier``.

Exit codes: 0 all checks pass, 1 a check failed, 2 input could not be parsed,
3 a precondition failed (no integral, unsupported suite for the subject, ...).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .algebra import Algebra, Element, InfiniteDimensionalError, tensor
from .algfile import AlgebraFileError, file_field_order, load
from .catalog import BUILTINS, PairedCouple, UnknownExampleError, build, cyclotomic_order
from .duality import NotAnElementError, build_v
from .fourier import FourierPack
from .hopf import check_hopf_axioms
from .integrals import (ModularDataError, NoIntegralError, NonUniqueIntegralError, NotFaithfulError,
                        derived_dump)
from .report import Report
from .scalars import ComplexField
from .suites import SUITES, PreconditionError, Subject, run_all, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3

PRECONDITION_ERRORS = (PreconditionError, NoIntegralError, NonUniqueIntegralError, NotFaithfulError,
                       ModularDataError, InfiniteDimensionalError, NotAnElementError)


class ElementParseError(ValueError):
    pass


def parse_element(alg: Algebra, text: str) -> Element:
    """Parse ``"g"``, ``"2*g - 1/2*x"`` or a JSON list ``[["g", "1"], [2, "-1/2"]]``."""
    by_label = {alg.label(b): b for b in alg.basis}
    text = text.strip()
    if not text:
        raise ElementParseError("empty element")
    f = alg.field
    if text.startswith("[") and text.endswith("]") and text not in by_label:
        try:
            entries = json.loads(text)
            coeffs: dict = {}
            for key, c in entries:
                k = by_label[key] if isinstance(key, str) else alg.basis[key]
                coeffs[k] = coeffs.get(k, f.zero) + f.coerce(Fraction(str(c)) if not isinstance(c, list) else c)
            return alg.element(coeffs)
        except (ValueError, TypeError, KeyError, IndexError, ZeroDivisionError) as exc:
            raise ElementParseError(f"bad coefficient list {text!r}: {exc}") from None
    parts = re.split(r"\s+([+-])\s+", " " + text if text.startswith("-") else text)
    terms = [("+", parts[0])] + list(zip(parts[1::2], parts[2::2]))
    acc = alg.zero()
    for sign, term in terms:
        term = term.strip()
        neg = sign == "-"
        if term.startswith("-") and term[1:].strip() and term not in by_label:
            neg, term = not neg, term[1:].strip()
        coef = Fraction(1)
        if term not in by_label and "*" in term:
            c, _, term = term.partition("*")
            try:
                coef = Fraction(c.strip())
            except (ValueError, ZeroDivisionError):
                raise ElementParseError(f"bad coefficient {c!r}") from None
            term = term.strip()
        if term not in by_label:
            raise ElementParseError(f"unknown basis label {term!r}; labels: {sorted(by_label)}")
        acc = acc + alg.basis_element(by_label[term]).scale(-coef if neg else coef)
    return acc


def _field(args, order: int):
    return ComplexField(args.eps, order) if args.float else None


def load_subject(args) -> Subject:
    if args.builtin:
        name = args.builtin
        try:
            obj = build(name, _field(args, cyclotomic_order(name)), window=args.window)
        except UnknownExampleError as exc:
            raise AlgebraFileError(str(exc)) from None
        if isinstance(obj, PairedCouple):
            return Subject(name, couple=obj, window=args.window)
        return Subject(name, hopf=obj, window=args.window)
    H, phi = load(args.file, _field(args, file_field_order(args.file)))
    return Subject(H.name, hopf=H, phi=phi, window=args.window)


def _emit(rep: Report, args, out) -> None:
    print(rep.render(timings=args.timings), file=out)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(rep.to_json(include_timings=args.timings))


def cmd_check(args, out) -> int:
    subj = load_subject(args)
    rep = run_all(subj) if args.suite == "all" else run_suite(subj, args.suite)
    _emit(rep, args, out)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_derive(args, out) -> int:
    subj = load_subject(args)
    if subj.infinite:
        raise PreconditionError("derive needs a finite-dimensional algebra")
    axioms = check_hopf_axioms(subj.hopf)
    if not axioms.ok:
        bad = axioms.failed()[0]
        raise PreconditionError(f"not a Hopf algebra: {bad.name} fails at {bad.witness}")
    data = subj.data()
    rep = Report("derive", subj.name)
    f = subj.hopf.field
    rep.derived["basis"] = [subj.hopf.alg.label(b) for b in subj.hopf.alg.basis]
    rep.derived.update(derived_dump(data))
    P = subj.pairing()
    mdB = P.data_B.modular
    rep.derived["dual"] = {
        "phi_hat": [f.to_json(x) for x in P.data_B.phi.vector()],
        "psi_hat": [f.to_json(x) for x in P.data_B.psi.vector()],
        "delta_hat": str(mdB.delta),
        "tau_hat": f.to_json(mdB.tau),
        "phi_hat_of_unit": f.to_json(P.data_B.phi(P.B.alg.one())),
    }
    _emit(rep, args, out)
    d = rep.derived
    print(f"basis  = ({', '.join(d['basis'])})", file=out)
    for key in ("phi", "psi"):
        print(f"{key:6} = {d[key]}", file=out)
    print(f"sigma  = {d['sigma']}", file=out)
    print(f"sigma' = {d['sigma_prime']}", file=out)
    print(f"delta  = {d['delta']}", file=out)
    print(f"tau    = {d['tau']}", file=out)
    print(f"dual: delta_hat = {d['dual']['delta_hat']}, tau_hat = {d['dual']['tau_hat']}", file=out)
    return EXIT_OK


def cmd_fourier(args, out) -> int:
    subj = load_subject(args)
    if subj.infinite:
        raise PreconditionError("the Fourier demo needs a finite-dimensional algebra")
    A = subj.hopf.alg
    x = parse_element(A, args.element)
    P = subj.pairing()
    F = FourierPack(P, build_v(P))
    y = F.fourier(x)
    back = F.fourier_inv(y)
    rep = Report("fourier-demo", subj.name)
    rep.derived["element"] = str(x)
    rep.derived["fourier"] = str(y)
    rep.derived["inverse_of_fourier"] = str(back)
    rep.add("roundtrip", back == x, f"{back} != {x}")
    alt = F.fourier_alt_inv(F.fourier_alt(x))
    rep.add("roundtrip_alt", alt == x, f"{alt} != {x}")
    sides = {}
    for e in A.basis_elements():
        t = tensor(x, e)
        lhs, rhs = F.transformed_canonical(t), F.w_inv(F.fourier2(t))
        sides[str(e)] = {"transformed_canonical": str(lhs), "w_inv_of_transforms": str(rhs)}
        rep.add(f"canonical.{A.label(next(iter(e.coeffs)))}", lhs == rhs, f"{lhs} != {rhs}")
    rep.derived["canonical_map_sides"] = sides
    _emit(rep, args, out)
    print(f"F({x}) = {y}", file=out)
    print(f"F^-1(F({x})) = {back}", file=out)
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfdual", description="Exact checks for algebraic quantum groups and their duals.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--builtin", metavar="NAME", help=f"one of {', '.join(BUILTINS)}")
        src.add_argument("--file", metavar="PATH", help="AlgebraFile (JSON, version v1)")
        sp.add_argument("--report", metavar="PATH", help="write the structured JSON report here")
        sp.add_argument("--window", type=int, default=5, metavar="K",
                        help="basis window -K..K for infinite examples (default 5)")
        sp.add_argument("--float", action="store_true", help="approximate complex backend")
        sp.add_argument("--eps", type=float, default=1e-9, help="tolerance for --float (default 1e-9)")
        sp.add_argument("--timings", action="store_true", help="include timings in the structured report")

    c = sub.add_parser("check", help="run a check suite")
    common(c)
    c.add_argument("--suite", default="all", choices=SUITES + ("all",))
    d = sub.add_parser("derive", help="print integrals, modular data and dual data")
    common(d)
    f = sub.add_parser("fourier", help="Fourier transform round trip for one element")
    common(f)
    f.add_argument("--element", required=True, help='e.g. "g", "2*g - 1/2*x" or JSON [["g", "1"]]')
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    handler = {"check": cmd_check, "derive": cmd_derive, "fourier": cmd_fourier}[args.command]
    try:
        return handler(args, out)
    except (AlgebraFileError, ElementParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PRECONDITION_ERRORS as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
