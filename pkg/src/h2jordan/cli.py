"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure (a witness is printed),
2 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions as cons
from .algebra import NoUnit, is_associative, is_commutative, is_jordan
from .fields import FieldError, FieldSpec, NoSqrtMinusOne
from .graded import (RAW, MissingBracketSlot, WrongConvention, build_tensor_algebra,
                     rescale_bracket, verify_bracket_identities)
from .h2 import (DecompositionFailed, FrameError, compute_N, compute_Z,
                 check_module_decomposition, extract_brackets, isomorphism_report,
                 isomorphism_from_decomposition, DecompositionResult, transport,
                 verify_h2_frame)
from .identities import sample_identities
from .io import (ParseError, dump_algebra, dump_bracket, load_algebra, load_bracket,
                 write_text)

OK, MATH_FAIL, INPUT_FAIL = 0, 1, 2


class UsageError(ValueError):
    pass


def _out(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit(text: str, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        write_text(path, text)


def _element(A, name):
    try:
        return A[name]
    except (ValueError, KeyError, NoUnit):
        raise ParseError(f"no element named {name!r}") from None


def cmd_check(args) -> int:
    A = load_algebra(args.path).algebra
    _out(f"dim {A.dim} over {A.field.name}")
    comm = is_commutative(A)
    _out(comm.line())
    _out(is_associative(A).line())
    jordan = is_jordan(A)
    _out(jordan.line())
    if jordan and args.samples:
        for line in sample_identities(A, args.samples, args.seed).lines():
            _out(line)
    return OK if jordan else MATH_FAIL


def _decompose(J, e_name, h_name):
    """Run the pipeline stage by stage, printing as it goes.

    Returns (result, suite) or raises DecompositionFailed naming the stage.
    """
    try:
        frame = verify_h2_frame(J, _element(J, e_name), _element(J, h_name))
    except FrameError as exc:
        raise DecompositionFailed("frame", str(exc)) from None
    Z, N = compute_Z(J, frame), compute_N(J, frame)
    _out(f"dim Z={Z.dim} dim N={N.dim}")
    modules = check_module_decomposition(J, frame, Z, N)
    for line in modules.lines():
        _out(line)
    if not modules:
        raise DecompositionFailed("modules", "module decomposition failed")
    try:
        S = extract_brackets(J, frame, Z, N)
    except ValueError as exc:
        raise DecompositionFailed("brackets", str(exc)) from None
    suite = verify_bracket_identities(S)
    for line in suite.lines():
        _out(line)
    _out(f"brackets trivial: {'YES' if S.is_zero_bracket else 'NO'}")
    return DecompositionResult(J, frame, Z, N, S, modules), suite


def _stage_failure(exc: DecompositionFailed) -> int:
    detail = str(exc).split(": ", 1)[-1]
    if exc.stage == "frame":
        _out(detail)
    _out(f"stage {exc.stage}: FAIL")
    return MATH_FAIL


def cmd_decompose(args) -> int:
    J = load_algebra(args.path).algebra
    try:
        result, suite = _decompose(J, args.e, args.h)
    except DecompositionFailed as exc:
        return _stage_failure(exc)
    if args.emit:
        _emit(dump_bracket(result.S), args.emit)
    return OK if suite else MATH_FAIL


def _twist(S):
    if S.convention != RAW or S.is_zero_bracket:
        return S
    if not S.field.has_sqrt_minus_one:
        raise NoSqrtMinusOne(f"-1 is not a square in {S.field.name}; rewrite the data over "
                             "a field containing a square root of -1 (qi, or gf(p) with p = 1 mod 4)")
    return rescale_bracket(S, S.field.sqrt_minus_one())


def cmd_rebuild(args) -> int:
    S = load_bracket(args.path)
    try:
        S = _twist(S)
    except NoSqrtMinusOne as exc:
        _out(f"NoSqrtMinusOne: {exc}")
        return MATH_FAIL
    J = build_tensor_algebra(S, name="reconstructed")
    _out(f"dim {J.dim} over {J.field.name}")
    jordan = is_jordan(J)
    _out(jordan.line())
    if args.emit:
        _emit(dump_algebra(J), args.emit)
    return OK if jordan else MATH_FAIL


def cmd_roundtrip(args) -> int:
    J = load_algebra(args.path).algebra
    jordan = is_jordan(J)
    _out(jordan.line())
    if not jordan:
        _out("stage jordan: FAIL")
        return MATH_FAIL
    try:
        result, suite = _decompose(J, args.e, args.h)
    except DecompositionFailed as exc:
        return _stage_failure(exc)
    if not suite:
        _out("stage identities: FAIL")
        return MATH_FAIL
    try:
        S = _twist(result.S)
    except NoSqrtMinusOne as exc:
        _out(f"NoSqrtMinusOne: {exc}")
        return MATH_FAIL
    J2 = build_tensor_algebra(S, name="reconstructed")
    f = isomorphism_from_decomposition(result, S, J2)
    report = isomorphism_report(J, J2, f)
    _out(report.line())
    same = transport(J, f, J2.basis_names).same_structure(J2)
    _out(f"transported structure equal: {'YES' if same else 'NO'}")
    if not (report and same):
        _out("stage isomorphism: FAIL")
        return MATH_FAIL
    return OK


def cmd_envelope(args) -> int:
    S = load_bracket(args.path)
    try:
        inv = cons.cohn_envelope(S)
    except (MissingBracketSlot, WrongConvention) as exc:
        _out(f"{type(exc).__name__}: {exc}")
        return MATH_FAIL
    except (cons.NotAssociative, cons.NotInvolutive) as exc:
        _out(f"{type(exc).__name__}: {exc}")
        return MATH_FAIL
    _out(f"dim {inv.A.dim} over {inv.field.name}")
    _out("associative: PASS")
    _out("involution: PASS")
    if args.emit:
        _emit(dump_algebra(inv.A, {"star": inv.star}), args.emit)
    return OK


def _gram(text, vdim):
    if text is None:
        return None
    try:
        gram = json.loads(text)
    except json.JSONDecodeError:
        raise UsageError("--gram must be a JSON matrix such as [[1,0],[0,1]]") from None
    if (not isinstance(gram, list) or len(gram) != vdim
            or not all(isinstance(r, list) and len(r) == vdim for r in gram)):
        raise UsageError(f"--gram must be a {vdim}x{vdim} matrix")
    return [[str(c) for c in row] for row in gram]


def make(kind, F, base=None, star=None, vdim=3, gram=None, total=False):
    """Return the serialized text for a generated example."""
    if kind == "h2f":
        return dump_algebra(cons.h2f(F))
    if kind == "m2":
        return dump_algebra(cons.m2_assoc(F))
    if kind == "m2plus":
        return dump_algebra(cons.m2_plus(F)[0])
    if kind == "h4f":
        return dump_algebra(cons.h4f(F))
    if kind == "spinfactor":
        if gram is not None:
            gram = [[F.parse(c) for c in row] for row in gram]
        return dump_algebra(cons.spin_factor(F, vdim, gram)[0])
    if kind in ("h2matrix", "split"):
        if base is None or star is None:
            raise UsageError(f"make {kind} needs --base and --star")
        inv = cons.involutive(base, star, F)
        if kind == "h2matrix":
            return dump_algebra(cons.build_h2_matrix(inv)[0])
        return dump_bracket(cons.split_involution(inv, total=total))
    raise UsageError(f"unknown kind {kind!r}")


KINDS = ("h2f", "m2", "m2plus", "h2matrix", "spinfactor", "h4f", "split")


def cmd_make(args) -> int:
    F = FieldSpec.from_name(args.field)
    try:
        text = make(args.kind, F, args.base, args.star, args.vdim,
                    _gram(args.gram, args.vdim), args.total)
    except cons.InvalidFormData as exc:
        _out(f"InvalidFormData: {exc}")
        return MATH_FAIL
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(text, args.emit)
    return OK


def cmd_verify_lemma4(args) -> int:
    suite = cons.verify_lemma4(FieldSpec.from_name(args.field), seed=args.seed)
    for line in suite.lines():
        _out(line)
    n = sum(r.passed for r in suite.reports)
    _out(f"{n}/{len(suite.reports)} PASS")
    return OK if suite else MATH_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="h2jordan",
                                description="Exact certification and coordinatization of "
                                            "Jordan algebras containing H2(F).")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="certify commutativity, associativity and the Jordan identity")
    c.add_argument("path")
    c.add_argument("--samples", type=int, default=0,
                   help="also test the identity suite on this many random tuples")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_check)

    for name, func, helptext in (
            ("decompose", cmd_decompose, "extract S = Z + N and its bracket"),
            ("roundtrip", cmd_roundtrip, "decompose, rebuild and verify the isomorphism")):
        d = sub.add_parser(name, help=helptext)
        d.add_argument("path")
        d.add_argument("--e", default="e", help="name of the idempotent (default e)")
        d.add_argument("--h", default="h", help="name of the symmetry (default h)")
        if name == "decompose":
            d.add_argument("--emit", metavar="OUT", help="write the bracket file here ('-' = stdout)")
        d.set_defaults(func=func)

    r = sub.add_parser("rebuild", help="rebuild H2(F)(x)S0 + Fk(x)S1 from a bracket file")
    r.add_argument("path")
    r.add_argument("--emit", metavar="OUT")
    r.set_defaults(func=cmd_rebuild)

    v = sub.add_parser("envelope", help="associative envelope of a total bracket file")
    v.add_argument("path")
    v.add_argument("--emit", metavar="OUT")
    v.set_defaults(func=cmd_envelope)

    m = sub.add_parser("make", help="generate an example file")
    m.add_argument("kind", choices=KINDS)
    m.add_argument("--field", default="q")
    m.add_argument("--base", choices=cons.BASES)
    m.add_argument("--star", choices=cons.STARS)
    m.add_argument("--vdim", type=int, default=3)
    m.add_argument("--gram", help="JSON gram matrix for spinfactor, e.g. [[1,0],[0,1]]")
    m.add_argument("--total", action="store_true", help="split: include the odd-odd bracket")
    m.add_argument("--emit", metavar="OUT", default="-")
    m.set_defaults(func=cmd_make)

    l4 = sub.add_parser("verify-lemma4", help="commutator/trace identities in M2(F)")
    l4.add_argument("--field", default="q")
    l4.add_argument("--seed", type=int, default=0)
    l4.set_defaults(func=cmd_verify_lemma4)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_FAIL if exc.code else OK
    try:
        return args.func(args)
    except (ParseError, FieldError, UsageError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return INPUT_FAIL


if __name__ == "__main__":
    sys.exit(main())
