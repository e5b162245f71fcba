"""Command-line front end.

Exit codes: 0 success, 1 a check failed (or an extension is obstructed),
2 unreadable or inconsistent input.
"""

from __future__ import annotations

import argparse
import contextlib
import sys

from . import formats
from .algebra import (LeibnizAlgebra, LeibnizRep, PreLeibnizAlgebra, PreLeibnizRep,
                      check_leibniz, check_leibniz_rep, check_pre_leibniz, check_pre_leibniz_rep,
                      semidirect, totalize_algebra)
from .cochain import ColoredCochain, PlainCochain, balavoine_bracket, pl_bracket
from .cohomology import cohomology_dims, delta_pl, lp_cohomology_dims
from .deformation import TruncatedDeformation, check_order_n, coboundary_preimage, extend, obstruction
from .exactla import DimensionError, format_rational
from .homotopy2 import (CrossedModule, TwoTermLeibniz, TwoTermPreLeibniz, check_crossed_module,
                        check_two_term_leibniz, check_two_term_pre, crossed_to_strict,
                        induced_pre_from_rb, skeletal_to_triple, strict_to_crossed,
                        triple_to_skeletal, check_rb_two_term)


class InputError(Exception):
    pass


class CheckFailed(Exception):
    pass


def _load(path, *types, base_dim=None, kind=None):
    try:
        if kind is not None and formats.kind_of(path) != kind:
            raise InputError(f"{path}: expected a {kind!r} document")
        obj = formats.load(path, base_dim)
    except (formats.FormatError, DimensionError) as exc:
        raise InputError(str(exc)) from None
    if types and not isinstance(obj, types):
        names = " or ".join(t.__name__ for t in types)
        raise InputError(f"{path}: expected {names}, got {type(obj).__name__}")
    return obj


def _require(report):
    if not report:
        raise CheckFailed(report.summary())


def _emit(obj, out):
    doc = obj if isinstance(obj, dict) else formats.to_doc(obj)
    out.write(formats.dumps(doc) + "\n")


def _rep_for(algebra, source):
    if source == "adjoint":
        if isinstance(algebra, PreLeibnizAlgebra):
            return PreLeibnizRep.adjoint(algebra)
        return LeibnizRep.adjoint(algebra)
    want = PreLeibnizRep if isinstance(algebra, PreLeibnizAlgebra) else LeibnizRep
    return _load(source, want, base_dim=algebra.dim)


# --------------------------------------------------------------------------
# verbs


def cmd_check(args, out):
    obj = _load(args.file)
    reports = []
    if isinstance(obj, PreLeibnizAlgebra):
        reports.append(check_pre_leibniz(obj))
        if args.rep:
            if reports[0]:
                reports.append(check_pre_leibniz_rep(obj, _rep_for(obj, args.rep)))
    elif isinstance(obj, LeibnizAlgebra):
        reports.append(check_leibniz(obj))
        if args.rep and reports[0]:
            reports.append(check_leibniz_rep(obj, _rep_for(obj, args.rep)))
    elif args.rep:
        raise InputError("--rep only applies to algebra files")
    elif isinstance(obj, TwoTermPreLeibniz):
        reports.append(check_two_term_pre(obj))
    elif isinstance(obj, TwoTermLeibniz):
        reports.append(check_two_term_leibniz(obj))
    elif isinstance(obj, CrossedModule):
        reports.append(check_crossed_module(obj))
    elif isinstance(obj, TruncatedDeformation):
        rep = check_order_n(obj)
        if rep:
            out.write(f"deformation of order {obj.order}: OK\n")
            return 0
        out.write(f"deformation of order {obj.order}: FAILED at order {rep.first_failing_order}\n")
        for entry in rep.residual.entries():
            out.write(f"  {list(entry[:-1])} {format_rational(entry[-1])}\n")
        return 1
    elif isinstance(obj, tuple) and len(obj) == 3:
        P, R, theta = obj
        reports.append(check_pre_leibniz(P))
        if reports[-1]:
            reports.append(check_pre_leibniz_rep(P, R))
        if all(reports):
            ok = delta_pl(P, R, theta).is_zero()
            out.write("\n".join(r.summary() for r in reports) + "\n")
            out.write(f"3-cocycle: {'OK' if ok else 'FAILED'}\n")
            return 0 if ok else 1
    else:
        raise InputError(f"{args.file}: nothing to check for {type(obj).__name__}")
    for r in reports:
        out.write(r.summary() + "\n")
    return 0 if all(reports) else 1


def cmd_total(args, out):
    P = _load(args.algebra, PreLeibnizAlgebra)
    _require(check_pre_leibniz(P))
    _emit(totalize_algebra(P), out)
    return 0


def cmd_semidirect(args, out):
    P = _load(args.algebra, PreLeibnizAlgebra)
    _require(check_pre_leibniz(P))
    R = _rep_for(P, args.rep)
    _require(check_pre_leibniz_rep(P, R))
    _emit(semidirect(P, R), out)
    return 0


def cmd_bracket(args, out):
    f = _load(args.first, ColoredCochain, PlainCochain)
    g = _load(args.second, ColoredCochain, PlainCochain)
    if type(f) is not type(g):
        raise InputError("both cochains must be colored or both plain")
    try:
        b = pl_bracket(f, g) if isinstance(f, ColoredCochain) else balavoine_bracket(f, g)
    except DimensionError as exc:
        raise InputError(str(exc)) from None
    _emit(b, out)
    return 0


def cmd_cohomology(args, out):
    A = _load(args.algebra, PreLeibnizAlgebra, LeibnizAlgebra)
    if args.max < 1:
        raise InputError("--max must be at least 1")
    if isinstance(A, PreLeibnizAlgebra):
        _require(check_pre_leibniz(A))
        R = _rep_for(A, args.rep)
        _require(check_pre_leibniz_rep(A, R))
        dims = cohomology_dims(A, R, args.max)
    else:
        _require(check_leibniz(A))
        R = _rep_for(A, args.rep)
        _require(check_leibniz_rep(A, R))
        dims = lp_cohomology_dims(A, R, args.max)
    for n, k in enumerate(dims, start=1):
        out.write(f"H^{n} = {k}\n")
    return 0


def _valid_deformation(path):
    D = _load(path, TruncatedDeformation)
    _require(check_pre_leibniz(D.base))
    rep = check_order_n(D)
    if not rep:
        raise CheckFailed(f"not a deformation of order {D.order}: fails at order {rep.first_failing_order}")
    return D


def cmd_obstruction(args, out):
    D = _valid_deformation(args.deformation)
    ob = obstruction(D)
    _emit(ob, out)
    trivial = coboundary_preimage(D.base, ob) is not None
    out.write(f"class: {'trivial' if trivial else 'nontrivial'}\n")
    return 0


def cmd_extend(args, out):
    D = _valid_deformation(args.deformation)
    term = extend(D)
    if term is None:
        out.write("OBSTRUCTED\n")
        return 1
    _emit(term, out)
    return 0


def cmd_convert(args, out):
    mode, files = args.mode, args.files
    if len(files) != 1:
        raise InputError(f"{mode} takes exactly one file")
    if mode == "skeletal-to-triple":
        X = _load(files[0], TwoTermPreLeibniz)
        _require(check_two_term_pre(X))
        if not X.is_skeletal():
            raise CheckFailed("structure is not skeletal (d != 0)")
        _emit(formats.skeletal_triple_doc(*skeletal_to_triple(X)), out)
    elif mode == "triple-to-skeletal":
        P, R, theta = _load(files[0], kind="skeletal_triple")
        _require(check_pre_leibniz(P))
        _require(check_pre_leibniz_rep(P, R))
        if not delta_pl(P, R, theta).is_zero():
            raise CheckFailed("theta is not a 3-cocycle")
        _emit(triple_to_skeletal(P, R, theta), out)
    elif mode == "strict-to-crossed":
        X = _load(files[0], TwoTermPreLeibniz)
        _require(check_two_term_pre(X))
        if not X.is_strict():
            raise CheckFailed("structure is not strict (pi3 != 0)")
        _emit(strict_to_crossed(X), out)
    elif mode == "crossed-to-strict":
        X = _load(files[0], CrossedModule)
        _require(check_crossed_module(X))
        _emit(crossed_to_strict(X), out)
    return 0


def cmd_rb_induce(args, out):
    Y = _load(args.two_term, TwoTermLeibniz)
    Tpair = _load(args.operator, kind="two_term_rb_operator")
    if len(Tpair) != 2 or Tpair[0].shape != (Y.dim_m1,) * 2 or Tpair[1].shape != (Y.dim_0,) * 2:
        raise InputError("operator dimensions do not match the two-term structure")
    _require(check_two_term_leibniz(Y))
    _require(check_rb_two_term(Y, Tpair))
    _emit(induced_pre_from_rb(Y, Tpair), out)
    return 0


CONVERSIONS = ("skeletal-to-triple", "triple-to-skeletal", "strict-to-crossed", "crossed-to-strict")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="preleibniz", description="Exact computations with (pre-)Leibniz algebras.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("check", help="verify the defining identities of any supported file")
    s.add_argument("file")
    s.add_argument("--rep", help="representation file, or 'adjoint'")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("total", help="total Leibniz algebra of a pre-Leibniz algebra")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_total)

    s = sub.add_parser("semidirect", help="semidirect product with a representation")
    s.add_argument("algebra")
    s.add_argument("rep", help="representation file, or 'adjoint'")
    s.set_defaults(func=cmd_semidirect)

    s = sub.add_parser("bracket", help="graded bracket of two cochains")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_bracket)

    s = sub.add_parser("cohomology", help="dimensions of H^1..H^max")
    s.add_argument("algebra")
    s.add_argument("--rep", default="adjoint", help="representation file, or 'adjoint' (default)")
    s.add_argument("--max", type=int, default=2)
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("obstruction", help="obstruction cocycle of a truncated deformation")
    s.add_argument("deformation")
    s.set_defaults(func=cmd_obstruction)

    s = sub.add_parser("extend", help="next term of a truncated deformation")
    s.add_argument("deformation")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("convert", help="classification correspondences for 2-term structures")
    s.add_argument("mode", choices=CONVERSIONS)
    s.add_argument("files", nargs="+")
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("rb-induce", help="2-term pre-Leibniz structure induced by a Rota-Baxter operator")
    s.add_argument("two_term")
    s.add_argument("operator")
    s.set_defaults(func=cmd_rb_induce)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out)
    except (InputError, DimensionError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except CheckFailed as exc:
        out.write(f"{exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
