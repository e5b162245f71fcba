"""Reading and writing the restricted JSON file formats.

Every document is an object with a ``"kind"`` field.  Structure constants are
lists of nonzero entries ``[i1, ..., k, "p/q"]`` with 1-based indices (colored
tensors carry the color first); omitted entries are zero.  Linear maps are
lists of ``[input, output, "p/q"]``.  Values may be written as integers or as
``"p/q"`` strings; floats are rejected.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import _tensor as T
from .algebra import LeibnizAlgebra, LeibnizRep, PreLeibnizAlgebra, PreLeibnizRep
from .cochain import ColoredCochain, PlainCochain
from .deformation import TruncatedDeformation
from .exactla import format_rational, parse_rational
from .homotopy2 import CrossedModule, TwoTermLeibniz, TwoTermPreLeibniz


class FormatError(ValueError):
    """Malformed or inconsistent input document."""


# --------------------------------------------------------------------------
# low-level field access


def _reject_float(text):
    raise FormatError(f"floating point value {text} is not exact; write it as \"p/q\"")


def _no_duplicate_keys(pairs):
    seen = {}
    for k, v in pairs:
        if k in seen:
            raise FormatError(f"duplicate key {k!r}")
        seen[k] = v
    return seen


def loads(text: str):
    try:
        return json.loads(text, parse_float=_reject_float, object_pairs_hook=_no_duplicate_keys,
                          parse_constant=_reject_float)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _field(doc, name, where):
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: expected an object")
    if name not in doc:
        raise FormatError(f"{where}: missing field {name!r}")
    return doc[name]


def _nat(doc, name, where):
    v = _field(doc, name, where)
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise FormatError(f"{where}.{name}: expected a nonnegative integer, got {v!r}")
    return v


def _value(v, where) -> Fraction:
    if isinstance(v, bool):
        raise FormatError(f"{where}: boolean is not a rational")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return parse_rational(v)
        except ValueError as exc:
            raise FormatError(f"{where}: {exc}") from None
    raise FormatError(f"{where}: expected \"p/q\" or an integer, got {v!r}")


def _tensor(doc, name, shape, where, optional=True):
    """Dense exact array from a list of nonzero entries."""
    if name not in doc and optional:
        return T.zeros(shape)
    rows = _field(doc, name, where)
    here = f"{where}.{name}"
    if not isinstance(rows, list):
        raise FormatError(f"{here}: expected a list of entries")
    arr = np.full(shape, Fraction(0), dtype=object)
    seen = set()
    for n, row in enumerate(rows):
        at = f"{here}[{n}]"
        if not isinstance(row, list) or len(row) != len(shape) + 1:
            raise FormatError(f"{at}: expected {len(shape)} indices and a value")
        idx = []
        for axis, (i, size) in enumerate(zip(row[:-1], shape)):
            if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= size:
                raise FormatError(f"{at}: index {i!r} in position {axis + 1} outside 1..{size}")
            idx.append(i - 1)
        idx = tuple(idx)
        if idx in seen:
            raise FormatError(f"{at}: duplicate entry for index {tuple(i + 1 for i in idx)}")
        seen.add(idx)
        arr[idx] = _value(row[-1], at)
    return T.exact_array(arr)


def _linear_map(doc, name, dim_in, dim_out, where, optional=True):
    """Matrix (rows = outputs) from entries [input, output, value]."""
    arr = _tensor(doc, name, (dim_in, dim_out), where, optional)
    return np.ascontiguousarray(arr.T)


def _kind(doc, where="document"):
    k = _field(doc, "kind", where)
    if k not in READERS:
        raise FormatError(f"{where}: unknown kind {k!r}")
    return k


# --------------------------------------------------------------------------
# readers


def read_algebra(doc, where="algebra"):
    kind = _field(doc, "kind", where)
    d = _nat(doc, "dim", where)
    if kind == "pre_leibniz_algebra":
        return PreLeibnizAlgebra.from_products(_tensor(doc, "left", (d, d, d), where),
                                               _tensor(doc, "right", (d, d, d), where))
    if kind == "leibniz_algebra":
        return LeibnizAlgebra(_tensor(doc, "bracket", (d, d, d), where))
    raise FormatError(f"{where}: expected an algebra, got kind {kind!r}")


def read_rep(doc, base_dim=None, where="rep"):
    kind = _field(doc, "kind", where)
    e = _nat(doc, "module_dim", where)
    if "base_dim" in doc:
        d = _nat(doc, "base_dim", where)
        if base_dim is not None and d != base_dim:
            raise FormatError(f"{where}: base_dim {d} does not match the algebra dimension {base_dim}")
    elif base_dim is not None:
        d = base_dim
    else:
        raise FormatError(f"{where}: base_dim is required when no algebra is given")
    if kind == "pre_leibniz_rep":
        L = lambda n: _tensor(doc, n, (d, e, e), where)
        R = lambda n: _tensor(doc, n, (e, d, e), where)
        return PreLeibnizRep(L("leftL"), L("rightL"), R("leftR"), R("rightR"))
    if kind == "leibniz_rep":
        return LeibnizRep(_tensor(doc, "rhoL", (d, e, e), where), _tensor(doc, "rhoR", (e, d, e), where))
    raise FormatError(f"{where}: expected a representation, got kind {kind!r}")


def read_cochain(doc, where="cochain"):
    kind = _field(doc, "kind", where)
    n = _nat(doc, "arity", where)
    if n < 1:
        raise FormatError(f"{where}: arity must be >= 1")
    d, e = _nat(doc, "domain_dim", where), _nat(doc, "codomain_dim", where)
    if kind == "colored_cochain":
        return ColoredCochain(_tensor(doc, "entries", (n,) + (d,) * n + (e,), where))
    if kind == "plain_cochain":
        return PlainCochain(_tensor(doc, "entries", (d,) * n + (e,), where))
    raise FormatError(f"{where}: expected a cochain, got kind {kind!r}")


def read_deformation(doc, where="deformation"):
    base = read_algebra(_field(doc, "base", where), f"{where}.base")
    if not isinstance(base, PreLeibnizAlgebra):
        raise FormatError(f"{where}.base: expected a pre-Leibniz algebra")
    order = _nat(doc, "order", where)
    terms = _field(doc, "terms", where)
    if not isinstance(terms, list) or len(terms) != order or order < 1:
        raise FormatError(f"{where}: expected {order} >= 1 terms")
    cochains = []
    for n, t in enumerate(terms):
        c = read_cochain(t, f"{where}.terms[{n}]")
        if not isinstance(c, ColoredCochain) or c.arity != 2 or c.domain_dim != base.dim or c.codomain_dim != base.dim:
            raise FormatError(f"{where}.terms[{n}]: expected a colored 2-cochain on the base")
        cochains.append(c)
    return TruncatedDeformation(base, cochains)


def read_two_term(doc, where="two_term"):
    kind = _field(doc, "kind", where)
    m, z = _nat(doc, "dim_m1", where), _nat(doc, "dim_0", where)
    d = _linear_map(doc, "d", m, z, where)
    if kind == "two_term_pre_leibniz":
        return TwoTermPreLeibniz(m, z, d, _tensor(doc, "pi2_00", (2, z, z, z), where),
                                 _tensor(doc, "pi2_0m", (2, z, m, m), where),
                                 _tensor(doc, "pi2_m0", (2, m, z, m), where),
                                 _tensor(doc, "pi3", (3, z, z, z, m), where))
    if kind == "two_term_leibniz":
        return TwoTermLeibniz(m, z, d, _tensor(doc, "mu2_00", (z, z, z), where),
                              _tensor(doc, "mu2_0m", (z, m, m), where),
                              _tensor(doc, "mu2_m0", (m, z, m), where),
                              _tensor(doc, "mu3", (z, z, z, m), where))
    raise FormatError(f"{where}: expected a two-term structure, got kind {kind!r}")


def read_crossed_module(doc, where="crossed_module"):
    A = read_algebra(_field(doc, "A", where), f"{where}.A")
    B = read_algebra(_field(doc, "B", where), f"{where}.B")
    if not (isinstance(A, PreLeibnizAlgebra) and isinstance(B, PreLeibnizAlgebra)):
        raise FormatError(f"{where}: A and B must be pre-Leibniz algebras")
    a, b = A.dim, B.dim
    return CrossedModule(A, B, _linear_map(doc, "d", a, b, where),
                         _tensor(doc, "piL", (2, b, a, a), where), _tensor(doc, "piR", (2, a, b, a), where))


def read_skeletal_triple(doc, where="skeletal_triple"):
    P = read_algebra(_field(doc, "algebra", where), f"{where}.algebra")
    if not isinstance(P, PreLeibnizAlgebra):
        raise FormatError(f"{where}.algebra: expected a pre-Leibniz algebra")
    R = read_rep(_field(doc, "rep", where), P.dim, f"{where}.rep")
    theta = read_cochain(_field(doc, "theta", where), f"{where}.theta")
    if not isinstance(theta, ColoredCochain) or theta.arity != 3:
        raise FormatError(f"{where}.theta: expected a colored 3-cochain")
    if theta.domain_dim != P.dim or theta.codomain_dim != R.module_dim:
        raise FormatError(f"{where}.theta: dimensions do not match the algebra and module")
    return P, R, theta


def read_rb_operator(doc, where="rb_operator"):
    m, z = _nat(doc, "dim_m1", where), _nat(doc, "dim_0", where)
    return _linear_map(doc, "T_m1", m, m, where), _linear_map(doc, "T_0", z, z, where)


def read_linear_map(doc, where="linear_map"):
    a, b = _nat(doc, "dim_in", where), _nat(doc, "dim_out", where)
    return _linear_map(doc, "entries", a, b, where)


READERS = {
    "pre_leibniz_algebra": read_algebra,
    "leibniz_algebra": read_algebra,
    "pre_leibniz_rep": read_rep,
    "leibniz_rep": read_rep,
    "colored_cochain": read_cochain,
    "plain_cochain": read_cochain,
    "deformation": read_deformation,
    "two_term_pre_leibniz": read_two_term,
    "two_term_leibniz": read_two_term,
    "crossed_module": read_crossed_module,
    "skeletal_triple": read_skeletal_triple,
    "two_term_rb_operator": read_rb_operator,
    "linear_map": read_linear_map,
}


def parse_document(doc, base_dim=None):
    kind = _kind(doc)
    reader = READERS[kind]
    if reader is read_rep:
        return read_rep(doc, base_dim)
    return reader(doc)


def load(path, base_dim=None):
    """Parse a file into the object named by its ``kind``."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    try:
        return parse_document(loads(text), base_dim)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def kind_of(path) -> str:
    try:
        return _kind(loads(Path(path).read_text(encoding="utf-8")))
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


# --------------------------------------------------------------------------
# writers


def _entries(arr):
    return [[i + 1 for i in idx] + [format_rational(v)] for idx, v in T.nonzero_entries(arr)]


def _map_entries(mat):
    return _entries(np.ascontiguousarray(T.exact_array(mat).T))


def algebra_doc(A):
    if isinstance(A, PreLeibnizAlgebra):
        return {"kind": "pre_leibniz_algebra", "dim": A.dim, "left": _entries(A.left), "right": _entries(A.right)}
    return {"kind": "leibniz_algebra", "dim": A.dim, "bracket": _entries(A.tensor)}


def rep_doc(R):
    if isinstance(R, PreLeibnizRep):
        return {"kind": "pre_leibniz_rep", "base_dim": R.base_dim, "module_dim": R.module_dim,
                "leftL": _entries(R.leftL), "rightL": _entries(R.rightL),
                "leftR": _entries(R.leftR), "rightR": _entries(R.rightR)}
    return {"kind": "leibniz_rep", "base_dim": R.base_dim, "module_dim": R.module_dim,
            "rhoL": _entries(R.rhoL), "rhoR": _entries(R.rhoR)}


def cochain_doc(f):
    kind = "colored_cochain" if isinstance(f, ColoredCochain) else "plain_cochain"
    return {"kind": kind, "arity": f.arity, "domain_dim": f.domain_dim,
            "codomain_dim": f.codomain_dim, "entries": _entries(f.coeffs)}


def deformation_doc(D):
    return {"kind": "deformation", "base": algebra_doc(D.base), "order": D.order,
            "terms": [cochain_doc(t) for t in D.terms]}


def two_term_doc(X):
    if isinstance(X, TwoTermPreLeibniz):
        return {"kind": "two_term_pre_leibniz", "dim_m1": X.dim_m1, "dim_0": X.dim_0,
                "d": _map_entries(X.d), "pi2_00": _entries(X.pi2_00), "pi2_0m": _entries(X.pi2_0m),
                "pi2_m0": _entries(X.pi2_m0), "pi3": _entries(X.pi3)}
    return {"kind": "two_term_leibniz", "dim_m1": X.dim_m1, "dim_0": X.dim_0,
            "d": _map_entries(X.d), "mu2_00": _entries(X.mu2_00), "mu2_0m": _entries(X.mu2_0m),
            "mu2_m0": _entries(X.mu2_m0), "mu3": _entries(X.mu3)}


def crossed_module_doc(X):
    return {"kind": "crossed_module", "A": algebra_doc(X.A), "B": algebra_doc(X.B),
            "d": _map_entries(X.d), "piL": _entries(X.piL), "piR": _entries(X.piR)}


def skeletal_triple_doc(P, R, theta):
    return {"kind": "skeletal_triple", "algebra": algebra_doc(P), "rep": rep_doc(R), "theta": cochain_doc(theta)}


def rb_operator_doc(t_m1, t_0):
    return {"kind": "two_term_rb_operator", "dim_m1": t_m1.shape[0], "dim_0": t_0.shape[0],
            "T_m1": _map_entries(t_m1), "T_0": _map_entries(t_0)}


def to_doc(obj):
    if isinstance(obj, (PreLeibnizAlgebra, LeibnizAlgebra)):
        return algebra_doc(obj)
    if isinstance(obj, (PreLeibnizRep, LeibnizRep)):
        return rep_doc(obj)
    if isinstance(obj, (ColoredCochain, PlainCochain)):
        return cochain_doc(obj)
    if isinstance(obj, TruncatedDeformation):
        return deformation_doc(obj)
    if isinstance(obj, (TwoTermPreLeibniz, TwoTermLeibniz)):
        return two_term_doc(obj)
    if isinstance(obj, CrossedModule):
        return crossed_module_doc(obj)
    raise TypeError(f"no file format for {type(obj).__name__}")


def dumps(doc, indent: int = 0) -> str:
    """Stable text form: one field per line, one structure-constant entry per line."""
    pad = "  " * (indent + 1)
    if isinstance(doc, dict):
        items = [f"{pad}{json.dumps(k)}: {dumps(v, indent + 1)}" for k, v in doc.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(doc, list):
        if not doc:
            return "[]"
        rows = [pad + (dumps(v, indent + 1) if isinstance(v, dict) else json.dumps(v, separators=(", ", ": ")))
                for v in doc]
        return "[\n" + ",\n".join(rows) + "\n" + "  " * indent + "]"
    return json.dumps(doc)


def save(obj, path) -> None:
    Path(path).write_text(dumps(to_doc(obj)) + "\n", encoding="utf-8")
