from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from preleibniz import formats
from preleibniz.algebra import LeibnizAlgebra, LeibnizRep, PreLeibnizAlgebra, PreLeibnizRep
from preleibniz.cochain import ColoredCochain, PlainCochain
from preleibniz.deformation import TruncatedDeformation
from preleibniz.fixtures import crossed_module_samples, leibniz2, p2, skeletal_samples, strict_samples
from preleibniz.formats import FormatError, dumps, load, loads, parse_document, save, to_doc
from preleibniz.homotopy2 import sum_two_term

DATA = Path(__file__).parent / "data"


def parse(text, base_dim=None):
    return parse_document(loads(text), base_dim)


def test_loads_rejects_floats_and_constants():
    with pytest.raises(FormatError, match="not exact"):
        loads('{"x": 0.5}')
    with pytest.raises(FormatError):
        loads('{"x": NaN}')
    with pytest.raises(FormatError):
        loads('{"x": Infinity}')
    with pytest.raises(FormatError):
        loads('{"x": 1e3}')


def test_loads_rejects_duplicate_keys():
    with pytest.raises(FormatError, match="duplicate key 'dim'"):
        loads('{"dim": 1, "dim": 2}')


def test_syntax_errors_carry_line_and_column():
    with pytest.raises(FormatError, match=r"line 2, column \d+"):
        loads('{\n  "kind": }')


def test_unknown_or_missing_kind():
    with pytest.raises(FormatError, match="unknown kind"):
        parse('{"kind": "lie_algebra"}')
    with pytest.raises(FormatError, match="missing field 'kind'"):
        parse('{"dim": 2}')
    with pytest.raises(FormatError, match="expected an object"):
        parse("[1, 2]")


def test_values():
    P = parse('{"kind": "pre_leibniz_algebra", "dim": 1, "left": [[1, 1, 1, "-2/4"]], "right": [[1, 1, 1, 3]]}')
    assert P.left[0, 0, 0] == Fraction(-1, 2) and P.right[0, 0, 0] == 3
    for bad in ('"1/0"', '"abc"', "true", "null", '"1.5"'):
        with pytest.raises(FormatError):
            parse('{"kind": "leibniz_algebra", "dim": 1, "bracket": [[1, 1, 1, %s]]}' % bad)


def test_indices_are_checked():
    base = '{"kind": "leibniz_algebra", "dim": 2, "bracket": [%s]}'
    for row in ("[1, 1, 3, 1]", "[0, 1, 1, 1]", "[1, 1, 1]", '[1, "1", 1, 1]', "[1, 1, true, 1]"):
        with pytest.raises(FormatError, match=r"bracket\[0\]"):
            parse(base % row)
    with pytest.raises(FormatError, match="duplicate entry"):
        parse(base % "[1, 1, 2, 1], [1, 1, 2, 3]")


def test_dimensions_are_checked():
    for dim in ("-1", '"2"', "true", "1.0"):
        with pytest.raises(FormatError):
            parse('{"kind": "leibniz_algebra", "dim": %s, "bracket": []}' % dim)


def test_malformed_corpus_files():
    with pytest.raises(FormatError, match="malformed_index.json"):
        load(DATA / "malformed_index.json")
    with pytest.raises(FormatError, match="not exact"):
        load(DATA / "malformed_syntax.json")
    with pytest.raises(FormatError, match="cannot read"):
        load(DATA / "missing.json")


def test_omitted_tensors_are_zero():
    P = parse('{"kind": "pre_leibniz_algebra", "dim": 2}')
    assert P == PreLeibnizAlgebra.zero(2)


def test_rep_base_dim():
    text = '{"kind": "leibniz_rep", "module_dim": 1, "rhoL": [[2, 1, 1, 1]]}'
    R = parse(text, base_dim=2)
    assert R.base_dim == 2 and R.rhoL[1, 0, 0] == 1
    with pytest.raises(FormatError, match="base_dim is required"):
        parse(text)
    text = '{"kind": "leibniz_rep", "base_dim": 2, "module_dim": 1}'
    assert parse(text) == LeibnizRep.zero(2, 1)
    with pytest.raises(FormatError, match="does not match"):
        parse(text, base_dim=3)


def test_corpus_files_load():
    P = load(DATA / "p2.json")
    assert P == p2()
    assert load(DATA / "leibniz2.json") == leibniz2()
    assert load(DATA / "p2_adjoint_rep.json", base_dim=2) == PreLeibnizRep.adjoint(P)
    assert formats.kind_of(DATA / "strict.json") == "two_term_pre_leibniz"


def test_linear_maps_are_input_output_value():
    M = parse('{"kind": "linear_map", "dim_in": 2, "dim_out": 3, "entries": [[1, 3, "1/2"]]}')
    assert M.shape == (3, 2) and M[2, 0] == Fraction(1, 2)


def round_trip(obj, tmp_path):
    path = tmp_path / "obj.json"
    save(obj, path)
    back = load(path)
    assert dumps(to_doc(back)) == path.read_text().rstrip("\n")
    return back


def test_round_trips(tmp_path):
    P = p2()
    objects = [
        P, leibniz2(), PreLeibnizRep.adjoint(P), LeibnizRep.adjoint(leibniz2()),
        P.pi * Fraction(-3, 7), PlainCochain.identity(3),
        TruncatedDeformation.scaling(P, 3),
        *skeletal_samples(3), *strict_samples(3), sum_two_term(strict_samples(2)[1]),
        *crossed_module_samples(4),
    ]
    for obj in objects:
        assert round_trip(obj, tmp_path) == obj


def test_round_trip_dimension_zero(tmp_path):
    for obj in (PreLeibnizAlgebra.zero(0), LeibnizAlgebra.zero(0), ColoredCochain.zeros(2, 0, 0)):
        back = round_trip(obj, tmp_path)
        assert back == obj


def test_rb_operator_and_triple_docs():
    t_m1 = np.array([[1, 0], [0, -1]], dtype=np.int64)
    t_0 = np.array([[0, 2], [0, 0]], dtype=np.int64)
    back = parse(dumps(formats.rb_operator_doc(t_m1, t_0)))
    assert np.array_equal(back[0], t_m1) and np.array_equal(back[1], t_0)

    P = p2()
    R = PreLeibnizRep.adjoint(P)
    theta = ColoredCochain.zeros(3, 2, 2)
    Q, R2, th = parse(dumps(formats.skeletal_triple_doc(P, R, theta)))
    assert (Q, R2, th) == (P, R, theta)


def test_writer_output_is_canonical():
    f = ColoredCochain.from_entries(1, 1, 1, [(1, 1, 1, Fraction(2, 4))])
    text = dumps(to_doc(f))
    assert '"1/2"' in text and "2/4" not in text
    assert dumps(to_doc(f)) == text
    with pytest.raises(TypeError):
        to_doc(object())
