import os
import subprocess
import sys

import pytest

from cli_cases import CASES, DATA, GOLDEN, VERBS, render, run_case
from preleibniz import PreLeibnizAlgebra, formats

# Set PRELEIBNIZ_UPDATE_GOLDEN=1 to rewrite tests/golden after an intended output change.
UPDATE = os.environ.get("PRELEIBNIZ_UPDATE_GOLDEN") == "1"


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    argv, expected = CASES[name]
    text = render(*run_case(argv))
    path = GOLDEN / f"{name}.txt"
    if UPDATE:
        path.write_text(text, encoding="utf-8")
    assert text == path.read_text(encoding="utf-8")
    assert text.startswith(f"exit: {expected}\n")


@pytest.mark.parametrize("verb", VERBS)
def test_every_verb_has_pass_and_malformed_cases(verb):
    codes = {code for argv, code in CASES.values() if argv[0] == verb}
    assert {0, 2} <= codes
    if verb != "bracket":
        assert 1 in codes


def test_reports_are_deterministic():
    for argv, _ in CASES.values():
        assert run_case(argv) == run_case(argv)


def test_check_p2_reports_ok():
    code, out, err = run_case(["check", "p2.json"])
    assert (code, out, err) == (0, "pre-Leibniz: OK\n", "")


def test_cohomology_prints_one_line_per_degree():
    code, out, _ = run_case(["cohomology", "p2.json", "--rep", "adjoint", "--max", "3"])
    assert code == 0
    assert [line.split(" = ")[0] for line in out.splitlines()] == ["H^1", "H^2", "H^3"]


def test_extend_scaling_prints_a_cochain():
    code, out, _ = run_case(["extend", "scaling_def.json"])
    assert code == 0
    term = formats.parse_document(formats.loads(out))
    assert term.arity == 2 and term.is_zero()


def test_dimension_zero_algebra_is_valid(tmp_path):
    path = tmp_path / "empty.json"
    path.write_text('{"kind": "pre_leibniz_algebra", "dim": 0, "left": [], "right": []}')
    assert formats.load(path) == PreLeibnizAlgebra.zero(0)
    code, out, _ = run_case(["check", str(path)])
    assert code == 0 and out == "pre-Leibniz: OK\n"


def test_errors_go_to_stderr():
    code, out, err = run_case(["check", "malformed_index.json"])
    assert code == 2 and out == ""
    assert err.startswith("error: ") and "index 3" in err


def test_usage_error_exits_2():
    code, out, err = run_case(["frobnicate"])
    assert code == 2 and "invalid choice" in err
    assert run_case([])[0] == 2
    assert run_case(["convert", "sideways", "strict.json"])[0] == 2


def test_rep_option_rejected_for_non_algebras():
    assert run_case(["check", "strict.json", "--rep", "adjoint"])[0] == 2


def test_convert_takes_one_file():
    assert run_case(["convert", "crossed-to-strict", "crossed.json", "crossed.json"])[0] == 2


def test_rb_operator_dimension_mismatch(tmp_path):
    path = tmp_path / "T.json"
    path.write_text('{"kind": "two_term_rb_operator", "dim_m1": 1, "dim_0": 1, "T_m1": [], "T_0": []}')
    assert run_case(["rb-induce", "rb_two_term.json", str(path)])[0] == 2


def test_convert_output_round_trips():
    _, out, _ = run_case(["convert", "strict-to-crossed", "strict.json"])
    crossed = formats.parse_document(formats.loads(out))
    assert crossed == formats.load(DATA / "crossed.json")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "preleibniz", "check", "p2.json"],
                          cwd=DATA, capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "pre-Leibniz: OK\n"
