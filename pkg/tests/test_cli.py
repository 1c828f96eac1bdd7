"""Command-line parsing, rendering, dispatch, and exit codes."""

import io
import json
import subprocess
import sys

import pytest

from amalg import Mat2
from amalg.cli import (
    ParseError,
    parse_amalgam_word,
    parse_action_spec,
    parse_gen_map,
    parse_group_spec,
    parse_letter_word,
    parse_matrix,
    render_letter_word,
    render_matrix,
    run,
)
from amalg import make_cyclic

GOOD_GROUP = """\
group K order 2
identity 0
row 0: 0 1
row 1: 1 0
generators: 1
"""

# Parses fine but is not a group: left projection has no identity.
BROKEN_GROUP = """\
group P order 2
identity 0
row 0: 0 0
row 1: 1 1
generators: 1
"""

TRIVIAL_ACTION_Z2_ON_Z4 = """\
action Z2 on Z4
c 0: 0 1 2 3
c 1: 0 1 2 3
"""


def test_parse_matrix_accepts_whitespace_and_negatives():
    assert parse_matrix("[[2, -3],[1, -1]]") == Mat2(2, -3, 1, -1)
    assert parse_matrix(" [ [ 0,1 ] , [ 1,0 ] ] ") == Mat2(0, 1, 1, 0)
    # Non-unimodular matrices are accepted at parse time.
    assert parse_matrix("[[2,0],[0,1]]") == Mat2(2, 0, 0, 1)


def test_parse_matrix_reports_offsets():
    with pytest.raises(ParseError) as err:
        parse_matrix("[[1,2],[3,4]")
    assert "offset 12" in str(err.value)
    with pytest.raises(ParseError):
        parse_matrix("[[1,x],[3,4]]")


def test_parse_matrix_render_round_trip():
    m = Mat2(-5, 3, 2, -1)
    assert parse_matrix(render_matrix(m)) == m


def test_parse_letter_word_folds_adjacent_letters():
    assert parse_letter_word("").letters == ()
    assert parse_letter_word("s^2 * s^2").letters == (("s", 4),)
    assert parse_letter_word("s * s^-1").letters == ()
    assert parse_letter_word("s^3 * u^2 * j").letters == (("s", 3), ("u", 2), ("j", 1))


def test_parse_letter_word_errors():
    with pytest.raises(ParseError, match="offset 4: unknown letter 'q'"):
        parse_letter_word("s * q")
    with pytest.raises(ParseError, match="zero exponent"):
        parse_letter_word("s^0")
    with pytest.raises(ParseError, match="expected a term after"):
        parse_letter_word("s *")


def test_render_letter_word_omits_unit_exponent():
    w = parse_letter_word("s^-1 * u * j^1")
    assert render_letter_word(w) == "s^-1 * u * j"


def test_parse_amalgam_word_folds_exponents(small_spec):
    w = parse_amalgam_word("a:1 * b:2 * a:1^-1", small_spec)
    assert w.syllables == (("a", 1), ("b", 2), ("a", 3))
    assert parse_amalgam_word("", small_spec).syllables == ()


def test_parse_amalgam_word_errors(small_spec):
    with pytest.raises(ParseError, match="out of range"):
        parse_amalgam_word("a:7", small_spec)
    with pytest.raises(ParseError, match="unknown side"):
        parse_amalgam_word("c:1", small_spec)
    with pytest.raises(ParseError, match="zero exponent"):
        parse_amalgam_word("a:1^0", small_spec)


def test_parse_gen_map():
    assert parse_gen_map("1:2") == {1: 2}
    assert parse_gen_map("1:2,3:4") == {1: 2, 3: 4}
    with pytest.raises(ValueError, match="generator map"):
        parse_gen_map("12")


def test_parse_group_spec_round_trip():
    g = parse_group_spec(GOOD_GROUP)
    assert g.label == "K"
    assert g.order == 2
    assert g.mul == ((0, 1), (1, 0))
    assert g.generators == (("g0", 1),)


def test_parse_group_spec_errors():
    with pytest.raises(ValueError, match="line 1"):
        parse_group_spec("grp K order 2")
    with pytest.raises(ValueError, match="entries in range"):
        parse_group_spec("group K order 2\nidentity 0\nrow 0: 0 5\nrow 1: 1 0\ngenerators: 1")
    with pytest.raises(ValueError, match="generators"):
        parse_group_spec("group K order 1\nidentity 0\nrow 0: 0\nnope: 0")


def test_parse_action_spec_verifies_the_action():
    z2, z4 = make_cyclic(2), make_cyclic(4)
    act = parse_action_spec("action Z2 on Z4\nc 0: 0 1 2 3\nc 1: 0 3 2 1", z2, z4)
    assert act(1, 1) == 3
    with pytest.raises(ValueError, match="expected 4 entries"):
        parse_action_spec("action Z2 on Z4\nc 0: 0 1\nc 1: 0 1", z2, z4)
    with pytest.raises(ValueError, match="action invariant violation"):
        parse_action_spec("action Z2 on Z4\nc 0: 0 1 2 3\nc 1: 1 0 2 3", z2, z4)


def test_nf_subcommand_normalizes(capsys):
    code = run([
        "nf", "--A", "Z4", "--B", "Z6", "--D", "Z2",
        "--iotaA", "1:2", "--iotaB", "1:3", "a:1^2",
    ])
    assert code == 0
    assert capsys.readouterr().out.strip() == "a:2"


def test_nf_subcommand_json_lines(capsys):
    code = run([
        "nf", "--A", "Z4", "--B", "Z6", "--D", "Z2",
        "--iotaA", "1:2", "--iotaB", "1:3", "--format", "json-lines",
        "a:1 * a:3",
    ])
    assert code == 0
    record = json.loads(capsys.readouterr().out)
    assert record == {"check": "nf", "instance": "a:1 * a:3", "result": "", "status": "pass"}


def test_iso_check_passes_and_reports(capsys):
    args = [
        "iso-check", "--A", "Z4", "--B", "Z6", "--D", "Z2", "--C", "Z2",
        "--iotaA", "1:2", "--iotaB", "1:3",
        "--actA", "inv", "--actB", "inv", "--actD", "inv",
        "--bound", "2", "--samples", "50",
    ]
    assert run(args) == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert len(lines) == 10
    assert all(line.startswith("PASS") for line in lines)


def test_iso_check_json_lines_is_deterministic(capsys):
    args = [
        "iso-check", "--A", "Z4", "--B", "Z6", "--D", "Z2", "--C", "Z2",
        "--iotaA", "1:2", "--iotaB", "1:3",
        "--actA", "inv", "--actB", "inv", "--actD", "inv",
        "--bound", "2", "--samples", "25", "--seed", "9",
        "--format", "json-lines",
    ]
    assert run(args) == 0
    first = capsys.readouterr().out
    assert run(args) == 0
    second = capsys.readouterr().out
    assert first == second
    for line in first.strip().splitlines():
        record = json.loads(line)
        assert record["status"] == "pass"
        assert list(record) == sorted(record)


def test_iso_check_incompatible_instance_fails(tmp_path, capsys):
    act_file = tmp_path / "trivial.act"
    act_file.write_text(TRIVIAL_ACTION_Z2_ON_Z4)
    args = [
        "iso-check", "--A", "Z4", "--B", "Z4", "--D", "Z4", "--C", "Z2",
        "--iotaA", "1:1", "--iotaB", "1:1",
        "--actA", "inv", "--actB", "inv", "--actD", str(act_file),
        "--bound", "2", "--samples", "10",
    ]
    assert run(args) == 1
    out = capsys.readouterr().out
    assert out.startswith("FAIL instance-construction")
    assert "compatibility violation" in out


def test_functor_check_passes(capsys):
    assert run(["functor-check", "--format", "json-lines"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 18
    assert all(json.loads(line)["status"] == "pass" for line in lines)


def test_gl2_decompose_eval_round_trip(capsys):
    assert run(["gl2", "decompose", "[[2,3],[1,2]]"]) == 0
    word = capsys.readouterr().out.strip()
    assert run(["gl2", "eval", word]) == 0
    assert capsys.readouterr().out.strip() == "[[2,3],[1,2]]"


def test_gl2_decompose_identity_gives_empty_word(capsys):
    assert run(["gl2", "decompose", "[[1,0],[0,1]]"]) == 0
    assert capsys.readouterr().out.strip() == ""
    assert run(["gl2", "eval", ""]) == 0
    assert capsys.readouterr().out.strip() == "[[1,0],[0,1]]"


def test_gl2_eval_unknown_letter_is_a_usage_error(capsys):
    assert run(["gl2", "eval", "s * q"]) == 2
    err = capsys.readouterr().err
    assert "parse error at offset 4: unknown letter 'q'" in err


def test_gl2_decompose_rejects_non_unimodular(capsys):
    assert run(["gl2", "decompose", "[[2,0],[0,1]]"]) == 2
    assert "determinant" in capsys.readouterr().err


def test_sl2_decompose_subcommand(capsys):
    assert run(["sl2", "decompose", "[[1,1],[0,1]]"]) == 0
    assert capsys.readouterr().out.strip() == "s * u * s^2"
    assert run(["sl2", "decompose", "[[0,1],[1,0]]"]) == 2
    assert "determinant" in capsys.readouterr().err


def test_axioms_subcommand_on_builtin(capsys):
    assert run(["axioms", "D4"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [line.split()[1] for line in lines] == [
        "associativity", "identity", "inverses", "generation",
    ]


def test_axioms_unknown_group_is_a_usage_error(capsys):
    assert run(["axioms", "Z5"]) == 2
    assert "unknown group" in capsys.readouterr().err


def test_axioms_on_group_file(tmp_path, capsys):
    path = tmp_path / "klein.grp"
    path.write_text(GOOD_GROUP)
    assert run(["axioms", str(path)]) == 0
    capsys.readouterr()


def test_axioms_broken_group_file_is_a_math_failure(tmp_path, capsys):
    path = tmp_path / "proj.grp"
    path.write_text(BROKEN_GROUP)
    assert run(["axioms", str(path)]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_axioms_reads_group_from_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(GOOD_GROUP))
    assert run(["axioms", "-"]) == 0
    capsys.readouterr()


def test_matrix_argument_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("[[2,3],[1,2]]"))
    assert run(["gl2", "decompose", "-"]) == 0
    word = capsys.readouterr().out.strip()
    assert run(["gl2", "eval", word]) == 0
    assert capsys.readouterr().out.strip() == "[[2,3],[1,2]]"


def test_missing_required_flag_is_a_usage_error(capsys):
    assert run(["nf", "a:1"]) == 2
    capsys.readouterr()


def test_module_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "amalg", "axioms", "Z4"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.count("PASS") == 4
