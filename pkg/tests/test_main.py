import json

import pytest

import shifthull.commands as commands
from conftest import CORPUS
from shifthull.commands import COMMANDS
from shifthull.main import build_parser, main
from shifthull.specfile import load_spec, serialize_spec


def run(capsys, *argv):
    with pytest.raises(SystemExit) as e:
        main(list(argv))
    captured = capsys.readouterr()
    return e.value.code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_every_command_has_a_subparser():
    parser = build_parser()
    assert parser.parse_args(["corpus"]).command == "corpus"
    assert {"lang", "cover", "matrix-verify", "canon"} <= set(COMMANDS)


def test_lang(capsys):
    report = run_json(capsys, "lang", "--spec", "golden", "--max-len", "3")
    assert report["verdicts"]["counts"] == [2, 3, 5]
    assert report["witnesses"]["language"]["words"][:5] == ["0", "1", "00", "01", "10"]
    report = run_json(capsys, "lang", "--spec", "golden", "--count", "--member", "10(01)")
    assert report["verdicts"]["member"] is True
    assert "language" not in report["witnesses"]


def test_follower(capsys):
    report = run_json(capsys, "follower", "--spec", "abc", "--lambda", "a,b")
    assert report["verdicts"]["set"]["cardinality"] == "Finite"
    assert report["verdicts"]["set"]["members"] == ["c"]


def test_ex4_cover(capsys):
    report = run_json(capsys, "cover", "--spec", "ex4", "--set", "F:1,2", "--with", "E:1;E:2;E:3;E:4;C:0|10,20,30")
    assert report["verdicts"]["verdict"] == "Covered"
    defect = report["verdicts"]["defect"]
    assert defect["cardinality"] == "Infinite"
    assert len(defect["words"]) == 24
    assert defect["words"][-1] == "0" * 19 + "4"


def test_output_is_deterministic(capsys):
    argv = ("star", "--spec", "ex4")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    assert first[0] == 0


def test_star_and_ground(capsys):
    pair = run_json(capsys, "star", "--spec", "golden", "--lambda", "0")["verdicts"]["pair"]
    assert pair["status"] == "Witnessed"
    assert pair["witness"] == "(0)"
    assert run_json(capsys, "star", "--spec", "ex4")["verdicts"]["holds"] is False
    ground = run_json(capsys, "ground", "--spec", "abc")
    assert ground["verdicts"]["holds"] is False
    assert ground["witnesses"]["finite_class"]["members"] == ["c"]
    character = ground["witnesses"]["principal_character"]
    assert (character["value"], character["join"], character["matches_join"]) == (1, 0, False)


def test_universe_defects(capsys):
    report = run_json(capsys, "defect", "--universe", "three-points", "--set", "all", "--with", "zero,one")
    assert report["verdicts"]["defect"] == "{2}"
    assert report["verdicts"]["tight"] is False
    assert report["verdicts"]["essentially_tight"] is True
    report = run_json(capsys, "defect", "--universe", "naturals", "--set", "all", "--with", "zero,one")
    assert report["verdicts"]["defect"] == "{2,3,…}"
    assert report["verdicts"]["cardinality"] == "Infinite"
    assert report["verdicts"]["essentially_tight"] is False


def test_checks_pass(capsys):
    report = run_json(capsys, "groupoid-check", "--spec", "golden", "--budget", "2", "--radius", "2")
    assert report["verdicts"]["passed"] is True
    report = run_json(capsys, "matrix-verify", "--spec", "golden", "--size", "4", "--export", "0")
    assert report["verdicts"]["passed"] is True
    assert report["witnesses"]["export"]["unitized_extra_columns"] == 1
    assert run_json(capsys, "hyp", "--spec", "golden")["verdicts"]["holds"] is True


def test_matrix_verify_below_the_unit_word_length(capsys):
    report = run_json(capsys, "matrix-verify", "--spec", "golden", "--size", "1")
    sizes = report["verdicts"]["sizes"]
    assert list(sizes) == ["1"]
    assert sizes["1"]["matrix_units"] is True
    assert sizes["1"]["vacuum_rank"] == 1
    code, out, err = run(capsys, "matrix-verify", "--spec", "golden", "--size", "0")
    assert code == 2
    assert "must be positive" in err


def test_tensor_grading_is_checked_at_every_size(capsys, monkeypatch):
    seen = []
    original = commands.tensor_rep

    def counting(aut, e, n, radius):
        seen.append(n)
        return original(aut, e, n, radius)

    monkeypatch.setattr(commands, "tensor_rep", counting)
    report = run_json(capsys, "matrix-verify", "--spec", "golden")
    assert set(seen) == {4, 6, 8}
    assert all(r["tensor_grading"] is True for r in report["verdicts"]["sizes"].values())


def test_canon_and_corpus(capsys):
    report = run_json(capsys, "canon", "--spec", "ex4")
    assert report["verdicts"]["canonical"] == serialize_spec(load_spec("ex4"))
    report = run_json(capsys, "corpus")
    assert set(CORPUS) <= set(report["verdicts"])
    assert report["verdicts"]["ex4"] == {"alphabet": "01234", "patterns": 3}


def test_follower_label_names_the_follower_set(capsys):
    assert run_json(capsys, "follower", "--spec", "abc", "--lambda", "a,b")["verdicts"]["set"]["label"] == "F{ε,a,b}"
    assert run_json(capsys, "follower", "--spec", "golden", "--lambda", "ε")["verdicts"]["set"]["label"] == "F:ε"
    gamma = run_json(capsys, "follower", "--spec", "ex4", "--lambda", "1", "--gamma", "3")
    assert gamma["verdicts"]["set"]["label"] == "F:1/3"


def test_star_reports_a_separating_family(capsys):
    report = run_json(capsys, "star", "--spec", "ex4", "--lambda", "1,2", "--gamma", "3")
    separation = report["witnesses"]["separation"]
    assert separation["set"] == "F{1,2}"
    assert separation["family"] == ["F{1,2,3}"]
    assert separation["defect"] == "Infinite"
    assert separation["separates"] is True
    assert "separation" not in run_json(capsys, "star", "--spec", "golden", "--lambda", "0")["witnesses"]


def test_text_rendering(capsys):
    code, out, _ = run(capsys, "follower", "--spec", "abc", "--lambda", "a,b")
    assert code == 0
    assert out.startswith("follower\n")
    assert "verdicts:" in out


@pytest.mark.parametrize(
    "argv, message",
    [
        (("lang",), "needs --spec"),
        (("follower", "--spec", "golden", "--lambda", "2"), "shifthull follower:"),
        (("lang", "--spec", "no-such-shift"), "no bundled spec"),
        (("defect", "--universe", "three-points", "--set", "two"), "no set named"),
        (("lang", "--spec", "golden", "--config", "/nonexistent/shifthull.toml"), "config file not found"),
    ],
)
def test_usage_errors_exit_with_two(capsys, argv, message):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert message in err
    assert out == ""


def test_out_of_range_override(capsys):
    code, _, err = run(capsys, "lang", "--spec", "golden", "--max-len", "0")
    assert code == 2
    assert "out of range" in err
