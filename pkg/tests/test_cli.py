import io
import json

import pytest

import bbforest.cli as cli
from bbforest import VerificationReport, emit_bbg, prop1_construction
from bbforest.cli import run

K22 = "BBG 1\n2\n11\n11\n"


def _write(tmp_path, text):
    path = tmp_path / "g.bbg"
    path.write_text(text, encoding="ascii")
    return str(path)


def test_solve_text_output(tmp_path, capsys):
    assert run(["solve", "--in", _write(tmp_path, K22)]) == 0
    out = capsys.readouterr().out
    assert "forest number: 3" in out
    assert "decycling number: 1" in out
    assert "witness V1: 0 1" in out
    assert "witness V2: 0" in out


def test_solve_json_output(tmp_path, capsys):
    assert run(["solve", "--in", _write(tmp_path, K22),
                "--format", "json", "--no-timing"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {
        "n": 2,
        "forest_number": 3,
        "decycling_number": 1,
        "witness": {"v1": [0, 1], "v2": [0]},
        "nodes_explored": payload["nodes_explored"],
    }
    assert "elapsed_ms" not in payload


def test_solve_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(K22))
    assert run(["solve"]) == 0
    assert "forest number: 3" in capsys.readouterr().out


def test_solve_brute_agrees(tmp_path, capsys):
    path = _write(tmp_path, emit_bbg(prop1_construction(5)))
    assert run(["solve", "--in", path, "--format", "json", "--no-timing"]) == 0
    exact = json.loads(capsys.readouterr().out)
    assert run(["solve", "--in", path, "--brute",
                "--format", "json", "--no-timing"]) == 0
    brute = json.loads(capsys.readouterr().out)
    assert exact["forest_number"] == brute["forest_number"] == 7
    assert exact["witness"] == brute["witness"]


def test_solve_malformed_input_names_line(tmp_path, capsys):
    assert run(["solve", "--in", _write(tmp_path, "BBG 1\n2\n11\n1\n")]) == 2
    assert "line 4" in capsys.readouterr().err


def test_solve_missing_file(capsys):
    assert run(["solve", "--in", "/no/such/file.bbg"]) == 2
    assert "no such file" in capsys.readouterr().err


def test_solve_part_cap_names_limit(tmp_path, capsys):
    big = "BBG 1\n65\n" + "\n".join("0" * 65 for _ in range(65)) + "\n"
    assert run(["solve", "--in", _write(tmp_path, big)]) == 2
    assert "64" in capsys.readouterr().err


def test_gen_matches_library(capsys):
    assert run(["gen", "--family", "prop1", "--n", "6"]) == 0
    assert capsys.readouterr().out == emit_bbg(prop1_construction(6))


def test_gen_missing_param(capsys):
    assert run(["gen", "--family", "thh1_l1", "--n", "7"]) == 2
    assert "k" in capsys.readouterr().err


def test_gen_rejects_unknown_family(capsys):
    assert run(["gen", "--family", "nope", "--n", "4"]) == 2


def test_gen_pipes_into_solve(tmp_path, capsys, monkeypatch):
    assert run(["gen", "--family", "complete", "--n", "3"]) == 0
    text = capsys.readouterr().out
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    assert run(["solve", "--format", "json", "--no-timing"]) == 0
    assert json.loads(capsys.readouterr().out)["forest_number"] == 4


def test_verify_construction_pass(capsys):
    assert run(["verify", "--theorem", "P1", "--no-timing"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["theorem_id"] == "P1"
    assert payload["verdict"] == "pass"
    assert "elapsed_ms" not in payload


@pytest.mark.parametrize("alias", ["T6λ2", "T6l2", "t6lambda2"])
def test_verify_theorem_aliases(alias, capsys):
    assert run(["verify", "--theorem", alias, "--n", "4", "--no-timing"]) == 0
    assert json.loads(capsys.readouterr().out)["theorem_id"] == "T6λ2"


def test_verify_unknown_theorem(capsys):
    assert run(["verify", "--theorem", "T99"]) == 2
    assert "unknown theorem" in capsys.readouterr().err


def test_verify_t1_exhaustive_merges_sizes(capsys):
    assert run(["verify", "--theorem", "T1", "--exhaustive",
                "--no-timing"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["instances_checked"] == 211
    assert [r["n"] for r in payload["params"]["runs"]] == [2, 3, 4]


def test_verify_t1_random_default(capsys):
    assert run(["verify", "--theorem", "T1", "--n", "5",
                "--samples", "5", "--no-timing"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["instances_checked"] == 5


def test_verify_structure_text_format(capsys):
    assert run(["verify", "--theorem", "C1", "--samples", "4",
                "--format", "text", "--no-timing"]) == 0
    out = capsys.readouterr().out
    assert "theorem C1: pass" in out
    assert "elapsed" not in out


def test_verify_t7_takes_n_and_k_together(capsys):
    assert run(["verify", "--theorem", "T7l1", "--n", "5", "--k", "2",
                "--no-timing"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["params"]["pairs"] == [[5, 2]]
    assert run(["verify", "--theorem", "T7l1", "--n", "5"]) == 2


def test_verify_bounds_via_n(capsys):
    assert run(["verify", "--theorem", "BOUNDS", "--n", "80",
                "--no-timing"]) == 0
    assert json.loads(capsys.readouterr().out)["params"]["n_max"] == 80


def test_verify_no_timing_is_byte_stable(capsys):
    argv = ["verify", "--theorem", "T8", "--n", "5", "--samples", "3",
            "--no-timing"]
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first


def test_verify_jobs_do_not_change_output(capsys):
    base = ["verify", "--theorem", "T1", "--n", "5", "--samples", "4",
            "--no-timing"]
    assert run(base + ["--jobs", "1"]) == 0
    one = capsys.readouterr().out
    assert run(base + ["--jobs", "2"]) == 0
    assert capsys.readouterr().out == one


def test_verify_failing_report_exits_one(monkeypatch, capsys):
    forced = VerificationReport("BOUNDS", {"n_max": 5}, 1,
                                [{"bbg": None, "detail": "forced"}])
    monkeypatch.setattr(cli, "check_bounds", lambda n_max: forced)
    assert run(["verify", "--theorem", "BOUNDS"]) == 1
    assert json.loads(capsys.readouterr().out)["verdict"] == "fail"
    assert run(["bounds"]) == 1


def test_bounds_subcommand(capsys):
    assert run(["bounds", "--n-max", "40", "--no-timing"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["theorem_id"] == "BOUNDS"
    assert payload["verdict"] == "pass"


def test_profile_json(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(K22))
    assert run(["profile"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["forest_number"] == 3
    assert payload["lambdas"] == [1]
    assert payload["exhaustive"] is True
    assert payload["witness_per_lambda"]["1"] == {"v1": [0, 1], "v2": [0]}


def test_profile_text(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(K22))
    assert run(["profile", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "forest number: 3" in out
    assert "exhaustive: yes" in out


def test_usage_errors_exit_two(capsys):
    assert run([]) == 2
    assert run(["solve", "--format", "yaml"]) == 2
    assert run(["nope"]) == 2


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    assert run(["solve", "--help"]) == 0
