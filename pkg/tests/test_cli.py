import json

import pytest

from gkasami import cli


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_field_info(capsys):
    code, out, _ = run(capsys, ["field", "info", "--n", "6"])
    assert code == 0
    obj = json.loads(out)
    assert obj["poly"] == "0x43"
    assert obj["valid_k"] == [2, 4]


def test_field_info_poly_override(capsys):
    code, out, _ = run(capsys, ["field", "info", "--n", "4", "--poly", "0x19"])
    assert code == 0
    assert json.loads(out)["poly"] == "0x19"


def test_field_info_bad_poly(capsys):
    code, _, err = run(capsys, ["field", "info", "--n", "4", "--poly", "0x15"])
    assert code == 1
    assert "not primitive" in err


def test_family_gen_counts(capsys):
    code, out, err = run(capsys, ["family", "gen", "--n", "6", "--k", "2", "--format", "hex"])
    assert code == 0
    assert len(out.splitlines()) == 520
    assert "family size 520" in err


def test_family_gen_invalid_k(capsys):
    code, _, err = run(capsys, ["family", "gen", "--n", "6", "--k", "3"])
    assert code == 1
    assert "invalid" in err


def test_family_gen_large_kasami_forces_k(capsys):
    code, out, err = run(
        capsys,
        ["family", "gen", "--n", "4", "--k", "1", "--kind", "large-kasami"],
    )
    assert code == 0
    assert len(out.splitlines()) == 67
    assert "ignored" in err


def test_corr_spectral_n6(capsys):
    code, out, _ = run(capsys, ["corr", "--n", "6", "--k", "2", "--engine", "spectral"])
    assert code == 0
    obj = json.loads(out)
    assert obj["match"] is True
    assert obj["r_max"] == 17
    assert {e["value"]: int(e["count"]) for e in obj["histogram"]}[-17] == 982_560


def test_corr_brute_n4(capsys):
    code, out, _ = run(capsys, ["corr", "--n", "4", "--k", "1", "--engine", "brute"])
    assert code == 0
    obj = json.loads(out)
    assert obj["match"] is True and obj["engine"] == "brute"


def test_corr_brute_guard(capsys):
    code, _, err = run(capsys, ["corr", "--n", "8", "--k", "1", "--engine", "brute"])
    assert code == 2
    assert "--force" in err


def test_corr_small_kasami(capsys):
    code, out, _ = run(capsys, ["corr", "--n", "6", "--kind", "small-kasami"])
    assert code == 0
    obj = json.loads(out)
    assert obj["match"] is True and obj["r_max"] == 9


def test_verify_n4(capsys):
    code, out, err = run(capsys, ["verify", "--n", "4", "--k", "1"])
    assert code == 0
    report = json.loads(out)
    assert report["pass"] is True
    assert all(c["match"] for c in report["claims"])
    assert "PASS" in err and "FAIL" not in err


def test_verify_rejects_unsupported_n(capsys):
    code, _, err = run(capsys, ["verify", "--n", "10"])
    assert code == 2
    assert "supports" in err


def test_code_weights(capsys):
    code, out, _ = run(capsys, ["code", "weights", "--n", "4", "--k", "1"])
    assert code == 0
    obj = json.loads(out)
    assert obj["match"] is True
    assert obj["dual_low_weights"] == [0, 0, 0]
    assert obj["dimension"] == 10


def test_census(capsys):
    code, out, _ = run(capsys, ["census", "--n", "4", "--k", "1"])
    assert code == 0
    assert json.loads(out)["match"] is True


def test_out_flag(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, ["census", "--n", "4", "--k", "1", "--out", str(path)])
    assert code == 0
    assert out == ""
    assert json.loads(path.read_text())["match"] is True


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["corr", "--n", "6", "--engine", "warp"])
    assert exc.value.code == 2


def test_determinism_across_runs_and_jobs(capsys):
    _, out1, _ = run(capsys, ["corr", "--n", "4", "--k", "1", "--engine", "brute", "--jobs", "1"])
    _, out2, _ = run(capsys, ["corr", "--n", "4", "--k", "1", "--engine", "brute", "--jobs", "2"])
    assert out1 == out2
    _, v1, _ = run(capsys, ["verify", "--n", "4", "--k", "1"])
    _, v2, _ = run(capsys, ["verify", "--n", "4", "--k", "1"])
    assert v1 == v2
