import json

import pytest

from ffperm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def jlines(out):
    return [json.loads(line) for line in out.strip().split("\n")
            if line.startswith("{")]


def test_field_info(capsys):
    code, out = run(capsys, "field-info", "--p", "3", "--n", "2")
    assert code == 0
    obj = json.loads(out)
    assert obj["q"] == 9 and obj["modulus"] == [1, 0, 1]


def test_expand_frozen_example(capsys):
    code, out = run(capsys, "expand", "--field", "p=5", "--chain=-1,1,4,0")
    assert code == 0
    assert json.loads(out)["coeffs"] == [0, 1, 1, 2]


def test_expand_routes_agree(capsys):
    _, out_t = run(capsys, "expand", "--p", "7", "--chain=2,3,1,5", "--route", "table")
    _, out_p = run(capsys, "expand", "--p", "7", "--chain=2,3,1,5", "--route", "power")
    assert out_t == out_p


def test_rank2_coeffs(capsys):
    code, out = run(capsys, "rank2-coeffs", "--p", "7", "--chain=-1,1,4,0")
    assert code == 0
    assert len(json.loads(out)["coeffs"]) <= 7


def test_rank_reports_witness(capsys):
    code, out = run(capsys, "rank", "--poly",
                    '{"field": "p=5", "coeffs": [0, 1, 1, 2]}')
    assert code == 0
    obj = json.loads(out)
    assert obj["rank"] == "1" and obj["witness_chain"] == [3, 3, 3]


def test_weight_of_zero_poly(capsys):
    code, out = run(capsys, "weight", "--poly", '{"field": "p=5", "coeffs": []}')
    assert code == 0
    assert json.loads(out)["weight"] == 0


def test_nu_p_11(capsys):
    code, out = run(capsys, "nu-p", "--p", "11")
    assert code == 0
    obj = json.loads(out)
    assert obj["nu"] == 3 and 7 in obj["argmax"]


def test_scan_nu_csv(capsys):
    code, out = run(capsys, "scan-nu", "--range", "3:11", "--format", "csv")
    assert code == 0
    assert out.startswith("p,nu,argmax_list,bound_num,bound_formula,ratio_log")
    assert "\n11,3,7," in out


def test_scan_nu_deterministic(capsys):
    _, a = run(capsys, "scan-nu", "--range", "3:31")
    _, b = run(capsys, "scan-nu", "--range", "3:31")
    assert a == b


def test_count_window(capsys):
    code, out = run(capsys, "count-window", "--p", "5", "--gamma", "3",
                    "--c", "3", "--d", "1", "--L", "1", "--M", "2")
    assert code == 0
    assert json.loads(out)["count"] == 2


def test_count_full(capsys):
    code, out = run(capsys, "count-full", "--p", "5", "--gamma", "3")
    assert code == 0
    assert json.loads(out)["count"] == 2


def test_bounds_f11(capsys):
    code, out = run(capsys, "bounds", "--p", "11")
    assert code == 0
    obj = json.loads(out)
    assert obj["rank2_weight_bound"] == 6.5
    assert obj["rank2_weight_bound_sharp"] == 6


def test_sweeps(capsys):
    code, out = run(capsys, "sweep-rank1", "--p", "5")
    assert code == 0 and json.loads(out)["violations"] == 0
    code, out = run(capsys, "sweep-rank2", "--p", "11")
    assert code == 0
    obj = json.loads(out)
    assert obj["min_weight"] == 6 and obj["bound_cor35"] == 6


def test_blahut(capsys):
    code, out = run(capsys, "blahut", "--poly",
                    '{"field": "p=5", "coeffs": [0, 1, 1, 2]}')
    assert code == 0
    assert json.loads(out)["equal"] is True


def test_example_f11(capsys):
    code, out = run(capsys, "example-f11")
    assert code == 0
    obj = json.loads(out)
    assert obj["weight"] == 6 and obj["permutation"] is True


def test_poly_from_file(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text('{"field": "p=5", "coeffs": [0, 1, 1, 2]}')
    code, out = run(capsys, "weight", "--poly", str(path))
    assert code == 0
    assert json.loads(out)["weight"] == 3


def test_usage_errors_exit_2(capsys):
    assert main(["nu-p"]) == 2
    assert main(["no-such-command"]) == 2
    assert main(["count-full", "--p", "5", "--gamma", "1"]) == 2
    assert main(["scan-nu", "--range", "oops"]) == 2
