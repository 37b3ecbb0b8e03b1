import json

import pytest

from overpart.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_verify_main_passes(capsys):
    code, out = run(capsys, "verify", "main", "--kmax", "3", "--nmax", "12")
    assert code == 0
    assert "ok   main k=3 i=2 n=2  expected=3 actual=3" in out
    assert "checks passed" in out


def test_verify_vacuous_bounds(capsys):
    code, out = run(capsys, "verify", "main", "--kmax", "0", "--nmax", "0", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["records"] == [] and doc["summary"]["total"] == 0


def test_verify_bressoud_i_equals_k_fails_with_counterexample(capsys):
    code, out = run(capsys, "verify", "bressoud", "--kmax", "2", "--nmax", "4",
                    "--include-i-equals-k")
    assert code == 1
    assert "(k,i,n)=(2,2,2): residue side 1, condition side 0" in out


def test_verify_unknown_theorem_is_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "nosuch"])
    assert err.value.code == 2


def test_verify_negative_bounds_is_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "main", "--kmax", "-3"])
    assert err.value.code == 2
    capsys.readouterr()


def test_verify_json_deterministic_modulo_duration(capsys):
    _, first = run(capsys, "verify", "jtp", "--kmax", "3", "--order", "18", "--json")
    _, second = run(capsys, "verify", "jtp", "--kmax", "3", "--order", "18", "--json")
    a, b = json.loads(first), json.loads(second)
    a.pop("duration_seconds"), b.pop("duration_seconds")
    assert a == b
    assert a["schema"] == 1


def test_verify_stream_emits_json_lines(capsys):
    code, out = run(capsys, "verify", "main", "--kmax", "2", "--nmax", "3", "--stream")
    assert code == 0
    lines = [line for line in out.splitlines() if line.strip()]
    assert len(lines) == 8  # (k,i) in {(2,1),(2,2)}, n in 0..3
    for line in lines:
        record = json.loads(line)
        assert record["passed"] is True


def test_verify_jobs_matches_serial(capsys):
    _, serial = run(capsys, "verify", "decomposition", "--kmax", "3", "--nmax", "8", "--json")
    _, parallel = run(capsys, "verify", "decomposition", "--kmax", "3", "--nmax", "8",
                      "--jobs", "2", "--json")
    a, b = json.loads(serial), json.loads(parallel)
    assert a["records"] == b["records"]


def test_series_builtin_w_triples(capsys):
    code, out = run(capsys, "series", "--builtin", "W", "--k", "3", "--i", "2", "--order", "6")
    assert code == 0
    assert "2\t3\t3" in out.splitlines()


def test_series_expression_partition_numbers(capsys):
    code, out = run(capsys, "series", "--expr", "(q;q)_inf^-1", "--order", "5")
    assert code == 0
    assert [line.split("\t")[1] for line in out.splitlines()] == ["1", "1", "2", "3", "5", "7"]


def test_series_constant_expression(capsys):
    code, out = run(capsys, "series", "--expr", "1", "--order", "3")
    assert code == 0
    assert [line.split("\t")[1] for line in out.splitlines()] == ["1", "0", "0", "0"]


def test_series_parse_error_exit_code(capsys):
    code = main(["series", "--expr", "(q;q", "--order", "4"])
    captured = capsys.readouterr()
    assert code == 2
    assert "expected ')'" in captured.err


def test_series_builtin_theta_and_dgen_agree_with_library(capsys):
    code, out = run(capsys, "series", "--builtin", "Dgen", "--k", "3", "--i", "2", "--order", "4")
    assert code == 0
    # frozen from the enumeration oracle: D(3,2,n) for n = 0..4
    assert [line.split("\t")[1] for line in out.splitlines()] == ["1", "2", "3", "5", "8"]


def test_table_cell_and_recurrence(capsys):
    code, out = run(capsys, "table", "--family", "D", "--k", "3", "--i", "2",
                    "--mmax", "2", "--nmax", "3")
    assert code == 0
    assert out.splitlines()[-1].split() == ["2", "0", "0", "1", "3"]
    code, out = run(capsys, "table", "--family", "D", "--k", "3", "--i", "2",
                    "--mmax", "10", "--nmax", "10", "--check-recurrence")
    assert code == 0
    assert "recurrence holds" in out


def test_table_json_document(capsys):
    code, out = run(capsys, "table", "--family", "D", "--k", "3", "--i", "2",
                    "--mmax", "2", "--nmax", "3", "--json")
    doc = json.loads(out)
    assert doc["cells"][2][3] == 3 and doc["cells"][0][0] == 1


def test_bijection_audit(capsys):
    code, out = run(capsys, "bijection", "--map", "phi", "--k", "3", "--i", "2", "--nmax", "8")
    assert code == 0
    assert "45/45 cells pass" in out


def test_count_with_listing(capsys):
    code, out = run(capsys, "count", "--family", "D", "--k", "3", "--i", "2", "--n", "2", "--list")
    assert code == 0
    assert out.splitlines() == ["3", "2~", "2", "1~,1"]


def test_count_residue_side(capsys):
    code, out = run(capsys, "count", "--family", "C", "--k", "3", "--i", "2", "--n", "2")
    assert code == 0 and out.strip() == "3"


def test_count_residue_rejects_part_filter(capsys):
    with pytest.raises(SystemExit) as err:
        main(["count", "--family", "C", "--k", "3", "--i", "2", "--n", "2", "--m", "1"])
    assert err.value.code == 2
    capsys.readouterr()
