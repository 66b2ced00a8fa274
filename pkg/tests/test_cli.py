from __future__ import annotations

import json

from grouplab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_s3_text(capsys):
    code, out, _ = run_cli(capsys, "analyze", "S(3)")
    assert code == 0
    assert "exponent 6" in out
    assert "phi 0" in out
    assert "nilpotent: no" in out
    assert "minimal non-nilpotent: yes" in out


def test_analyze_trivial(capsys):
    code, out, _ = run_cli(capsys, "analyze", "C(1)", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["profile"] == {
        "exponent": 1,
        "histogram": {"1": 1},
        "order": 1,
        "phi": 1,
    }
    assert payload["nilpotent"]["sylow"] is True


def test_analyze_g375_json(capsys):
    code, out, _ = run_cli(capsys, "analyze", "G375", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["group"]["order"] == 375
    assert payload["nilpotent"]["sylow"] is False
    assert payload["schmidt"]["is_schmidt"] is True
    assert payload["schmidt"]["certificate"]["p"] == 5


def test_verify_counterexample(capsys):
    code, out, _ = run_cli(capsys, "verify", "prod(C(6), S(3))", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["condition3"] is True
    assert payload["all_sections_phi_nonzero"] is False
    assert payload["witness"] is not None


def test_verify_nilpotent(capsys):
    code, out, _ = run_cli(capsys, "verify", "C(12)")
    assert code == 0
    assert "witness: none" in out


def test_parse_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "analyze", "S(3")
    assert code == 2
    assert "position" in err


def test_unknown_constructor_exit_2(capsys):
    code, _, err = run_cli(capsys, "analyze", "Q(8)")
    assert code == 2


def test_cap_exit_3(capsys):
    code, _, err = run_cli(capsys, "analyze", "C(50)", "--cap", "10")
    assert code == 3
    assert "cap" in err


def test_broken_cayley_exit_2(capsys, tmp_path):
    path = tmp_path / "broken.cayley"
    # latin square with identity but non-associative
    path.write_text(
        "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n"
    )
    code, _, err = run_cli(capsys, "verify", f"file({path})")
    assert code == 2
    assert "associativity" in err


def test_subgroups_command(capsys):
    code, out, _ = run_cli(capsys, "subgroups", "S(3)", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["lattice"]["subgroup_count"] == 6
    assert payload["lattice"]["by_order"] == {"1": 1, "2": 3, "3": 1, "6": 1}
    assert payload["lattice"]["normal_count"] == 3
    assert payload["lattice"]["maximal_count"] == 4


def test_sections_command(capsys):
    code, out, _ = run_cli(capsys, "sections", "C(5)", "--json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["sections"]) == 3
    identifiers = [s["identifier"] for s in payload["sections"]]
    assert identifiers == ["H#0/N#0", "H#1/N#0", "H#1/N#1"]


def test_witness_command(capsys):
    code, out, _ = run_cli(capsys, "witness", "D(10)", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["witness"]["profile"]["phi"] == 0
    code, out, _ = run_cli(capsys, "witness", "C(12)")
    assert code == 0
    assert "no phi = 0 section" in out


def test_suite_catalog_file(capsys, tmp_path):
    catalog = tmp_path / "catalog.txt"
    catalog.write_text("# tiny catalog\nC(6)\nS(3)\nbad-spec(\n")
    out_path = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "suite", str(catalog), "--out", str(out_path))
    assert code == 0  # parse errors are recorded, not failures
    payload = json.loads(out_path.read_text())
    assert payload["summary"]["groups"] == 3
    assert payload["summary"]["failures"] == 0
    assert payload["reports"][2]["error"] is not None


def test_suite_empty_catalog_warns(capsys, tmp_path):
    catalog = tmp_path / "empty.txt"
    catalog.write_text("# nothing here\n")
    code, out, err = run_cli(capsys, "suite", str(catalog))
    assert code == 0
    assert "warning" in err
    assert json.loads(out)["summary"]["groups"] == 0


def test_suite_jobs_deterministic(capsys, tmp_path):
    catalog = tmp_path / "catalog.txt"
    catalog.write_text("C(6)\nS(3)\nA(4)\nD(8)\n")

    def run(jobs):
        out_path = tmp_path / f"report{jobs}.json"
        code = main(["suite", str(catalog), "--jobs", str(jobs), "--out", str(out_path)])
        assert code == 0
        capsys.readouterr()
        payload = json.loads(out_path.read_text())
        payload["summary"].pop("wall_time_s")
        for entry in payload["reports"]:
            if entry["report"]:
                entry["report"].pop("elapsed_s")
        return payload

    assert run(1) == run(4)


def test_out_writes_file(capsys, tmp_path):
    out_path = tmp_path / "analysis.json"
    code, out, _ = run_cli(capsys, "analyze", "S(3)", "--json", "--out", str(out_path))
    assert code == 0
    assert out == ""
    payload = json.loads(out_path.read_text())
    assert payload["group"]["order"] == 6


def test_backend_info(capsys):
    code, out, _ = run_cli(capsys, "--backend-info")
    assert code == 0
    assert "kernel backend:" in out
