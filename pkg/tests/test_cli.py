"""CLI surface: wire formats, exit codes, document shapes, determinism."""

import json

import pytest

from mullineux import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def get_json(out):
    return json.loads(out)


# ---------------------------------------------------------------------------
# wire formats


def test_partition_wire_round_trip():
    for lam in [(), (1,), (6, 5, 2, 2, 1, 1), (3, 3, 3)]:
        assert cli.parse_partition(cli.format_partition(lam)) == lam
    assert cli.parse_partition("-") == ()
    assert cli.parse_partition("") == ()


def test_partition_wire_strictness():
    with pytest.raises(ValueError):
        cli.parse_partition("1,2,3")
    with pytest.raises(ValueError):
        cli.parse_partition("3,0")
    with pytest.raises(ValueError):
        cli.parse_partition("3,x")


def test_bipartition_wire_round_trip():
    for blam in [((), ()), ((2, 1), ()), ((6, 5), (4, 4, 1))]:
        assert cli.parse_bipartition(cli.format_bipartition(blam)) == blam
    with pytest.raises(ValueError):
        cli.parse_bipartition("1,1")


# ---------------------------------------------------------------------------
# mull


def test_mull_both(capsys):
    code, out, _ = run_cli(
        capsys, "mull", "--method", "both", "--e", "3", "--lambda", "6,5,2,2,1,1"
    )
    assert code == 0
    doc = get_json(out)
    assert doc["results"]["kleshchev"] == "11,4,2"
    assert doc["results"]["recursive"] == "11,4,2"
    assert doc["results"]["agree"] is True


def test_mull_kleshchev(capsys):
    code, out, _ = run_cli(capsys, "mull", "--method", "kleshchev", "--e", "3", "--lambda", "5,2,1,1")
    assert code == 0
    assert get_json(out)["results"]["kleshchev"] == "4,2,2,1"


def test_mull_empty(capsys):
    code, out, _ = run_cli(capsys, "mull", "--e", "3", "--lambda", "")
    assert code == 0
    assert get_json(out)["results"]["kleshchev"] == "-"


def test_mull_trace(capsys):
    code, out, _ = run_cli(
        capsys, "mull", "--method", "recursive", "--e", "3", "--lambda", "6,5,2,2,1,1", "--trace"
    )
    assert code == 0
    trace = get_json(out)["results"]["trace"]
    assert trace["mu"] == ["3,3,2,2,1,1", "6,5,5,4,1,1"]


def test_mull_usage_errors(capsys):
    assert run_cli(capsys, "mull", "--e", "3", "--lambda", "1,2")[0] == 1
    assert run_cli(capsys, "mull", "--e", "1", "--lambda", "2,1")[0] == 1
    assert run_cli(capsys, "mull", "--e", "3", "--lambda", "1,1,1")[0] == 1  # not regular
    assert run_cli(capsys, "mull", "--e", "3")[0] == 1  # missing --lambda


# ---------------------------------------------------------------------------
# sweeps


def test_verify_conjecture_exit_codes(capsys):
    code, out, _ = run_cli(
        capsys, "verify-conjecture", "--e", "2", "--max-n", "10", "--max-k", "7", "--jobs", "1"
    )
    assert code == 0
    doc = get_json(out)
    assert doc["status"] == "verified"
    assert doc["counterexamples"] == []
    assert doc["parameters"]["regular_only"] is True


def test_verify_conjecture_trivial(capsys):
    code, out, _ = run_cli(capsys, "verify-conjecture", "--max-n", "0", "--jobs", "1")
    assert code == 0
    assert get_json(out)["checked"] == len(get_json(out)["parameters"]["e_list"])


def test_verify_conjecture_all_partitions(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify-conjecture", "--e", "3", "--max-n", "6", "--max-k", "4",
        "--all-partitions", "--jobs", "1",
    )
    assert code == 0
    assert get_json(out)["parameters"]["regular_only"] is False


def test_reports_byte_identical_across_jobs(capsys):
    args = ["verify-conjecture", "--e", "2,3", "--max-n", "9", "--max-k", "5"]
    _, out1, _ = run_cli(capsys, *args, "--jobs", "1")
    _, out2, _ = run_cli(capsys, *args, "--jobs", "4")
    assert out1 == out2
    args = ["cross-validate", "--e", "2,3", "--max-n", "7"]
    _, out3, _ = run_cli(capsys, *args, "--jobs", "1")
    _, out4, _ = run_cli(capsys, *args, "--jobs", "3")
    assert out3 == out4


def test_cross_validate_cli(capsys):
    code, out, _ = run_cli(capsys, "cross-validate", "--e", "3", "--max-n", "6", "--jobs", "1")
    assert code == 0
    doc = get_json(out)
    assert doc["status"] == "verified"
    assert doc["depth_exceeded"] == 0


def test_timing_flag_adds_section(capsys):
    _, out, _ = run_cli(
        capsys, "verify-conjecture", "--e", "2", "--max-n", "4", "--max-k", "3",
        "--jobs", "1", "--timing",
    )
    assert "timing" in get_json(out)


def test_csv_summary(tmp_path, capsys):
    path = tmp_path / "summary.csv"
    code, _, _ = run_cli(
        capsys, "verify-conjecture", "--e", "2", "--max-n", "4", "--max-k", "3",
        "--jobs", "1", "--csv", str(path),
    )
    assert code == 0
    text = path.read_text()
    assert "checked" in text and "e=2,n=4" in text


# ---------------------------------------------------------------------------
# psi


def test_psi_single_step(capsys):
    code, out, _ = run_cli(
        capsys, "psi", "--e", "6", "--charges", "0,3",
        "--bipartition", "6,5,2,2,1,1|6,5,2,2,1,1",
    )
    assert code == 0
    doc = get_json(out)
    assert doc["results"]["image"] == "3,3,2,2,1,1|6,5,5,4,1,1"
    step = doc["results"]["steps"][0]
    assert step["input"][0]["beta_set"] == [0, 1, 2, 4, 5, 7, 8, 12, 14]
    assert step["input"][1]["beta_set"] == [1, 2, 4, 5, 9, 11]
    assert step["input"][0]["charge"] == 3
    assert step["input"][1]["charge"] == 0


def test_psi_inverse_round_trips(capsys):
    _, out, _ = run_cli(
        capsys, "psi", "--e", "6", "--charges", "0,3",
        "--bipartition", "6,5,2,2,1,1|6,5,2,2,1,1",
    )
    image = get_json(out)["results"]["image"]
    code, out, _ = run_cli(
        capsys, "psi", "--e", "6", "--charges", "0,3", "--bipartition", image, "--inverse"
    )
    assert code == 0
    assert get_json(out)["results"]["image"] == "6,5,2,2,1,1|6,5,2,2,1,1"


def test_psi_empty_bipartition(capsys):
    # leading dash needs the = form so argparse does not read it as a flag
    code, out, _ = run_cli(capsys, "psi", "--e", "3", "--charges", "0,0", "--bipartition=-|-")
    assert code == 0
    assert get_json(out)["results"]["image"] == "-|-"
    code, out, _ = run_cli(capsys, "psi", "--e", "3", "--charges", "0,0", "--bipartition", "|")
    assert code == 0
    assert get_json(out)["results"]["image"] == "-|-"


def test_psi_to_dominant(capsys):
    code, out, _ = run_cli(
        capsys, "psi", "--e", "6", "--charges", "0,3",
        "--bipartition", "6,5,2,2,1,1|6,5,2,2,1,1", "--to-dominant",
    )
    assert code == 0
    doc = get_json(out)
    assert doc["results"]["image"] == "3,3,2,2,1,1|6,5,5,4,1,1"
    assert doc["results"]["steps"][-1]["shortcut"] is True


def test_psi_inverse_to_dominant(capsys):
    code, out, _ = run_cli(
        capsys, "psi", "--e", "6", "--charges", "0,3",
        "--bipartition", "6,4,2|11,9,2", "--inverse", "--to-dominant",
    )
    assert code == 0
    assert get_json(out)["results"]["image"] == "11,4,2|11,4,2"


def test_psi_charge_order(capsys):
    code, _, err = run_cli(capsys, "psi", "--e", "3", "--charges", "4,0", "--bipartition=-|-")
    assert code == 1
    assert "s1 <= s2" in err


# ---------------------------------------------------------------------------
# crystal export


def test_crystal_export_json(capsys):
    code, out, _ = run_cli(capsys, "crystal-export", "--e", "2", "--max-n", "3", "--format", "json")
    assert code == 0
    doc = get_json(out)
    assert set(doc["results"]["vertices"]) == {"-", "1", "2", "3", "2,1"}
    for edge in doc["results"]["edges"]:
        assert set(edge) == {"source", "residue", "target"}


def test_crystal_export_single_vertex(capsys):
    code, out, _ = run_cli(capsys, "crystal-export", "--e", "3", "--max-n", "0", "--format", "json")
    assert code == 0
    doc = get_json(out)
    assert doc["results"]["vertices"] == ["-"]
    assert doc["results"]["edges"] == []


def test_crystal_export_vertex_count(capsys):
    from mullineux.partitions import enumerate_e_regular

    code, out, _ = run_cli(capsys, "crystal-export", "--e", "3", "--max-n", "4", "--format", "json")
    doc = get_json(out)
    expected = sum(len(list(enumerate_e_regular(n, 3))) for n in range(5))
    assert len(doc["results"]["vertices"]) == expected


def test_crystal_export_dot(capsys):
    code, out, _ = run_cli(capsys, "crystal-export", "--e", "2", "--max-n", "2", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert '"-" -> "1" [label="0"];' in out


def test_unknown_command_exits_one(capsys):
    assert run_cli(capsys, "frobnicate")[0] == 1


# ---------------------------------------------------------------------------
# exit-code contract edges


def test_mull_conjecture_violation_exits_three(capsys, monkeypatch):
    # no real counterexample is known, so fake one to pin the contract
    from mullineux.engine import MullineuxTrace
    from mullineux.errors import ConjectureViolationError

    def explode(lam, e, depth_limit=16, oracle_fallback=False):
        raise ConjectureViolationError(
            "pulled-back components disagree",
            partition=lam,
            modulus=e,
            trace=MullineuxTrace(e, lam, False, None),
        )

    monkeypatch.setattr(cli.engine, "mullineux_conjectural", explode)
    code, out, _ = run_cli(capsys, "mull", "--method", "recursive", "--e", "3", "--lambda", "3,1")
    assert code == 3
    doc = get_json(out)
    assert "counterexample" in doc and "error" in doc


def test_mull_depth_limit_paths(capsys):
    code, _, err = run_cli(
        capsys, "mull", "--method", "recursive", "--e", "3", "--lambda", "3,2", "--depth-limit", "0"
    )
    assert code == 1 and "depth" in err
    code, out, _ = run_cli(
        capsys, "mull", "--method", "recursive", "--e", "3", "--lambda", "3,2",
        "--depth-limit", "0", "--oracle-fallback",
    )
    assert code == 0
    from mullineux.level1 import mullineux_kleshchev

    expected = cli.format_partition(mullineux_kleshchev((3, 2), 3))
    assert get_json(out)["results"]["recursive"] == expected


def test_jobs_default_from_environment(monkeypatch):
    monkeypatch.setenv("MULLINEUX_JOBS", "7")
    assert cli._default_jobs() == 7
    monkeypatch.delenv("MULLINEUX_JOBS")
    assert cli._default_jobs() >= 1


def test_sweep_counterexample_exits_two(capsys, monkeypatch):
    # fake a failing sweep to pin the exit-2 contract
    from mullineux.engine import SweepReport

    def fake_sweep(e_list, n_max, k_max, regular_only=True, jobs=1):
        report = SweepReport(
            command="verify-conjecture",
            parameters={"e_list": list(e_list), "n_max": n_max, "k_max": k_max,
                        "regular_only": regular_only},
            checked=1,
        )
        report.counterexamples.append(
            {"e": 3, "partition": "2,1", "beta_set": [0, 2], "k": 3, "missing": [5]}
        )
        return report

    monkeypatch.setattr(cli.engine, "sweep_conjecture", fake_sweep)
    code, out, _ = run_cli(capsys, "verify-conjecture", "--e", "3", "--max-n", "3", "--jobs", "1")
    assert code == 2
    assert get_json(out)["status"] == "counterexample"


def test_all_documents_validate_against_published_schema(capsys):
    import jsonschema

    from mullineux.schema import DOCUMENT_SCHEMA

    invocations = [
        ["mull", "--method", "both", "--e", "3", "--lambda", "6,5,2,2,1,1"],
        ["mull", "--method", "recursive", "--e", "3", "--lambda", "5,2,1,1", "--trace"],
        ["verify-conjecture", "--e", "2,3", "--max-n", "6", "--max-k", "5", "--jobs", "1"],
        ["verify-conjecture", "--e", "2", "--max-n", "4", "--max-k", "3", "--jobs", "1",
         "--timing"],
        ["cross-validate", "--e", "3", "--max-n", "5", "--jobs", "1"],
        ["psi", "--e", "6", "--charges", "0,3", "--bipartition", "6,5,2,2,1,1|6,5,2,2,1,1"],
        ["psi", "--e", "6", "--charges", "0,3", "--bipartition", "6,4,2|11,9,2",
         "--inverse", "--to-dominant"],
        ["crystal-export", "--e", "3", "--max-n", "4", "--format", "json"],
    ]
    for argv in invocations:
        assert cli.main(argv) == 0, argv
        doc = get_json(capsys.readouterr().out)
        jsonschema.validate(doc, DOCUMENT_SCHEMA)
