"""The verification suite report object, the seeded corpus, and the CLI."""

from __future__ import annotations

import io
import re

import pytest

from gpvis import DEFAULT_CORPUS_SEED, corpus_graphs, run_verification_suite
from gpvis.cli import main
from gpvis.graphs import all_pairs_distances
from gpvis.report import CORPUS_SIZE, SCOPES, Expected, at_least, exactly

MACHINE_RE = re.compile(
    r"^CHECK [a-zA-Z0-9_]+ expected=(\d+|>=\d+|<=\d+|\d+\.\.\d+) "
    r"actual=(-|\d+) status=(pass|fail|timeout|error)$"
)


def test_expected_conditions():
    assert exactly(5).satisfied(5)
    assert not exactly(5).satisfied(4)
    assert at_least(3).satisfied(7)
    assert not at_least(3).satisfied(2)
    assert str(exactly(5)) == "5"
    assert str(at_least(12)) == ">=12"
    rng = Expected("..", 2, 4)
    assert rng.satisfied(3) and not rng.satisfied(5)
    assert str(rng) == "2..4"


def test_corpus_is_deterministic_and_connected():
    a = corpus_graphs(DEFAULT_CORPUS_SEED)
    b = corpus_graphs(DEFAULT_CORPUS_SEED)
    assert len(a) == CORPUS_SIZE
    assert [g.adj for g in a] == [g.adj for g in b]
    for g in a:
        assert 4 <= g.n <= 8
        assert all_pairs_distances(g).connected
    c = corpus_graphs(DEFAULT_CORPUS_SEED + 1)
    assert [g.adj for g in a] != [g.adj for g in c]


def test_scopes_cover_expected_checks(full_report):
    assert set(SCOPES) == {"all", "double", "mycielskian", "bounds"}
    names = [c.name for c in full_report.checks]
    assert len(names) == len(set(names)), "duplicate check names"
    assert len(names) == 76
    # Spot membership across the three sections.
    for expected_name in (
        "mu_D_C7",
        "gp_D_P3",
        "mu_D_balloon2_target",
        "mu_M_P4",
        "mu_M_K33",
        "gp_double_sandwich",
        "gp_oracle_equivalence",
        "witness_gate_double",
        "witness_gate_myc",
    ):
        assert expected_name in names


def test_full_report_known_failures(full_report):
    # The only failing checks are the four recorded-vs-computed mismatches
    # for gp on the doubled near-complete graphs; everything else passes.
    failing = [c.name for c in full_report.checks if c.status == "fail"]
    assert failing == [
        "gp_D_Kminus5",
        "gp_D_Kminus6",
        "gp_D_Kminus7",
        "gp_D_Kminus8",
    ]
    for c in full_report.checks:
        if c.name.startswith("gp_D_Kminus"):
            n = int(c.name[-1])
            assert c.expected.lo == n
            assert c.actual == n - 1
    assert full_report.count("timeout") == 0
    assert full_report.count("error") == 0
    assert full_report.exit_code() == 1
    assert not full_report.all_pass()


def test_machine_lines_format(full_report):
    for line in full_report.machine_lines():
        assert MACHINE_RE.match(line), line


def test_table_and_csv(full_report):
    table = full_report.to_table()
    assert "76 checks:" in table
    assert "mu_D_C7" in table
    csv_text = full_report.to_csv()
    lines = csv_text.strip().splitlines()
    assert lines[0] == "name,graph,kind,expected,actual,status,elapsed"
    assert len(lines) == 77


def test_scope_double_runs_subset():
    buf = io.StringIO()
    report = run_verification_suite("double", seed=DEFAULT_CORPUS_SEED, stream=buf)
    names = [c.name for c in report.checks]
    assert "mu_D_C7" in names
    assert "mu_M_P4" not in names
    assert "gp_double_sandwich" not in names
    # The stream sees one CHECK line per check, as they complete.
    streamed = [l for l in buf.getvalue().splitlines() if l.startswith("CHECK ")]
    assert streamed == report.machine_lines()


def test_max_n_skips_large_graphs():
    report = run_verification_suite("double", seed=DEFAULT_CORPUS_SEED, max_n=12)
    names = [c.name for c in report.checks]
    assert "mu_D_C7" not in names  # order 14 skipped
    assert "mu_D_C4" in names  # order 8 kept
    assert any("mu_D_C7" in s for s in report.skipped)


def test_suite_deterministic():
    a = run_verification_suite("bounds", seed=DEFAULT_CORPUS_SEED)
    b = run_verification_suite("bounds", seed=DEFAULT_CORPUS_SEED)
    assert a.machine_lines() == b.machine_lines()


def test_unknown_scope_rejected():
    with pytest.raises(ValueError):
        run_verification_suite("everything")


# --- CLI ---


def test_cli_gen(capsys):
    assert main(["gen", "cycle:4"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "4 4"


def test_cli_dist(capsys):
    assert main(["dist", "path:3"]) == 0
    out = capsys.readouterr().out
    assert "0 1 2" in out


def test_cli_check_set_pass_and_fail(capsys):
    rc = main(["check-set", "double(cycle:4)", "--kind", "mv",
               "--set", "v1,v2,v1',v2',v3',v4'"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.startswith("PASS kind=mv size=6")
    rc = main(["check-set", "path:4", "--kind", "mv", "--set", "v1,v2,v4"])
    assert rc == 1
    out = capsys.readouterr().out
    assert out.startswith("FAIL kind=mv size=3")


def test_cli_invariant(capsys):
    rc = main(["invariant", "double(cycle:7)", "--kind", "mv"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "value=7 status=exact" in out
    assert "witness=" in out and "nodes=" in out


def test_cli_invariant_target(capsys):
    rc = main(["invariant", "double(cycle:8)", "--kind", "mv", "--target", "6"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "status=lower_bound" in out


def test_cli_enumerate(capsys):
    rc = main(["enumerate", "double(path:3)", "--kind", "gp"])
    assert rc == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "size=4 count=1"
    assert out[1] == "v1,v3,v1',v3'"


def test_cli_verify_paper_scope_bounds(capsys):
    rc = main(["verify-paper", "--scope", "bounds"])
    assert rc == 0  # no recorded-value mismatches live in this scope
    out = capsys.readouterr().out
    assert "CHECK gp_double_sandwich" in out
    assert "checks:" in out


def test_cli_verify_paper_csv(tmp_path, capsys):
    csv_path = tmp_path / "out.csv"
    rc = main(["verify-paper", "--scope", "bounds", "--csv", str(csv_path)])
    assert rc == 0
    assert csv_path.exists()
    header = csv_path.read_text().splitlines()[0]
    assert header.startswith("name,graph,kind")


def test_cli_error_handling(capsys):
    rc = main(["gen", "bogus:3"])
    assert rc == 2
    err = capsys.readouterr().err
    assert err.startswith("error:")
    rc = main(["check-set", "path:4", "--kind", "mv", "--set", "v9"])
    assert rc == 2
    rc = main(["invariant", "path:4", "--kind", "nope"])
    assert rc == 2


def test_cli_file_round_trip(tmp_path, capsys):
    assert main(["gen", "cycle:5"]) == 0
    text = capsys.readouterr().out
    p = tmp_path / "c5.txt"
    p.write_text(text)
    assert main(["invariant", f"file:{p}", "--kind", "mv"]) == 0
    assert "value=3" in capsys.readouterr().out
