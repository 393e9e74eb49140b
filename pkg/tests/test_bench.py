import csv
import logging
import subprocess
import sys
from pathlib import Path

import pytest

from streamdfs import bench, cli
from streamdfs.algorithms import ConfigError
from streamdfs.bench import (ExperimentSpec, InvalidRun, csv_text, improvement_summary, read_csv,
                             reduction_percent, run_experiment)
from streamdfs.generators import GenSpec
from streamdfs.report import CSV_FIELDS, RunReport
from streamdfs.validation import ValidityReport

DATA = Path(__file__).parent / "data"
K_VARIANTS = ["kpathO", "kpath1", "kpath2", "kpathN", "klevO", "klev1", "klev2", "klevN"]


def er(n=40, m=120):
    return GenSpec("erdos-renyi-gnm", n, m)


def test_all_k_variants_smoke():
    rows = run_experiment(ExperimentSpec([er()], K_VARIANTS, [10]))
    assert [r.algo for r in rows] == K_VARIANTS
    assert all(r.valid for r in rows)
    assert all(r.peak_stored_edges <= r.n * r.k for r in rows)


def test_matrix_is_full_cross_product_in_order():
    spec = ExperimentSpec([er(), er(30, 60)], ["simp", "klevN"], [1, 3], seeds=[0, 1])
    rows = run_experiment(spec)
    assert len(rows) == 2 * 2 * 2 * 2
    assert [(r.algo, r.k, r.seed) for r in rows[:4]] == [
        ("simp", 1, 0), ("simp", 1, 1), ("simp", 3, 0), ("simp", 3, 1)]


def test_repeated_invocations_are_byte_identical(tmp_path):
    spec = dict(inputs=[er()], algorithms=["kpathN", "klevO", "imprv"], ks=[1, 2],
                seeds=[4, 5], repetitions=3)
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run_experiment(ExperimentSpec(**spec, output=str(a)))
    run_experiment(ExperimentSpec(**spec, output=str(b)))
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().splitlines()[0] == ",".join(CSV_FIELDS)


def test_parallel_matches_serial():
    spec = dict(inputs=[er(), er(25, 80)], algorithms=["kpathO", "klevN"], ks=[1, 2], seeds=[0, 1])
    serial = run_experiment(ExperimentSpec(**spec))
    parallel = run_experiment(ExperimentSpec(**spec, workers=2))
    assert csv_text(serial) == csv_text(parallel)


def test_klevo_pass_counts_reported_per_k():
    rows = run_experiment(ExperimentSpec([er(150, 900)], ["klevO"], [1, 2, 5, 10]))
    assert [r.k for r in rows] == [1, 2, 5, 10]
    assert all(r.passes >= 1 for r in rows)


def test_file_input(tmp_path):
    rows = run_experiment(ExperimentSpec([str(DATA / "tiny_konect.tsv")], ["kpathN"], [1]))
    assert rows[0].dataset == "tiny_konect.tsv" and (rows[0].n, rows[0].m) == (5, 4)


def test_trace_files(tmp_path):
    base = tmp_path / "trace.csv"
    run_experiment(ExperimentSpec([er()], ["kpathN", "klevN"], [2], trace_budget=str(base)))
    for i in (0, 1):
        lines = (tmp_path / f"trace.{i}.csv").read_text().splitlines()
        assert lines[0] == "event,current" and len(lines) > 1


def test_errors():
    with pytest.raises(FileNotFoundError):
        run_experiment(ExperimentSpec(["/no/such/file"], ["simp"], [1]))
    with pytest.raises(ConfigError):
        run_experiment(ExperimentSpec([er()], ["kpath7"], [1]))
    with pytest.raises(ValueError):
        run_experiment(ExperimentSpec([er()], ["simp"], [0]))


def test_invalid_tree_aborts(monkeypatch):
    monkeypatch.setattr(bench, "check_dfs", lambda g, t: ValidityReport(True, False, (0, 1)))
    with pytest.raises(InvalidRun) as info:
        run_experiment(ExperimentSpec([er()], ["simp"], [1]))
    assert info.value.report.algo == "simp" and info.value.report.valid is False


@pytest.mark.parametrize("o,n,want", [(5, 3, 40), (3, 1, 66), (4, 4, 0), (7, 1, 85)])
def test_reduction_percent(o, n, want):
    assert reduction_percent(o, n) == want


def _row(algo, k, passes, dataset="d"):
    return RunReport(algo=algo, k=k, n=1, m=0, passes=passes, peak_stored_edges=0, height=0,
                     dataset=dataset, seed=0)


def test_improvement_summary_and_missing_pair(caplog):
    rows = [_row("kpathO", 1, 5), _row("kpathN", 1, 3),
            _row("kpathO", 1, 3, "e"), _row("kpathN", 1, 1, "e"),
            _row("klevO", 2, 4), _row("simp", 1, 9)]
    with caplog.at_level(logging.WARNING):
        pairs, averages = improvement_summary(rows)
    assert sorted(p.percent for p in pairs) == [40, 66]
    assert averages == {("kpath", 1): 53}
    assert "no O/N pair" in caplog.text


def test_summary_from_csv(tmp_path):
    p = tmp_path / "rows.csv"
    run_experiment(ExperimentSpec([er()], ["kpathO", "kpathN"], [1, 2], output=str(p)))
    pairs, averages = improvement_summary(read_csv(p))
    assert len(pairs) == 2 and set(averages) == {("kpath", 1), ("kpath", 2)}


# -- command line ---------------------------------------------------------------

def test_cli_writes_csv(tmp_path, capsys):
    out = tmp_path / "o.csv"
    code = cli.main(["--gen", "er:n=30,m=60", "--gen", "plaw:n=30,m=60,exp=3",
                     "--algo", "kpathN,klevN", "--k", "1,2", "--seed", "0,1",
                     "--csv", str(out), "--summary"])
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 2 * 2 * 2 * 2
    assert {r["valid"] for r in rows} == {"True"}
    assert "average reduction" not in capsys.readouterr().out


def test_cli_stdout_default(capsys):
    assert cli.main(["--gen", "er:n=10,m=12", "--algo", "simp"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == ",".join(CSV_FIELDS) and len(out) == 2


@pytest.mark.parametrize("args", [["--gen", "foo:n=3,m=1"], ["--gen", "er:n=3"],
                                  ["--gen", "er:n=3,m=1,exp=2"], ["--algo", "bogus"],
                                  ["--k", "one"]])
def test_cli_rejects_bad_flags(args):
    with pytest.raises(SystemExit) as info:
        cli.main(args + (["--gen", "er:n=3,m=1"] if "--gen" not in args else []))
    assert info.value.code == 2


def test_cli_missing_input(capsys):
    assert cli.main(["--input", "/no/such/file"]) == 2
    assert cli.main([]) == 2


def test_cli_invalid_run_exit_code(monkeypatch):
    monkeypatch.setattr(bench, "check_dfs", lambda g, t: ValidityReport(False, False, None))
    assert cli.main(["--gen", "er:n=10,m=12", "--algo", "simp"]) == 1


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "streamdfs.cli", "--gen", "er:n=12,m=20",
                           "--algo", "kpathN"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("dataset,n,m,algo")
