import json

import pytest

from ocp_afem import cli
from ocp_afem.adapt import CSV_COLUMNS, read_csv
from ocp_afem.fem import ConvergenceError


def test_run_writes_outputs(tmp_path, capsys):
    code = cli.main(["run", "--example", "1", "--max-iters", "3", "--out", str(tmp_path)])
    assert code == cli.EXIT_OK
    recs = read_csv(tmp_path / "records.csv")
    assert [r.iteration for r in recs] == [1, 2, 3]
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["iterations"] == 3 and summary["final_ndof"] == recs[-1].ndof
    assert (tmp_path / "mesh_3.vtk").exists()
    assert "ndof" in capsys.readouterr().out
    assert (tmp_path / "records.csv").read_text().startswith(",".join(CSV_COLUMNS))


def test_run_no_vtk_and_competitor(tmp_path):
    code = cli.main(["run", "--max-iters", "2", "--estimator", "competitor",
                     "--no-vtk", "--out", str(tmp_path)])
    assert code == 0
    assert not list(tmp_path.glob("*.vtk"))


def test_solver_failure_exit_code(tmp_path, monkeypatch):
    def boom(*args, **kwargs):
        raise ConvergenceError("iteration 1: no convergence", [1.0])

    monkeypatch.setattr(cli, "adaptive_loop", boom)
    assert cli.main(["run", "--max-iters", "2", "--out", str(tmp_path)]) == cli.EXIT_SOLVER


def test_verify_exit_codes(monkeypatch):
    from ocp_afem import verify

    class Res:
        def __init__(self, ok):
            self.passed = ok

        def line(self):
            return "[PASS]" if self.passed else "[FAIL]"

    monkeypatch.setattr(verify, "run_all", lambda **kw: [Res(True)])
    assert cli.main(["verify", "--only", "1"]) == cli.EXIT_OK
    monkeypatch.setattr(verify, "run_all", lambda **kw: [Res(True), Res(False)])
    assert cli.main(["verify"]) == cli.EXIT_ACCEPTANCE


@pytest.mark.parametrize("argv", [
    ["run", "--out", "x", "--max-iters", "0"],
    ["run", "--out", "x", "--example", "2", "--nonlinearity", "arctan"],
    ["run", "--out", "x", "--example", "1", "--nonlinearity", "a1"],
    ["run", "--example", "3", "--out", "x"],
])
def test_bad_arguments(argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    with pytest.raises(SystemExit):
        cli.main(argv)
    assert not (tmp_path / "x").exists()
