import json

import pytest

from hodelta import cli


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_exact(capsys):
    code, out, _ = run(capsys, "exact", "--g", "-0.5")
    assert code == 0
    assert "nu=-0.344424" in out


def test_exact_zero(capsys):
    assert "nu=0.000000" in run(capsys, "exact", "--g", "0")[1]


def test_variational(capsys):
    code, out, _ = run(capsys, "variational", "--g", "1.0")
    assert code == 0
    assert "alpha_min=1.077488" in out
    assert "nu=0.394997" in out


def test_variational_and_exact_agree_at_zero(capsys):
    _, v, _ = run(capsys, "variational", "--g", "0", "--format", "json")
    _, e, _ = run(capsys, "exact", "--g", "0", "--format", "json")
    assert json.loads(v)["nu"] == json.loads(e)["nu"] == 0.0


def test_table_two_csv(tmp_path, capsys):
    code, out, _ = run(capsys, "table", "--which", "2", "--format", "csv", "--out", str(tmp_path))
    assert code == 0
    lines = (tmp_path / "table2.csv").read_text().splitlines()
    assert len(lines) == 17
    assert lines[0].startswith("g,alpha_min,nu_variational,nu_exact")


def test_csv_is_byte_identical(tmp_path, capsys):
    for name in ("a", "b"):
        run(capsys, "sweep", "--g-min", "-1", "--g-max", "1", "--step", "0.5", "--out", str(tmp_path / name))
    assert (tmp_path / "a" / "sweep.csv").read_bytes() == (tmp_path / "b" / "sweep.csv").read_bytes()


def test_sweep_rows_ascend(capsys):
    _, out, _ = run(capsys, "sweep", "--g-min", "-1", "--g-max", "1", "--step", "0.5", "--format", "csv")
    gs = [float(line.split(",")[0]) for line in out.splitlines()[1:]]
    assert gs == [-1.0, -0.5, 0.0, 0.5, 1.0]


def test_figure(tmp_path, capsys):
    code, out, _ = run(capsys, "figure", "--id", "nu_vs_g", "--g", "1", "2", "--out", str(tmp_path))
    assert code == 0
    assert (tmp_path / "fig7.csv").exists()


def test_excited(capsys):
    code, out, _ = run(capsys, "excited", "--alpha-grid", "0.8,1.0,1.2", "--z-grid=-0.5,0,0.5")
    assert code == 0
    assert out.strip() == "argmin_alpha=1.000000 argmin_z=0.000000 epsilon=1.500000"


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--g", "1.0", "--n", "1201", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert abs(record["difference"]) < 2e-3


def test_full_precision(capsys):
    _, out, _ = run(capsys, "exact", "--g", "1", "--full-precision", "--format", "csv")
    assert len(out.splitlines()[1].split(",")[1]) > 10


def test_numerical_failure_exits_one(capsys):
    code, _, err = run(capsys, "oracle", "--g", "1", "--n", "2400")
    assert code == 1
    assert "odd" in err
    code, _, err = run(capsys, "variational", "--g", "1", "--family", "attractive")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [["exact"], ["table", "--which", "3"], ["frobnicate"], ["exact", "--g", "x"], ["sweep", "--g-min", "0", "--g-max", "1", "--step", "-1"]],
)
def test_argument_errors_exit_two(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.run(argv)
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "hodelta", "exact", "--g", "2.0"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "nu=0.583898" in proc.stdout
