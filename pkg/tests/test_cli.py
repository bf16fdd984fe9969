import csv
import json
import math
import os

import numpy as np
import pytest

from steppursuit.cli import (
    expansion_from_report,
    main,
    read_csv_column,
    report_from_json,
    report_to_json,
)


def write_csv(path, rows, header=None):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        if header:
            w.writerow(header)
        w.writerows(rows)


def test_read_csv_column_by_index_and_name(tmp_path):
    p = tmp_path / "data.csv"
    write_csv(p, [[1, 10.5], [2, -3.25]], header=["t", "value"])
    assert read_csv_column(str(p), "value").tolist() == [10.5, -3.25]
    assert read_csv_column(str(p), "1").tolist() == [10.5, -3.25]
    assert read_csv_column(str(p), "0").tolist() == [1.0, 2.0]


def test_read_csv_headerless(tmp_path):
    p = tmp_path / "plain.csv"
    write_csv(p, [[4.0], [5.0], [6.0]])
    assert read_csv_column(str(p), "0").tolist() == [4.0, 5.0, 6.0]


def test_read_csv_errors(tmp_path):
    p = tmp_path / "bad.csv"
    write_csv(p, [["x"], ["1.0"], ["oops"]])
    from steppursuit.cli import InputError

    with pytest.raises(InputError, match="not a number"):
        read_csv_column(str(p), "0")
    write_csv(p, [["a", "b"], ["1", "2"]])
    with pytest.raises(InputError, match="not found"):
        read_csv_column(str(p), "missing")
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    with pytest.raises(InputError, match="empty"):
        read_csv_column(str(empty), "0")


def test_approx_plateau(tmp_path, capsys):
    p = tmp_path / "block.csv"
    write_csv(p, [[0.0], [3.0], [3.0], [3.0], [0.0]])
    out = tmp_path / "report.json"
    code = main(
        [
            "approx",
            str(p),
            "--column",
            "0",
            "--max-iter",
            "5",
            "--residual-eps",
            "1e-12",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    rep = json.loads(out.read_text())
    assert len(rep["terms"]) == 1
    t = rep["terms"][0]
    assert (t["start"], t["length"]) == (2, 3)
    assert t["coefficient"] == pytest.approx(3 * math.sqrt(3), rel=1e-15)
    assert rep["residual_norms"][-1] == 0.0
    assert rep["breakpoints"] == [1, 4]
    assert max(abs(x) for x in rep["residual"]) == 0.0


def test_approx_shift_round_trip(tmp_path):
    p = tmp_path / "vals.csv"
    rng = np.random.default_rng(0)
    vals = rng.uniform(-1, 1, 40)
    write_csv(p, [[v] for v in vals])
    out = tmp_path / "rep.json"
    assert (
        main(["approx", str(p), "--column", "0", "--shift", "10", "--out", str(out)])
        == 0
    )
    rep = json.loads(out.read_text())
    assert rep["shift"] == 10.0
    back = np.asarray(rep["reconstruction"]) + np.asarray(rep["residual"])
    assert np.max(np.abs(back - vals)) <= 1e-10


def test_approx_missing_file(tmp_path, capsys):
    code = main(["approx", str(tmp_path / "nope.csv"), "--column", "0"])
    assert code == 2
    assert "nope.csv" in capsys.readouterr().err


def test_report_json_round_trip(tmp_path):
    p = tmp_path / "vals.csv"
    write_csv(p, [[x] for x in [0.3, -1.7, 2.2, 2.2, 0.1]])
    out = tmp_path / "rep.json"
    main(["approx", str(p), "--column", "0", "--max-iter", "4", "--out", str(out)])
    text = out.read_text()
    rep = report_from_json(text)
    # floats survive the round trip bit for bit
    assert report_to_json(rep) == text
    exp = expansion_from_report(rep)
    assert [t.coefficient for t in exp.terms] == [
        t["coefficient"] for t in rep["terms"]
    ]
    assert list(exp.norm_history) == rep["residual_norms"]


def test_simulate_csv(tmp_path):
    out = tmp_path / "sim.csv"
    code = main(
        ["simulate", "sim1-3state", "--T", "250", "--seed", "1", "--out", str(out)]
    )
    assert code == 0
    with open(out, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["t", "value", "state", "true_mean"]
    assert len(rows) == 251
    states = {int(r[2]) for r in rows[1:]}
    assert states <= {1, 2, 3}
    assert [int(r[0]) for r in rows[1:]] == list(range(1, 251))
    # same seed, same file
    out2 = tmp_path / "sim2.csv"
    main(["simulate", "sim1-3state", "--T", "250", "--seed", "1", "--out", str(out2)])
    assert out.read_text() == out2.read_text()


def test_simulate_rejects_bad_t(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["simulate", "sim1-3state", "--T", "0"])
    assert exc.value.code == 2


def test_simulate_iid_has_empty_state_column(tmp_path):
    out = tmp_path / "iid.csv"
    main(["simulate", "normal-std", "--T", "10", "--seed", "0", "--out", str(out)])
    with open(out, newline="") as fh:
        rows = list(csv.reader(fh))
    assert all(r[2] == "" for r in rows[1:])


def test_compare_pipeline(tmp_path):
    sim = tmp_path / "sim.csv"
    main(["simulate", "kmeans-2state", "--T", "400", "--seed", "3", "--out", str(sim)])
    out = tmp_path / "cmp.json"
    code = main(["compare", str(sim), "--k", "2", "--seed", "0", "--out", str(out)])
    assert code == 0
    rep = json.loads(out.read_text())
    for key in ("pursuit_mse", "raw_mse", "kmeans_mse", "kmeans_centers", "kmeans_assignments"):
        assert key in rep
    assert len(rep["kmeans_centers"]) == 2
    assert len(rep["kmeans_assignments"]) == 400
    assert rep["pursuit_mse"] < rep["raw_mse"]


def test_compare_requires_true_mean(tmp_path):
    p = tmp_path / "novals.csv"
    write_csv(p, [[1.0], [2.0]], header=["value"])
    assert main(["compare", str(p)]) == 2


def test_verify_exit_codes(tmp_path, capsys):
    out = tmp_path / "verify.json"
    code = main(
        ["verify", "remark", "--trials", "100", "--seed", "7", "--out", str(out)]
    )
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["passed"] is True and rep["trials"] == 100 and rep["seed"] == 7
    assert "PASS" in capsys.readouterr().err


def test_verify_accepts_n_flag(tmp_path):
    out = tmp_path / "verify.json"
    code = main(
        [
            "verify",
            "theorem2",
            "--trials",
            "3",
            "--seed",
            "7",
            "--n",
            "6",
            "--out",
            str(out),
        ]
    )
    assert code == 0


def test_verify_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "theorem9"])
    assert exc.value.code == 2


def test_atomic_write_leaves_no_temp_files(tmp_path):
    p = tmp_path / "vals.csv"
    write_csv(p, [[1.0], [2.0]])
    out = tmp_path / "rep.json"
    main(["approx", str(p), "--column", "0", "--out", str(out)])
    assert set(os.listdir(tmp_path)) == {"vals.csv", "rep.json"}
