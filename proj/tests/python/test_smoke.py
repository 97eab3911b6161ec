"""End-to-end smoke tests for the Python bindings and the CLI binary."""

import json
import math
import os
import subprocess

import pytest

import erasplit


CLI = os.environ.get("ERA_GBDT_BIN")

needs_cli = pytest.mark.skipif(CLI is None, reason="ERA_GBDT_BIN not set")


def small_config(**overrides):
    cfg = erasplit.TrainConfig()
    cfg.n_boosting_rounds = 20
    cfg.max_leaves = 8
    cfg.max_bins = 16
    cfg.min_child_samples = 5
    cfg.learning_rate = 0.3
    for key, value in overrides.items():
        setattr(cfg, key, value)
    return cfg


def test_version():
    assert erasplit.__version__ == "0.1.0"


def test_gen_sine_wave_shapes():
    train, test = erasplit.gen_sine_wave(seed=7)
    assert train.n_rows == 512
    assert train.n_features == 1
    assert train.n_eras == 8
    assert test.n_rows == 64
    assert test.n_eras == 1


def test_fit_predict_improves_over_constant():
    train, test = erasplit.gen_sine_wave(noise_sigma=0.1, seed=3)
    model = erasplit.fit(train, small_config())
    preds = model.predict(train.columns)
    assert len(preds) == train.n_rows
    report = erasplit.compute_metrics(preds, train)
    mean = sum(train.targets) / len(train.targets)
    base_mse = sum((y - mean) ** 2 for y in train.targets) / len(train.targets)
    assert report["mse"] < base_mse
    assert -1.0 <= report["pearson_corr"] <= 1.0
    assert report["accuracy"] is None


def test_each_split_type_trains():
    train, _ = erasplit.gen_sine_wave(seed=11)
    for split_type in ("original", "era-split", "directional-era-split"):
        model = erasplit.fit(train, small_config(split_type=split_type))
        assert model.n_trees > 0
        assert model.config.split_type == split_type


def test_boltzmann_alpha_accepts_strings_and_floats():
    cfg = small_config()
    cfg.boltzmann_alpha = "min"
    assert cfg.boltzmann_alpha == "min"
    cfg.boltzmann_alpha = 1.5
    assert cfg.boltzmann_alpha == pytest.approx(1.5)


def test_model_save_load_roundtrip(tmp_path):
    train, _ = erasplit.gen_sine_wave(seed=5)
    model = erasplit.fit(train, small_config(split_type="era-split"))
    path = str(tmp_path / "model.json")
    model.save(path)
    clone = erasplit.GBDTModel.load(path)
    assert clone.predict(train.columns) == model.predict(train.columns)


def test_invalid_config_raises_value_error():
    train, _ = erasplit.gen_sine_wave(seed=1)
    with pytest.raises(ValueError, match="max_leaves"):
        erasplit.fit(train, small_config(max_leaves=1))


def test_dataset_csv_roundtrip(tmp_path):
    train, _ = erasplit.gen_memorization(
        n_train=64, n_test=16, dims=4, n_eras=4, seed=9
    )
    path = str(tmp_path / "train.csv")
    train.save_csv(path)
    loaded = erasplit.Dataset.load(path)
    assert loaded.columns == train.columns
    assert loaded.targets == train.targets
    assert loaded.eras == train.eras


def test_degenerate_demo_exact_scores():
    report = erasplit.run_degenerate_demo()
    assert report["original"]["score"] == 2.0
    assert report["original"]["per_era_gains"] == [None, None]
    assert report["era_split"]["score"] == 0.25
    assert report["directional_era_split"]["score"] == 1.0


def test_grid_search_returns_ordered_records():
    train, test = erasplit.gen_sine_wave(seed=2)
    rows = erasplit.run_grid_search(train, test, n_configs=2, seed=4)
    assert len(rows) == 6
    assert [r["run_index"] for r in rows] == list(range(6))
    assert [r["split_type"] for r in rows] == [
        "original",
        "era-split",
        "directional-era-split",
    ] * 2
    for row in rows:
        assert row["error"] == ""
        assert math.isfinite(row["test_metrics"]["mse"])


@needs_cli
def test_cli_demo_degenerate_runs():
    out = subprocess.run(
        [CLI, "demo-degenerate", "--json"], capture_output=True, text=True
    )
    assert out.returncode == 0
    report = json.loads(out.stdout)
    assert report["original"]["score"] == 2.0


@needs_cli
def test_cli_train_predict_evaluate_chain(tmp_path):
    data_dir = tmp_path / "data"
    run = subprocess.run(
        [CLI, "gen-data", "sine", "--out-dir", str(data_dir), "--seed", "13"],
        capture_output=True,
        text=True,
    )
    assert run.returncode == 0, run.stderr

    model_path = tmp_path / "model.json"
    run = subprocess.run(
        [
            CLI,
            "train",
            str(data_dir / "train.csv"),
            "--model-out",
            str(model_path),
            "--split-type",
            "era",
            "--n-boosting-rounds",
            "10",
        ],
        capture_output=True,
        text=True,
    )
    assert run.returncode == 0, run.stderr
    assert model_path.exists()

    preds_path = tmp_path / "preds.csv"
    run = subprocess.run(
        [
            CLI,
            "predict",
            str(model_path),
            str(data_dir / "test.csv"),
            "--out",
            str(preds_path),
        ],
        capture_output=True,
        text=True,
    )
    assert run.returncode == 0, run.stderr
    lines = preds_path.read_text().splitlines()
    assert lines[0] == "prediction"
    assert len(lines) == 65

    report_path = tmp_path / "report.json"
    run = subprocess.run(
        [
            CLI,
            "evaluate",
            str(model_path),
            str(data_dir / "test.csv"),
            "--report-out",
            str(report_path),
        ],
        capture_output=True,
        text=True,
    )
    assert run.returncode == 0, run.stderr
    report = json.loads(report_path.read_text())
    assert math.isfinite(report["mse"])


@needs_cli
def test_cli_rejects_unknown_split_type(tmp_path):
    data_dir = tmp_path / "data"
    subprocess.run(
        [CLI, "gen-data", "sine", "--out-dir", str(data_dir)],
        capture_output=True,
    )
    run = subprocess.run(
        [
            CLI,
            "train",
            str(data_dir / "train.csv"),
            "--model-out",
            str(tmp_path / "m.json"),
            "--split-type",
            "bogus",
        ],
        capture_output=True,
        text=True,
    )
    assert run.returncode == 1
