"""Run the behave feature suite under pytest."""

from pathlib import Path

from behave.__main__ import main as behave_main

ROOT = Path(__file__).resolve().parent


def test_behave_features(monkeypatch):
    monkeypatch.chdir(ROOT)
    assert behave_main(["--format", "progress", "--no-color"]) == 0
