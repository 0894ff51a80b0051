from __future__ import annotations

from pathlib import Path

import pytest

from pathlab import parse_edge_list, parse_matrix_text

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def load_graph(name: str):
    text = fixture_path(name).read_text(encoding="utf-8")
    if name.endswith(".edges"):
        return parse_edge_list(text)
    return parse_matrix_text(text)


@pytest.fixture(scope="session")
def paper8():
    return load_graph("paper8.mat")


@pytest.fixture(scope="session")
def paper8_tora():
    return load_graph("paper8_tora.mat")


@pytest.fixture(scope="session")
def tie4():
    return load_graph("tie4.edges")


@pytest.fixture(scope="session")
def counterexample4():
    return load_graph("counterexample4.edges")


_acceptance_outcomes: list[tuple[str, bool]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance_outcomes.append((report.nodeid.split("::")[-1], report.passed))


def pytest_terminal_summary(terminalreporter):
    if _acceptance_outcomes:
        terminalreporter.section("acceptance criteria")
        for name, passed in _acceptance_outcomes:
            terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}: {name}")
