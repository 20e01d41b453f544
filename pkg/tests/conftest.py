from __future__ import annotations

import pytest

from fusionchar.catalog import load_catalog
from fusionchar.perm_group import parse_group, parse_permutations

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def s3c3(catalog):
    return catalog.build("s3-c3-p3")


@pytest.fixture(scope="session")
def s4d8(catalog):
    return catalog.build("s4-d8-p2")


def group(text, degree=None):
    return parse_group(text, degree)


def sub(G, text):
    return G.subgroup(parse_permutations(text, G.degree)[1])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
