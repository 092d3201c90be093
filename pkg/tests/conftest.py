from __future__ import annotations

import pytest

from parasuper import build_gl, build_osp

SMALL_OSP = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]


@pytest.fixture(scope="session")
def osp_cache():
    cache = {}

    def get(m1, m2, n):
        if (m1, m2, n) not in cache:
            cache[m1, m2, n] = build_osp(m1, m2, n)
        return cache[m1, m2, n]

    return get


@pytest.fixture(scope="session")
def osp111(osp_cache):
    return osp_cache(1, 1, 1)


@pytest.fixture(scope="session")
def gl1110():
    return build_gl(1, 1, 1, 0)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
