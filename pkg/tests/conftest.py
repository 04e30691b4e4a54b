from __future__ import annotations

import functools

import numpy as np
import pytest

from legendre_iso import _kernels
from legendre_iso.census import admissible_q
from legendre_iso.gf import field_of_order

ACCEPTANCE_LINES: list[str] = []

BACKENDS = ["numpy"] + (["numba"] if _kernels.HAS_NUMBA else [])


def fields_up_to(q_max: int):
    return [field_of_order(q) for q in admissible_q(5, q_max)]


@functools.lru_cache(maxsize=None)
def iso_relation(q: int, restrict_r: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """(u, r) witness arrays from the brute-force scan, cached per field."""
    T = field_of_order(q).tables
    return _kernels.iso_scan(T.add_table, T.mul_table, T.inv, T.neg, T.code(3), restrict_r)


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
