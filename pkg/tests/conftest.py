import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from pisot_palette import make_base  # noqa: E402
from pisot_palette.sweep import sweep  # noqa: E402

import acceptance_log  # noqa: E402



@pytest.fixture(scope="session")
def tribo():
    return make_base(1, 1)


@pytest.fixture(scope="session")
def tribo_atlas(tribo):
    return sweep(tribo.beta_pow(2), tribo.beta_pow(3), tribo)


def pytest_terminal_summary(terminalreporter):
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
