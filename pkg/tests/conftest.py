import numpy as np
import pytest
from hypothesis import strategies as st

from quatmoeb.qmat2 import QMat2
from quatmoeb.quat import Quaternion

components = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False, allow_infinity=False)
quaternions = st.builds(Quaternion, components, components, components, components)
nonzero_quaternions = quaternions.filter(lambda q: q.norm() > 1e-3)
unit_quaternions = nonzero_quaternions.map(lambda q: q * (1.0 / q.norm()))
matrices = st.builds(QMat2, quaternions, quaternions, quaternions, quaternions)


def qclose(p, q, tol):
    return (p - q).norm() <= tol


def mclose(A, B, tol):
    return (A - B).norm() <= tol


@pytest.fixture
def rng():
    return np.random.default_rng(20241016)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
