import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from solvlie.exactfield import GF, QQ
from solvlie import generators as gen

settings.register_profile(
    "default", deadline=None, max_examples=40, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

SMALL_FIELDS = [GF(2), GF(3), GF(5), GF(2, 2)]


def field_elements(f):
    if f is QQ:
        return st.fractions(max_denominator=12).filter(lambda x: abs(x.numerator) < 50)
    return st.sampled_from(f.elements())


@st.composite
def field_and_elements(draw, count=2, fields=SMALL_FIELDS):
    f = draw(st.sampled_from(fields + [QQ]))
    return f, [draw(field_elements(f)) for _ in range(count)]


@st.composite
def small_solvable(draw, fields=(GF(2), GF(3)), dim_max=4):
    f = draw(st.sampled_from(list(fields)))
    seed = draw(st.integers(0, 10**6))
    return gen.random_solvable(seed, dim_max, f)


@st.composite
def small_a_candidate(draw, fields=(GF(2), GF(3)), dim_max=5):
    f = draw(st.sampled_from(list(fields)))
    seed = draw(st.integers(0, 10**6))
    return gen.random_A_candidate(seed, f, dim_max)


# one summary line per acceptance criterion at the end of the run
_CRITERIA = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _CRITERIA[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_CRITERIA.items()):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


@pytest.fixture(scope="session")
def gf2():
    return GF(2)


@pytest.fixture(scope="session")
def gf3():
    return GF(3)
