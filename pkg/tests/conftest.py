import pytest

from wdcalc.catalog import default_catalog
from wdcalc.cuspidal import CuspidalDatum, SelfDual

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()


@pytest.fixture(scope="session")
def rho():
    return CuspidalDatum("rho", 2, True, SelfDual.EXT2)


@pytest.fixture(scope="session")
def chi():
    return CuspidalDatum("chi", 1)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.outcome == "passed" else "FAIL"
        _ACCEPTANCE[props["criterion"]] = (status, props.get("timing", ""))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[0])):
        status, timing = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{status}  {name}  {timing}".rstrip())
