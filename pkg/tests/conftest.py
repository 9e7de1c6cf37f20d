import os

import pytest
from hypothesis import HealthCheck, settings

import _support
from twistdec import gscore

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

gscore.INTERPOLATION_HOOKS.append(_support.contract_hook)


@pytest.fixture(autouse=True)
def _interpolation_contracts():
    """Every gs_list_decode call made by any test must honour the interpolation contract."""
    before = len(_support.CONTRACTS["violations"])
    yield
    new = _support.CONTRACTS["violations"][before:]
    assert not new, f"interpolation contract violated: {new[:2]}"


def pytest_terminal_summary(terminalreporter):
    if not _support.VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for c in sorted(_support.VERDICTS):
        ok, detail = _support.VERDICTS[c]
        terminalreporter.write_line(f"criterion {c}: {'PASS' if ok else 'FAIL'} - {detail}")
    terminalreporter.write_line(
        f"interpolation contracts checked on {_support.CONTRACTS['checked']} decodes, "
        f"{len(_support.CONTRACTS['violations'])} violations"
    )
