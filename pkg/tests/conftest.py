from __future__ import annotations

from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("repo")

# criterion number -> (passed, detail), filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")


import pytest  # noqa: E402


@pytest.fixture(scope="session")
def suite():
    """Every scenario run once; also records each ring test it makes.

    Returns ``(records, calls)`` where ``calls[name]`` lists
    ``(group, fs, inverted, kwargs, verdict)`` tuples; the verdict slot holds
    the exception when a precondition failed.
    """
    from arithinv import scenarios as S
    from arithinv.criteria import PreconditionError

    calls: dict[str, list] = {}
    current = {"name": None}
    real = S.polynomial_ring_test

    def recording(group, fs, inverted=frozenset(), **kw):
        try:
            v = real(group, fs, inverted, **kw)
        except PreconditionError as exc:
            v = exc
            raise
        finally:
            calls.setdefault(current["name"], []).append((group, list(fs), frozenset(inverted), kw, v))
        return v

    S.polynomial_ring_test = recording
    records = {}
    try:
        for name in S.scenario_names():
            current["name"] = name
            records[name] = S.run_scenario(name, S.Options())
    finally:
        S.polynomial_ring_test = real
    return records, calls
