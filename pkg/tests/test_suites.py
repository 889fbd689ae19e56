"""The suite runner: seeding discipline, failure reporting, thread cap."""

import pytest

from catkit.sampling import splitmix64
from catkit.suites import SUITES, SuiteFailure, run_suite


def test_unknown_suite_rejected():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("no-such-suite", 1, 7)


def test_reports_carry_counts_and_time():
    rep = run_suite("transpose-identity", 5, 7)
    assert rep.suite == "transpose-identity"
    assert rep.trials == 5
    assert rep.ok and rep.failures == ()
    assert rep.wall_time >= 0


def test_failures_carry_reproduction_seeds(monkeypatch):
    calls = []

    def flaky(rng):
        value = rng.next_u64()
        calls.append(value)
        if len(calls) % 2 == 0:
            raise SuiteFailure(f"saw {value}")

    monkeypatch.setitem(SUITES, "flaky", flaky)
    rep = run_suite("flaky", 6, 99)
    assert len(rep.failures) == 3
    for trial, seed, message in rep.failures:
        assert seed == splitmix64(99 ^ trial)
        assert message.startswith("saw ")


def test_trial_seeding_is_splitmix_of_xor(monkeypatch):
    seen = {}

    def probe(rng):
        seen[len(seen)] = rng.state

    monkeypatch.setitem(SUITES, "probe", probe)
    run_suite("probe", 4, 1234)
    for i in range(4):
        # the trial stream starts at state splitmix64(seed XOR i)
        assert seen[i] == splitmix64(1234 ^ i)


def test_thread_cap_keeps_results_in_trial_order(monkeypatch):
    monkeypatch.setenv("CATKIT_THREADS", "4")

    def failing(rng):
        raise SuiteFailure("always")

    monkeypatch.setitem(SUITES, "failing", failing)
    rep = run_suite("failing", 8, 5)
    assert [t for t, _, _ in rep.failures] == list(range(8))
    ok = run_suite("transpose-identity", 8, 5)
    assert ok.ok
