import pytest

from sqw.sampling import DEFAULT_SEED, Sampler, ratios_generic, resolve_seed, with_redraw
from sqw.scalar import Q


def test_seed_resolution(monkeypatch):
    monkeypatch.delenv("SQW_SEED", raising=False)
    assert resolve_seed(None) == DEFAULT_SEED
    assert resolve_seed(7) == 7
    monkeypatch.setenv("SQW_SEED", "123")
    assert resolve_seed(7) == 123


def test_sampler_is_deterministic():
    a, b = Sampler(5), Sampler(5)
    assert [a.rational() for _ in range(10)] == [b.rational() for _ in range(10)]
    assert Sampler(5).q() not in (0, 1, -1)


def test_generic_avoids_q_power_ratios():
    s = Sampler(3)
    q = Q(2)
    vals = s.generic(["x", "y", "z"], q)
    assert ratios_generic(list(vals.values()), q)
    assert not ratios_generic([Q(3), Q(12)], q)


def test_redraw_skips_degenerate_points():
    draws = iter([0, 0, 2])
    point, value = with_redraw(lambda: next(draws), lambda v: 1 / Q(v))
    assert point == 2 and value == Q(1, 2)
    with pytest.raises(RuntimeError):
        with_redraw(lambda: 0, lambda v: 1 / Q(v), tries=3)
