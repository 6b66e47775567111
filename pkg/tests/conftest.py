from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from hyperpd.ideal import MonomialIdeal, minimalize

VARS = "abcdefg"


@st.composite
def square_free_ideals(draw, max_vars: int = 6, max_gens: int = 6):
    n = draw(st.integers(1, max_vars))
    names = tuple(VARS[:n])
    gens = draw(st.lists(st.frozensets(st.sampled_from(names), min_size=1, max_size=min(4, n)),
                         min_size=1, max_size=max_gens))
    return minimalize(MonomialIdeal(names, tuple(gens)))


def random_ideals(count: int, seed: int, nvars: int = 6, max_gens: int = 6) -> list[MonomialIdeal]:
    from hyperpd.sweeps import random_ideal

    rng = random.Random(seed)
    return [random_ideal(rng, nvars=nvars, max_gens=max_gens) for _ in range(count)]


@pytest.fixture
def rng():
    return random.Random(20240601)


_VERDICTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def verdict():
    """Record the PASS/FAIL line of an acceptance criterion."""
    def _record(name: str, ok, detail: str = ""):
        _VERDICTS[name] = (bool(ok), detail)
        print(f"{name} {'PASS' if ok else 'FAIL'}: {detail}")
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_VERDICTS, key=lambda n: int(n[1:])):
        ok, detail = _VERDICTS[name]
        terminalreporter.write_line(f"{name} {'PASS' if ok else 'FAIL'}: {detail}")
