from __future__ import annotations

import random

import pytest

from hyperpd import sweeps


@pytest.mark.parametrize("name", ["strings", "cycles", "lemmas"])
def test_small_sweeps_clean(name):
    out = sweeps.VERIFIERS[name](max_mu=7)
    assert out.ok and out.instances > 0


def test_reductions_cover_both_rules():
    from hyperpd.hypergraph import branch_reduce

    rules = {branch_reduce(H).rule for _, H in sweeps.spider_instances(9)}
    assert {"colon-edge", "remove-vertex"} <= rules
    out = sweeps.verify_reductions(max_mu=6)
    assert out.ok and out.instances > 50


def test_splitting_notes():
    out = sweeps.verify_splitting(max_mu=8, random_count=10, seed=1)
    assert out.ok
    assert out.notes[0].startswith("hypotheses held on ")


def test_edge_sweeps_small():
    assert sweeps.verify_string_edge(max_mu=6, samples=5, sample_mus=(7,)).ok
    assert sweeps.verify_cycle_edge(max_mu=6, samples=5, sample_mus=(7,)).ok


def test_random_ideal_is_minimal():
    rng = random.Random(0)
    for _ in range(50):
        I = sweeps.random_ideal(rng, nvars=5, max_gens=5)
        assert I.is_minimal and I.generators


def test_mismatches_sorted():
    cases = [("b", lambda: (1, 2)), ("a", lambda: (1, 3)), ("c", lambda: (4, 4))]
    out = sweeps._run("demo", cases)
    assert [m[0] for m in out.mismatches] == ["a", "b"] and out.instances == 3 and not out.ok
