"""Formula-versus-oracle sweeps over the enumerated families."""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import families, formulas
from .classify import pd_auto
from .hypergraph import (Hypergraph, branch_reduce, find_branches, remove_union_edges, remove_vertex,
                         to_ideal)
from .ideal import MonomialIdeal, minimalize
from .oracle import DEFAULT_LIMIT, betti_table, check_betti_splitting

FAMILIES = ("strings", "cycles", "string-edge", "cycle-edge", "lemmas", "splitting", "reductions")


@dataclass
class VerifyOutcome:
    family: str
    instances: int = 0
    mismatches: list = field(default_factory=list)  # (descriptor, formula value, oracle value)
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def oracle_pd_reg(H: Hypergraph, field_char: int = 0, limit: int = DEFAULT_LIMIT) -> tuple[int, int]:
    t = betti_table(to_ideal(H, force=True), field_char, limit=limit)
    return t.pd, t.reg


def _run(family: str, cases: Iterable[tuple[str, Callable[[], tuple]]]) -> VerifyOutcome:
    out = VerifyOutcome(family)
    t0 = time.perf_counter()
    for desc, check in cases:
        out.instances += 1
        expected, got = check()
        if expected != got:
            out.mismatches.append((desc, expected, got))
    out.elapsed = time.perf_counter() - t0
    out.mismatches.sort(key=lambda m: m[0])
    return out


def verify_strings(max_mu: int = 12, field_char: int = 0) -> VerifyOutcome:
    def case(mu):
        def check():
            pd, reg = oracle_pd_reg(families.open_string(mu), field_char)
            return (formulas.pd_open_string(mu), formulas.reg_open_string(mu)), (pd, reg)
        return f"string mu={mu:02d}", check
    return _run("strings", (case(mu) for mu in range(1, max_mu + 1)))


def verify_cycles(max_mu: int = 12, field_char: int = 0) -> VerifyOutcome:
    def case(mu):
        def check():
            return formulas.pd_open_cycle(mu), oracle_pd_reg(families.open_cycle(mu), field_char)[0]
        return f"cycle mu={mu:02d}", check
    return _run("cycles", (case(mu) for mu in range(3, max_mu + 1)))


def _edge_case(kind: str, mu: int, pos: tuple[int, ...], field_char: int):
    build = families.string_with_edge if kind == "string" else families.cycle_with_edge

    def check():
        H = build(mu, pos)
        res = pd_auto(H)
        want = f"formula:{kind}-with-edge"
        if res.method != want:
            return want, res.method
        return res.pd, oracle_pd_reg(H, field_char)[0]
    return f"{kind}-edge mu={mu:02d} F={','.join(map(str, pos))}", check


def verify_string_edge(max_mu: int = 8, samples: int = 200, sample_mus=(9, 10), seed: int = 0,
                       field_char: int = 0) -> VerifyOutcome:
    inst = list(families.string_edge_instances(max_mu))
    if samples:
        inst += families.sampled_string_edges(list(sample_mus), samples, seed)
    return _run("string-edge", (_edge_case("string", mu, pos, field_char) for mu, pos in inst))


def verify_cycle_edge(max_mu: int = 8, samples: int = 200, sample_mus=(9, 10), seed: int = 0,
                      field_char: int = 0) -> VerifyOutcome:
    inst = list(families.cycle_edge_instances(max_mu))
    if samples:
        inst += families.sampled_cycle_edges(list(sample_mus), samples, seed)
    return _run("cycle-edge", (_edge_case("cycle", mu, pos, field_char) for mu, pos in inst))


LEMMA_FAMILIES = ("stringedge", "2stringedge", "substinky", "stinkystring2k")


def verify_lemmas(max_mu: int = 10, family: str | None = None, field_char: int = 0) -> VerifyOutcome:
    """Each lemma's pd (and reg bound where stated) against the oracle."""
    families_to_check = [family] if family else list(LEMMA_FAMILIES)

    def case(name, gaps):
        def check():
            res = formulas.lemma_case_pd(name, gaps)
            H = families.lemma_hypergraph(name, gaps)
            if name == "2stringedge":
                v2 = families.positions_from_gaps(gaps)[1][1]
                H = remove_vertex(H, v2)
            pd, reg = oracle_pd_reg(H, field_char)
            if res.reg_bound is not None and reg > res.reg_bound:
                return (res.pd, f"reg<={res.reg_bound}"), (pd, f"reg={reg}")
            return res.pd, pd
        return f"{name} n={','.join(map(str, gaps))}", check

    gen = ((case(name, g)) for name in families_to_check for g in families.lemma_gap_vectors(name, max_mu))
    return _run("lemmas" if family is None else f"lemmas:{family}", gen)


def splitting_instances(max_mu: int = 10):
    """Stinky configurations with the split ``V1 = {v_2}``."""
    for gaps in families.lemma_gap_vectors("substinky", max_mu):
        if len(gaps) - 1 < 3:
            continue
        mu, pos = families.positions_from_gaps(gaps)
        yield gaps, families.lemma_hypergraph("substinky", gaps), pos[1]


def verify_splitting(max_mu: int = 10, random_count: int = 40, seed: int = 0,
                     field_char: int = 0) -> VerifyOutcome:
    """Whenever the splitting hypotheses hold, the oracle pd must be ``q + 1``."""
    cases = []
    for gaps, H, v2 in splitting_instances(max_mu):
        I = to_ideal(H)
        rest = [v for v in range(1, H.mu + 1) if v != v2]
        cases.append((f"stinky n={','.join(map(str, gaps))} V1={v2}", I, [v2], rest))
    rng = random.Random(seed)
    for t in range(random_count):
        I = random_ideal(rng, nvars=6, max_gens=6)
        mu = len(I.generators)
        if mu < 2:
            continue
        cut = rng.randint(1, mu - 1)
        perm = rng.sample(range(1, mu + 1), mu)
        cases.append((f"random#{t:03d} {I}", I, sorted(perm[:cut]), sorted(perm[cut:])))
    holds = 0

    def case(desc, I, V1, V2):
        def check():
            nonlocal holds
            rep = check_betti_splitting(I, V1, V2, field_char)
            if not rep.hypotheses_hold:
                return None, None
            holds += 1
            return rep.predicted_pd, betti_table(I, field_char).pd
        return desc, check

    out = _run("splitting", (case(*c) for c in cases))
    out.notes.append(f"hypotheses held on {holds} of {out.instances} instances")
    return out


def verify_reductions(max_mu: int = 7, field_char: int = 0) -> VerifyOutcome:
    """Union-edge removal and branch reduction preserve oracle pd on string-edge instances."""
    def union_case(mu, pos):
        def check():
            H = families.string_with_edge(mu, pos)
            return oracle_pd_reg(H, field_char)[0], oracle_pd_reg(remove_union_edges(H), field_char)[0]
        return f"union mu={mu:02d} F={','.join(map(str, pos))}", check

    def branch_case(desc, H):
        def check():
            red = branch_reduce(H)
            if red.rule == "no-rule":
                return None, None
            return oracle_pd_reg(H, field_char)[0], oracle_pd_reg(red.hypergraph, field_char)[0]
        return desc, check

    cases = []
    for mu in range(3, max_mu + 1):
        for k in range(2, mu + 1):
            for pos in itertools.combinations(range(1, mu + 1), k):
                if families.string_edge_is_union(mu, pos):
                    cases.append(union_case(mu, pos))
    for desc, H in spider_instances(max_mu + 2):
        cases.append(branch_case(desc, H))
    return _run("reductions", cases)


def spider_instances(max_mu: int):
    """One-dimensional trees: a closed-leaf branch of length n hanging off a string vertex."""
    for mu in range(3, max_mu):
        for w in range(2, mu):
            for n in range(1, max_mu - mu + 1):
                edges = [(f"x{i}", [i, i + 1]) for i in range(1, mu)]
                edges += [("x0", [1]), (f"x{mu}", [mu])]
                prev = w
                for j in range(1, n + 1):
                    edges.append((f"b{j}", [prev, mu + j]))
                    prev = mu + j
                edges.append(("leaf", [mu + n]))
                H = Hypergraph.build(mu + n, edges)
                if find_branches(H):
                    yield f"spider mu={mu:02d} w={w} n={n}", H


def random_ideal(rng: random.Random, nvars: int = 6, max_gens: int = 6, min_gens: int = 1) -> MonomialIdeal:
    names = [chr(ord("a") + i) for i in range(nvars)]
    while True:
        count = rng.randint(min_gens, max_gens)
        gens = []
        for _ in range(count):
            size = rng.randint(1, min(4, nvars))
            gens.append(frozenset(rng.sample(names, size)))
        I = MonomialIdeal(tuple(names), tuple(gens))
        I = minimalize(I)
        if I.generators:
            return I


VERIFIERS = {
    "strings": verify_strings,
    "cycles": verify_cycles,
    "string-edge": verify_string_edge,
    "cycle-edge": verify_cycle_edge,
    "lemmas": verify_lemmas,
    "splitting": verify_splitting,
    "reductions": verify_reductions,
}
