"""Builders and enumerators for the string and cycle families.

Strings put vertex ``i`` at position ``i``: edge ``x_i = {i, i+1}`` for
``1 <= i < mu`` and closed ends ``x_0 = {1}``, ``x_mu = {mu}``.  Cycles use
``x_i = {i, i+1 mod mu}``.  The higher edge is labelled ``F``.
"""
from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

from .hypergraph import Hypergraph


def _path_edges(mu: int) -> list[tuple[str, list[int]]]:
    return [(f"x{i}", [i, i + 1]) for i in range(1, mu)]


def open_string(mu: int, closed_ends: tuple[bool, bool] = (True, True)) -> Hypergraph:
    if mu < 1:
        raise ValueError("mu must be >= 1")
    edges = _path_edges(mu)
    if closed_ends[0]:
        edges.insert(0, ("x0", [1]))
    if closed_ends[1]:
        edges.append((f"x{mu}", [mu]))
    return Hypergraph.build(mu, edges)


def string_with_edge(mu: int, positions: Sequence[int], closed_ends: tuple[bool, bool] = (True, True)) -> Hypergraph:
    H = open_string(mu, closed_ends)
    edges = list(H.edges.items()) + [("F", sorted(positions))]
    mult = dict(H.multiplicity)
    return Hypergraph.build(mu, edges, mult)


def open_cycle(mu: int) -> Hypergraph:
    if mu < 3:
        raise ValueError("an open cycle needs mu >= 3")
    return Hypergraph.build(mu, [(f"x{i}", [i, i % mu + 1]) for i in range(1, mu + 1)])


def cycle_with_edge(mu: int, positions: Sequence[int]) -> Hypergraph:
    C = open_cycle(mu)
    return Hypergraph.build(mu, list(C.edges.items()) + [("F", sorted(positions))])


def positions_from_gaps(gaps: Sequence[int]) -> tuple[int, list[int]]:
    """String positions for gaps ``n_1..n_{k+1}``; returns ``(mu, positions)``."""
    pos, cur = [], 0
    for n in gaps[:-1]:
        cur += n + 1
        pos.append(cur)
    return cur + gaps[-1], pos


def string_edge_gaps(mu: int, positions: Sequence[int]) -> list[int]:
    p = sorted(positions)
    return [p[0] - 1] + [b - a - 1 for a, b in zip(p, p[1:])] + [mu - p[-1]]


def cycle_edge_gaps(mu: int, positions: Sequence[int]) -> list[int]:
    p = sorted(positions)
    return [p[0] - (p[-1] - mu) - 1] + [b - a - 1 for a, b in zip(p, p[1:])]


# -- union tests (the sweeps exclude edges that reduction would delete) --

def string_edge_is_union(mu: int, positions: Sequence[int], closed_ends=(True, True)) -> bool:
    s = set(positions)
    closed = {1} if closed_ends[0] else set()
    if closed_ends[1]:
        closed.add(mu)
    return all(v in closed or v - 1 in s or v + 1 in s for v in s)


def cycle_edge_is_union(mu: int, positions: Sequence[int]) -> bool:
    s = set(positions)
    return all((v - 2) % mu + 1 in s or v % mu + 1 in s for v in s)


# -- enumerations -----------------------------------------------------------

def string_edge_instances(max_mu: int, min_mu: int = 2) -> Iterator[tuple[int, tuple[int, ...]]]:
    """All ``(mu, positions)`` with ``k >= 2`` whose edge is not a union and not a duplicate."""
    for mu in range(min_mu, max_mu + 1):
        for k in range(2, mu + 1):
            for pos in itertools.combinations(range(1, mu + 1), k):
                if k == 2 and pos[1] == pos[0] + 1:
                    continue
                if string_edge_is_union(mu, pos):
                    continue
                yield mu, pos


def _dihedral_canonical(mu: int, pos: tuple[int, ...]) -> tuple[int, ...]:
    best = None
    zero = [p - 1 for p in pos]
    for shift in range(mu):
        for sign in (1, -1):
            cand = tuple(sorted((sign * z + shift) % mu + 1 for z in zero))
            if best is None or cand < best:
                best = cand
    return best


def cycle_edge_instances(max_mu: int, min_mu: int = 4) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Cycle-with-edge instances up to rotation and reflection."""
    for mu in range(max(min_mu, 3), max_mu + 1):
        seen = set()
        for k in range(2, mu + 1):
            for pos in itertools.combinations(range(1, mu + 1), k):
                if k == 2 and (pos[1] - pos[0]) % mu in (1, mu - 1):
                    continue
                if cycle_edge_is_union(mu, pos):
                    continue
                canon = _dihedral_canonical(mu, pos)
                if canon in seen:
                    continue
                seen.add(canon)
                yield mu, canon


def sample_positions(rng: random.Random, mu: int, is_union) -> tuple[int, ...]:
    while True:
        k = rng.randint(2, mu)
        pos = tuple(sorted(rng.sample(range(1, mu + 1), k)))
        if k == 2 and (pos[1] - pos[0]) % mu in (1, mu - 1):
            continue
        if not is_union(mu, pos):
            return pos


def sampled_string_edges(mus: Sequence[int], count: int, seed: int = 0) -> list[tuple[int, tuple[int, ...]]]:
    rng = random.Random(seed)
    out = []
    for t in range(count):
        mu = mus[t % len(mus)]
        out.append((mu, sample_positions(rng, mu, string_edge_is_union)))
    return out


def sampled_cycle_edges(mus: Sequence[int], count: int, seed: int = 0) -> list[tuple[int, tuple[int, ...]]]:
    rng = random.Random(seed)
    out = []
    for t in range(count):
        mu = mus[t % len(mus)]
        pos = sample_positions(rng, mu, cycle_edge_is_union)
        out.append((mu, _dihedral_canonical(mu, pos)))
    return out


# -- lemma configurations ----------------------------------------------------

def stringedge_instance(ls: Sequence[int]) -> Hypergraph:
    """Closed ``w_1``, open ``w_mu = v_k``, gaps ``n_i = 2 + 3 l_i`` for ``i <= k``."""
    gaps = [2 + 3 * l for l in ls] + [0]
    mu, pos = positions_from_gaps(gaps)
    return string_with_edge(mu, pos, closed_ends=(True, False))


def stinky_instance(ls: Sequence[int]) -> Hypergraph:
    """Both ends open and on ``F``; interior gaps ``2 + 3 l_i`` (``k = len(ls) + 1``)."""
    gaps = [0] + [2 + 3 * l for l in ls] + [0]
    mu, pos = positions_from_gaps(gaps)
    return string_with_edge(mu, pos, closed_ends=(False, False))


def lemma_gap_vectors(case: str, max_mu: int) -> Iterator[list[int]]:
    """Every gap vector satisfying a lemma's hypotheses with ``mu <= max_mu``."""
    if case == "stringedge":
        for k in range(1, max_mu + 1):
            for ls in _l_vectors(k, (max_mu - 3 * k) // 3):
                yield [2 + 3 * l for l in ls] + [0]
    elif case in ("2stringedge", "substinky"):
        for k in range(2, max_mu + 1):
            for ls in _l_vectors(k - 1, (max_mu - k - 2 * (k - 1)) // 3):
                gaps = [0] + [2 + 3 * l for l in ls] + [0]
                if k + sum(gaps) <= max_mu:
                    yield gaps
    elif case == "stinkystring2k":
        for k in range(2, max_mu + 1):
            base = [1] + [2] * (k - 1) + [1]
            slack = (max_mu - k - sum(base)) // 3
            for ls in _l_vectors(k + 1, slack):
                yield [b + 3 * l for b, l in zip(base, ls)]
    else:
        raise ValueError(f"unknown lemma case {case!r}")


def _l_vectors(length: int, budget: int) -> Iterator[tuple[int, ...]]:
    if budget < 0:
        return
    for ls in itertools.product(range(budget + 1), repeat=length):
        if sum(ls) <= budget:
            yield ls


def lemma_hypergraph(case: str, gaps: Sequence[int]) -> Hypergraph:
    mu, pos = positions_from_gaps(gaps)
    if case == "stringedge":
        return string_with_edge(mu, pos, closed_ends=(True, False))
    if case in ("2stringedge", "substinky"):
        return string_with_edge(mu, pos, closed_ends=(False, False))
    return string_with_edge(mu, pos)
