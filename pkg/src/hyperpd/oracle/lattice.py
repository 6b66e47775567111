"""Cross-oracle: Betti numbers from the lcm lattice.

For ``m`` in the lcm lattice ``L`` of ``I`` (bottom element ``1``),
``beta_{i,m}(R/I) = dim H~_{i-2}`` of the order complex of the open interval
``(1, m)`` in ``L``.  Homology here uses its own sparse elimination over Q
(exact ``Fraction`` arithmetic) or GF(p), sharing nothing with the Hochster
kernels.
"""
from __future__ import annotations

from fractions import Fraction

from ..ideal import MonomialIdeal
from .betti import BettiTable, DEFAULT_LIMIT, _prepare, check_field, lcm_lattice


def _sparse_rank(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict] = {}
    for row in rows:
        vec = {c: (Fraction(v) if p == 0 else v % p) for c, v in row.items()}
        vec = {c: v for c, v in vec.items() if v}
        while vec:
            c = min(vec)
            piv = pivots.get(c)
            if piv is None:
                inv = 1 / vec[c] if p == 0 else pow(vec[c], -1, p)
                pivots[c] = {k: (v * inv if p == 0 else v * inv % p) for k, v in vec.items()}
                break
            f = vec[c]
            for k, v in piv.items():
                nv = vec.get(k, 0) - f * v
                if p:
                    nv %= p
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
    return len(pivots)


def _chains(elements: list[int]) -> list[tuple[int, ...]]:
    """All chains (including the empty one) of the poset ordered by mask inclusion."""
    elements = sorted(elements, key=lambda m: (bin(m).count("1"), m))
    above = {a: [b for b in elements if b != a and a & b == a] for a in elements}
    chains: list[tuple[int, ...]] = [()]
    stack = [(a,) for a in elements]
    while stack:
        ch = stack.pop()
        chains.append(ch)
        for b in above[ch[-1]]:
            stack.append(ch + (b,))
    return chains


def _order_complex_homology(elements: list[int], p: int) -> dict[int, int]:
    """Reduced Betti numbers ``{d: dim H~_d}`` of the order complex."""
    chains = _chains(elements)
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for ch in chains:
        by_dim.setdefault(len(ch) - 1, []).append(ch)
    index = {d: {ch: k for k, ch in enumerate(chs)} for d, chs in by_dim.items()}
    top = max(by_dim)
    ranks = {}
    for d in range(0, top + 1):
        rows = []
        for ch in by_dim[d]:
            row = {}
            for t in range(len(ch)):
                face = ch[:t] + ch[t + 1:]
                row[index[d - 1][face]] = (-1) ** t
            rows.append(row)
        ranks[d] = _sparse_rank(rows, p)
    out = {}
    for d in range(-1, top + 1):
        h = len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def lcm_lattice_betti(I: MonomialIdeal, field_char: int = 0, limit: int = DEFAULT_LIMIT) -> BettiTable:
    p = check_field(field_char)
    variables, gens = _prepare(I, limit)
    lattice = [int(m) for m in lcm_lattice(gens)]
    entries = {(0, frozenset()): 1}
    for m in lattice:
        if m == 0:
            continue
        interval = [x for x in lattice if x and x != m and x & m == x]
        support = frozenset(variables[k] for k in range(len(variables)) if m >> k & 1)
        for d, h in _order_complex_homology(interval, p).items():
            entries[(d + 2, support)] = h
    return BettiTable(tuple(variables), entries, p)
