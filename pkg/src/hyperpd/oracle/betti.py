"""Multigraded Betti numbers of R/I via Hochster's formula.

``beta_{i,sigma}(R/I) = dim H~_{|sigma|-i-1}(Delta_sigma)`` where ``Delta`` is
the Stanley-Reisner complex of ``I`` (sets of variables containing no
generator) and ``Delta_sigma`` its restriction to ``sigma``.  Only ``sigma``
in the lcm lattice of the generators can carry a nonzero Betti number, so by
default only those are scanned.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from ..ideal import MonomialIdeal, minimalize
from . import kernels

DEFAULT_LIMIT = 16


class OracleLimitError(ValueError):
    """Raised when an ideal has more variables than the oracle budget."""


def check_field(p: int) -> int:
    p = int(p)
    if p == 0:
        return 0
    if p < 2 or p >= 1 << 31 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"field characteristic must be 0 or a prime below 2**31, got {p}")
    return p


@dataclass
class BettiTable:
    variables: tuple[str, ...]
    entries: dict = field(default_factory=dict)  # (i, frozenset sigma) -> rank
    field_char: int = 0

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def reg(self) -> int:
        return max(len(s) - i for i, s in self.entries)

    def totals(self) -> list[int]:
        out = [0] * (self.pd + 1)
        for (i, _), b in self.entries.items():
            out[i] += b
        return out

    def graded(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (i, s), b in self.entries.items():
            out[(i, len(s))] = out.get((i, len(s)), 0) + b
        return out

    def beta(self, i: int, j: int) -> int:
        return self.graded().get((i, j), 0)

    def _sorted_items(self):
        pos = {x: k for k, x in enumerate(self.variables)}

        def key(item):
            (i, s), _ = item
            return (i, len(s), sorted(pos[x] for x in s))

        for (i, s), b in sorted(self.entries.items(), key=key):
            yield i, sorted(s, key=pos.__getitem__), b

    def to_tsv(self) -> str:
        lines = ["i\tsigma\trank"]
        for i, s, b in self._sorted_items():
            lines.append(f"{i}\t{','.join(s)}\t{b}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {
            "field_char": self.field_char,
            "variables": list(self.variables),
            "pd": self.pd,
            "reg": self.reg,
            "entries": [{"i": i, "sigma": s, "rank": b} for i, s, b in self._sorted_items()],
        }
        return json.dumps(data, indent=2)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries


def _masks(I: MonomialIdeal) -> tuple[tuple[str, ...], list[int]]:
    variables = I.used_variables()
    bit = {x: k for k, x in enumerate(variables)}
    return variables, [sum(1 << bit[x] for x in g) for g in I.generators]


def lcm_lattice(gen_masks: list[int]) -> np.ndarray:
    lattice = {0}
    for g in gen_masks:
        lattice |= {m | g for m in lattice}
    return np.array(sorted(lattice), dtype=np.int64)


def stanley_reisner_faces(gen_masks: list[int], nvars: int) -> np.ndarray:
    """All faces of the Stanley-Reisner complex, sorted by (popcount, mask)."""
    faces = np.zeros(1, dtype=np.int64)
    for v in range(nvars):
        bit = np.int64(1) << np.int64(v)
        cand = faces | bit
        ok = np.ones(cand.size, dtype=bool)
        for g in gen_masks:
            if g & (1 << v):
                ok &= (cand & g) != g
        faces = np.concatenate([faces, cand[ok]])
    return kernels.sort_faces(faces)


def _prepare(I: MonomialIdeal, limit: int):
    I = minimalize(I)
    if not I.generators:
        raise ValueError("the zero ideal has no finite Betti table here")
    if I.is_unit:
        raise ValueError("unit ideal: R/I = 0")
    variables, gens = _masks(I)
    if len(variables) > limit:
        raise OracleLimitError(f"{len(variables)} variables exceeds oracle limit {limit}")
    return variables, gens


def betti_table(I: MonomialIdeal, field_char: int = 0, limit: int = DEFAULT_LIMIT,
                prune: bool = True, backend: str | None = None) -> BettiTable:
    """Graded Betti numbers of ``R/I`` by Hochster's formula.

    ``prune=False`` scans every square-free multidegree instead of just the
    lcm lattice (a self-audit switch; results must not change).
    """
    p = check_field(field_char)
    variables, gens = _prepare(I, limit)
    n = len(variables)
    faces = stanley_reisner_faces(gens, n)
    sigmas = lcm_lattice(gens) if prune else np.arange(1 << n, dtype=np.int64)
    hom = kernels.scan(faces, sigmas, n, p, backend=backend)
    entries = {}
    for s, sigma in enumerate(sigmas.tolist()):
        size = bin(sigma).count("1")
        support = frozenset(variables[k] for k in range(n) if sigma >> k & 1)
        for c in np.nonzero(hom[s])[0].tolist():
            # H~_{c-1} contributes to homological degree |sigma| - c
            entries[(size - c, support)] = int(hom[s, c])
    return BettiTable(tuple(variables), entries, p)


def pd_reg(I: MonomialIdeal, field_char: int = 0, limit: int = DEFAULT_LIMIT) -> tuple[int, int]:
    t = betti_table(I, field_char, limit)
    return t.pd, t.reg
