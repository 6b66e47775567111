"""Betti-splitting checker: does ``I = J + K`` force ``pd(R/I) = q + 1``?"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..ideal import MonomialIdeal, intersect, minimalize, sub_ideal
from .betti import DEFAULT_LIMIT, betti_table


@dataclass(frozen=True)
class SplitReport:
    q: int
    r: int
    pdJ: int
    pdK: int
    pdJK: int
    regK: int
    regJK: int
    beta_q_qr_JK: int
    hypotheses_hold: bool
    predicted_pd: int | None


def check_betti_splitting(I: MonomialIdeal, V1: Iterable[int], V2: Iterable[int],
                          field_char: int = 0, limit: int = DEFAULT_LIMIT) -> SplitReport:
    """Evaluate the splitting hypotheses for the generator partition ``V1 | V2``.

    ``V1`` and ``V2`` are 1-based generator (vertex) indices; ``J`` is
    generated by ``V1`` and ``K`` by ``V2``.  With ``q = pd(R/K)`` and
    ``r = reg(R/(J cap K))`` the hypotheses are ``pd(R/J) < q``,
    ``pd(R/(J cap K)) = q``, ``reg(R/K) < r`` and
    ``beta_{q,q+r}(R/(J cap K)) != 0``.
    """
    I = minimalize(I)
    V1, V2 = sorted(set(V1)), sorted(set(V2))
    mu = len(I.generators)
    if not V1 or not V2 or set(V1) & set(V2) or set(V1) | set(V2) != set(range(1, mu + 1)):
        raise ValueError("V1, V2 must partition the generators into two non-empty parts")
    J = sub_ideal(I, [v - 1 for v in V1])
    K = sub_ideal(I, [v - 1 for v in V2])
    tJ = betti_table(J, field_char, limit)
    tK = betti_table(K, field_char, limit)
    tJK = betti_table(intersect(J, K), field_char, limit)
    q, r = tK.pd, tJK.reg
    beta = tJK.beta(q, q + r)
    holds = tJ.pd < q and tJK.pd == q and tK.reg < r and beta != 0
    return SplitReport(q, r, tJ.pd, tK.pd, tJK.pd, tK.reg, tJK.reg, beta, holds, q + 1 if holds else None)
