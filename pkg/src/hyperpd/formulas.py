"""Closed-form projective dimension (and some regularity) formulas.

Gap vectors follow the string/cycle-with-edge convention used throughout the
package: for a string with edge ``F`` on positions ``i_1 < ... < i_k`` the
gaps are ``n_1 = i_1 - 1``, ``n_j = i_j - i_{j-1} - 1`` and
``n_{k+1} = mu - i_k``; a cycle has ``k`` gaps with wraparound.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class PdResult:
    pd: int
    reg: int | None = None
    case_tag: str = ""
    reg_bound: int | None = None


def pd_open_string(mu: int) -> int:
    if mu <= 0:
        raise ValueError(f"open string needs mu >= 1, got {mu}")
    return mu - mu // 3


def reg_open_string(mu: int) -> int:
    if mu <= 0:
        raise ValueError(f"open string needs mu >= 1, got {mu}")
    return -(-mu // 3)


def pd_open_cycle(mu: int) -> int:
    if mu < 3:
        raise ValueError(f"open cycle needs mu >= 3, got {mu}")
    return mu - 1 - (mu - 2) // 3


def pd_disjoint_open_strings(lengths: Sequence[int]) -> int:
    if any(n < 0 for n in lengths):
        raise ValueError("component lengths must be non-negative")
    return sum(n - n // 3 for n in lengths)


def _string_edge_case(gaps: Sequence[int]) -> tuple[bool, str]:
    k = len(gaps) - 1
    r = [n % 3 for n in gaps]
    s = sum(r)
    if s < 2 * k:
        return False, "sum<2k"
    if s > 2 * k:
        return False, "sum>=2k+1"
    if all(r):
        return True, "jump"
    return False, "sum=2k-with-zero"


def pd_string_with_edge_gaps(gaps: Sequence[int]) -> PdResult:
    """Formula for a string with both ends closed plus one edge, from its gaps."""
    gaps = list(gaps)
    k = len(gaps) - 1
    if k < 2:
        raise ValueError("the higher edge needs k >= 2 vertices")
    if any(n < 0 for n in gaps):
        raise ValueError("gaps must be non-negative")
    mu = k + sum(gaps)
    jump, tag = _string_edge_case(gaps)
    jump_rev, _ = _string_edge_case(gaps[::-1])
    assert jump == jump_rev, "string-with-edge formula is not reversal symmetric"
    return PdResult(pd_open_string(mu) + int(jump), None, tag)


def pd_string_with_edge(cfg) -> PdResult:
    from .classify import Shape

    if cfg.shape is not Shape.STRING_WITH_EDGE:
        raise ValueError(f"inapplicable shape {cfg.shape.value}")
    if not all(cfg.closed_ends):
        raise ValueError("formula needs both string ends closed")
    return pd_string_with_edge_gaps(cfg.gaps)


def pd_cycle_with_edge_gaps(gaps: Sequence[int]) -> PdResult:
    k = len(gaps)
    if k < 2:
        raise ValueError("the higher edge needs k >= 2 vertices")
    mu = k + sum(gaps)
    return PdResult(pd_open_cycle(mu), None, "cycle-unchanged")


def pd_cycle_with_edge(cfg) -> PdResult:
    from .classify import Shape

    if cfg.shape is not Shape.CYCLE_WITH_EDGE:
        raise ValueError(f"inapplicable shape {cfg.shape.value}")
    return pd_cycle_with_edge_gaps(cfg.gaps)


LEMMA_CASES = ("stringedge", "2stringedge", "substinky", "stinkystring2k")


def lemma_case_pd(case: str, gaps: Sequence[int]) -> PdResult:
    """Closed forms of the intermediate string-with-edge lemmas.

    ``gaps`` is the full vector ``n_1..n_{k+1}``.

    * ``stringedge``: ``n_{k+1} = 0`` (open end on ``F``), ``n_i = 2 + 3 l_i``
      otherwise; pd ``2k + 2 sum l``, reg at most ``k + sum l``.
    * ``2stringedge``: ``n_1 = n_{k+1} = 0`` with open ends, interior gaps
      ``2 + 3 l_i``; value is pd of the graph with ``v_2`` removed,
      ``2(k-1) + 2 sum l`` with reg at most ``k - 1 + sum l``.
    * ``substinky``: same configuration, pd ``2(k-1) + 2 sum l + 1``.
    * ``stinkystring2k``: closed ends, ``r_1 = r_{k+1} = 1`` and every other
      residue 2; pd is the open-string value plus one.
    """
    gaps = [int(n) for n in gaps]
    k = len(gaps) - 1
    if k < 1 or any(n < 0 for n in gaps):
        raise ValueError("need at least two non-negative gaps")
    if case == "stringedge":
        body = gaps[:-1]
        if gaps[-1] != 0 or any(n % 3 != 2 for n in body):
            raise ValueError("stringedge needs n_{k+1} = 0 and n_i = 2 mod 3 for i <= k")
        L = sum(n // 3 for n in body)
        return PdResult(2 * k + 2 * L, None, case, k + L)
    if case in ("2stringedge", "substinky"):
        body = gaps[1:-1]
        if k < 2 or gaps[0] != 0 or gaps[-1] != 0 or any(n % 3 != 2 for n in body):
            raise ValueError(f"{case} needs k >= 2, n_1 = n_{{k+1}} = 0 and interior gaps = 2 mod 3")
        L = sum(n // 3 for n in body)
        if case == "2stringedge":
            return PdResult(2 * (k - 1) + 2 * L, None, case, k - 1 + L)
        return PdResult(2 * (k - 1) + 2 * L + 1, None, case)
    if case == "stinkystring2k":
        r = [n % 3 for n in gaps]
        if k < 2 or r[0] != 1 or r[-1] != 1 or any(x != 2 for x in r[1:-1]):
            raise ValueError("stinkystring2k needs r_1 = r_{k+1} = 1 and interior residues 2")
        return PdResult(pd_open_string(k + sum(gaps)) + 1, None, case)
    raise ValueError(f"unknown lemma case {case!r}; expected one of {LEMMA_CASES}")
