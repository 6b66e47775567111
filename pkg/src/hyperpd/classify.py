"""Recognize string/cycle shapes and dispatch to formulas or the oracle."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from . import formulas
from .hypergraph import (Hypergraph, connected_components, remove_union_edges, to_ideal,
                         union_edge_labels)
from .oracle import DEFAULT_LIMIT, OracleLimitError, betti_table


class Shape(str, enum.Enum):
    OPEN_STRING = "open-string"
    OPEN_CYCLE = "open-cycle"
    STRING_WITH_EDGE = "string-with-edge"
    CYCLE_WITH_EDGE = "cycle-with-edge"
    DISJOINT_OPEN_STRINGS = "disjoint-open-strings"
    OTHER = "other"


@dataclass(frozen=True)
class ShapeConfig:
    shape: Shape
    mu: int
    k: int = 0
    positions: tuple[int, ...] = ()
    gaps: tuple[int, ...] = ()
    closed_ends: tuple[bool, ...] = ()
    component_sizes: tuple[int, ...] = ()
    order: tuple[int, ...] = ()  # vertex at skeleton position 1, 2, ...
    edge_label: str | None = None

    @property
    def residues(self) -> tuple[int, ...]:
        return tuple(n % 3 for n in self.gaps)

    @property
    def quotients(self) -> tuple[int, ...]:
        return tuple(n // 3 for n in self.gaps)

    def to_dict(self) -> dict:
        out = {"shape": self.shape.value, "mu": self.mu}
        if self.shape in (Shape.STRING_WITH_EDGE, Shape.CYCLE_WITH_EDGE):
            out.update(k=self.k, positions=list(self.positions), gaps=list(self.gaps),
                       residues=list(self.residues), quotients=list(self.quotients), edge=self.edge_label)
        if self.closed_ends:
            out["closed_ends"] = list(self.closed_ends)
        if self.component_sizes:
            out["component_sizes"] = list(self.component_sizes)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# ---------------------------------------------------------------------------
# skeleton recognition
# ---------------------------------------------------------------------------

def _adjacency(mu: int, pairs) -> dict[int, list[int]] | None:
    adj = {v: [] for v in range(1, mu + 1)}
    for a, b in pairs:
        adj[a].append(b)
        adj[b].append(a)
    if any(len(n) > 2 for n in adj.values()):
        return None
    return adj


def _walk(adj, start: int, first: int | None) -> list[int]:
    order, prev, cur = [start], None, start
    nxt = first
    while nxt is not None and nxt != start:
        order.append(nxt)
        prev, cur = cur, nxt
        nbrs = [u for u in adj[cur] if u != prev]
        nxt = nbrs[0] if nbrs else None
    return order


def _path_order(mu: int, pairs) -> list[int] | None:
    if len(pairs) != mu - 1:
        return None
    adj = _adjacency(mu, pairs)
    if adj is None:
        return None
    if mu == 1:
        return [1]
    ends = [v for v in adj if len(adj[v]) == 1]
    if len(ends) != 2:
        return None
    # orient from the end with the smaller vertex index
    start = min(ends)
    order = _walk(adj, start, adj[start][0])
    return order if len(order) == mu else None


def _cycle_order(mu: int, pairs) -> list[int] | None:
    if mu < 3 or len(pairs) != mu:
        return None
    adj = _adjacency(mu, pairs)
    if adj is None or any(len(n) != 2 for n in adj.values()):
        return None
    order = _walk(adj, 1, min(adj[1]))
    return order if len(order) == mu else None


def _classify_connected(H: Hypergraph) -> ShapeConfig:
    mu = H.mu
    singles = {next(iter(e)) for e in H.edges.values() if len(e) == 1}
    twos = [(lbl, tuple(sorted(e))) for lbl, e in H.edges.items() if len(e) == 2]
    highs = [lbl for lbl, e in H.edges.items() if len(e) > 2]
    other = ShapeConfig(Shape.OTHER, mu)
    if len(highs) > 1:
        return other

    if highs:
        candidates = [highs[0]]
    else:
        candidates = [None] + [lbl for lbl, _ in twos]

    best = None
    for cand in candidates:
        pairs = [p for lbl, p in twos if lbl != cand]
        F = H.edges[cand] if cand is not None else frozenset()
        path = _path_order(mu, pairs)
        if path is not None:
            ends = (path[0], path[-1])
            closed = tuple(v in singles for v in ends)
            interior_open = all(v not in singles for v in path[1:-1]) and not (singles - set(ends))
            ends_ok = all(c or v in F for c, v in zip(closed, ends))
            if mu == 1:
                if singles:
                    return ShapeConfig(Shape.OPEN_STRING, 1, closed_ends=(True, True), order=(1,))
                continue
            if interior_open and ends_ok:
                if cand is None:
                    if all(closed):
                        return ShapeConfig(Shape.OPEN_STRING, mu, closed_ends=closed, order=tuple(path))
                    continue
                pos = tuple(sorted(path.index(v) + 1 for v in F))
                gaps = (pos[0] - 1,) + tuple(b - a - 1 for a, b in zip(pos, pos[1:])) + (mu - pos[-1],)
                cfg = ShapeConfig(Shape.STRING_WITH_EDGE, mu, len(pos), pos, gaps, closed, order=tuple(path),
                                  edge_label=cand)
                if best is None or sum(cfg.closed_ends) > sum(best.closed_ends):
                    best = cfg
            continue
        cyc = _cycle_order(mu, pairs)
        if cyc is not None and not singles:
            if cand is None:
                return ShapeConfig(Shape.OPEN_CYCLE, mu, order=tuple(cyc))
            pos = tuple(sorted(cyc.index(v) + 1 for v in F))
            gaps = (pos[0] - (pos[-1] - mu) - 1,) + tuple(b - a - 1 for a, b in zip(pos, pos[1:]))
            cfg = ShapeConfig(Shape.CYCLE_WITH_EDGE, mu, len(pos), pos, gaps, order=tuple(cyc), edge_label=cand)
            if best is None:
                best = cfg
    return best or other


def classify_shape(H: Hypergraph) -> ShapeConfig:
    """Shape of ``H`` (expected to be union-edge reduced already)."""
    comps = connected_components(H)
    if len(comps) == 1:
        return _classify_connected(H)
    shapes = [_classify_connected(c) for c in comps]
    if all(s.shape is Shape.OPEN_STRING for s in shapes):
        return ShapeConfig(Shape.DISJOINT_OPEN_STRINGS, H.mu, component_sizes=tuple(s.mu for s in shapes))
    return ShapeConfig(Shape.OTHER, H.mu, component_sizes=tuple(c.mu for c in comps))


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------

class BudgetExceeded(OracleLimitError):
    pass


@dataclass
class AutoResult:
    pd: int
    method: str
    reg: int | None = None
    trace: list[str] = field(default_factory=list)


def _standard_string_multiplicity(C: Hypergraph) -> bool:
    # reg of an open string depends on how many variables sit on each edge
    if C.mu == 1:
        return C.num_variables() == 2
    return all(m == 1 for m in C.multiplicity.values())


def _component_pd(C: Hypergraph, budget: int, field_char: int, trace: list[str]):
    cfg = _classify_connected(C)
    trace.append(f"component mu={C.mu}: {cfg.to_json()}")
    if cfg.shape is Shape.OPEN_STRING:
        reg = formulas.reg_open_string(C.mu) if _standard_string_multiplicity(C) else None
        return formulas.pd_open_string(C.mu), "formula:open-string", reg
    if cfg.shape is Shape.OPEN_CYCLE:
        return formulas.pd_open_cycle(C.mu), "formula:open-cycle", None
    if cfg.shape is Shape.STRING_WITH_EDGE and all(cfg.closed_ends) and cfg.k >= 2:
        res = formulas.pd_string_with_edge(cfg)
        trace.append(f"  string-with-edge case {res.case_tag}")
        return res.pd, "formula:string-with-edge", None
    if cfg.shape is Shape.CYCLE_WITH_EDGE and cfg.k >= 2:
        return formulas.pd_cycle_with_edge(cfg).pd, "formula:cycle-with-edge", None
    return _oracle_pd(C, budget, field_char, trace), "oracle", None


def _oracle_pd(C: Hypergraph, budget: int, field_char: int, trace: list[str]) -> int:
    n = C.num_variables()
    if n > budget:
        raise BudgetExceeded(f"component with {n} variables exceeds oracle budget {budget}")
    trace.append(f"  oracle on {n} variables")
    return betti_table(to_ideal(C, force=True), field_char, limit=budget).pd


def pd_auto(H: Hypergraph, budget: int = DEFAULT_LIMIT, field_char: int = 0,
            force_oracle: bool = False) -> AutoResult:
    """pd via union-edge reduction, per-component formulas, oracle fallback."""
    trace: list[str] = []
    if force_oracle:
        n = H.num_variables()
        if n > budget:
            raise BudgetExceeded(f"{n} variables exceeds oracle budget {budget}")
        trace.append(f"oracle forced on {n} variables")
        t = betti_table(to_ideal(H, force=True), field_char, limit=budget)
        return AutoResult(t.pd, "oracle", t.reg, trace)
    dropped = union_edge_labels(H)
    if dropped:
        trace.append("removed union edges: " + ", ".join(dropped))
    R = remove_union_edges(H)
    comps = connected_components(R)
    trace.append(f"{len(comps)} component(s)")
    total, methods, regs = 0, [], []
    for C in comps:
        pd, method, reg = _component_pd(C, budget, field_char, trace)
        total += pd
        methods.append(method)
        regs.append(reg)
    if len(comps) > 1 and all(m == "formula:open-string" for m in methods):
        method = "formula:disjoint-open-strings"
    else:
        method = "+".join(dict.fromkeys(methods))
    reg = sum(regs) if all(r is not None for r in regs) else None
    return AutoResult(total, method, reg, trace)
