"""Dual hypergraphs of square-free monomial ideals.

Vertices ``1..mu`` are the minimal generators; each variable gives the edge
of generators it divides.  Edges with the same vertex set are stored once
with a multiplicity (one variable per copy).  Operations that delete or add
vertices renumber densely and record, in ``origin``, which vertex of the
input each new vertex came from (``0`` marks a freshly added vertex).
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .ideal import MonomialIdeal, colon_by_monomial, minimal_indices


class NotSeparatedError(ValueError):
    pass


class VertexKind(enum.Enum):
    OPEN = "open"
    CLOSED = "closed"


@dataclass(frozen=True)
class Hypergraph:
    mu: int
    edges: dict[str, frozenset[int]]
    multiplicity: dict[str, int]
    origin: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if self.mu < 1:
            raise ValueError("a hypergraph needs at least one vertex")
        covered = set()
        for label, e in self.edges.items():
            if not e:
                raise ValueError(f"edge {label!r} is empty")
            if min(e) < 1 or max(e) > self.mu:
                raise ValueError(f"edge {label!r} has vertices outside 1..{self.mu}")
            covered |= e
        missing = set(range(1, self.mu + 1)) - covered
        if missing:
            raise ValueError(f"vertices {sorted(missing)} lie on no edge")
        if set(self.multiplicity) != set(self.edges):
            raise ValueError("multiplicity must be given for exactly the edge labels")
        if not self.origin:
            object.__setattr__(self, "origin", tuple(range(1, self.mu + 1)))

    @classmethod
    def build(cls, mu: int, edges: Mapping[str, Iterable[int]] | Iterable[tuple[str, Iterable[int]]],
              multiplicity: Mapping[str, int] | None = None, origin: tuple[int, ...] = ()) -> Hypergraph:
        """Normalize raw edges: drop empties, merge equal vertex sets into multiplicity."""
        items = edges.items() if isinstance(edges, Mapping) else edges
        multiplicity = dict(multiplicity or {})
        out: dict[str, frozenset[int]] = {}
        mult: dict[str, int] = {}
        by_set: dict[frozenset[int], str] = {}
        for label, verts in items:
            s = frozenset(verts)
            if not s:
                continue
            m = multiplicity.get(label, 1)
            if s in by_set:
                mult[by_set[s]] += m
            else:
                by_set[s] = label
                out[label] = s
                mult[label] = m
        return cls(mu, out, mult, origin)

    # -- queries ---------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.mu + 1)

    def edges_at(self, v: int) -> list[str]:
        return [label for label, e in self.edges.items() if v in e]

    def degree(self, v: int) -> int:
        return len(self.edges_at(v))

    def kind(self, v: int) -> VertexKind:
        return VertexKind.CLOSED if frozenset([v]) in self.edges.values() else VertexKind.OPEN

    def is_closed(self, v: int) -> bool:
        return self.kind(v) is VertexKind.CLOSED

    def label_of(self, verts: Iterable[int]) -> str | None:
        s = frozenset(verts)
        for label, e in self.edges.items():
            if e == s:
                return label
        return None

    def num_variables(self) -> int:
        return sum(self.multiplicity.values())

    def edge_profile(self) -> tuple:
        """Label-free description: sorted ``(vertex tuple, multiplicity)`` pairs."""
        return tuple(sorted((tuple(sorted(e)), self.multiplicity[lbl]) for lbl, e in self.edges.items()))

    def is_separated(self) -> bool:
        at = {v: frozenset(self.edges_at(v)) for v in self.vertices}
        for a in self.vertices:
            for b in range(a + 1, self.mu + 1):
                if at[a] <= at[b] or at[b] <= at[a]:
                    return False
        return True

    # -- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        data = {"mu": self.mu, "edges": {lbl: sorted(e) for lbl, e in self.edges.items()}}
        if any(m != 1 for m in self.multiplicity.values()):
            data["multiplicity"] = {lbl: m for lbl, m in self.multiplicity.items() if m != 1}
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> Hypergraph:
        try:
            mu = int(data["mu"])
            edges = {str(k): [int(v) for v in vs] for k, vs in data["edges"].items()}
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise ValueError(f"malformed hypergraph JSON: {exc}") from exc
        mult = {str(k): int(v) for k, v in (data.get("multiplicity") or {}).items()}
        unknown = set(mult) - set(edges)
        if unknown:
            raise ValueError(f"multiplicity given for unknown edges {sorted(unknown)}")
        if any(m < 1 for m in mult.values()):
            raise ValueError("multiplicities must be positive")
        return cls.build(mu, edges, mult)

    @classmethod
    def from_json(cls, text: str) -> Hypergraph:
        return cls.from_dict(json.loads(text))

    def __str__(self):
        parts = []
        for lbl, e in self.edges.items():
            m = self.multiplicity[lbl]
            parts.append(f"{lbl}={{{','.join(map(str, sorted(e)))}}}" + (f"^{m}" if m > 1 else ""))
        return f"H(mu={self.mu}; " + ", ".join(parts) + ")"


# ---------------------------------------------------------------------------
# ideal <-> hypergraph
# ---------------------------------------------------------------------------

def from_ideal(I: MonomialIdeal, origin: tuple[int, ...] = ()) -> Hypergraph:
    """Dual hypergraph; vertex ``j`` is ``I.generators[j-1]``."""
    if not I.generators:
        raise ValueError("the zero ideal has no dual hypergraph")
    if I.is_unit:
        raise ValueError("unit generator: the unit ideal has no dual hypergraph")
    if not I.is_minimal:
        raise ValueError("ideal must be minimally generated")
    edges = []
    for x in I.variables:
        s = [j for j, g in enumerate(I.generators, start=1) if x in g]
        edges.append((x, s))
    return Hypergraph.build(len(I.generators), edges, origin=origin)


def variable_names(H: Hypergraph) -> dict[str, list[str]]:
    """Variables realizing each edge: the label, then ``label_2``, ``label_3``..."""
    return {lbl: [lbl] + [f"{lbl}_{c}" for c in range(2, H.multiplicity[lbl] + 1)] for lbl in H.edges}


def to_ideal(H: Hypergraph, force: bool = False) -> MonomialIdeal:
    if not force and not H.is_separated():
        raise NotSeparatedError("hypergraph is not separated; its ideal realization is not minimally generated")
    names = variable_names(H)
    variables = tuple(x for lbl in H.edges for x in names[lbl])
    gens = tuple(frozenset(x for lbl in H.edges_at(v) for x in names[lbl]) for v in H.vertices)
    return MonomialIdeal(variables, gens)


# ---------------------------------------------------------------------------
# edge and vertex operations
# ---------------------------------------------------------------------------

def _keep_vertices(H: Hypergraph, keep: list[int], edges: dict[str, frozenset[int]] | None = None,
                   multiplicity: dict[str, int] | None = None) -> Hypergraph:
    edges = H.edges if edges is None else edges
    multiplicity = H.multiplicity if multiplicity is None else multiplicity
    new = {old: k for k, old in enumerate(keep, start=1)}
    raw = [(lbl, [new[v] for v in e if v in new]) for lbl, e in edges.items()]
    origin = tuple(H.origin[v - 1] for v in keep)
    return Hypergraph.build(len(keep), raw, multiplicity, origin)


def union_edge_labels(H: Hypergraph) -> list[str]:
    """Labels of edges equal to the union of the other edges they contain."""
    out = []
    for lbl, e in H.edges.items():
        parts = [f for other, f in H.edges.items() if other != lbl and f < e]
        if parts and frozenset().union(*parts) == e:
            out.append(lbl)
    return out


def remove_union_edges(H: Hypergraph) -> Hypergraph:
    # every union edge is a union of non-union edges, so one pass reaches the fixpoint
    drop = set(union_edge_labels(H))
    if not drop:
        return H
    edges = {lbl: e for lbl, e in H.edges.items() if lbl not in drop}
    mult = {lbl: m for lbl, m in H.multiplicity.items() if lbl not in drop}
    return Hypergraph(H.mu, edges, mult, H.origin)


def _check_label(H: Hypergraph, label: str):
    if label not in H.edges:
        raise KeyError(f"unknown edge label {label!r}")


def colon_by_edge(H: Hypergraph, label: str) -> Hypergraph:
    """``H : F``, the hypergraph of ``I : x_F``."""
    _check_label(H, label)
    edges = dict(H.edges)
    mult = dict(H.multiplicity)
    if mult[label] > 1:
        mult[label] -= 1
        return Hypergraph(H.mu, edges, mult, H.origin)
    del edges[label], mult[label]
    at = {v: frozenset(l for l, e in edges.items() if v in e) for v in H.vertices}
    if any(not s for s in at.values()):
        raise ValueError("colon yields the unit ideal")
    # generator j becomes redundant when another generator's edge set is inside its own
    keep = [v for v in H.vertices
            if not any(at[u] < at[v] or (at[u] == at[v] and u < v) for u in H.vertices if u != v)]
    return _keep_vertices(H, keep, edges, mult)


def add_edge_variable(H: Hypergraph, label: str) -> Hypergraph:
    """``(H, x_F)``: vertices of ``F`` vanish and ``x_F`` becomes an isolated closed vertex."""
    _check_label(H, label)
    F = H.edges[label]
    keep = [v for v in H.vertices if v not in F]
    new_vertex = len(keep) + 1
    raw = [(lbl, [keep.index(v) + 1 for v in e if v not in F]) for lbl, e in H.edges.items() if lbl != label]
    raw.append((label, [new_vertex]))
    mult = dict(H.multiplicity)
    mult[label] = 1
    origin = tuple(H.origin[v - 1] for v in keep) + (0,)
    return Hypergraph.build(new_vertex, raw, mult, origin)


def remove_vertex(H: Hypergraph, v: int) -> Hypergraph:
    """``H_v``: the hypergraph of ``I`` with generator ``m_v`` dropped."""
    if v not in H.vertices:
        raise ValueError(f"vertex {v} not in 1..{H.mu}")
    if H.mu == 1:
        raise ValueError("removing the only vertex leaves the zero ideal")
    return _keep_vertices(H, [u for u in H.vertices if u != v])


def colon_vertex(H: Hypergraph, v: int) -> Hypergraph:
    """``Q_v = H_v : v``, computed through the ideal ``I_v : m_v``."""
    if v not in H.vertices:
        raise ValueError(f"vertex {v} not in 1..{H.mu}")
    if H.mu == 1:
        raise ValueError("colon_vertex needs at least two vertices")
    I = to_ideal(H, force=True)
    m_v = I.generators[v - 1]
    rest = [u for u in H.vertices if u != v]
    J = MonomialIdeal(I.variables, tuple(I.generators[u - 1] for u in rest))
    gens = tuple(g - m_v for g in J.generators)
    if any(not g for g in gens):
        raise ValueError("colon yields the unit ideal")
    keep = minimal_indices(gens)
    Q = MonomialIdeal(I.variables, tuple(gens[i] for i in keep))
    origin = tuple(H.origin[rest[i] - 1] for i in keep)
    out = from_ideal(Q, origin)
    return _relabel_copies(out)


def _relabel_copies(H: Hypergraph) -> Hypergraph:
    # variables "F_2", "F_3" realize copies of edge "F"; fold them back when "F" is gone
    edges, mult = {}, {}
    for lbl, e in H.edges.items():
        base = lbl.rsplit("_", 1)[0] if "_" in lbl and lbl.rsplit("_", 1)[1].isdigit() else lbl
        name = base if base not in H.edges and base not in edges else lbl
        edges[name] = e
        mult[name] = H.multiplicity[lbl]
    return Hypergraph(H.mu, edges, mult, H.origin)


def ideal_colon_by_edge(H: Hypergraph, label: str) -> MonomialIdeal:
    """``I(H) : x_F`` computed on the ideal (reference path for :func:`colon_by_edge`)."""
    I = to_ideal(H, force=True)
    return colon_by_monomial(I, frozenset([label]))


# ---------------------------------------------------------------------------
# components and branches
# ---------------------------------------------------------------------------

def connected_components(H: Hypergraph) -> list[Hypergraph]:
    parent = {v: v for v in H.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in H.edges.values():
        first, *rest = sorted(e)
        for v in rest:
            ra, rb = find(first), find(v)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in H.vertices:
        groups.setdefault(find(v), []).append(v)
    out = []
    for root in sorted(groups):
        verts = groups[root]
        vs = set(verts)
        edges = {l: e for l, e in H.edges.items() if e <= vs}
        mult = {l: H.multiplicity[l] for l in edges}
        out.append(_keep_vertices(H, verts, edges, mult))
    return out


@dataclass(frozen=True)
class BranchReduction:
    hypergraph: Hypergraph
    rule: str  # "colon-edge" (n = 1 mod 3), "remove-vertex" (n = 2 mod 3) or "no-rule"
    w: int
    branch: tuple[int, ...]
    edge: str


def _walk_branch(H: Hypergraph, w: int, v1: int) -> tuple[int, ...] | None:
    path = [v1]
    prev, cur = w, v1
    while True:
        labels = H.edges_at(cur)
        if any(len(H.edges[l]) > 2 for l in labels):
            return None
        closed = any(len(H.edges[l]) == 1 for l in labels)
        onward = [next(iter(H.edges[l] - {cur})) for l in labels
                  if len(H.edges[l]) == 2 and H.edges[l] != frozenset([prev, cur])]
        if closed:
            return tuple(path) if not onward else None
        if len(onward) != 1:
            return None
        nxt = onward[0]
        if nxt == w or nxt in path:
            return None
        path.append(nxt)
        prev, cur = cur, nxt


def find_branches(H: Hypergraph) -> list[tuple[int, str, tuple[int, ...]]]:
    """All ``(w, E, branch)`` with ``deg w >= 3`` and a pendant open path ending closed."""
    found = []
    for w in H.vertices:
        if H.degree(w) < 3:
            continue
        for lbl in H.edges_at(w):
            e = H.edges[lbl]
            if len(e) != 2:
                continue
            v1 = next(iter(e - {w}))
            branch = _walk_branch(H, w, v1)
            if branch is not None:
                found.append((w, lbl, branch))
    return found


def branch_reduce(H: Hypergraph, w: int | None = None) -> BranchReduction:
    """Apply the branch rule to the first branch of length n with n mod 3 in {1, 2}.

    ``w`` restricts the search to branches hanging off that vertex.  Returns
    the input unchanged with rule ``"no-rule"`` when every candidate branch
    has length divisible by 3.
    """
    branches = [b for b in find_branches(H) if w is None or b[0] == w]
    if not branches:
        raise ValueError("no qualifying branch")
    for v, lbl, branch in branches:
        n = len(branch)
        if n % 3 == 1:
            return BranchReduction(colon_by_edge(H, lbl), "colon-edge", v, branch, lbl)
        if n % 3 == 2:
            return BranchReduction(remove_vertex(H, v), "remove-vertex", v, branch, lbl)
    v, lbl, branch = branches[0]
    return BranchReduction(H, "no-rule", v, branch, lbl)
