from __future__ import annotations

import json
import random

import pytest

from hyperpd import families
from hyperpd.classify import BudgetExceeded, Shape, classify_shape, pd_auto
from hyperpd.hypergraph import Hypergraph, from_ideal, remove_union_edges
from hyperpd.ideal import parse_ideal
from hyperpd.sweeps import oracle_pd_reg

BIG = "abk, bcl, cdklm, dekn, efgn, ghmn, hikl, ijk"


def relabel(H: Hypergraph, perm: dict[int, int]) -> Hypergraph:
    return Hypergraph.build(H.mu, [(lbl, [perm[v] for v in e]) for lbl, e in H.edges.items()], H.multiplicity)


def remove_edges_example() -> Hypergraph:
    S = families.open_string(11)
    return Hypergraph.build(11, list(S.edges.items()) + [
        ("R1", [1, 11]), ("R2", [5, 6, 7, 8]), ("R3", [2, 3, 9, 10]), ("B", [3, 4, 5, 9])])


class TestClassifyShape:
    def test_open_string(self):
        cfg = classify_shape(from_ideal(parse_ideal("ab, bc, cd")))
        assert cfg.shape is Shape.OPEN_STRING and cfg.mu == 3

    def test_open_cycle(self):
        cfg = classify_shape(from_ideal(parse_ideal("ac, ab, bc")))
        assert cfg.shape is Shape.OPEN_CYCLE and cfg.mu == 3

    def test_eleven_string_with_edge(self):
        H = families.string_with_edge(11, (2, 5, 8, 11))
        cfg = classify_shape(H)
        assert cfg.shape is Shape.STRING_WITH_EDGE
        assert (cfg.mu, cfg.k, cfg.gaps) == (11, 4, (1, 2, 2, 2, 0))
        assert cfg.residues == (1, 2, 2, 2, 0) and cfg.quotients == (0, 0, 0, 0, 0)
        assert cfg.closed_ends == (True, True)

    def test_gap_invariants(self):
        for mu, pos in families.string_edge_instances(7):
            cfg = classify_shape(families.string_with_edge(mu, pos))
            assert cfg.mu == cfg.k + sum(cfg.gaps)
            assert all(n == 3 * l + r for n, l, r in zip(cfg.gaps, cfg.quotients, cfg.residues))
        for mu, pos in families.cycle_edge_instances(8):
            cfg = classify_shape(families.cycle_with_edge(mu, pos))
            assert cfg.shape is Shape.CYCLE_WITH_EDGE
            assert cfg.mu == cfg.k + sum(cfg.gaps) and len(cfg.gaps) == cfg.k

    def test_disjoint_strings(self):
        H = Hypergraph.build(5, {"a": [1], "b": [1, 2], "c": [2], "d": [3], "e": [3, 4], "f": [4, 5], "g": [5]})
        cfg = classify_shape(H)
        assert cfg.shape is Shape.DISJOINT_OPEN_STRINGS and cfg.component_sizes == (2, 3)

    def test_two_higher_edges_is_other(self):
        H = Hypergraph.build(8, list(families.open_string(8).edges.items()) + [("F", [1, 3, 6]), ("G", [2, 4, 7])])
        assert classify_shape(H).shape is Shape.OTHER

    def test_open_end_recorded(self):
        H = families.lemma_hypergraph("stringedge", (2, 2, 0))
        cfg = classify_shape(H)
        assert cfg.shape is Shape.STRING_WITH_EDGE and cfg.closed_ends == (True, False)

    def test_interior_closed_vertex_is_other(self):
        H = Hypergraph.build(3, {"a": [1], "b": [1, 2], "c": [2, 3], "d": [3], "e": [2]})
        assert classify_shape(H).shape is Shape.OTHER

    def test_json(self):
        cfg = classify_shape(families.string_with_edge(9, (3, 5, 8)))
        data = json.loads(cfg.to_json())
        assert data["shape"] == "string-with-edge" and data["gaps"] == [2, 1, 2, 1] and data["edge"] == "F"


class TestLabelInvariance:
    @pytest.mark.parametrize("mu, pos", [(9, (3, 5, 8)), (11, (2, 5, 8, 11)), (7, (1, 4)), (8, (2, 3, 7))])
    def test_string_reversal(self, mu, pos):
        H = families.string_with_edge(mu, pos)
        rev = relabel(H, {v: mu + 1 - v for v in H.vertices})
        a, b = classify_shape(H), classify_shape(rev)
        assert a.shape is b.shape is Shape.STRING_WITH_EDGE
        assert b.gaps == a.gaps[::-1]
        assert b.residues == a.residues[::-1]

    @pytest.mark.parametrize("seed", range(3))
    def test_cycle_dihedral(self, seed):
        rng = random.Random(seed)
        for mu, pos in list(families.cycle_edge_instances(8))[::7]:
            H = families.cycle_with_edge(mu, pos)
            base = classify_shape(H).gaps
            shift, flip = rng.randrange(mu), rng.random() < 0.5
            perm = {v: ((-(v - 1) if flip else v - 1) + shift) % mu + 1 for v in H.vertices}
            g = classify_shape(relabel(H, perm)).gaps
            rotations = {tuple(base[i:] + base[:i]) for i in range(len(base))}
            rotations |= {tuple(reversed(r)) for r in rotations}
            assert g in rotations

    def test_string_random_relabel(self, rng):
        H = families.string_with_edge(9, (3, 5, 8))
        perm = dict(zip(H.vertices, rng.sample(list(H.vertices), H.mu)))
        cfg = classify_shape(relabel(H, perm))
        assert cfg.gaps in ((2, 1, 2, 1), (1, 2, 1, 2))


class TestPdAuto:
    @pytest.mark.parametrize("pos, pd", [((3, 5, 8), 7), ((3, 5, 7), 7), ((3, 6, 9), 6)])
    def test_nine_string_with_edge(self, pos, pd):
        res = pd_auto(families.string_with_edge(9, pos))
        assert (res.pd, res.method) == (pd, "formula:string-with-edge")

    def test_remove_edges_example(self):
        res = pd_auto(remove_edges_example())
        assert (res.pd, res.method) == (8, "formula:string-with-edge")
        assert any("removed union edges: R1, R2, R3" in t for t in res.trace)

    def test_single_closed_vertex(self):
        res = pd_auto(Hypergraph.build(1, {"a": [1]}))
        assert (res.pd, res.method) == (1, "formula:open-string")

    def test_open_string_reports_reg(self):
        res = pd_auto(families.open_string(9))
        assert (res.pd, res.reg) == (6, 3)

    def test_non_standard_multiplicity_omits_reg(self):
        H = Hypergraph.build(3, {"a": [1], "b": [1, 2], "c": [2, 3], "d": [3]}, {"b": 2})
        res = pd_auto(H)
        assert res.pd == 2 and res.reg is None

    def test_big_string_example_uses_oracle(self):
        H = from_ideal(parse_ideal(BIG))
        res = pd_auto(H)
        assert res.method == "oracle" and res.pd == oracle_pd_reg(H)[0] == 6
        assert "removed union edges: k, n" in res.trace[0]

    def test_cycle_with_edge(self):
        res = pd_auto(families.cycle_with_edge(10, (3, 6, 9, 10)))
        assert (res.pd, res.method) == (7, "formula:cycle-with-edge")

    def test_disjoint_strings_method(self):
        H = Hypergraph.build(6, {"a": [1], "b": [1, 2], "c": [2, 3], "d": [3],
                                 "e": [4], "f": [4, 5], "g": [5, 6], "h": [6]})
        res = pd_auto(H)
        assert (res.pd, res.method, res.reg) == (2 + 2, "formula:disjoint-open-strings", 1 + 1)
        assert (res.pd, res.reg) == oracle_pd_reg(H)

    def test_budget(self):
        H = Hypergraph.build(8, list(families.open_string(8).edges.items()) + [("F", [1, 3, 6]), ("G", [2, 4, 7])])
        with pytest.raises(BudgetExceeded):
            pd_auto(H, budget=5)
        with pytest.raises(BudgetExceeded):
            pd_auto(families.open_string(9), budget=5, force_oracle=True)

    def test_force_oracle(self):
        res = pd_auto(families.string_with_edge(9, (3, 5, 8)), force_oracle=True)
        assert (res.pd, res.method) == (7, "oracle") and res.reg is not None

    @pytest.mark.parametrize("parts", [((4,), (6, (2, 5))), ((3,), (7, (1, 4, 7))), ((5,), (5,))])
    def test_additivity(self, parts):
        comps = []
        for p in parts:
            comps.append(families.open_string(p[0]) if len(p) == 1 else families.string_with_edge(*p))
        raw, offset = [], 0
        for c in comps:
            raw += [(f"{lbl}_c{offset}", [v + offset for v in e]) for lbl, e in c.edges.items()]
            offset += c.mu
        H = Hypergraph.build(offset, raw)
        assert pd_auto(H).pd == sum(pd_auto(c).pd for c in comps) == oracle_pd_reg(H)[0]

    def test_union_reduction_invisible_to_pd(self):
        H = remove_edges_example()
        assert oracle_pd_reg(H)[0] == oracle_pd_reg(remove_union_edges(H))[0] == 8
