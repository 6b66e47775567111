"""Command-line interface: ``hyperpd {pd,betti,classify,verify,conjecture-search}``.

Exit codes: 0 success, 1 usage or input error, 2 verification mismatch,
3 oracle budget exceeded.  Data goes to stdout in a fixed order; timing
goes to stderr.
"""
from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
import time
from pathlib import Path

from . import __version__, families, formulas
from .classify import BudgetExceeded, classify_shape, pd_auto
from .hypergraph import Hypergraph, from_ideal, remove_union_edges, to_ideal, union_edge_labels
from .ideal import IdealParseError, minimalize, parse_ideal
from .oracle import DEFAULT_LIMIT, OracleLimitError, betti_table
from .oracle.betti import check_field
from .sweeps import FAMILIES, LEMMA_FAMILIES, VERIFIERS

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def read_input(path: str):
    """Return ``("ideal", MonomialIdeal)`` or ``("hypergraph", Hypergraph)``."""
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        if text.lstrip().startswith("{"):
            return "hypergraph", Hypergraph.from_json(text)
        return "ideal", parse_ideal(text)
    except (IdealParseError, ValueError) as exc:
        raise UsageError(f"invalid input {path}: {exc}") from exc


def _as_hypergraph(kind, obj) -> Hypergraph:
    if kind == "hypergraph":
        return obj
    I = minimalize(obj)
    try:
        return from_ideal(I)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _as_ideal(kind, obj):
    return to_ideal(obj, force=True) if kind == "hypergraph" else obj


def _emit(args, data: dict, lines: list[str]):
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(lines))


# -- commands ---------------------------------------------------------------

def cmd_pd(args) -> int:
    kind, obj = read_input(args.input)
    H = _as_hypergraph(kind, obj)
    res = pd_auto(H, budget=args.budget, field_char=args.field, force_oracle=args.oracle)
    data = {"pd": res.pd, "method": res.method}
    if res.reg is not None:
        data["reg"] = res.reg
    if args.explain:
        data["trace"] = res.trace
    lines = [f"pd\t{res.pd}", f"method\t{res.method}"]
    if res.reg is not None:
        lines.append(f"reg\t{res.reg}")
    if args.explain:
        lines += [f"# {t}" for t in res.trace]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_betti(args) -> int:
    kind, obj = read_input(args.input)
    I = _as_ideal(kind, obj)
    t = betti_table(I, args.field, limit=args.budget)
    if args.json:
        print(t.to_json())
    else:
        sys.stdout.write(t.to_tsv())
        print(f"# pd={t.pd} reg={t.reg} totals={','.join(map(str, t.totals()))}")
    return EXIT_OK


def cmd_classify(args) -> int:
    kind, obj = read_input(args.input)
    H = _as_hypergraph(kind, obj)
    dropped = union_edge_labels(H)
    cfg = classify_shape(remove_union_edges(H))
    data = cfg.to_dict()
    data["removed_union_edges"] = dropped
    data["separated"] = H.is_separated()
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        for key, val in data.items():
            if isinstance(val, list):
                val = ",".join(str(v).lower() if isinstance(v, bool) else str(v) for v in val)
            elif isinstance(val, bool):
                val = str(val).lower()
            print(f"{key}\t{val}")
    return EXIT_OK


# variables needed by the largest instance of each family, as a function of mu
_FAMILY_VARS = {
    "strings": lambda mu: mu + 1,
    "cycles": lambda mu: mu,
    "string-edge": lambda mu: mu + 2,
    "cycle-edge": lambda mu: mu + 1,
    "lemmas": lambda mu: mu + 2,
    "splitting": lambda mu: mu + 1,
    "reductions": lambda mu: mu + 4,
}

_DEFAULT_MAX_MU = {"strings": 12, "cycles": 12, "string-edge": 8, "cycle-edge": 8,
                   "lemmas": 10, "splitting": 10, "reductions": 7}


def cmd_verify(args) -> int:
    fam = args.family_name
    max_mu = args.max_mu if args.max_mu is not None else _DEFAULT_MAX_MU[fam]
    if fam in ("string-edge", "cycle-edge") and args.samples:
        max_mu_eff = max(max_mu, 10)
    else:
        max_mu_eff = max_mu
    need = _FAMILY_VARS[fam](max_mu_eff)
    if need > args.budget:
        print(f"error: family {fam} at mu={max_mu_eff} needs {need} variables, budget is {args.budget}",
              file=sys.stderr)
        return EXIT_BUDGET
    kwargs = {"max_mu": max_mu, "field_char": args.field}
    if fam in ("string-edge", "cycle-edge"):
        kwargs.update(samples=args.samples, seed=args.seed)
    if fam == "lemmas":
        kwargs["family"] = args.family
    if fam == "splitting":
        kwargs["seed"] = args.seed
    out = VERIFIERS[fam](**kwargs)
    if args.json:
        print(json.dumps({"family": out.family, "instances": out.instances,
                          "mismatches": [list(map(str, m)) for m in out.mismatches],
                          "notes": out.notes}, indent=2))
    else:
        print(f"family\t{out.family}")
        print(f"instances\t{out.instances}")
        print(f"mismatches\t{len(out.mismatches)}")
        for note in out.notes:
            print(f"# {note}")
        for desc, want, got in out.mismatches:
            print(f"MISMATCH\t{desc}\tformula={want}\toracle={got}")
    print(f"elapsed {out.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if out.ok else EXIT_MISMATCH


def _candidate_edges(mu: int, min_size: int = 2) -> list[tuple[int, ...]]:
    out = []
    for k in range(max(2, min_size), mu + 1):
        for pos in itertools.combinations(range(1, mu + 1), k):
            if k == 2 and (pos[1] - pos[0]) % mu in (1, mu - 1):
                continue
            if not families.cycle_edge_is_union(mu, pos):
                out.append(pos)
    return out


def _canonical_edge_set(mu: int, edge_set) -> tuple:
    best = None
    for shift in range(mu):
        for sign in (1, -1):
            cand = tuple(sorted(tuple(sorted((sign * (v - 1) + shift) % mu + 1 for v in e)) for e in edge_set))
            if best is None or cand < best:
                best = cand
    return best


def conjecture_instances(mu: int, max_edges: int, cap: int, rng: random.Random, min_size: int = 2):
    cands = _candidate_edges(mu, min_size)
    seen = set()
    for m in range(2, max_edges + 1):
        total = 1
        for t in range(m):
            total = total * (len(cands) - t) // (t + 1)
        if total <= cap:
            pool = itertools.combinations(cands, m)
        else:
            pool = (tuple(sorted(rng.sample(cands, m))) for _ in range(cap))
        for combo in pool:
            canon = _canonical_edge_set(mu, combo)
            if canon not in seen:
                seen.add(canon)
                yield canon


def cmd_conjecture_search(args) -> int:
    if args.max_mu < 3 or args.max_edges < 2:
        print("error: need --max-mu >= 3 and --max-edges >= 2", file=sys.stderr)
        return EXIT_USAGE
    need = args.max_mu + args.max_edges
    if need > args.budget:
        print(f"error: instances need up to {need} variables, budget is {args.budget}", file=sys.stderr)
        return EXIT_BUDGET
    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    dump = Path(args.dump) if args.dump else None
    total, found = 0, []
    for mu in range(3, args.max_mu + 1):
        expected = formulas.pd_open_cycle(mu)
        count = 0
        for combo in conjecture_instances(mu, args.max_edges, args.cap, rng, args.min_size):
            C = families.open_cycle(mu)
            edges = list(C.edges.items()) + [(f"F{j + 1}", e) for j, e in enumerate(combo)]
            H = Hypergraph.build(mu, edges)
            pd = betti_table(to_ideal(H, force=True), args.field, limit=args.budget).pd
            count += 1
            if pd != expected:
                found.append((mu, combo, pd, expected, H))
        total += count
        print(f"mu\t{mu}\tinstances\t{count}\tformula\t{expected}")
    print(f"total\t{total}")
    print(f"counterexamples\t{len(found)}")
    for j, (mu, combo, pd, expected, H) in enumerate(found):
        desc = ";".join(",".join(map(str, e)) for e in combo)
        print(f"COUNTEREXAMPLE\tmu={mu}\tedges={desc}\tpd={pd}\tformula={expected}")
        if dump:
            dump.mkdir(parents=True, exist_ok=True)
            (dump / f"counterexample_{j:03d}.json").write_text(H.to_json() + "\n")
    print(f"elapsed {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def _field(text: str) -> int:
    try:
        return check_field(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=0, help="0 or a prime (default 0)")
    common.add_argument("--budget", type=int, default=DEFAULT_LIMIT, help="max variables for the oracle")
    common.add_argument("--json", action="store_true", help="JSON output")

    p = _Parser(prog="hyperpd", description="Projective dimension of string and cycle hypergraph ideals.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("pd", parents=[common], help="projective dimension of an ideal or hypergraph")
    s.add_argument("input", help="ideal text file or hypergraph JSON ('-' for stdin)")
    s.add_argument("--oracle", action="store_true", help="skip formulas, use the Betti oracle")
    s.add_argument("--explain", action="store_true", help="print the reduction and classification trace")
    s.set_defaults(func=cmd_pd)

    s = sub.add_parser("betti", parents=[common], help="multigraded Betti table via the oracle")
    s.add_argument("input")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("classify", parents=[common], help="shape and gap vector after union-edge removal")
    s.add_argument("input")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verify", parents=[common], help="formula versus oracle sweep")
    s.add_argument("family_name", choices=FAMILIES)
    s.add_argument("--max-mu", type=int, default=None)
    s.add_argument("--samples", type=int, default=200, help="sampled instances at mu 9 and 10 (edge families)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--family", choices=LEMMA_FAMILIES, default=None, help="restrict the lemmas sweep")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("conjecture-search", parents=[common], help="cycles with several extra edges")
    s.add_argument("--max-mu", type=int, default=6)
    s.add_argument("--max-edges", type=int, default=2)
    s.add_argument("--min-size", type=int, default=2, help="smallest extra edge (2 allows chords)")
    s.add_argument("--cap", type=int, default=2000, help="sample above this many edge sets per size")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--dump", default=None, help="directory for counterexample JSON files")
    s.set_defaults(func=cmd_conjecture_search)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, OracleLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
