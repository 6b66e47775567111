"""Time the Betti oracle with the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--field 0]

Both backends must produce identical tables; the script exits non-zero if
they ever disagree.
"""
from __future__ import annotations

import argparse
import statistics
import sys
import time

from hyperpd import families
from hyperpd.hypergraph import from_ideal, remove_union_edges, to_ideal
from hyperpd.ideal import parse_ideal
from hyperpd.oracle import HAS_NUMBA, betti_table

CASES = {
    "string mu=9": lambda: to_ideal(families.open_string(9)),
    "cycle mu=10": lambda: to_ideal(families.open_cycle(10)),
    "string+edge mu=9": lambda: to_ideal(families.string_with_edge(9, (3, 5, 8))),
    "stinky mu=10": lambda: to_ideal(families.string_with_edge(10, (1, 4, 7, 10), closed_ends=(False, False))),
    "cycle+edge mu=12": lambda: to_ideal(families.cycle_with_edge(12, (2, 5, 9))),
    # the reduced form; the unreduced 14-variable ideal takes minutes on the numpy path
    "eight-gen reduced": lambda: to_ideal(remove_union_edges(from_ideal(parse_ideal(
        "abk, bcl, cdklm, dekn, efgn, ghmn, hikl, ijk")))),
}


def best_time(fn, repeat: int) -> tuple[float, object]:
    times, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--field", type=int, default=0)
    args = ap.parse_args(argv)
    if not HAS_NUMBA:
        print("numba unavailable or disabled; only the numpy backend will run", file=sys.stderr)
    else:
        betti_table(parse_ideal("ab, bc, cd"), args.field, backend="numba")  # compile outside the timings

    print(f"{'case':<20}{'vars':>5}{'numpy s':>10}{'numba s':>10}{'speedup':>9}")
    speedups = []
    for name, make in CASES.items():
        I = make()
        t_np, tab_np = best_time(lambda: betti_table(I, args.field, backend="numpy"), args.repeat)
        row = f"{name:<20}{len(I.variables):>5}{t_np:>10.3f}"
        if HAS_NUMBA:
            t_nb, tab_nb = best_time(lambda: betti_table(I, args.field, backend="numba"), args.repeat)
            if tab_nb != tab_np:
                print(f"backend disagreement on {name}", file=sys.stderr)
                return 1
            speedups.append(t_np / t_nb)
            row += f"{t_nb:>10.3f}{t_np / t_nb:>8.1f}x"
        print(row, flush=True)
    if speedups:
        print(f"geometric-mean speedup {statistics.geometric_mean(speedups):.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
