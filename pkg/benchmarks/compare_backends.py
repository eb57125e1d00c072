"""Time the compiled kernel against the pure-Python kernel on the same searches.

    python benchmarks/compare_backends.py [--repeats N]

Both backends must return identical (value, best move, nodes, cutoffs); the
script aborts otherwise. Timing is the median of N runs per backend.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

from abprune import (
    COMPILED_AVAILABLE,
    Chess,
    OrderingStrategy,
    Synthetic,
    SyntheticTreeParams,
    TicTacToe,
    alphabeta,
    minimax,
    use_backend,
)

REORDER = OrderingStrategy.reorder()

CASES = [
    ("chess 8x8 d5 reorder", lambda: Chess(8).initial_state(), lambda s: alphabeta(s, 5, ordering=REORDER)),
    ("chess 6x6 d5 none", lambda: Chess(6).initial_state(), lambda s: alphabeta(s, 5)),
    ("chess 5x5 d4 minimax", lambda: Chess(5).initial_state(), lambda s: minimax(s, 4)),
    (
        "synthetic b5 d8 reorder",
        lambda: Synthetic(SyntheticTreeParams(5, 8, 1, (0, 1000))).root(),
        lambda s: alphabeta(s, 8, ordering=REORDER),
    ),
    (
        "synthetic b6 d7 beam3",
        lambda: Synthetic(SyntheticTreeParams(6, 7, 2, (0, 1000))).root(),
        lambda s: alphabeta(s, 7, ordering=OrderingStrategy.beam(3)),
    ),
    ("tic-tac-toe d9 minimax", lambda: TicTacToe().initial_state(), lambda s: minimax(s, 9)),
]


def median_time(fn, repeats):
    times, result = [], None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args(argv)
    if not COMPILED_AVAILABLE:
        print("compiled kernel not built; reinstall with Cython available", file=sys.stderr)
        return 1
    print(f"{'case':28} {'nodes':>9} {'python ms':>11} {'c ms':>9} {'ratio':>8}")
    for label, make, run in CASES:
        state = make()
        with use_backend("python"):
            t_py, r_py = median_time(lambda: run(state), args.repeats)
        with use_backend("c"):
            t_c, r_c = median_time(lambda: run(state), args.repeats)
        if r_py.outcome() != r_c.outcome():
            print(f"{label}: backends disagree: {r_py.outcome()} vs {r_c.outcome()}", file=sys.stderr)
            return 2
        print(f"{label:28} {r_c.nodes_visited:>9} {t_py * 1e3:>11.1f} {t_c * 1e3:>9.2f} {t_py / t_c:>7.0f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
