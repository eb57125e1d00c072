"""Root-splitting parallel alpha-beta.

The (ordered, possibly beam-filtered) root children are dealt round-robin
into one cluster per worker. Each worker searches its cluster's children one
after another with the sequential kernel; only the root is split. Workers
are threads: the compiled kernel drops the GIL, so they run concurrently.
Under the pure-Python kernel they still give correct results, just without
speedup.

Window modes:

* ``ISOLATED`` - a worker only tightens its window from its own cluster's
  results, so counts are reproducible run to run.
* ``SHARED`` - all workers read and publish one best-so-far record, so a
  good value found by one worker narrows the others' windows.
"""

from __future__ import annotations

import enum
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from abprune._backend import subtree_search
from abprune.errors import EmptyRoot, InvalidParams, TerminalRoot
from abprune.game.base import NEG_INF, POS_INF, GameState, Move, Player
from abprune.ordering import NONE, OrderingStrategy, order_children
from abprune.search import SearchResult, child_window, improves


class WindowMode(enum.Enum):
    ISOLATED = "isolated"
    SHARED = "shared"


@dataclass(frozen=True)
class ClusterAssignment:
    clusters: tuple[tuple[Move, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.clusters)


def partition_children(moves: Sequence[Move], worker_count: int) -> ClusterAssignment:
    """Deal ``moves`` round-robin: move ``i`` goes to cluster ``i mod k``."""
    if not moves:
        raise EmptyRoot("cannot split a root without children")
    if worker_count < 1:
        raise InvalidParams("worker count must be >= 1")
    k = min(worker_count, len(moves))
    return ClusterAssignment(tuple(tuple(moves[i::k]) for i in range(k)))


class BestRecord:
    """Best root child so far: its exact value and move. Thread-safe."""

    def __init__(self, maximizing: bool):
        self.maximizing = maximizing
        self.value = NEG_INF if maximizing else POS_INF
        self.move: Move | None = None
        self._lock = threading.Lock()

    def snapshot(self) -> tuple[int, Move | None]:
        with self._lock:
            return self.value, self.move

    def offer(self, v: int, a: int, b: int, move: Move) -> bool:
        with self._lock:
            best_id = self.move.id if self.move is not None else None
            if improves(self.maximizing, v, a, b, self.value, best_id, move.id):
                self.value, self.move = v, move
                return True
            return False


@dataclass
class _WorkerTally:
    nodes: int = 0
    cutoffs: int = 0
    bounds: tuple[int, ...] = ()


def _run_cluster(
    children: list[tuple[Move, GameState]],
    depth: int,
    ordering: OrderingStrategy,
    record: BestRecord,
) -> _WorkerTally:
    tally = _WorkerTally()
    bounds = []
    maximizing = record.maximizing
    for move, child in children:
        bound, best = record.snapshot()
        bounds.append(bound)
        if maximizing:
            alpha, beta = bound, POS_INF
        else:
            alpha, beta = NEG_INF, bound
        a, b = child_window(maximizing, alpha, beta, bound, best.id if best else None, move.id)
        v, n, c = subtree_search(child, depth - 1, a, b, ordering)
        tally.nodes += n
        tally.cutoffs += c
        record.offer(v, a, b, move)
    tally.bounds = tuple(bounds)
    return tally


def parallel_root_split(state: GameState, depth: int, config=None, **overrides) -> SearchResult:
    """Search ``state`` to ``depth`` with the root split across workers.

    ``config`` supplies ``workers``, ``ordering`` and ``window_mode``; any of
    them can also be passed as keyword overrides.
    """
    start = time.perf_counter()
    workers = overrides.get("workers", getattr(config, "workers", 1))
    ordering = overrides.get("ordering", getattr(config, "ordering", NONE))
    mode = overrides.get("window_mode", getattr(config, "window_mode", WindowMode.ISOLATED))
    if depth < 1:
        raise InvalidParams("parallel search needs depth >= 1")
    if workers < 1:
        raise InvalidParams("worker count must be >= 1")
    moves = state.game.legal_moves(state)
    if not moves:
        raise TerminalRoot("cannot split a terminal root")

    maximizing = state.to_move is Player.MAXIMIZER
    children = order_children(state, moves, ordering)
    by_move = dict(children)
    assignment = partition_children([m for m, _ in children], workers)
    jobs = [[(m, by_move[m]) for m in cluster] for cluster in assignment.clusters]

    shared = BestRecord(maximizing) if mode is WindowMode.SHARED else None
    records = [shared if shared is not None else BestRecord(maximizing) for _ in jobs]

    if len(jobs) == 1:
        tallies = [_run_cluster(jobs[0], depth, ordering, records[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(jobs), thread_name_prefix="rootsplit") as pool:
            futures = [pool.submit(_run_cluster, job, depth, ordering, rec) for job, rec in zip(jobs, records)]
            tallies = [f.result() for f in futures]

    value = NEG_INF if maximizing else POS_INF
    best: Move | None = None
    for rec in records:
        v, m = rec.snapshot()
        if m is None:
            continue
        better = v > value if maximizing else v < value
        if best is None or better or (v == value and m.id < best.id):
            value, best = v, m

    # The root visit is booked to worker 0 so per-worker counts sum to the total.
    worker_nodes = [t.nodes for t in tallies]
    worker_nodes[0] += 1
    return SearchResult(
        value=value,
        best_move=best,
        nodes_visited=sum(worker_nodes),
        cutoffs=sum(t.cutoffs for t in tallies),
        elapsed=time.perf_counter() - start,
        worker_nodes=tuple(worker_nodes),
        bound_trace=tuple(t.bounds for t in tallies),
    )
