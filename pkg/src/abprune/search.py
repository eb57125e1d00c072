"""Sequential minimax and fail-soft alpha-beta.

Both functions do the root expansion here and hand each root child to the
active subtree kernel (compiled or pure Python). The root keeps the best
move: the lowest ``Move.id`` among children achieving the root value.

Fail-soft returns that land exactly on the bound are only bounds, so they
cannot tell a tie from a worse move. When a child with a lower id than the
current best is searched, its window is therefore widened by one point on
the bound side; a genuine tie then comes back as an exact value. With
canonical move order this never triggers, so the count matches the
textbook recurrence exactly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace

from abprune._backend import subtree_search
from abprune.errors import InvalidWindow
from abprune.game.base import NEG_INF, POS_INF, GameState, Move, Player
from abprune.ordering import NONE, OrderingStrategy, order_children


@dataclass(frozen=True)
class SearchWindow:
    alpha: int = NEG_INF
    beta: int = POS_INF

    def __post_init__(self):
        if not self.alpha < self.beta:
            raise InvalidWindow(f"alpha ({self.alpha}) must be < beta ({self.beta})")

    @property
    def is_full(self) -> bool:
        return self.alpha == NEG_INF and self.beta == POS_INF


FULL_WINDOW = SearchWindow()


@dataclass(frozen=True)
class SearchResult:
    value: int
    best_move: Move | None
    nodes_visited: int
    cutoffs: int
    elapsed: float = 0.0
    # Per-worker node counts and the shared bound each worker read before
    # every root child; filled only by the parallel search.
    worker_nodes: tuple[int, ...] = ()
    bound_trace: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    def outcome(self) -> tuple:
        """Everything except timing, for determinism checks."""
        return (self.value, self.best_move, self.nodes_visited, self.cutoffs)


def child_window(
    maximizing: bool, alpha: int, beta: int, best_value: int, best_id: int | None, move_id: int
) -> tuple[int, int]:
    """Window for a root child; widens the bound by one when a tie must be exact."""
    if best_id is not None and move_id < best_id:
        if maximizing and best_value == alpha:
            return alpha - 1, beta
        if not maximizing and best_value == beta:
            return alpha, beta + 1
    return alpha, beta


def improves(maximizing: bool, v: int, a: int, b: int, best_value: int, best_id: int | None, move_id: int) -> bool:
    """Whether child result ``v`` (searched in window (a, b)) replaces the current best."""
    if best_id is None:
        return True
    if maximizing:
        if v > best_value:
            return True
    elif v < best_value:
        return True
    return v == best_value and move_id < best_id and a < v < b


def _leaf_result(state: GameState, start: float) -> SearchResult:
    return SearchResult(state.game.evaluate(state), None, 1, 0, time.perf_counter() - start)


def minimax(state: GameState, depth: int) -> SearchResult:
    start = time.perf_counter()
    if depth < 0:
        raise ValueError("depth must be non-negative")
    moves = state.game.legal_moves(state) if depth > 0 else []
    if not moves:
        return _leaf_result(state, start)
    maximizing = state.to_move is Player.MAXIMIZER
    game = state.game
    value = NEG_INF if maximizing else POS_INF
    best: Move | None = None
    nodes = 1
    for m in moves:
        v, n, _ = subtree_search(game.successor(state, m), depth - 1, NEG_INF, POS_INF, NONE, exhaustive=True)
        nodes += n
        if (v > value) if maximizing else (v < value):
            value, best = v, m
    return SearchResult(value, best, nodes, 0, time.perf_counter() - start)


def alphabeta(
    state: GameState,
    depth: int,
    window: SearchWindow = FULL_WINDOW,
    ordering: OrderingStrategy = NONE,
) -> SearchResult:
    start = time.perf_counter()
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if not isinstance(window, SearchWindow):
        window = SearchWindow(*window)
    alpha, beta = window.alpha, window.beta
    moves = state.game.legal_moves(state) if depth > 0 else []
    if not moves:
        return _leaf_result(state, start)
    maximizing = state.to_move is Player.MAXIMIZER
    value = NEG_INF if maximizing else POS_INF
    best: Move | None = None
    nodes, cutoffs = 1, 0
    children = order_children(state, moves, ordering)
    for i, (m, child) in enumerate(children):
        a, b = child_window(maximizing, alpha, beta, value, best.id if best else None, m.id)
        v, n, c = subtree_search(child, depth - 1, a, b, ordering)
        nodes += n
        cutoffs += c
        if improves(maximizing, v, a, b, value, best.id if best else None, m.id):
            value, best = v, m
        if maximizing:
            alpha = max(alpha, value)
        else:
            beta = min(beta, value)
        if beta <= alpha:
            if i < len(children) - 1:
                cutoffs += 1
            break
    return SearchResult(value, best, nodes, cutoffs, time.perf_counter() - start)


def search(state: GameState, config) -> SearchResult:
    """Run the algorithm named by ``config`` (a ``SearchConfig``)."""
    from abprune.config import Algo
    from abprune.parallel import parallel_root_split

    start = time.perf_counter()
    if config.algo is Algo.MINIMAX:
        result = minimax(state, config.depth)
    elif config.algo is Algo.ALPHABETA:
        result = alphabeta(state, config.depth, FULL_WINDOW, config.ordering)
    else:
        result = parallel_root_split(state, config.depth, config)
    return replace(result, elapsed=time.perf_counter() - start)
