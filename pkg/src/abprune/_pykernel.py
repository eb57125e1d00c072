"""Pure-Python subtree search; works for every game.

Used for games the compiled kernel does not know and as the fallback when
the extension is not built. Must agree with the compiled kernel node for
node.
"""

from __future__ import annotations

from abprune.game.base import NEG_INF, POS_INF, GameState, Player
from abprune.ordering import OrderingKind, OrderingStrategy, order_children


def _minimax(state: GameState, depth: int, counter: list[int]) -> int:
    counter[0] += 1
    game = state.game
    moves = game.legal_moves(state) if depth > 0 else None
    if not moves:
        return game.evaluate(state)
    if state.to_move is Player.MAXIMIZER:
        value = NEG_INF
        for m in moves:
            v = _minimax(game.successor(state, m), depth - 1, counter)
            if v > value:
                value = v
    else:
        value = POS_INF
        for m in moves:
            v = _minimax(game.successor(state, m), depth - 1, counter)
            if v < value:
                value = v
    return value


def _alphabeta(
    state: GameState, depth: int, alpha: int, beta: int, ordering: OrderingStrategy, counter: list[int]
) -> int:
    counter[0] += 1
    game = state.game
    moves = game.legal_moves(state) if depth > 0 else None
    if not moves:
        return game.evaluate(state)
    if ordering.kind is OrderingKind.NONE:
        children = [(m, game.successor(state, m)) for m in moves]
    else:
        children = order_children(state, moves, ordering)
    last = len(children) - 1
    if state.to_move is Player.MAXIMIZER:
        value = NEG_INF
        for i, (_, child) in enumerate(children):
            v = _alphabeta(child, depth - 1, alpha, beta, ordering, counter)
            if v > value:
                value = v
            if value > alpha:
                alpha = value
            if beta <= alpha:
                if i < last:
                    counter[1] += 1
                break
    else:
        value = POS_INF
        for i, (_, child) in enumerate(children):
            v = _alphabeta(child, depth - 1, alpha, beta, ordering, counter)
            if v < value:
                value = v
            if value < beta:
                beta = value
            if beta <= alpha:
                if i < last:
                    counter[1] += 1
                break
    return value


def subtree_search(
    state: GameState,
    depth: int,
    alpha: int,
    beta: int,
    ordering: OrderingStrategy,
    exhaustive: bool = False,
) -> tuple[int, int, int]:
    """Return ``(value, nodes, cutoffs)`` for the subtree rooted at ``state``."""
    counter = [0, 0]
    if exhaustive:
        value = _minimax(state, depth, counter)
    else:
        value = _alphabeta(state, depth, alpha, beta, ordering, counter)
    return value, counter[0], counter[1]
