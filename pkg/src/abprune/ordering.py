"""Child ordering: heuristic reordering and beam filtering.

The promise of a child is the static evaluation of the position it leads
to. Sorting is stable on the canonical move order, so equal scores keep
ascending ``Move.id``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from abprune.errors import InvalidWidth
from abprune.game.base import GameState, Move, Player


class OrderingKind(enum.Enum):
    NONE = "none"
    REORDER = "reorder"
    BEAM = "beam"


@dataclass(frozen=True)
class OrderingStrategy:
    kind: OrderingKind = OrderingKind.NONE
    width: int | None = None

    def __post_init__(self):
        if self.kind is OrderingKind.BEAM:
            if self.width is None or self.width < 1:
                raise InvalidWidth(f"beam width must be >= 1, got {self.width}")
        elif self.width is not None:
            raise InvalidWidth("width only applies to beam ordering")

    @classmethod
    def none(cls) -> "OrderingStrategy":
        return cls(OrderingKind.NONE)

    @classmethod
    def reorder(cls) -> "OrderingStrategy":
        return cls(OrderingKind.REORDER)

    @classmethod
    def beam(cls, width: int) -> "OrderingStrategy":
        return cls(OrderingKind.BEAM, width)

    @property
    def label(self) -> str:
        return self.kind.value


NONE = OrderingStrategy.none()


@dataclass(frozen=True)
class OrderedChildren:
    moves: tuple[Move, ...]
    truncated: bool = False


def ranked_children(state: GameState, moves: list[Move]) -> list[tuple[Move, GameState]]:
    """(move, successor) pairs, most promising first for the side to move."""
    game = state.game
    pairs = [(m, game.successor(state, m)) for m in moves]
    scores = [game.evaluate(child) for _, child in pairs]
    idx = list(range(len(pairs)))
    if state.to_move is Player.MAXIMIZER:
        idx.sort(key=lambda i: -scores[i])
    else:
        idx.sort(key=lambda i: scores[i])
    return [pairs[i] for i in idx]


def reorder(state: GameState, moves: list[Move]) -> OrderedChildren:
    return OrderedChildren(tuple(m for m, _ in ranked_children(state, moves)), False)


def beam_filter(state: GameState, moves: list[Move], width: int) -> OrderedChildren:
    if width < 1:
        raise InvalidWidth(f"beam width must be >= 1, got {width}")
    ordered = reorder(state, moves).moves
    return OrderedChildren(ordered[:width], width < len(moves))


def order_children(
    state: GameState, moves: list[Move], strategy: OrderingStrategy
) -> list[tuple[Move, GameState]]:
    """Apply ``strategy`` and return the children to expand, in order."""
    if strategy.kind is OrderingKind.NONE:
        game = state.game
        return [(m, game.successor(state, m)) for m in moves]
    ranked = ranked_children(state, moves)
    if strategy.kind is OrderingKind.BEAM:
        return ranked[: strategy.width]
    return ranked
