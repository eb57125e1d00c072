"""Game abstraction: players, moves, immutable states and the per-game protocol."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Hashable, Protocol

# Reserved score sentinels; evaluation never returns them.
NEG_INF = -(10**9)
POS_INF = 10**9


class Player(enum.IntEnum):
    MAXIMIZER = 1
    MINIMIZER = -1

    def __neg__(self) -> "Player":
        return _OPPONENT[self]

    @property
    def opponent(self) -> "Player":
        return -self


_OPPONENT = {Player.MAXIMIZER: Player.MINIMIZER, Player.MINIMIZER: Player.MAXIMIZER}


@dataclass(frozen=True, order=True)
class Move:
    """A move, identified by its index in the parent's canonical move list."""

    id: int
    payload: tuple = ()


@dataclass(frozen=True)
class GameState:
    game: "Game"
    position: Hashable
    to_move: Player
    ply: int = 0


class Game(Protocol):
    """What every concrete game supplies.

    ``successor`` skips legality checking; the search loops only feed it
    moves that came straight out of ``legal_moves``.
    """

    name: str

    def legal_moves(self, state: GameState) -> list[Move]: ...

    def successor(self, state: GameState, move: Move) -> GameState: ...

    def evaluate(self, state: GameState) -> int: ...

    def is_terminal(self, state: GameState) -> bool: ...

    def format_move(self, move: Move) -> str: ...


def legal_moves(state: GameState) -> list[Move]:
    return state.game.legal_moves(state)


def apply_move(state: GameState, move: Move) -> GameState:
    from abprune.errors import IllegalMove

    if move not in state.game.legal_moves(state):
        raise IllegalMove(f"{move!r} is not legal in this position")
    return state.game.successor(state, move)


def evaluate(state: GameState) -> int:
    return state.game.evaluate(state)


def is_terminal(state: GameState) -> bool:
    return state.game.is_terminal(state)


def format_move(state_or_game: Any, move: Move | None) -> str:
    if move is None:
        return ""
    game = getattr(state_or_game, "game", state_or_game)
    return game.format_move(move)
