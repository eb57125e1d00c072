"""Tic-tac-toe on a 3 x 3 board; cells are numbered row-major from 0."""

from __future__ import annotations

from dataclasses import dataclass

from abprune.game.base import GameState, Move, Player

LINES = (
    (0, 1, 2), (3, 4, 5), (6, 7, 8),
    (0, 3, 6), (1, 4, 7), (2, 5, 8),
    (0, 4, 8), (2, 4, 6),
)


def winner(cells) -> int:
    for a, b, c in LINES:
        if cells[a] != 0 and cells[a] == cells[b] == cells[c]:
            return cells[a]
    return 0


@dataclass(frozen=True)
class TicTacToe:
    name = "ttt"
    board_size = 3

    def initial_state(self) -> GameState:
        return GameState(self, (0,) * 9, Player.MAXIMIZER, 0)

    def state_from_cells(self, cells, to_move: Player | None = None) -> GameState:
        """Build a state from 9 cells holding +1 (X), -1 (O) or 0."""
        cells = tuple(int(c) for c in cells)
        filled = sum(1 for c in cells if c)
        if to_move is None:
            to_move = Player.MAXIMIZER if sum(cells) == 0 else Player.MINIMIZER
        return GameState(self, cells, Player(to_move), filled)

    def legal_moves(self, state: GameState) -> list[Move]:
        cells = state.position
        if winner(cells):
            return []
        empty = [i for i, c in enumerate(cells) if c == 0]
        return [Move(k, (cell,)) for k, cell in enumerate(empty)]

    def successor(self, state: GameState, move: Move) -> GameState:
        cells = list(state.position)
        cells[move.payload[0]] = int(state.to_move)
        return GameState(self, tuple(cells), -state.to_move, state.ply + 1)

    def evaluate(self, state: GameState) -> int:
        return winner(state.position)

    def is_terminal(self, state: GameState) -> bool:
        return winner(state.position) != 0 or 0 not in state.position

    def format_move(self, move: Move) -> str:
        return str(move.payload[0])
