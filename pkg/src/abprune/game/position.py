"""Text format for chess positions.

One line per rank, highest rank first; uppercase letters are Maximizer
pieces, lowercase Minimizer pieces, ``.`` an empty square. A final line
names the side to move: ``w`` (Maximizer) or ``b`` (Minimizer). Blank lines
and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from pathlib import Path

from abprune.errors import PositionFormatError
from abprune.game.base import GameState, Player
from abprune.game.chess import LETTER_PIECES, PIECE_LETTERS, Chess

_SIDES = {"w": Player.MAXIMIZER, "b": Player.MINIMIZER}


def parse_position(text: str) -> GameState:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 2:
        raise PositionFormatError("need board ranks plus a side-to-move line")
    *ranks, side = lines
    side = side.lower()
    if side not in _SIDES:
        raise PositionFormatError(f"side-to-move line must be 'w' or 'b', got {side!r}")
    n = len(ranks)
    if any(len(r) != n for r in ranks):
        raise PositionFormatError(f"board must be square; got {n} ranks of lengths {[len(r) for r in ranks]}")
    try:
        game = Chess(n)
    except ValueError as exc:
        raise PositionFormatError(str(exc)) from None
    board = [0] * (n * n)
    for row, rank_text in enumerate(ranks):
        rank = n - 1 - row
        for f, ch in enumerate(rank_text):
            if ch == ".":
                continue
            code = LETTER_PIECES.get(ch.lower())
            if code is None:
                raise PositionFormatError(f"unknown piece letter {ch!r}")
            board[rank * n + f] = code if ch.isupper() else -code
    return game.state_from_board(board, _SIDES[side])


def load_position(path: str | Path) -> GameState:
    return parse_position(Path(path).read_text())


def format_position(state: GameState) -> str:
    n = state.game.board_size
    rows = []
    for rank in range(n - 1, -1, -1):
        row = []
        for f in range(n):
            p = state.position[rank * n + f]
            if p == 0:
                row.append(".")
            else:
                letter = PIECE_LETTERS[abs(p)]
                row.append(letter.upper() if p > 0 else letter)
        rows.append("".join(row))
    rows.append("w" if state.to_move is Player.MAXIMIZER else "b")
    return "\n".join(rows) + "\n"
