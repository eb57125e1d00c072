"""Simplified N x N chess.

Rules: pseudo-legal moves only (a king may walk into check), no castling,
no en passant, pawns promote to a queen, and the game ends when a king is
captured. Squares are numbered ``rank * n + file`` with rank 0 being the
Maximizer's (white's) back rank, so a1 = 0.

Piece codes are signed ints: positive for the Maximizer (uppercase in the
text format), negative for the Minimizer.
"""

from __future__ import annotations

from dataclasses import dataclass

from abprune.errors import InvalidParams
from abprune.game.base import GameState, Move, Player

EMPTY, PAWN, KNIGHT, BISHOP, ROOK, QUEEN, KING = range(7)

PIECE_VALUES = {PAWN: 100, KNIGHT: 300, BISHOP: 300, ROOK: 500, QUEEN: 900, KING: 20000}
_VALUE_BY_CODE = [0, 100, 300, 300, 500, 900, 20000]

PIECE_LETTERS = {PAWN: "p", KNIGHT: "n", BISHOP: "b", ROOK: "r", QUEEN: "q", KING: "k"}
LETTER_PIECES = {v: k for k, v in PIECE_LETTERS.items()}

# Back ranks from the Maximizer's a-file to the last file.
BACK_RANKS = {
    4: "NBQK",
    5: "RNBQK",
    6: "RNBQKR",
    8: "RNBQKBNR",
}
SUPPORTED_SIZES = tuple(sorted(BACK_RANKS))

_KNIGHT_STEPS = ((1, 2), (2, 1), (2, -1), (1, -2), (-1, -2), (-2, -1), (-2, 1), (-1, 2))
_KING_STEPS = ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))
_ROOK_DIRS = ((1, 0), (0, 1), (-1, 0), (0, -1))
_BISHOP_DIRS = ((1, 1), (-1, 1), (-1, -1), (1, -1))
_QUEEN_DIRS = _ROOK_DIRS + _BISHOP_DIRS


def _build_tables(n: int):
    """Precompute per-square step targets and ray lists for an n x n board."""

    def on_board(r, f):
        return 0 <= r < n and 0 <= f < n

    def steps(deltas):
        table = []
        for sq in range(n * n):
            r, f = divmod(sq, n)
            table.append(tuple((r + dr) * n + f + df for dr, df in deltas if on_board(r + dr, f + df)))
        return tuple(table)

    def rays(dirs):
        table = []
        for sq in range(n * n):
            r, f = divmod(sq, n)
            out = []
            for dr, df in dirs:
                ray = []
                rr, ff = r + dr, f + df
                while on_board(rr, ff):
                    ray.append(rr * n + ff)
                    rr += dr
                    ff += df
                if ray:
                    out.append(tuple(ray))
            table.append(tuple(out))
        return tuple(table)

    return {
        KNIGHT: steps(_KNIGHT_STEPS),
        KING: steps(_KING_STEPS),
        ROOK: rays(_ROOK_DIRS),
        BISHOP: rays(_BISHOP_DIRS),
        QUEEN: rays(_QUEEN_DIRS),
    }


@dataclass(frozen=True)
class Chess:
    board_size: int = 8

    name = "chess"

    def __post_init__(self):
        if self.board_size not in BACK_RANKS:
            raise InvalidParams(f"unsupported board size {self.board_size}; choose from {SUPPORTED_SIZES}")
        object.__setattr__(self, "_tables", _build_tables(self.board_size))

    # -- construction -------------------------------------------------

    def initial_state(self) -> GameState:
        n = self.board_size
        board = [EMPTY] * (n * n)
        for f, letter in enumerate(BACK_RANKS[n]):
            code = LETTER_PIECES[letter.lower()]
            board[f] = code
            board[(n - 1) * n + f] = -code
            board[n + f] = PAWN
            board[(n - 2) * n + f] = -PAWN
        return GameState(self, tuple(board), Player.MAXIMIZER, 0)

    def state_from_board(self, board, to_move: Player = Player.MAXIMIZER, ply: int = 0) -> GameState:
        board = tuple(int(x) for x in board)
        if len(board) != self.board_size**2:
            raise InvalidParams("board length does not match board size")
        if any(abs(x) > KING for x in board):
            raise InvalidParams("unknown piece code")
        return GameState(self, board, Player(to_move), ply)

    # -- rules --------------------------------------------------------

    def _targets(self, board, sq: int, side: int) -> list[tuple[int, int, bool]]:
        n = self.board_size
        piece = board[sq] * side
        out: list[tuple[int, int, bool]] = []
        if piece == PAWN:
            fwd = n * side
            r, f = divmod(sq, n)
            last = n - 1 if side > 0 else 0
            start = 1 if side > 0 else n - 2
            one = sq + fwd
            if 0 <= one < n * n:
                for df in (-1, 1):
                    if 0 <= f + df < n:
                        t = one + df
                        if board[t] * side < 0:
                            out.append((sq, t, t // n == last))
                if board[one] == EMPTY:
                    out.append((sq, one, one // n == last))
                    two = one + fwd
                    if r == start and 0 <= two < n * n and board[two] == EMPTY:
                        out.append((sq, two, two // n == last))
            out.sort()
            return out
        table = self._tables[piece]
        if piece in (KNIGHT, KING):
            for t in table[sq]:
                if board[t] * side <= 0:
                    out.append((sq, t, False))
        else:
            for ray in table[sq]:
                for t in ray:
                    occupant = board[t] * side
                    if occupant > 0:
                        break
                    out.append((sq, t, False))
                    if occupant < 0:
                        break
        out.sort()
        return out

    def _kings_present(self, board) -> bool:
        return KING in board and -KING in board

    def legal_moves(self, state: GameState) -> list[Move]:
        board = state.position
        if not self._kings_present(board):
            return []
        side = int(state.to_move)
        moves: list[Move] = []
        for sq, p in enumerate(board):
            if p * side > 0:
                for tgt in self._targets(board, sq, side):
                    moves.append(Move(len(moves), tgt))
        return moves

    def successor(self, state: GameState, move: Move) -> GameState:
        frm, to, promo = move.payload
        board = list(state.position)
        piece = board[frm]
        board[frm] = EMPTY
        board[to] = QUEEN * int(state.to_move) if promo else piece
        return GameState(self, tuple(board), -state.to_move, state.ply + 1)

    def evaluate(self, state: GameState) -> int:
        total = 0
        for p in state.position:
            if p > 0:
                total += _VALUE_BY_CODE[p]
            elif p < 0:
                total -= _VALUE_BY_CODE[-p]
        return total

    def is_terminal(self, state: GameState) -> bool:
        return not self.legal_moves(state)

    # -- notation -----------------------------------------------------

    def square_name(self, sq: int) -> str:
        r, f = divmod(sq, self.board_size)
        return f"{'abcdefgh'[f]}{r + 1}"

    def parse_square(self, name: str) -> int:
        f = "abcdefgh".index(name[0])
        r = int(name[1:]) - 1
        if not (0 <= f < self.board_size and 0 <= r < self.board_size):
            raise InvalidParams(f"square {name} is off the board")
        return r * self.board_size + f

    def format_move(self, move: Move) -> str:
        frm, to, promo = move.payload
        return self.square_name(frm) + self.square_name(to) + ("q" if promo else "")

    def find_move(self, state: GameState, text: str) -> Move:
        """Look up a legal move by its coordinate text, e.g. ``e2e4``."""
        for m in self.legal_moves(state):
            if self.format_move(m) == text:
                return m
        from abprune.errors import IllegalMove

        raise IllegalMove(f"{text} is not legal in this position")

    def mirror(self, state: GameState) -> GameState:
        """Swap colours and reflect ranks; evaluation flips sign."""
        n = self.board_size
        b = state.position
        mirrored = [0] * (n * n)
        for sq, p in enumerate(b):
            r, f = divmod(sq, n)
            mirrored[(n - 1 - r) * n + f] = -p
        return GameState(self, tuple(mirrored), -state.to_move, state.ply)
