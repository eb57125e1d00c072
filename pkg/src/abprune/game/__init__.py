from abprune.game.base import (
    NEG_INF,
    POS_INF,
    Game,
    GameState,
    Move,
    Player,
    apply_move,
    evaluate,
    format_move,
    is_terminal,
    legal_moves,
)
from abprune.game.chess import Chess
from abprune.game.position import format_position, load_position, parse_position
from abprune.game.synthetic import (
    ExplicitTree,
    Synthetic,
    SyntheticTreeParams,
    make_synthetic,
    make_tree,
)
from abprune.game.tictactoe import TicTacToe

__all__ = [
    "NEG_INF", "POS_INF", "Game", "GameState", "Move", "Player",
    "apply_move", "evaluate", "format_move", "is_terminal", "legal_moves",
    "Chess", "TicTacToe", "Synthetic", "SyntheticTreeParams", "ExplicitTree",
    "make_synthetic", "make_tree", "parse_position", "load_position", "format_position",
]
