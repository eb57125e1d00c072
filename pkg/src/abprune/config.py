"""Search and benchmark configuration."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from abprune.errors import ConfigError
from abprune.game.base import GameState
from abprune.game.chess import SUPPORTED_SIZES, Chess
from abprune.game.position import load_position
from abprune.game.synthetic import Synthetic, SyntheticTreeParams
from abprune.game.tictactoe import TicTacToe
from abprune.ordering import NONE, OrderingKind, OrderingStrategy
from abprune.parallel import WindowMode


class Algo(enum.Enum):
    MINIMAX = "minimax"
    ALPHABETA = "alphabeta"
    PARALLEL = "parallel"


@dataclass(frozen=True)
class GameSpec:
    """Which game to build; the synthetic seed comes from the SearchConfig."""

    kind: str = "synthetic"
    board_size: int | None = None
    branching: int = 3
    tree_depth: int = 4
    leaf_range: tuple[int, int] = (0, 100)
    position: str | None = None

    def __post_init__(self):
        if self.kind not in ("chess", "ttt", "synthetic"):
            raise ConfigError(f"unknown game {self.kind!r}")
        if self.kind == "chess" and self.board_size is None:
            object.__setattr__(self, "board_size", 8)
        if self.kind == "chess" and self.board_size not in SUPPORTED_SIZES:
            raise ConfigError(f"unsupported board size {self.board_size}; choose from {SUPPORTED_SIZES}")
        if self.position is not None and self.kind != "chess":
            raise ConfigError("--position only applies to chess")

    def build(self, seed: int = 0) -> GameState:
        if self.kind == "chess":
            if self.position is not None:
                state = load_position(self.position)
                if state.game.board_size != self.board_size:
                    raise ConfigError(
                        f"position file is {state.game.board_size}x{state.game.board_size}, "
                        f"board size is {self.board_size}"
                    )
                return state
            return Chess(self.board_size).initial_state()
        if self.kind == "ttt":
            return TicTacToe().initial_state()
        params = SyntheticTreeParams(self.branching, self.tree_depth, seed, tuple(self.leaf_range))
        return Synthetic(params).root()

    @property
    def label(self) -> str:
        if self.kind == "chess":
            return f"chess{self.board_size}"
        if self.kind == "synthetic":
            return f"synthetic(b={self.branching},d={self.tree_depth})"
        return self.kind


@dataclass(frozen=True)
class SearchConfig:
    algo: Algo = Algo.ALPHABETA
    game: GameSpec | None = field(default_factory=GameSpec)
    depth: int = 1
    ordering: OrderingStrategy = NONE
    window_mode: WindowMode = WindowMode.ISOLATED
    workers: int = 1
    seed: int = 0
    repeats: int = 3

    def __post_init__(self):
        if self.depth < 1:
            raise ConfigError("depth must be >= 1")
        if self.workers < 1:
            raise ConfigError("worker count must be >= 1")
        if self.workers > 1 and self.algo is not Algo.PARALLEL:
            raise ConfigError("more than one worker requires the parallel algorithm")
        if self.repeats < 1:
            raise ConfigError("repeats must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be a 64-bit unsigned integer")
        if self.algo is Algo.MINIMAX and self.ordering.kind is not OrderingKind.NONE:
            raise ConfigError("minimax does not use move ordering")

    def build_state(self) -> GameState:
        if self.game is None:
            raise ConfigError("config has no game")
        return self.game.build(self.seed)

    def instance_key(self) -> tuple:
        """Configs with equal keys search the same position to the same depth."""
        return (self.game, self.depth, self.seed)

    @property
    def label(self) -> str:
        parts = [self.algo.value, self.ordering.label]
        if self.ordering.kind is OrderingKind.BEAM:
            parts[-1] += f"({self.ordering.width})"
        if self.algo is Algo.PARALLEL:
            parts += [self.window_mode.value, f"x{self.workers}"]
        return "/".join(parts)
