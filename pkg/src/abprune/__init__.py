"""Game-tree search: minimax, alpha-beta, root-splitting parallel alpha-beta."""

from abprune._backend import COMPILED_AVAILABLE, active_backend, set_backend, use_backend
from abprune.config import Algo, GameSpec, SearchConfig
from abprune.errors import (
    AbpruneError,
    ConfigError,
    EmptyRoot,
    IllegalMove,
    InvalidInput,
    InvalidParams,
    InvalidWidth,
    InvalidWindow,
    TerminalRoot,
)
from abprune.game import *  # noqa: F401,F403
from abprune.game import __all__ as _game_all
from abprune.ordering import OrderedChildren, OrderingKind, OrderingStrategy, beam_filter, reorder
from abprune.parallel import ClusterAssignment, WindowMode, parallel_root_split, partition_children
from abprune.search import FULL_WINDOW, SearchResult, SearchWindow, alphabeta, minimax, search

__version__ = "0.1.0"

__all__ = list(_game_all) + [
    "COMPILED_AVAILABLE", "active_backend", "set_backend", "use_backend",
    "Algo", "GameSpec", "SearchConfig",
    "AbpruneError", "ConfigError", "EmptyRoot", "IllegalMove", "InvalidInput", "InvalidParams",
    "InvalidWidth", "InvalidWindow", "TerminalRoot",
    "OrderedChildren", "OrderingKind", "OrderingStrategy", "beam_filter", "reorder",
    "ClusterAssignment", "WindowMode", "parallel_root_split", "partition_children",
    "FULL_WINDOW", "SearchResult", "SearchWindow", "alphabeta", "minimax", "search",
]
