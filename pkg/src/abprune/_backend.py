"""Selects the compiled or pure-Python subtree kernel at import.

Set ``ABPRUNE_BACKEND=python`` to force the fallback. ``use_backend`` switches
at run time, mainly for the backend benchmark and cross-checking tests.
"""

from __future__ import annotations

import os
from array import array
from contextlib import contextmanager

from abprune import _pykernel
from abprune.game.base import GameState
from abprune.game.chess import Chess
from abprune.game.synthetic import Synthetic
from abprune.game.tictactoe import TicTacToe
from abprune.ordering import OrderingKind, OrderingStrategy

try:
    from abprune import _ckernel
except ImportError:  # extension not built
    _ckernel = None

_ORDER_CODES = {OrderingKind.NONE: 0, OrderingKind.REORDER: 1, OrderingKind.BEAM: 2}

COMPILED_AVAILABLE = _ckernel is not None
_active = "c" if COMPILED_AVAILABLE and os.environ.get("ABPRUNE_BACKEND", "auto") != "python" else "python"


def active_backend() -> str:
    return _active


def set_backend(name: str) -> None:
    global _active
    if name == "auto":
        name = "c" if COMPILED_AVAILABLE else "python"
    if name not in ("c", "python"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "c" and not COMPILED_AVAILABLE:
        raise RuntimeError("compiled kernel is not built; reinstall with Cython and a C compiler")
    _active = name


@contextmanager
def use_backend(name: str):
    previous = _active
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def subtree_search(
    state: GameState,
    depth: int,
    alpha: int,
    beta: int,
    ordering: OrderingStrategy,
    exhaustive: bool = False,
) -> tuple[int, int, int]:
    """``(value, nodes, cutoffs)`` of ``state`` searched to ``depth``.

    ``exhaustive`` selects plain minimax and ignores the window and ordering.
    """
    if _active == "c":
        game = state.game
        code = _ORDER_CODES[ordering.kind]
        width = ordering.width or 0
        if isinstance(game, Chess):
            return _ckernel.chess_subtree(
                array("b", state.position), game.board_size, int(state.to_move),
                depth, alpha, beta, code, width, exhaustive,
            )
        if isinstance(game, TicTacToe):
            return _ckernel.ttt_subtree(
                state.position, int(state.to_move), depth, alpha, beta, code, width, exhaustive,
            )
        if isinstance(game, Synthetic) and game.params.branching <= 512:
            p = game.params
            return _ckernel.synthetic_subtree(
                state.position[1], state.ply, p.depth, p.branching, p.leaf_range[0], p.leaf_range[1],
                int(state.to_move), depth, alpha, beta, code, width, exhaustive,
            )
    return _pykernel.subtree_search(state, depth, alpha, beta, ordering, exhaustive)
