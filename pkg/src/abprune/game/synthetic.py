"""Seeded uniform game trees and explicit hand-written trees.

Leaf values of a seeded tree are a pure function of ``(seed, path)``: each
node carries a 64-bit key, the root's key is the seed, the key of child ``i``
is the ``(i + 1)``-th SplitMix64 output of a generator seeded with the
parent's key, and a leaf's value is ``lo + key % (hi - lo + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from abprune.errors import InvalidParams
from abprune.game.base import NEG_INF, POS_INF, GameState, Move, Player

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def child_key(key: int, index: int) -> int:
    return mix64((key + (index + 1) * GOLDEN_GAMMA) & MASK64)


@dataclass(frozen=True)
class SyntheticTreeParams:
    branching: int
    depth: int
    seed: int = 0
    leaf_range: tuple[int, int] = (0, 100)

    def __post_init__(self):
        lo, hi = self.leaf_range
        if self.branching < 1:
            raise InvalidParams("branching must be >= 1")
        if self.depth < 0:
            raise InvalidParams("depth must be >= 0")
        if lo > hi:
            raise InvalidParams(f"empty leaf range [{lo}, {hi}]")
        if lo <= NEG_INF or hi >= POS_INF:
            raise InvalidParams("leaf range collides with the score sentinels")
        if not 0 <= self.seed <= MASK64:
            raise InvalidParams("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class Synthetic:
    """Uniform tree; a state's position is ``(path, key)``."""

    params: SyntheticTreeParams

    name = "synthetic"

    def root(self) -> GameState:
        return GameState(self, ((), self.params.seed), Player.MAXIMIZER, 0)

    def leaf_value(self, key: int) -> int:
        lo, hi = self.params.leaf_range
        return lo + key % (hi - lo + 1)

    def legal_moves(self, state: GameState) -> list[Move]:
        if state.ply >= self.params.depth:
            return []
        return [Move(i, (i,)) for i in range(self.params.branching)]

    def successor(self, state: GameState, move: Move) -> GameState:
        path, key = state.position
        i = move.id
        return GameState(self, (path + (i,), child_key(key, i)), -state.to_move, state.ply + 1)

    def evaluate(self, state: GameState) -> int:
        if state.ply >= self.params.depth:
            return self.leaf_value(state.position[1])
        return 0

    def is_terminal(self, state: GameState) -> bool:
        return state.ply >= self.params.depth

    def format_move(self, move: Move) -> str:
        return str(move.id)

    def state_at(self, path: Sequence[int]) -> GameState:
        state = self.root()
        for i in path:
            if not 0 <= i < self.params.branching or state.ply >= self.params.depth:
                raise InvalidParams(f"path {tuple(path)} leaves the tree")
            state = self.successor(state, Move(i, (i,)))
        return state


def make_synthetic(params: SyntheticTreeParams) -> GameState:
    return Synthetic(params).root()


Tree = Union[int, Sequence["Tree"]]


def _freeze(tree: Tree):
    if isinstance(tree, int):
        return tree
    if len(tree) == 0:
        raise InvalidParams("interior tree nodes need at least one child")
    return tuple(_freeze(t) for t in tree)


@dataclass(frozen=True)
class ExplicitTree:
    """A hand-written tree: nested sequences with integer leaves.

    Interior nodes evaluate to 0, matching seeded trees.
    """

    tree: tuple

    name = "tree"

    def root(self, to_move: Player = Player.MAXIMIZER) -> GameState:
        return GameState(self, (), Player(to_move), 0)

    def _node(self, path):
        node = self.tree
        for i in path:
            node = node[i]
        return node

    def legal_moves(self, state: GameState) -> list[Move]:
        node = self._node(state.position)
        if isinstance(node, int):
            return []
        return [Move(i, (i,)) for i in range(len(node))]

    def successor(self, state: GameState, move: Move) -> GameState:
        return GameState(self, state.position + (move.id,), -state.to_move, state.ply + 1)

    def evaluate(self, state: GameState) -> int:
        node = self._node(state.position)
        return node if isinstance(node, int) else 0

    def is_terminal(self, state: GameState) -> bool:
        return isinstance(self._node(state.position), int)

    def format_move(self, move: Move) -> str:
        return str(move.id)


def make_tree(tree: Tree, to_move: Player = Player.MAXIMIZER) -> GameState:
    """Root state of an explicit tree, e.g. ``make_tree([[3, 12, 8], [2, 4, 6]])``."""
    return ExplicitTree(_freeze(tree)).root(to_move)
