import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abprune import (
    InvalidWidth,
    OrderingStrategy,
    Player,
    Synthetic,
    SyntheticTreeParams,
    alphabeta,
    beam_filter,
    legal_moves,
    make_tree,
    minimax,
    reorder,
)


def ids(children):
    return [m.id for m in children.moves]


def leaves_root(values, to_move=Player.MAXIMIZER):
    return make_tree(list(values), to_move)


class TestReorder:
    def test_maximizer_descending(self):
        s = leaves_root([5, 9, 1])
        out = reorder(s, legal_moves(s))
        assert ids(out) == [1, 0, 2] and not out.truncated

    def test_minimizer_ascending(self):
        s = leaves_root([5, 9, 1], Player.MINIMIZER)
        assert ids(reorder(s, legal_moves(s))) == [2, 0, 1]

    def test_ties_keep_canonical_order(self):
        s = leaves_root([4, 4, 4, 4])
        assert ids(reorder(s, legal_moves(s))) == [0, 1, 2, 3]

    def test_chess_captures_first(self):
        from abprune import parse_position

        s = parse_position("k...\n....\nq...\nR..K\nw\n")
        out = reorder(s, legal_moves(s))
        assert s.game.format_move(out.moves[0]) == "a1a2"
        scores = [s.game.evaluate(s.game.successor(s, m)) for m in out.moves]
        assert scores == sorted(scores, reverse=True)


class TestBeamFilter:
    def test_keeps_most_promising(self):
        s = leaves_root([5, 9, 1, 7, 3])
        out = beam_filter(s, legal_moves(s), 2)
        assert ids(out) == [1, 3] and out.truncated

    def test_full_width_is_reorder(self):
        s = leaves_root([5, 9, 1])
        assert beam_filter(s, legal_moves(s), 3) == reorder(s, legal_moves(s))

    def test_zero_width(self):
        s = leaves_root([5, 9, 1])
        with pytest.raises(InvalidWidth):
            beam_filter(s, legal_moves(s), 0)
        with pytest.raises(InvalidWidth):
            OrderingStrategy.beam(0)

    def test_width_one_expands_one_child_per_node(self):
        s = make_tree([[3, 12, 8], [2, 4, 6], [14, 5, 2]])
        beam = alphabeta(s, 2, ordering=OrderingStrategy.beam(1))
        full = alphabeta(s, 2)
        assert beam.nodes_visited == 3  # root, one interior node, one leaf
        assert beam.nodes_visited < full.nodes_visited


def seeded(b, d, seed, lo=-1000, hi=1000):
    return Synthetic(SyntheticTreeParams(b, d, seed, (lo, hi))).root()


class TestInvariants:
    def test_reorder_keeps_value_and_optimal_move(self):
        rng = random.Random(2)
        for _ in range(80):
            s = seeded(rng.randint(2, 5), rng.randint(1, 5), rng.getrandbits(64))
            d = s.game.params.depth
            base = minimax(s, d)
            r = alphabeta(s, d, ordering=OrderingStrategy.reorder())
            assert (r.value, r.best_move) == (base.value, base.best_move)

    def test_wide_beam_equals_reorder(self):
        rng = random.Random(3)
        for _ in range(50):
            b = rng.randint(2, 5)
            s = seeded(b, rng.randint(1, 5), rng.getrandbits(64))
            d = s.game.params.depth
            reo = alphabeta(s, d, ordering=OrderingStrategy.reorder())
            for w in (b, b + 3):
                assert alphabeta(s, d, ordering=OrderingStrategy.beam(w)).outcome() == reo.outcome()

    def test_node_count_monotone_in_width(self):
        rng = random.Random(4)
        for _ in range(50):
            b = rng.randint(2, 5)
            s = seeded(b, rng.randint(1, 5), rng.getrandbits(64))
            d = s.game.params.depth
            counts = [alphabeta(s, d, ordering=OrderingStrategy.beam(w)).nodes_visited for w in range(1, b + 1)]
            assert counts == sorted(counts)

    def test_beam_is_inexact_sometimes(self):
        differ = same = 0
        for seed in range(60):
            s = seeded(4, 3, seed)
            exact = minimax(s, 3).value
            got = alphabeta(s, 3, ordering=OrderingStrategy.beam(2)).value
            differ += got != exact
            same += got == exact
        assert differ > 0 and same > 0

    def test_beam_below_reorder_nodes(self):
        for seed in range(40):
            b = 4 + seed % 3
            s = seeded(b, 2 + seed % 3, seed)
            d = s.game.params.depth
            beam = alphabeta(s, d, ordering=OrderingStrategy.beam(math.ceil(b / 2)))
            reo = alphabeta(s, d, ordering=OrderingStrategy.reorder())
            assert beam.nodes_visited < reo.nodes_visited


def mixed_tree(draw, depth):
    if depth == 0 or draw(st.booleans()) and depth < 3:
        return draw(st.integers(-9, 9))
    return [mixed_tree(draw, depth - 1) for _ in range(draw(st.integers(1, 4)))]


@st.composite
def mixed_trees(draw):
    return mixed_tree(draw, draw(st.integers(1, 4)))


@settings(max_examples=200, deadline=None)
@given(tree=mixed_trees(), minimizer=st.booleans())
def test_ordering_never_changes_value_or_move(tree, minimizer):
    if isinstance(tree, int):
        tree = [tree]
    side = Player.MINIMIZER if minimizer else Player.MAXIMIZER
    base = minimax(make_tree(tree, side), 8)
    for ordering in (OrderingStrategy.none(), OrderingStrategy.reorder(), OrderingStrategy.beam(4)):
        r = alphabeta(make_tree(tree, side), 8, ordering=ordering)
        assert (r.value, r.best_move) == (base.value, base.best_move)
