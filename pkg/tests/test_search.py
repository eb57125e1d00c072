import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abprune import (
    FULL_WINDOW,
    Algo,
    Chess,
    ExplicitTree,
    GameSpec,
    InvalidWindow,
    OrderingStrategy,
    Player,
    SearchConfig,
    SearchWindow,
    Synthetic,
    SyntheticTreeParams,
    TicTacToe,
    alphabeta,
    evaluate,
    legal_moves,
    make_tree,
    minimax,
    search,
)
from abprune.game.synthetic import _freeze

from oracles import (
    minimal_leaves,
    nested_count,
    nested_minimax,
    random_nested,
    sort_best_first,
    synthetic_as_nested,
)

WORKED_TREE = [[3, 12, 8], [2, 4, 6], [14, 5, 2]]


class CountingTree(ExplicitTree):
    """Explicit tree that counts leaf evaluations."""

    def __init__(self, tree):
        super().__init__(_freeze(tree))
        object.__setattr__(self, "leaf_visits", 0)

    def evaluate(self, state):
        value = super().evaluate(state)
        if self.is_terminal(state):
            object.__setattr__(self, "leaf_visits", self.leaf_visits + 1)
        return value


def seeded_trees(count, b_range=(2, 5), d_range=(2, 6), rng_seed=0, leaf_range=(-100, 100)):
    rng = random.Random(rng_seed)
    out = []
    while len(out) < count:
        b, d = rng.randint(*b_range), rng.randint(*d_range)
        if b**d > 20000:
            continue
        out.append(Synthetic(SyntheticTreeParams(b, d, rng.getrandbits(64), leaf_range)).root())
    return out


def random_ttt(rng):
    state = TicTacToe().initial_state()
    for _ in range(rng.randint(1, 7)):
        moves = legal_moves(state)
        if not moves:
            break
        state = state.game.successor(state, rng.choice(moves))
    return state


def brute_force(state, depth):
    """Straight recursion over the game API; no search-library code."""
    moves = legal_moves(state) if depth > 0 else []
    if not moves:
        return evaluate(state)
    vals = [brute_force(state.game.successor(state, m), depth - 1) for m in moves]
    return max(vals) if state.to_move is Player.MAXIMIZER else min(vals)


# -- minimax ----------------------------------------------------------------


class TestMinimax:
    def test_depth_zero(self):
        s = Chess(8).initial_state()
        r = minimax(s, 0)
        assert (r.value, r.best_move, r.nodes_visited, r.cutoffs) == (0, None, 1, 0)

    def test_worked_tree(self):
        r = minimax(make_tree(WORKED_TREE), 2)
        assert r.value == nested_minimax(WORKED_TREE) == 3
        assert r.best_move.id == 0
        assert r.nodes_visited == nested_count(WORKED_TREE) == 13
        assert r.cutoffs == 0

    def test_tic_tac_toe_is_a_draw(self):
        r = minimax(TicTacToe().initial_state(), 9)
        assert r.value == 0
        assert r.nodes_visited == 549946

    def test_ties_pick_lowest_id(self):
        r = minimax(make_tree([[1, 5], [5, 9], [7, 5]]), 2)
        assert r.value == 5 and r.best_move.id == 1

    def test_matches_brute_force_on_seeded_trees(self):
        for s in seeded_trees(30, d_range=(1, 5)):
            p = s.game.params
            nested = synthetic_as_nested(p.branching, p.depth, p.seed, *p.leaf_range)
            assert minimax(s, p.depth).value == nested_minimax(nested)

    def test_minimizer_root(self):
        r = minimax(make_tree(WORKED_TREE, Player.MINIMIZER), 2)
        assert r.value == min(max(row) for row in WORKED_TREE) == 6
        assert r.best_move.id == 1


# -- alpha-beta -------------------------------------------------------------


class TestAlphaBeta:
    def test_depth_zero(self):
        r = alphabeta(make_tree(WORKED_TREE), 0)
        assert (r.value, r.best_move, r.nodes_visited) == (0, None, 1)

    def test_worked_tree(self):
        r = alphabeta(make_tree(WORKED_TREE), 2)
        assert (r.value, r.best_move.id, r.nodes_visited, r.cutoffs) == (3, 0, 11, 1)

    def test_narrow_window_fails_low(self):
        r = alphabeta(make_tree(WORKED_TREE), 2, SearchWindow(10, 11))
        assert r.value <= 10

    @pytest.mark.parametrize("window", [(5, 5), (7, 3)])
    def test_invalid_window(self, window):
        with pytest.raises(InvalidWindow):
            alphabeta(make_tree(WORKED_TREE), 2, SearchWindow(*window))

    def test_terminal_root_has_no_move(self):
        r = alphabeta(TicTacToe().state_from_cells([1, 1, 1, -1, -1, 0, 0, 0, 0]), 3)
        assert r.best_move is None and r.value == 1 and r.nodes_visited == 1

    def test_tic_tac_toe(self):
        r = alphabeta(TicTacToe().initial_state(), 9)
        assert r.value == 0
        assert r.nodes_visited < 549946

    def test_tie_break_with_reordering(self):
        # child 1 is a leaf scoring 5, so reordering searches it before the tied child 0
        tree = [[5, 6], 5, [1, 9]]
        base = minimax(make_tree(tree), 2)
        got = alphabeta(make_tree(tree), 2, ordering=OrderingStrategy.reorder())
        assert (base.value, base.best_move.id) == (5, 0)
        assert (got.value, got.best_move) == (base.value, base.best_move)

    def test_fail_low_bound_is_not_mistaken_for_a_tie(self):
        # child 0 (true value 2) is searched after child 1 (5); its first leaf is 5
        tree = [[5, 2], 5]
        for ordering in (OrderingStrategy.none(), OrderingStrategy.reorder(), OrderingStrategy.beam(2)):
            r = alphabeta(make_tree(tree), 2, ordering=ordering)
            assert (r.value, r.best_move.id) == (5, 1)

    def test_equivalence_and_pruning_on_seeded_trees(self):
        for s in seeded_trees(60):
            d = s.game.params.depth
            mm, ab = minimax(s, d), alphabeta(s, d)
            assert ab.value == mm.value
            assert ab.best_move == mm.best_move
            assert ab.nodes_visited <= mm.nodes_visited

    def test_equivalence_on_ttt_positions(self):
        rng = random.Random(4)
        for _ in range(20):
            s = random_ttt(rng)
            assert alphabeta(s, 9).value == minimax(s, 9).value == brute_force(s, 9)

    def test_equivalence_on_chess(self):
        rng = random.Random(8)
        for n, depth in ((4, 4), (5, 3), (6, 3)):
            s = Chess(n).initial_state()
            for _ in range(rng.randint(0, 6)):
                s = s.game.successor(s, rng.choice(legal_moves(s)))
            mm = minimax(s, depth)
            for ordering in (OrderingStrategy.none(), OrderingStrategy.reorder()):
                r = alphabeta(s, depth, ordering=ordering)
                assert (r.value, r.best_move) == (mm.value, mm.best_move)

    def test_repeat_runs_identical(self):
        s = Chess(6).initial_state()
        a = alphabeta(s, 3, ordering=OrderingStrategy.reorder())
        b = alphabeta(s, 3, ordering=OrderingStrategy.reorder())
        assert a.outcome() == b.outcome()


@settings(max_examples=150, deadline=None)
@given(
    b=st.integers(2, 4), d=st.integers(1, 4), seed=st.integers(0, 2**64 - 1),
    alpha=st.integers(-60, 60), width=st.integers(1, 60),
)
def test_fail_soft_bounds(b, d, seed, alpha, width):
    beta = alpha + width
    s = Synthetic(SyntheticTreeParams(b, d, seed, (-50, 50))).root()
    true = minimax(s, d).value
    v = alphabeta(s, d, SearchWindow(alpha, beta)).value
    if alpha < true < beta:
        assert v == true
    elif true <= alpha:
        assert true <= v <= alpha
    else:
        assert beta <= v <= true


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32), b=st.integers(2, 4), d=st.integers(1, 4))
def test_random_nested_trees_match_oracle(seed, b, d):
    tree = random_nested(random.Random(seed), b, d, -20, 20)
    r = alphabeta(make_tree(tree), d)
    assert r.value == nested_minimax(tree)
    assert r.best_move == minimax(make_tree(tree), d).best_move


class TestPerfectOrdering:
    @pytest.mark.parametrize("b", [2, 3])
    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_leaf_visits_equal_minimal_tree(self, b, d):
        rng = random.Random(b * 10 + d)
        for _ in range(5):
            values = rng.sample(range(-10_000, 10_000), b**d)
            it = iter(values)

            def build(depth):
                return next(it) if depth == 0 else [build(depth - 1) for _ in range(b)]

            tree = sort_best_first(build(d))
            game = CountingTree(tree)
            alphabeta(game.root(), d)
            expected = minimal_leaves(tree)
            assert expected == b ** ((d + 1) // 2) + b ** (d // 2) - 1
            assert game.leaf_visits == expected


# -- search facade -----------------------------------------------------------


class TestSearchFacade:
    def spec(self):
        return GameSpec("synthetic", branching=3, tree_depth=4)

    def test_minimax_passthrough(self):
        s = Chess(8).initial_state()
        cfg = SearchConfig(Algo.MINIMAX, GameSpec("chess"), depth=1)
        r = search(s, cfg)
        assert r.outcome() == minimax(s, 1).outcome()
        assert r.elapsed > 0

    def test_alphabeta_matches_minimax_value(self):
        cfg = SearchConfig(Algo.ALPHABETA, self.spec(), depth=4, seed=3)
        s = cfg.build_state()
        assert search(s, cfg).value == minimax(s, 4).value

    def test_parallel_one_worker_matches_sequential(self):
        cfg = SearchConfig(Algo.PARALLEL, self.spec(), depth=4, seed=3, ordering=OrderingStrategy.reorder())
        s = cfg.build_state()
        seq = alphabeta(s, 4, FULL_WINDOW, OrderingStrategy.reorder())
        assert search(s, cfg).outcome() == seq.outcome()
