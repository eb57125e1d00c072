"""The compiled kernel must agree with the pure-Python kernel node for node."""

import random
from array import array

import pytest

from abprune import (
    Chess,
    OrderingStrategy,
    Synthetic,
    SyntheticTreeParams,
    alphabeta,
    legal_moves,
    minimax,
    use_backend,
)
from abprune import _backend, _pykernel
from abprune.game.base import NEG_INF, POS_INF
from abprune.game.chess import BACK_RANKS

pytestmark = pytest.mark.skipif(not _backend.COMPILED_AVAILABLE, reason="compiled kernel not built")

ORDERINGS = [OrderingStrategy.none(), OrderingStrategy.reorder(), OrderingStrategy.beam(1), OrderingStrategy.beam(3)]


def playout(state, plies, rng):
    for _ in range(plies):
        moves = legal_moves(state)
        if not moves:
            break
        state = state.game.successor(state, rng.choice(moves))
    return state


def both(fn):
    with use_backend("python"):
        py = fn()
    with use_backend("c"):
        c = fn()
    return py, c


@pytest.mark.parametrize("n", sorted(BACK_RANKS))
def test_chess_move_lists_agree(n):
    from abprune import _ckernel

    rng = random.Random(100 + n)
    for _ in range(40):
        s = playout(Chess(n).initial_state(), rng.randrange(0, 50), rng)
        got = _ckernel.chess_moves(array("b", s.position), n, int(s.to_move))
        assert got == [m.payload for m in legal_moves(s)]


def test_chess_perft_agrees():
    from abprune import _ckernel

    s = Chess(8).initial_state()
    assert _ckernel.chess_perft(array("b", s.position), 8, 1, 1) == 20
    assert _ckernel.chess_perft(array("b", s.position), 8, 1, 2) == 400


@pytest.mark.parametrize("ordering", ORDERINGS, ids=lambda o: f"{o.label}{o.width or ''}")
@pytest.mark.parametrize("n", [4, 5, 6, 8])
def test_chess_search_agrees(n, ordering):
    rng = random.Random(n)
    depth = {4: 4, 5: 3, 6: 3, 8: 2}[n]
    for _ in range(6):
        s = playout(Chess(n).initial_state(), rng.randrange(0, 20), rng)
        py, c = both(lambda: alphabeta(s, depth, ordering=ordering))
        assert py.outcome() == c.outcome()


@pytest.mark.parametrize("ordering", ORDERINGS, ids=lambda o: f"{o.label}{o.width or ''}")
def test_synthetic_search_agrees(ordering):
    rng = random.Random(5)
    for _ in range(25):
        b, d = rng.randint(1, 5), rng.randint(1, 5)
        p = SyntheticTreeParams(b, d, rng.getrandbits(64), (-rng.randint(0, 500), rng.randint(0, 500)))
        s = Synthetic(p).root()
        depth = rng.randint(1, d)
        py, c = both(lambda: alphabeta(s, depth, ordering=ordering))
        assert py.outcome() == c.outcome()


def test_minimax_agrees():
    s = Synthetic(SyntheticTreeParams(3, 5, 99, (0, 1000))).root()
    py, c = both(lambda: minimax(s, 5))
    assert py.outcome() == c.outcome()
    cs = Chess(5).initial_state()
    py, c = both(lambda: minimax(cs, 3))
    assert py.outcome() == c.outcome()


def test_narrow_windows_agree():
    from abprune import _ckernel  # noqa: F401

    rng = random.Random(11)
    for _ in range(40):
        s = Synthetic(SyntheticTreeParams(3, 4, rng.getrandbits(64), (0, 50))).root()
        a = rng.randint(-5, 50)
        b = a + rng.randint(1, 20)
        with use_backend("c"):
            c = _backend.subtree_search(s, 4, a, b, OrderingStrategy.reorder())
        py = _pykernel.subtree_search(s, 4, a, b, OrderingStrategy.reorder())
        assert c == py


def test_full_window_sentinels_pass_through():
    s = Chess(4).initial_state()
    with use_backend("c"):
        c = _backend.subtree_search(s, 3, NEG_INF, POS_INF, OrderingStrategy.none())
    assert c == _pykernel.subtree_search(s, 3, NEG_INF, POS_INF, OrderingStrategy.none())


@pytest.mark.parametrize("ordering", ORDERINGS, ids=lambda o: f"{o.label}{o.width or ''}")
def test_tic_tac_toe_agrees(ordering):
    from abprune import TicTacToe

    rng = random.Random(21)
    for _ in range(15):
        s = playout(TicTacToe().initial_state(), rng.randrange(0, 8), rng)
        depth = rng.randint(1, 9)
        py, c = both(lambda: alphabeta(s, depth, ordering=ordering))
        assert py.outcome() == c.outcome()
    s = TicTacToe().initial_state()
    py, c = both(lambda: minimax(s, 9))
    assert py.outcome() == c.outcome()
