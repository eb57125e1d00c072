# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled subtree search for simplified chess and seeded synthetic trees.

The search runs without the GIL so root-splitting workers on separate
threads execute concurrently. Semantics mirror ``abprune._pykernel`` exactly,
including move order and node/cutoff counting.
"""

from libc.stdint cimport uint64_t

ctypedef long long score_t

cdef enum:
    MAX_MOVES = 512
    MAX_TARGETS = 32

cdef score_t NEG_INF = -1000000000
cdef score_t POS_INF = 1000000000

cdef enum:
    ORDER_NONE = 0
    ORDER_REORDER = 1
    ORDER_BEAM = 2

cdef int PAWN = 1, KNIGHT = 2, BISHOP = 3, ROOK = 4, QUEEN = 5, KING = 6
cdef score_t VALUES[7]
VALUES[:] = [0, 100, 300, 300, 500, 900, 20000]

cdef int KN_DR[8]
cdef int KN_DF[8]
cdef int KG_DR[8]
cdef int KG_DF[8]
cdef int DIR_DR[8]
cdef int DIR_DF[8]
KN_DR[:] = [1, 2, 2, 1, -1, -2, -2, -1]
KN_DF[:] = [2, 1, -1, -2, -2, -1, 1, 2]
KG_DR[:] = [1, 1, 0, -1, -1, -1, 0, 1]
KG_DF[:] = [0, 1, 1, 1, 0, -1, -1, -1]
# rook directions are 0..3, bishop directions 4..7
DIR_DR[:] = [1, 0, -1, 0, 1, -1, -1, 1]
DIR_DF[:] = [0, 1, 0, -1, 1, 1, -1, -1]


cdef struct Stats:
    long long nodes
    long long cutoffs


cdef struct Chess:
    signed char board[64]
    int n
    score_t material
    int kings_lost
    int ordering
    int width


cdef inline void _insert_sorted(int* buf, int count, int value) noexcept nogil:
    cdef int j = count
    while j > 0 and buf[j - 1] > value:
        buf[j] = buf[j - 1]
        j -= 1
    buf[j] = value


cdef int chess_gen(Chess* c, int side, int* out) noexcept nogil:
    """Fill ``out`` with encoded moves (from | to << 8 | promo << 16) in canonical order."""
    cdef int n = c.n
    cdef int count = 0
    cdef int sq, piece, r, f, rr, ff, t, k, d, nt, last, start, one, two, occ
    cdef int targets[MAX_TARGETS]
    if c.kings_lost:
        return 0
    last = n - 1 if side > 0 else 0
    start = 1 if side > 0 else n - 2
    for sq in range(n * n):
        piece = c.board[sq] * side
        if piece <= 0:
            continue
        r = sq // n
        f = sq % n
        nt = 0
        if piece == PAWN:
            rr = r + side
            if 0 <= rr < n:
                one = rr * n + f
                if f > 0 and c.board[one - 1] * side < 0:
                    _insert_sorted(targets, nt, one - 1)
                    nt += 1
                if f < n - 1 and c.board[one + 1] * side < 0:
                    _insert_sorted(targets, nt, one + 1)
                    nt += 1
                if c.board[one] == 0:
                    _insert_sorted(targets, nt, one)
                    nt += 1
                    if r == start and 0 <= rr + side < n:
                        two = (rr + side) * n + f
                        if c.board[two] == 0:
                            _insert_sorted(targets, nt, two)
                            nt += 1
            for k in range(nt):
                t = targets[k]
                out[count] = sq | (t << 8) | ((1 if t // n == last else 0) << 16)
                count += 1
            continue
        if piece == KNIGHT or piece == KING:
            for k in range(8):
                if piece == KNIGHT:
                    rr = r + KN_DR[k]
                    ff = f + KN_DF[k]
                else:
                    rr = r + KG_DR[k]
                    ff = f + KG_DF[k]
                if 0 <= rr < n and 0 <= ff < n:
                    t = rr * n + ff
                    if c.board[t] * side <= 0:
                        _insert_sorted(targets, nt, t)
                        nt += 1
        else:
            for d in range(8):
                if piece == ROOK and d >= 4:
                    break
                if piece == BISHOP and d < 4:
                    continue
                rr = r + DIR_DR[d]
                ff = f + DIR_DF[d]
                while 0 <= rr < n and 0 <= ff < n:
                    t = rr * n + ff
                    occ = c.board[t] * side
                    if occ > 0:
                        break
                    _insert_sorted(targets, nt, t)
                    nt += 1
                    if occ < 0:
                        break
                    rr += DIR_DR[d]
                    ff += DIR_DF[d]
        for k in range(nt):
            out[count] = sq | (targets[k] << 8)
            count += 1
    return count


cdef inline score_t chess_delta(Chess* c, int side, int mv) noexcept nogil:
    """Material change (Maximizer viewpoint) caused by ``mv``."""
    cdef int frm = mv & 0xFF
    cdef int to = (mv >> 8) & 0xFF
    cdef int captured = c.board[to]
    cdef score_t delta = 0
    if captured != 0:
        delta -= VALUES[captured] if captured > 0 else -VALUES[-captured]
    if (mv >> 16) & 1:
        delta += side * (VALUES[QUEEN] - VALUES[PAWN])
    return delta


cdef inline int chess_make(Chess* c, int side, int mv) noexcept nogil:
    cdef int frm = mv & 0xFF
    cdef int to = (mv >> 8) & 0xFF
    cdef int captured = c.board[to]
    c.material += chess_delta(c, side, mv)
    if captured == KING or captured == -KING:
        c.kings_lost += 1
    if (mv >> 16) & 1:
        c.board[to] = <signed char>(QUEEN * side)
    else:
        c.board[to] = c.board[frm]
    c.board[frm] = 0
    return captured


cdef inline void chess_unmake(Chess* c, int side, int mv, int captured, score_t material) noexcept nogil:
    cdef int frm = mv & 0xFF
    cdef int to = (mv >> 8) & 0xFF
    if (mv >> 16) & 1:
        c.board[frm] = <signed char>(PAWN * side)
    else:
        c.board[frm] = c.board[to]
    c.board[to] = <signed char>captured
    if captured == KING or captured == -KING:
        c.kings_lost -= 1
    c.material = material


cdef void stable_sort(int* moves, score_t* keys, int count, int descending) noexcept nogil:
    cdef int i, j, mv
    cdef score_t key
    for i in range(1, count):
        mv = moves[i]
        key = keys[i]
        j = i
        if descending:
            while j > 0 and keys[j - 1] < key:
                moves[j] = moves[j - 1]
                keys[j] = keys[j - 1]
                j -= 1
        else:
            while j > 0 and keys[j - 1] > key:
                moves[j] = moves[j - 1]
                keys[j] = keys[j - 1]
                j -= 1
        moves[j] = mv
        keys[j] = key


cdef score_t chess_search(Chess* c, int side, int depth, score_t alpha, score_t beta,
                          int exhaustive, Stats* st) noexcept nogil:
    cdef int moves[MAX_MOVES]
    cdef score_t keys[MAX_MOVES]
    cdef int count, i, captured
    cdef score_t value, v, saved
    st.nodes += 1
    if depth == 0:
        return c.material
    count = chess_gen(c, side, moves)
    if count == 0:
        return c.material
    if not exhaustive and c.ordering != ORDER_NONE:
        for i in range(count):
            keys[i] = c.material + chess_delta(c, side, moves[i])
        stable_sort(moves, keys, count, side > 0)
        if c.ordering == ORDER_BEAM and count > c.width:
            count = c.width
    saved = c.material
    if side > 0:
        value = NEG_INF
        for i in range(count):
            captured = chess_make(c, side, moves[i])
            v = chess_search(c, -side, depth - 1, alpha, beta, exhaustive, st)
            chess_unmake(c, side, moves[i], captured, saved)
            if v > value:
                value = v
            if exhaustive:
                continue
            if value > alpha:
                alpha = value
            if beta <= alpha:
                if i < count - 1:
                    st.cutoffs += 1
                break
    else:
        value = POS_INF
        for i in range(count):
            captured = chess_make(c, side, moves[i])
            v = chess_search(c, -side, depth - 1, alpha, beta, exhaustive, st)
            chess_unmake(c, side, moves[i], captured, saved)
            if v < value:
                value = v
            if exhaustive:
                continue
            if value < beta:
                beta = value
            if beta <= alpha:
                if i < count - 1:
                    st.cutoffs += 1
                break
    return value


cdef void chess_load(Chess* c, const signed char[:] board, int n, int ordering, int width):
    cdef int i, wk = 0, bk = 0
    cdef score_t material = 0
    c.n = n
    for i in range(n * n):
        c.board[i] = board[i]
        if board[i] > 0:
            material += VALUES[board[i]]
        elif board[i] < 0:
            material -= VALUES[-board[i]]
        if board[i] == KING:
            wk += 1
        elif board[i] == -KING:
            bk += 1
    c.material = material
    c.kings_lost = (1 if wk == 0 else 0) + (1 if bk == 0 else 0)
    c.ordering = ordering
    c.width = width


def chess_subtree(const signed char[:] board, int n, int side, int depth,
                  score_t alpha, score_t beta, int ordering, int width, bint exhaustive):
    """Return ``(value, nodes, cutoffs)`` for a chess position."""
    cdef Chess c
    cdef Stats st
    cdef score_t value
    if n < 1 or n > 8 or board.shape[0] != n * n:
        raise ValueError("bad board")
    st.nodes = 0
    st.cutoffs = 0
    chess_load(&c, board, n, ordering, width)
    with nogil:
        value = chess_search(&c, side, depth, alpha, beta, exhaustive, &st)
    return value, st.nodes, st.cutoffs


def chess_moves(const signed char[:] board, int n, int side):
    """Canonical move list as ``(from, to, promo)`` tuples; used to cross-check."""
    cdef Chess c
    cdef int moves[MAX_MOVES]
    cdef int count, i
    chess_load(&c, board, n, ORDER_NONE, 0)
    count = chess_gen(&c, side, moves)
    return [(moves[i] & 0xFF, (moves[i] >> 8) & 0xFF, bool((moves[i] >> 16) & 1)) for i in range(count)]


def chess_perft(const signed char[:] board, int n, int side, int depth):
    cdef Chess c
    cdef long long total
    chess_load(&c, board, n, ORDER_NONE, 0)
    with nogil:
        total = _perft(&c, side, depth)
    return total


cdef long long _perft(Chess* c, int side, int depth) noexcept nogil:
    cdef int moves[MAX_MOVES]
    cdef int count, i, captured
    cdef long long total = 0
    cdef score_t saved
    if depth == 0:
        return 1
    count = chess_gen(c, side, moves)
    saved = c.material
    for i in range(count):
        captured = chess_make(c, side, moves[i])
        total += _perft(c, -side, depth - 1)
        chess_unmake(c, side, moves[i], captured, saved)
    return total


# -- synthetic trees ---------------------------------------------------

cdef uint64_t GOLDEN_GAMMA = 0x9E3779B97F4A7C15ULL


cdef inline uint64_t mix64(uint64_t z) noexcept nogil:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef inline uint64_t child_key(uint64_t key, int index) noexcept nogil:
    return mix64(key + <uint64_t>(index + 1) * GOLDEN_GAMMA)


cdef struct Tree:
    int depth
    int branching
    score_t lo
    uint64_t span
    int ordering
    int width


cdef inline score_t tree_eval(Tree* t, uint64_t key, int ply) noexcept nogil:
    if ply >= t.depth:
        return t.lo + <score_t>(key % t.span)
    return 0


cdef score_t tree_search(Tree* t, uint64_t key, int ply, int side, int depth, score_t alpha,
                         score_t beta, int exhaustive, Stats* st) noexcept nogil:
    cdef int idx[MAX_MOVES]
    cdef score_t keys[MAX_MOVES]
    cdef int count, i
    cdef score_t value, v
    st.nodes += 1
    if depth == 0 or ply >= t.depth:
        return tree_eval(t, key, ply)
    count = t.branching
    for i in range(count):
        idx[i] = i
    if not exhaustive and t.ordering != ORDER_NONE:
        for i in range(count):
            keys[i] = tree_eval(t, child_key(key, i), ply + 1)
        stable_sort(idx, keys, count, side > 0)
        if t.ordering == ORDER_BEAM and count > t.width:
            count = t.width
    if side > 0:
        value = NEG_INF
        for i in range(count):
            v = tree_search(t, child_key(key, idx[i]), ply + 1, -side, depth - 1, alpha, beta, exhaustive, st)
            if v > value:
                value = v
            if exhaustive:
                continue
            if value > alpha:
                alpha = value
            if beta <= alpha:
                if i < count - 1:
                    st.cutoffs += 1
                break
    else:
        value = POS_INF
        for i in range(count):
            v = tree_search(t, child_key(key, idx[i]), ply + 1, -side, depth - 1, alpha, beta, exhaustive, st)
            if v < value:
                value = v
            if exhaustive:
                continue
            if value < beta:
                beta = value
            if beta <= alpha:
                if i < count - 1:
                    st.cutoffs += 1
                break
    return value


def synthetic_subtree(uint64_t key, int ply, int tree_depth, int branching, score_t lo, score_t hi,
                      int side, int depth, score_t alpha, score_t beta, int ordering, int width,
                      bint exhaustive):
    """Return ``(value, nodes, cutoffs)`` for a seeded synthetic subtree."""
    cdef Tree t
    cdef Stats st
    cdef score_t value
    if branching < 1 or branching > MAX_MOVES:
        raise ValueError("branching out of range for the compiled kernel")
    t.depth = tree_depth
    t.branching = branching
    t.lo = lo
    t.span = <uint64_t>(hi - lo + 1)
    t.ordering = ordering
    t.width = width
    st.nodes = 0
    st.cutoffs = 0
    with nogil:
        value = tree_search(&t, key, ply, side, depth, alpha, beta, exhaustive, &st)
    return value, st.nodes, st.cutoffs


def synthetic_child_key(uint64_t key, int index):
    return child_key(key, index)


# -- tic-tac-toe -------------------------------------------------------

cdef int TTT_LINES[24]
TTT_LINES[:] = [0, 1, 2, 3, 4, 5, 6, 7, 8, 0, 3, 6, 1, 4, 7, 2, 5, 8, 0, 4, 8, 2, 4, 6]


cdef inline int ttt_winner(int* cells) noexcept nogil:
    cdef int k, a
    for k in range(0, 24, 3):
        a = cells[TTT_LINES[k]]
        if a != 0 and a == cells[TTT_LINES[k + 1]] and a == cells[TTT_LINES[k + 2]]:
            return a
    return 0


cdef score_t ttt_search(int* cells, int side, int depth, score_t alpha, score_t beta,
                        int ordering, int width, int exhaustive, Stats* st) noexcept nogil:
    cdef int moves[9]
    cdef score_t keys[9]
    cdef int count = 0, i
    cdef score_t value, v, w
    st.nodes += 1
    w = ttt_winner(cells)
    if depth == 0 or w != 0:
        return w
    for i in range(9):
        if cells[i] == 0:
            moves[count] = i
            count += 1
    if count == 0:
        return 0
    if not exhaustive and ordering != ORDER_NONE:
        for i in range(count):
            cells[moves[i]] = side
            keys[i] = ttt_winner(cells)
            cells[moves[i]] = 0
        stable_sort(moves, keys, count, side > 0)
        if ordering == ORDER_BEAM and count > width:
            count = width
    value = NEG_INF if side > 0 else POS_INF
    for i in range(count):
        cells[moves[i]] = side
        v = ttt_search(cells, -side, depth - 1, alpha, beta, ordering, width, exhaustive, st)
        cells[moves[i]] = 0
        if side > 0:
            if v > value:
                value = v
            if not exhaustive and value > alpha:
                alpha = value
        else:
            if v < value:
                value = v
            if not exhaustive and value < beta:
                beta = value
        if not exhaustive and beta <= alpha:
            if i < count - 1:
                st.cutoffs += 1
            break
    return value


def ttt_subtree(cells, int side, int depth, score_t alpha, score_t beta,
                int ordering, int width, bint exhaustive):
    """Return ``(value, nodes, cutoffs)`` for a tic-tac-toe position."""
    cdef int board[9]
    cdef Stats st
    cdef score_t value
    cdef int i
    if len(cells) != 9:
        raise ValueError("bad board")
    for i in range(9):
        board[i] = cells[i]
    st.nodes = 0
    st.cutoffs = 0
    with nogil:
        value = ttt_search(board, side, depth, alpha, beta, ordering, width, exhaustive, &st)
    return value, st.nodes, st.cutoffs
