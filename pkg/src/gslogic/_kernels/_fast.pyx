# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernels: GF(2) rank and the exact rank-width search.

Mirrors gslogic._kernels.pure operation for operation; both backends must
produce bit-identical results, including the insertion-order witness. Masks
are machine words here, so anything past 64 columns or 64 vertices falls
back to the arbitrary-precision code path.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long)
    int __builtin_ctzll(unsigned long long)

BACKEND_NAME = "fast"


def gf2_rank_rows(rows, ncols):
    """Rank over GF(2) of bit-packed rows (bit j of a row = column j)."""
    if ncols > 64:
        return _rank_bigint(rows)
    cdef uint64_t piv[64]
    memset(piv, 0, sizeof(piv))
    cdef int rank = 0
    cdef uint64_t row
    cdef int c
    for obj in rows:
        row = <uint64_t> obj
        while row:
            c = __builtin_ctzll(row)
            if piv[c]:
                row ^= piv[c]
            else:
                piv[c] = row
                rank += 1
                break
    return rank


def _rank_bigint(rows):
    # same algorithm on Python ints, for rows wider than a machine word
    pivots = {}
    rank = 0
    for row in rows:
        while row:
            low = row & -row
            p = pivots.get(low)
            if p is None:
                pivots[low] = row
                rank += 1
                break
            row ^= p
    return rank


cdef int _cut_rank_c(uint64_t *adj, uint64_t amask, uint64_t bmask):
    cdef uint64_t piv[64]
    cdef uint64_t swap_tmp, rest, row
    cdef int v, c, rank = 0
    if __builtin_popcountll(amask) > __builtin_popcountll(bmask):
        swap_tmp = amask
        amask = bmask
        bmask = swap_tmp
    memset(piv, 0, sizeof(piv))
    rest = amask
    while rest:
        v = __builtin_ctzll(rest)
        rest &= rest - 1
        row = adj[v] & bmask
        while row:
            c = __builtin_ctzll(row)
            if piv[c]:
                row ^= piv[c]
            else:
                piv[c] = row
                rank += 1
                break
    return rank


cdef struct _Search:
    uint64_t adj[64]
    uint64_t full
    int n
    bint prune
    int lower_bound
    int best_width
    bint done
    bint have_best
    int stride
    uint64_t *far
    int *choices
    int *best_choices


cdef void _visit(_Search *s, int k):
    cdef uint64_t *far = s.far + (k - 2) * s.stride
    cdef int m = 2 * k - 3
    cdef uint64_t *child
    cdef uint64_t f, mm, bit, placed
    cdef int width, partial, r, i, j
    cdef bint pruned
    if k == s.n:
        width = 0
        for i in range(m):
            f = far[i]
            r = _cut_rank_c(s.adj, f, s.full ^ f)
            if r > width:
                width = r
                if s.prune and width >= s.best_width:
                    return
        if width < s.best_width:
            s.best_width = width
            memcpy(s.best_choices, s.choices, (s.n - 2) * sizeof(int))
            s.have_best = True
            if s.prune and width <= s.lower_bound:
                s.done = True
        return
    bit = (<uint64_t> 1) << k
    placed = (bit << 1) - 1
    child = s.far + (k - 1) * s.stride
    for i in range(m):
        mm = far[i]
        for j in range(m):
            f = far[j]
            if (mm | f) == f:
                child[j] = f | bit
            else:
                child[j] = f
        child[i] = mm | bit
        child[m] = mm
        child[m + 1] = bit
        if s.prune and s.best_width <= s.n:
            partial = 0
            pruned = False
            for j in range(m + 2):
                f = child[j]
                r = _cut_rank_c(s.adj, f, placed ^ f)
                if r > partial:
                    partial = r
                    if partial >= s.best_width:
                        pruned = True
                        break
            if pruned or partial >= s.best_width:
                continue
        s.choices[k - 2] = i
        _visit(s, k + 1)
        if s.done:
            return


def rankwidth_search(adj, int n, bint prune=True):
    """Exhaustive min-max cut-rank search over leaf-labeled subcubic trees.

    Same enumeration, result, and witness as the pure kernel (which holds
    the normative docstring). Delegates past 64 vertices, where machine
    words cannot hold the masks.
    """
    if n < 2:
        raise ValueError(f"search needs at least 2 vertices, got {n}")
    if n > 64:
        from . import pure
        return pure.rankwidth_search(adj, n, prune)

    cdef _Search s
    cdef list rows = list(adj)
    cdef int i
    for i in range(n):
        s.adj[i] = <uint64_t> rows[i]
    if n == 64:
        s.full = <uint64_t> 0xFFFFFFFFFFFFFFFF
    else:
        s.full = ((<uint64_t> 1) << n) - 1
    s.n = n
    s.prune = prune
    s.lower_bound = 0
    for i in range(n):
        if s.adj[i]:
            s.lower_bound = 1
            break
    s.best_width = n + 1
    s.done = False
    s.have_best = False
    s.stride = 2 * n - 3

    cdef int levels = n - 1
    cdef int nch = n - 2 if n > 2 else 1
    s.far = <uint64_t *> malloc(<size_t> levels * <size_t> s.stride * sizeof(uint64_t))
    s.choices = <int *> malloc(<size_t> nch * sizeof(int))
    s.best_choices = <int *> malloc(<size_t> nch * sizeof(int))
    if s.far == NULL or s.choices == NULL or s.best_choices == NULL:
        free(s.far)
        free(s.choices)
        free(s.best_choices)
        raise MemoryError()
    try:
        s.far[0] = 2
        _visit(&s, 2)
        if not s.have_best:
            raise RuntimeError("search finished without a witness")
        return s.best_width, tuple(s.best_choices[i] for i in range(n - 2))
    finally:
        free(s.far)
        free(s.choices)
        free(s.best_choices)
