"""Pure-Python kernels: GF(2) rank and the exact rank-width search.

This is the fallback used when the compiled extension is unavailable. Both
backends must produce bit-identical results; the search enumeration order is
part of the contract (see `gslogic.rankwidth` for the tree encoding).
"""

from __future__ import annotations

from typing import Sequence

BACKEND_NAME = "pure"


def gf2_rank_rows(rows: Sequence[int], ncols: int) -> int:
    """Rank over GF(2) of bit-packed rows (bit j of a row = column j)."""
    pivots: dict[int, int] = {}
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


def _cut_rank(adj: Sequence[int], amask: int, bmask: int) -> int:
    """GF(2) rank of the adjacency block between vertex masks A and B."""
    if amask.bit_count() > bmask.bit_count():
        amask, bmask = bmask, amask
    pivots: dict[int, int] = {}
    rank = 0
    rest = amask
    while rest:
        low = rest & -rest
        rest ^= low
        row = adj[low.bit_length() - 1] & bmask
        while row:
            lowbit = row & -row
            p = pivots.get(lowbit)
            if p is None:
                pivots[lowbit] = row
                rank += 1
                break
            row ^= p
    return rank


def rankwidth_search(adj: Sequence[int], n: int, prune: bool = True) -> tuple[int, tuple[int, ...]]:
    """Exhaustive min-max cut-rank search over leaf-labeled subcubic trees.

    Trees are enumerated by inserting leaf k (k = 2..n-1) into each existing
    edge, lowest edge index first, depth first. Returns the optimal width and
    the insertion-choice tuple of the first optimal tree in that order.

    With ``prune`` set, subtrees whose partial width already reaches the best
    known width are skipped, and the search stops once the trivial lower
    bound (1 for any graph with an edge) is attained. Neither changes the
    result or the reported witness.
    """
    if n < 2:
        raise ValueError(f"search needs at least 2 vertices, got {n}")
    lower_bound = 1 if any(adj) else 0
    full = (1 << n) - 1

    best_width = n + 1
    best_choices: tuple[int, ...] | None = None
    choices: list[int] = []
    done = False

    def visit(far: list[int], k: int) -> None:
        nonlocal best_width, best_choices, done
        if k == n:
            width = 0
            for f in far:
                r = _cut_rank(adj, f, full ^ f)
                if r > width:
                    width = r
                    if prune and width >= best_width:
                        return
            if width < best_width:
                best_width = width
                best_choices = tuple(choices)
                if prune and width <= lower_bound:
                    done = True
            return
        bit = 1 << k
        placed = (1 << (k + 1)) - 1
        for i in range(len(far)):
            m = far[i]
            child = [
                (f | bit) if (m | f) == f else f for f in far
            ]
            child[i] = m | bit
            child.append(m)
            child.append(bit)
            if prune and best_width <= n:
                partial = 0
                for f in child:
                    r = _cut_rank(adj, f, placed ^ f)
                    if r > partial:
                        partial = r
                        if partial >= best_width:
                            break
                if partial >= best_width:
                    continue
            choices.append(i)
            visit(child, k + 1)
            choices.pop()
            if done:
                return

    visit([2], 2)
    assert best_choices is not None
    return best_width, best_choices
