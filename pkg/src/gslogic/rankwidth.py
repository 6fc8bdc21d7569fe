"""Subcubic trees, branch decompositions, and exact rank-width.

The rank-width of a graph is the min over subcubic trees (every vertex of
degree 1 or 3, leaves labeled bijectively by the graph's vertices) of the max
cut-rank over the bipartitions induced by deleting a tree edge. The exact
search enumerates all (2n-5)!! leaf-labeled trees, so it is only feasible for
small n and refuses beyond a configurable cap.

Tree encoding: leaves are tree vertices 0..n-1, internal vertices n..2n-3 in
creation order. Every tree arises from the unique 2-leaf tree by inserting
leaf k = 2..n-1 into an existing edge; recording the chosen edge index per
insertion gives a compact "choices" witness that both kernel backends share.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import _kernels
from .errors import SizeLimitError
from .gf2 import cut_rank_masks
from .graphs import Graph

__all__ = [
    "SubcubicTree",
    "RankDecomposition",
    "DEFAULT_EXACT_CAP",
    "tree_from_choices",
    "enumerate_subcubic_trees",
    "count_subcubic_trees",
    "tree_edge_bipartition",
    "decomposition_width",
    "exact_rankwidth",
    "greedy_decomposition",
]

DEFAULT_EXACT_CAP = 12


def _identity_labels(n: int) -> tuple[int, ...]:
    return tuple(range(n))


@dataclass(frozen=True)
class SubcubicTree:
    """Tree with all degrees 1 or 3 and leaves labeled by graph vertices.

    ``n`` is the leaf count; tree vertices are 0..2n-3 with leaves 0..n-1.
    ``labels[leaf]`` is the graph vertex carried by that leaf (identity for
    every tree this package constructs).
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"subcubic tree needs at least 2 leaves, got {self.n}")
        if not self.labels:
            object.__setattr__(self, "labels", _identity_labels(self.n))
        if sorted(self.labels) != list(range(self.n)):
            raise ValueError("leaf labels are not a bijection onto 0..n-1")
        v_count = 2 * self.n - 2
        if len(self.edges) != v_count - 1:
            raise ValueError(f"expected {v_count - 1} edges, got {len(self.edges)}")
        deg = [0] * v_count
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v_count and 0 <= v < v_count) or u == v:
                raise ValueError(f"bad tree edge ({u}, {v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate tree edge ({u}, {v})")
            seen.add(key)
            deg[u] += 1
            deg[v] += 1
        for v in range(v_count):
            want = 1 if v < self.n else 3
            if self.n == 2:
                want = 1
            if deg[v] != want:
                raise ValueError(f"tree vertex {v} has degree {deg[v]}, expected {want}")
        if len(self._components()) != 1:
            raise ValueError("tree is not connected")

    def _adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(2 * self.n - 2)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def _components(self, skip: tuple[int, int] | None = None) -> list[set[int]]:
        adj = self._adjacency()
        unseen = set(range(2 * self.n - 2))
        comps = []
        while unseen:
            start = min(unseen)
            comp = {start}
            stack = [start]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if skip and {u, w} == set(skip):
                        continue
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            comps.append(comp)
            unseen -= comp
        return comps

    def leaf_masks(self) -> list[int]:
        """For each edge, the labels on one side of its cut, as a bitmask.

        Side convention: the component not containing tree vertex 0, computed
        in one rooted traversal (root = leaf 0).
        """
        adj = self._adjacency()
        parent = {0: None}
        order = [0]
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in parent:
                    parent[w] = u
                    order.append(w)
                    stack.append(w)
        below = [0] * (2 * self.n - 2)
        for u in reversed(order):
            if u < self.n:
                below[u] |= 1 << self.labels[u]
            p = parent[u]
            if p is not None:
                below[p] |= below[u]
        masks = []
        for u, v in self.edges:
            child = v if parent[v] == u else u
            masks.append(below[child])
        return masks

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "leaf_labels": {str(leaf): label for leaf, label in enumerate(self.labels)},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SubcubicTree":
        n = data["n"]
        edges = tuple((u, v) for u, v in data["edges"])
        labels = [0] * n
        for leaf, label in data["leaf_labels"].items():
            labels[int(leaf)] = label
        return cls(n, edges, tuple(labels))


@dataclass(frozen=True)
class RankDecomposition:
    """A subcubic tree together with its width for a particular graph."""

    tree: SubcubicTree
    width: int

    def to_json(self) -> str:
        payload = self.tree.to_json_dict()
        payload["width"] = self.width
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RankDecomposition":
        data = json.loads(text)
        return cls(SubcubicTree.from_json_dict(data), data["width"])


def tree_from_choices(n: int, choices: Sequence[int]) -> SubcubicTree:
    """Rebuild the tree encoded by per-leaf insertion choices.

    ``choices[k-2]`` is the index of the edge that leaf k subdivides. The
    edge list evolves as: edge i = (u, v) becomes (u, w), then (w, v) and
    (w, k) are appended, where w is the next internal vertex id.
    """
    if n < 2:
        raise ValueError(f"need at least 2 leaves, got {n}")
    if len(choices) != max(n - 2, 0):
        raise ValueError(f"expected {n - 2} insertion choices, got {len(choices)}")
    edges: list[tuple[int, int]] = [(0, 1)]
    for k in range(2, n):
        i = choices[k - 2]
        if not 0 <= i < len(edges):
            raise ValueError(f"choice {i} out of range at leaf {k}")
        u, v = edges[i]
        w = n + (k - 2)
        edges[i] = (u, w)
        edges.append((w, v))
        edges.append((w, k))
    return SubcubicTree(n, tuple(edges))


def enumerate_subcubic_trees(n: int) -> Iterator[SubcubicTree]:
    """Yield every leaf-labeled subcubic tree with n leaves exactly once.

    Deterministic depth-first order: leaf k tries edge indices ascending.
    The count is (2n-5)!! for n >= 3 and 1 for n = 2.
    """
    if n < 2:
        raise ValueError(f"subcubic trees need at least 2 leaves, got {n}")

    def rec(prefix: list[int], k: int) -> Iterator[SubcubicTree]:
        if k == n:
            yield tree_from_choices(n, prefix)
            return
        for i in range(2 * k - 3):
            prefix.append(i)
            yield from rec(prefix, k + 1)
            prefix.pop()

    yield from rec([], 2)


def count_subcubic_trees(n: int) -> int:
    """(2n-5)!! by the insertion recurrence; independent of the enumerator."""
    if n < 2:
        raise ValueError(f"subcubic trees need at least 2 leaves, got {n}")
    count = 1
    for k in range(3, n + 1):
        count *= 2 * k - 5
    return count


def tree_edge_bipartition(tree: SubcubicTree, edge: tuple[int, int]) -> tuple[set[int], set[int]]:
    """Leaf labels of the two components of the tree with ``edge`` deleted.

    The first set is the side containing the smaller endpoint of the edge.
    """
    key = (min(edge), max(edge))
    if key not in {(min(u, v), max(u, v)) for u, v in tree.edges}:
        raise ValueError(f"({edge[0]}, {edge[1]}) is not an edge of the tree")
    comps = tree._components(skip=key)
    assert len(comps) == 2
    first = comps[0] if key[0] in comps[0] else comps[1]
    second = comps[1] if first is comps[0] else comps[0]

    def leaf_labels(comp: set[int]) -> set[int]:
        return {tree.labels[v] for v in comp if v < tree.n}

    return leaf_labels(first), leaf_labels(second)


def decomposition_width(g: Graph, tree: SubcubicTree) -> int:
    """Max cut-rank over the bipartitions induced by the tree's edges."""
    if tree.n != g.n:
        raise ValueError(f"tree has {tree.n} leaves but graph has {g.n} vertices")
    full = (1 << g.n) - 1
    width = 0
    for mask in tree.leaf_masks():
        width = max(width, cut_rank_masks(g.adj, mask, full ^ mask))
    return width


def exact_rankwidth(
    g: Graph,
    cap: int = DEFAULT_EXACT_CAP,
    prune: bool = True,
) -> tuple[int, RankDecomposition | None]:
    """Exact rank-width with a witnessing decomposition.

    The witness is the first optimal tree in enumeration order, so repeated
    runs (and pruned vs. unpruned runs) agree. Graphs with fewer than two
    vertices have rank-width 0 and no tree; ``None`` stands in for the
    witness there.

    Raises SizeLimitError when ``g.n`` exceeds ``cap`` ((2n-5)!! trees make
    larger searches infeasible); use :func:`greedy_decomposition` for an
    upper bound instead.
    """
    if g.n > cap:
        raise SizeLimitError(
            f"exact rank-width search limited to {cap} vertices, got {g.n}; "
            f"raise the cap or use greedy_decomposition"
        )
    if g.n < 2:
        return 0, None
    width, choices = _kernels.rankwidth_search(g.adj, g.n, prune)
    tree = tree_from_choices(g.n, choices)
    return width, RankDecomposition(tree, width)


def _caterpillar(order: Sequence[int]) -> SubcubicTree:
    """Caterpillar tree whose spine carries the leaves in the given order."""
    n = len(order)
    if n == 2:
        return SubcubicTree(2, ((order[0], order[1]),))
    edges = [(order[0], n), (order[1], n)]
    for k in range(2, n - 1):
        spine = n + k - 1
        edges.append((spine - 1, spine))
        edges.append((order[k], spine))
    edges.append((order[n - 1], 2 * n - 3))
    return SubcubicTree(n, tuple(edges))


def greedy_decomposition(g: Graph) -> RankDecomposition:
    """Upper-bound decomposition from a greedy linear vertex order.

    Builds a caterpillar: each step appends the unplaced vertex whose prefix
    cut-rank is smallest (ties to the smallest index). Valid for any n >= 2;
    the width never beats the exact optimum but is cheap to compute.
    """
    if g.n < 2:
        raise ValueError(f"need at least 2 vertices, got {g.n}")
    full = (1 << g.n) - 1
    placed_mask = 0
    order: list[int] = []
    for _ in range(g.n):
        best_v = -1
        best_rank = g.n + 1
        for v in range(g.n):
            if (placed_mask >> v) & 1:
                continue
            m = placed_mask | (1 << v)
            r = cut_rank_masks(g.adj, m, full ^ m)
            if r < best_rank:
                best_rank = r
                best_v = v
        order.append(best_v)
        placed_mask |= 1 << best_v
    tree = _caterpillar(order)
    return RankDecomposition(tree, decomposition_width(g, tree))
