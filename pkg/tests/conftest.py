"""Shared helpers: the small graph corpus and random-graph utilities."""

import itertools
import random

from gslogic import Graph, generate


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges, name=f"random({n})")


def small_corpus() -> list[Graph]:
    """Graphs with n <= 8 shared by the cut-rank, simulator, and acceptance
    suites. Mix of families, densities, and a couple of seeded random ones."""
    rng = random.Random(20240811)
    return [
        generate("path", 2),
        generate("path", 3),
        generate("path", 5),
        generate("path", 8),
        generate("cycle", 3),
        generate("cycle", 4),
        generate("cycle", 6),
        generate("cycle", 8),
        generate("grid", 2),
        generate("complete", 4),
        generate("complete", 5),
        generate("binary_tree", 1),
        generate("binary_tree", 2),
        generate("triangular", 2),
        generate("hexagonal", 2),
        Graph.from_edges(4, [], name="edgeless(4)"),
        random_graph(7, rng),
        random_graph(8, rng),
    ]


def all_graphs(n: int):
    """Every labeled simple graph on n vertices (2^binom(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
        yield Graph.from_edges(n, edges)
