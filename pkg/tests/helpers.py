"""Shared test helpers.

The forest check here is deliberately written against a different graph
representation than the package (explicit adjacency lists, DFS component
count) so the two implementations can cross-validate each other.
"""

from __future__ import annotations

import random

from bbforest import BalancedBipartiteGraph, VertexSubset, from_rows


def forest_oracle(g: BalancedBipartiteGraph, s: VertexSubset) -> bool:
    """Acyclicity of the induced subgraph, via edges == vertices - components."""
    nodes = [("a", i) for i in range(g.n) if s.s1 >> i & 1]
    nodes += [("b", j) for j in range(g.n) if s.s2 >> j & 1]
    index = {v: i for i, v in enumerate(nodes)}
    adjacency: list[list[int]] = [[] for _ in nodes]
    edges = 0
    for side, i in nodes:
        if side != "a":
            continue
        for j in range(g.n):
            if g.adj1[i] >> j & 1 and ("b", j) in index:
                adjacency[index[("a", i)]].append(index[("b", j)])
                adjacency[index[("b", j)]].append(index[("a", i)])
                edges += 1
    seen = [False] * len(nodes)
    components = 0
    for start in range(len(nodes)):
        if seen[start]:
            continue
        components += 1
        stack = [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            for w in adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return edges == len(nodes) - components


def max_forest_oracle(g: BalancedBipartiteGraph) -> int:
    """Reference forest number by scanning all subsets, largest first."""
    total = 2 * g.n
    full1 = (1 << g.n) - 1
    for size in range(total, 0, -1):
        for bits in range(1 << total):
            if bits.bit_count() != size:
                continue
            s = VertexSubset(bits & full1, bits >> g.n)
            if forest_oracle(g, s):
                return size
    return 0


def random_bipartite(n: int, p: float, seed: int) -> BalancedBipartiteGraph:
    rng = random.Random(seed)
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if rng.random() < p:
                rows[i] |= 1 << j
    return from_rows(n, rows)
