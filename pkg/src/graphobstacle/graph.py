"""Simple undirected graphs, the standard families, and their Laplacians.

Vertices are 0-based internally. Every human-facing format (edge-list
text, JSON, CLI output) is 1-based.
"""
from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import ExactMatrix

__all__ = [
    "Graph",
    "GraphError",
    "GraphFamily",
    "build",
    "generate",
    "star_of",
    "attach_pendant",
    "delete_vertex",
    "is_connected",
    "laplacian",
    "random_connected",
    "from_edge_list_text",
    "to_edge_list_text",
    "from_json",
    "to_json",
]


class GraphError(ValueError):
    """Malformed graph input or invalid family parameters."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be positive, got {self.n}")
        for i, j in self.edges:
            if not (0 <= i < j < self.n):
                raise GraphError(f"edge ({i}, {j}) is not a normalized in-range pair")

    def neighbors(self, v: int) -> list[int]:
        return sorted({j for i, j in self.edges if i == v} | {i for i, j in self.edges if j == v})

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def build(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edge_list`` (0-based pairs) and return the graph on ``n`` vertices.

    Loops, duplicate edges (in either orientation) and out-of-range endpoints
    are rejected with a message naming the offending pair.
    """
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    seen: set[tuple[int, int]] = set()
    for pair in edge_list:
        if len(pair) != 2:
            raise GraphError(f"edge {tuple(pair)!r} is not a pair")
        i, j = int(pair[0]), int(pair[1])
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"endpoint out of range in edge ({i}, {j}) for n={n}")
        if i == j:
            raise GraphError(f"loop edge ({i}, {j})")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise GraphError(f"duplicate edge ({i}, {j})")
        seen.add(key)
    return Graph(n, frozenset(seen))


@dataclass(frozen=True)
class GraphFamily:
    """One of ``path``, ``cycle``, ``complete``, ``kbip`` with its parameters."""

    tag: str
    params: tuple[int, ...]

    def __post_init__(self):
        minimum = {"path": (1,), "cycle": (3,), "complete": (1,), "kbip": (1, 1)}
        if self.tag not in minimum:
            raise GraphError(f"unknown graph family {self.tag!r}")
        lows = minimum[self.tag]
        if len(self.params) != len(lows):
            raise GraphError(f"{self.tag} takes {len(lows)} parameter(s), got {len(self.params)}")
        for p, lo in zip(self.params, lows):
            if not isinstance(p, int) or p < lo:
                raise GraphError(f"{self.tag} parameter {p!r} must be an integer >= {lo}")

    @classmethod
    def path(cls, n: int) -> "GraphFamily":
        return cls("path", (n,))

    @classmethod
    def cycle(cls, n: int) -> "GraphFamily":
        return cls("cycle", (n,))

    @classmethod
    def complete(cls, n: int) -> "GraphFamily":
        return cls("complete", (n,))

    @classmethod
    def complete_bipartite(cls, m: int, n: int) -> "GraphFamily":
        return cls("kbip", (m, n))

    @property
    def order(self) -> int:
        return sum(self.params)

    def __str__(self) -> str:
        return f"{self.tag}:{','.join(map(str, self.params))}"


def generate(family: GraphFamily) -> Graph:
    tag, params = family.tag, family.params
    if tag == "path":
        (n,) = params
        return build(n, [(i, i + 1) for i in range(n - 1)])
    if tag == "cycle":
        (n,) = params
        return build(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])
    if tag == "complete":
        (n,) = params
        return build(n, combinations(range(n), 2))
    m, n = params
    return build(m + n, [(a, b) for a in range(m) for b in range(m, m + n)])


def star_of(g: Graph) -> Graph:
    """Add an apex vertex (index ``g.n``) adjacent to every original vertex."""
    apex = g.n
    return Graph(g.n + 1, g.edges | {(v, apex) for v in range(g.n)})


def attach_pendant(g: Graph, v: int) -> Graph:
    """Add a new vertex ``g.n`` joined only to ``v``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    return Graph(g.n + 1, g.edges | {(v, g.n)})


def delete_vertex(g: Graph, v: int) -> tuple[Graph, list[int]]:
    """Remove ``v``; returns the smaller graph and the old index of each new vertex."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    if g.n == 1:
        raise GraphError("cannot delete the only vertex")
    old = [u for u in range(g.n) if u != v]
    new_index = {u: k for k, u in enumerate(old)}
    edges = {(new_index[i], new_index[j]) for i, j in g.edges if v not in (i, j)}
    return Graph(g.n - 1, frozenset(edges)), old


def is_connected(g: Graph) -> bool:
    adjacency: list[list[int]] = [[] for _ in range(g.n)]
    for i, j in g.edges:
        adjacency[i].append(j)
        adjacency[j].append(i)
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return all(seen)


def laplacian(g: Graph) -> ExactMatrix:
    rows = [[0] * g.n for _ in range(g.n)]
    for i, j in g.edges:
        rows[i][j] = rows[j][i] = -1
        rows[i][i] += 1
        rows[j][j] += 1
    return ExactMatrix.from_rows(rows)


def random_connected(n: int, rng: random.Random, extra_edge_prob: float = 0.3) -> Graph:
    """Random spanning tree on ``n`` vertices plus each other pair with ``extra_edge_prob``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        edges.add((min(a, b), max(a, b)))
    for pair in combinations(range(n), 2):
        if pair not in edges and rng.random() < extra_edge_prob:
            edges.add(pair)
    return Graph(n, frozenset(edges))


# ---------------------------------------------------------------- I/O

def to_edge_list_text(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{i + 1} {j + 1}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise GraphError(f"expected header 'n <count>', got {lines[0]!r}")
    try:
        n = int(head[1])
        pairs = []
        for ln in lines[1:]:
            fields = ln.split()
            if len(fields) != 2:
                raise GraphError(f"expected 'i j' pair, got {ln!r}")
            pairs.append((int(fields[0]) - 1, int(fields[1]) - 1))
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    return build(n, pairs)


def to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[i + 1, j + 1] for i, j in g.sorted_edges()]}


def from_json(data: dict | str) -> Graph:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        n = data["n"]
        edges = data["edges"]
    except (KeyError, TypeError):
        raise GraphError("graph JSON needs 'n' and 'edges'") from None
    if not isinstance(n, int):
        raise GraphError(f"'n' must be an integer, got {n!r}")
    return build(n, [(int(i) - 1, int(j) - 1) for i, j in edges])
