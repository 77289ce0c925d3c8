"""Undirected weighted graphs, multilayer networks, and their matrix views.

Nodes are opaque string labels kept in first-appearance order; that order
fixes the dense index used by every matrix in the package, so results are
reproducible byte for byte. All types are immutable after construction and
every operation here is a pure function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DuplicateEdgeError,
    IsolatedNodeError,
    NonPositiveWeightError,
    SelfLoopError,
)

EdgeInput = "tuple[str, str] | tuple[str, str, float]"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with positive edge weights.

    ``nodes`` is the label tuple in first-appearance order; ``edges`` holds
    ``(u, v, weight)`` triples with endpoints ordered by node index. No
    self-loops, no duplicate unordered pairs, all weights > 0.
    """

    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str, float], ...]
    node_index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "node_index", {label: i for i, label in enumerate(self.nodes)}
        )

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset((u, v)) for u, v, _ in self.edges)

    def relabeled(self, mapping: dict[str, str]) -> "Graph":
        """Return a copy with every label replaced via ``mapping``."""
        nodes = tuple(mapping[x] for x in self.nodes)
        edges = tuple((mapping[u], mapping[v], w) for u, v, w in self.edges)
        return Graph(nodes, edges)


@dataclass(frozen=True)
class MultilayerNetwork:
    """Named layers over a shared actor universe.

    ``actors`` is the union of all layer node labels, ordered by first
    appearance across layers in layer order.
    """

    layers: tuple[tuple[str, Graph], ...]

    def __post_init__(self):
        names = [name for name, _ in self.layers]
        if len(set(names)) != len(names):
            raise ValueError(f"layer names must be unique, got {names}")

    @property
    def actors(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for _, g in self.layers:
            for label in g.nodes:
                seen.setdefault(label)
        return tuple(seen)

    @property
    def layer_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.layers)

    @property
    def intralayer_edge_count(self) -> int:
        return sum(g.edge_count for _, g in self.layers)


def build_graph(edge_list) -> Graph:
    """Build a graph from ``(u, v)`` or ``(u, v, weight)`` tuples.

    Node order is first appearance in the edge list. Rejects self-loops,
    duplicate unordered pairs, and non-positive weights.
    """
    order: dict[str, int] = {}
    seen_pairs: set[frozenset[str]] = set()
    edges: list[tuple[str, str, float]] = []
    for item in edge_list:
        if len(item) == 2:
            u, v = item
            w = 1.0
        else:
            u, v, w = item
            w = float(w)
        if not isinstance(u, str) or not isinstance(v, str) or not u or not v:
            raise ValueError(f"node labels must be nonempty strings, got {(u, v)!r}")
        if u == v:
            raise SelfLoopError(f"self-loop on node {u!r}")
        if w <= 0:
            raise NonPositiveWeightError(f"edge ({u!r}, {v!r}) has weight {w}")
        pair = frozenset((u, v))
        if pair in seen_pairs:
            raise DuplicateEdgeError(f"edge ({u!r}, {v!r}) appears more than once")
        seen_pairs.add(pair)
        order.setdefault(u, len(order))
        order.setdefault(v, len(order))
        if order[u] <= order[v]:
            edges.append((u, v, w))
        else:
            edges.append((v, u, w))
    return Graph(tuple(order), tuple(edges))


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Symmetric weight matrix with zero diagonal."""
    a = np.zeros((g.n, g.n))
    for u, v, w in g.edges:
        i, j = g.node_index[u], g.node_index[v]
        a[i, j] = w
        a[j, i] = w
    return a


def degree_vector(g: Graph) -> np.ndarray:
    """Row sums of the adjacency matrix.

    For unweighted graphs this is the integer degree; with weights it is the
    node strength.
    """
    return adjacency_matrix(g).sum(axis=1)


def transition_matrix(g: Graph) -> np.ndarray:
    """Column-stochastic hop matrix: entry (i, j) is weight(i,j) / degree(j)."""
    deg = degree_vector(g)
    _require_no_isolated(g, deg)
    return adjacency_matrix(g) / deg[np.newaxis, :]


def laplacian(g: Graph) -> np.ndarray:
    """Degree matrix minus adjacency matrix; symmetric positive semidefinite."""
    a = adjacency_matrix(g)
    return np.diag(a.sum(axis=1)) - a


def normalized_laplacian(g: Graph) -> np.ndarray:
    """Symmetrically degree-normalized Laplacian.

    Unit diagonal, eigenvalues in [0, 2]; requires every node to have
    positive degree.
    """
    deg = degree_vector(g)
    _require_no_isolated(g, deg)
    inv_sqrt = 1.0 / np.sqrt(deg)
    lap = laplacian(g)
    out = lap * inv_sqrt[:, np.newaxis] * inv_sqrt[np.newaxis, :]
    return (out + out.T) / 2.0


def flatten(m: MultilayerNetwork, aggregate: str = "binary") -> Graph:
    """Merge all layers into a single graph over the actor union.

    An edge is present iff it appears in at least one layer. ``binary`` gives
    every merged edge weight 1; ``sum`` adds the weights of all layers that
    contain it. Node order is first appearance across layers in layer order.
    """
    if aggregate not in ("binary", "sum"):
        raise ValueError(f"aggregate must be 'binary' or 'sum', got {aggregate!r}")
    order: dict[str, None] = {}
    for _, g in m.layers:
        for label in g.nodes:
            order.setdefault(label)
    index = {label: i for i, label in enumerate(order)}
    weights: dict[tuple[str, str], float] = {}
    first_seen: list[tuple[str, str]] = []
    for _, g in m.layers:
        for u, v, w in g.edges:
            key = (u, v) if index[u] <= index[v] else (v, u)
            if key not in weights:
                first_seen.append(key)
                weights[key] = 0.0
            weights[key] += w
    edges = tuple(
        (u, v, 1.0 if aggregate == "binary" else weights[(u, v)])
        for u, v in first_seen
    )
    return Graph(tuple(order), edges)


def connected_components(g: Graph) -> list[set[str]]:
    """Partition of the node set into connected components.

    Components are ordered by their first node's appearance order.
    """
    neighbors: dict[str, list[str]] = {label: [] for label in g.nodes}
    for u, v, _ in g.edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    seen: set[str] = set()
    components: list[set[str]] = []
    for start in g.nodes:
        if start in seen:
            continue
        queue = deque([start])
        seen.add(start)
        comp = {start}
        while queue:
            node = queue.popleft()
            for nxt in neighbors[node]:
                if nxt not in seen:
                    seen.add(nxt)
                    comp.add(nxt)
                    queue.append(nxt)
        components.append(comp)
    return components


def subgraph(g: Graph, labels: set[str]) -> Graph:
    """Induced subgraph on ``labels``, preserving relative node order."""
    nodes = tuple(x for x in g.nodes if x in labels)
    edges = tuple((u, v, w) for u, v, w in g.edges if u in labels and v in labels)
    return Graph(nodes, edges)


def drop_isolated_nodes(g: Graph) -> Graph:
    """Remove all degree-zero nodes."""
    touched = {u for u, _, _ in g.edges} | {v for _, v, _ in g.edges}
    return subgraph(g, touched)


def binarized(g: Graph) -> Graph:
    """Copy of the graph with every edge weight replaced by 1."""
    return Graph(g.nodes, tuple((u, v, 1.0) for u, v, _ in g.edges))


def _require_no_isolated(g: Graph, deg: np.ndarray) -> None:
    isolated = np.flatnonzero(deg == 0)
    if isolated.size:
        labels = [g.nodes[i] for i in isolated]
        raise IsolatedNodeError(f"isolated node(s): {labels}")
