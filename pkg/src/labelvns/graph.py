"""Edge-labelled undirected graphs and label-induced subgraph queries.

A solution to either labelling problem is a set of labels; everything the
search needs to know about it comes from the subgraph keeping exactly the
edges whose label is in that set.  Label sets are plain ``frozenset`` objects
of dense integer ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import AbstractSet, Dict, FrozenSet, Iterable, List, Tuple

from .exceptions import InputDomainError

Edge = Tuple[int, int, int]
LabelSet = FrozenSet[int]

_CACHE_LIMIT = 1 << 16


class DisjointSet:
    """Union-find over ``0..n-1`` with path halving and union by size."""

    __slots__ = ("parent", "size", "count")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the sets holding ``a`` and ``b``; False if already merged."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True


@dataclass(frozen=True)
class LabelledGraph:
    """Immutable undirected graph whose every edge carries one label.

    ``edges`` is a tuple of ``(u, v, label)`` triples.  Parallel edges are
    allowed when their labels differ; self-loops are not.
    """

    node_count: int
    edges: Tuple[Edge, ...]
    label_count: int
    _cache: Dict[int, int] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.node_count < 1:
            raise InputDomainError(f"node_count must be positive, got {self.node_count}")
        if self.label_count < 1:
            raise InputDomainError(f"label_count must be positive, got {self.label_count}")
        edges = tuple((int(u), int(v), int(c)) for u, v, c in self.edges)
        seen = set()
        for i, (u, v, c) in enumerate(edges):
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise InputDomainError(f"edge {i}: endpoint out of range [0, {self.node_count})")
            if not 0 <= c < self.label_count:
                raise InputDomainError(f"edge {i}: label {c} out of range [0, {self.label_count})")
            if u == v:
                raise InputDomainError(f"edge {i}: self-loop on node {u}")
            key = (min(u, v), max(u, v), c)
            if key in seen:
                raise InputDomainError(f"edge {i}: duplicate edge {key}")
            seen.add(key)
        object.__setattr__(self, "edges", edges)

    def __getstate__(self):
        return (self.node_count, self.edges, self.label_count)

    def __setstate__(self, state):
        n, edges, ell = state
        object.__setattr__(self, "node_count", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "label_count", ell)
        object.__setattr__(self, "_cache", {})

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def all_labels(self) -> LabelSet:
        return frozenset(range(self.label_count))

    @cached_property
    def edges_by_label(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        buckets: List[List[Tuple[int, int]]] = [[] for _ in range(self.label_count)]
        for u, v, c in self.edges:
            buckets[c].append((u, v))
        return tuple(tuple(b) for b in buckets)

    def canonical(self) -> "LabelledGraph":
        """Same graph with endpoints ordered and edges sorted by (min, max, label)."""
        edges = sorted((min(u, v), max(u, v), c) for u, v, c in self.edges)
        return LabelledGraph(self.node_count, tuple(edges), self.label_count)

    def check_labels(self, labels: Iterable[int]) -> LabelSet:
        labels = frozenset(labels)
        for c in labels:
            if not (isinstance(c, int) and 0 <= c < self.label_count):
                raise InputDomainError(f"label {c!r} out of range [0, {self.label_count})")
        return labels

    def component_count(self, labels: AbstractSet[int]) -> int:
        """Number of connected components of the subgraph induced by ``labels``.

        Results are memoised per label set; the graph is immutable so the
        cache never goes stale.
        """
        mask = 0
        ell = self.label_count
        for c in labels:
            if not 0 <= c < ell:
                raise InputDomainError(f"label {c!r} out of range [0, {ell})")
            mask |= 1 << c
        cache = self._cache
        hit = cache.get(mask)
        if hit is not None:
            return hit
        dsu = DisjointSet(self.node_count)
        by_label = self.edges_by_label
        for c in labels:
            for u, v in by_label[c]:
                dsu.union(u, v)
        if len(cache) >= _CACHE_LIMIT:
            cache.clear()
        cache[mask] = dsu.count
        return dsu.count

    def extension_counts(self, labels: AbstractSet[int], candidates: Iterable[int]) -> List[int]:
        """``component_count(labels | {c})`` for every candidate ``c``.

        Memoised counts are reused.  For the rest, the partition of
        ``labels`` is built once and each candidate only merges its own
        edges over the component roots.
        """
        mask = 0
        for c in labels:
            mask |= 1 << c
        cache = self._cache
        candidates = list(candidates)
        out = [cache.get(mask | (1 << c)) for c in candidates]
        if None not in out:
            return out
        dsu = DisjointSet(self.node_count)
        by_label = self.edges_by_label
        for c in labels:
            for u, v in by_label[c]:
                dsu.union(u, v)
        find = dsu.find
        root = [find(x) for x in range(self.node_count)]
        base = dsu.count
        if len(cache) >= _CACHE_LIMIT:
            cache.clear()
        for i, c in enumerate(candidates):
            if out[i] is not None:
                continue
            parent: Dict[int, int] = {}
            merges = 0
            for u, v in by_label[c]:
                a, b = root[u], root[v]
                while a in parent:
                    a = parent[a]
                while b in parent:
                    b = parent[b]
                if a != b:
                    parent[a] = b
                    merges += 1
            out[i] = cache[mask | (1 << c)] = base - merges
        return out

    def is_connected(self, labels: AbstractSet[int]) -> bool:
        return self.component_count(labels) == 1


@dataclass(frozen=True)
class ComponentPartition:
    component_count: int
    assignment: Tuple[int, ...]  # node id -> representative node id


@dataclass(frozen=True)
class EdgeForest:
    edges: Tuple[int, ...]  # indices into the parent graph's edge list


def components(graph: LabelledGraph, labels: Iterable[int]) -> ComponentPartition:
    """Connected-component partition of the subgraph induced by ``labels``.

    Each node is mapped to the smallest node id of its component.
    """
    labels = graph.check_labels(labels)
    dsu = DisjointSet(graph.node_count)
    for u, v, c in graph.edges:
        if c in labels:
            dsu.union(u, v)
    smallest: Dict[int, int] = {}
    for node in range(graph.node_count):
        smallest.setdefault(dsu.find(node), node)
    assignment = tuple(smallest[dsu.find(node)] for node in range(graph.node_count))
    return ComponentPartition(dsu.count, assignment)


def hamming_distance(a: AbstractSet[int], b: AbstractSet[int]) -> int:
    """Size of the symmetric difference of two label sets."""
    return len(set(a) ^ set(b))


def extract_forest(graph: LabelledGraph, labels: Iterable[int]) -> EdgeForest:
    """Spanning forest of the induced subgraph.

    Edges are scanned in index order and kept iff they join two components,
    so the result is deterministic for a given edge order.
    """
    labels = graph.check_labels(labels)
    dsu = DisjointSet(graph.node_count)
    kept = [i for i, (u, v, c) in enumerate(graph.edges) if c in labels and dsu.union(u, v)]
    return EdgeForest(tuple(kept))
