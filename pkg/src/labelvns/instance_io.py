"""Plain-text instance files and the seeded random instance generator.

File format::

    n m l
    u v c        (m lines, 0 <= u, v < n, u != v, 0 <= c < l)

Fields are base-10 integers separated by single spaces, every line ends
with a newline, and there are no comments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from .exceptions import (DuplicateEdgeError, IdOutOfRangeError, InputDomainError,
                         MalformedLineError, SelfLoopError)
from .graph import LabelledGraph


def _ints(line: str, lineno: int, what: str):
    parts = line.split(" ")
    if len(parts) != 3 or not all(p.isdigit() and p.isascii() for p in parts):
        raise MalformedLineError(lineno, f"expected {what} as three non-negative integers, got {line!r}")
    return tuple(int(p) for p in parts)


def parse_instance(text: str) -> LabelledGraph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MalformedLineError(1, "empty instance")
    n, m, ell = _ints(lines[0], 1, "header 'n m l'")
    if n < 1 or ell < 1 or m < 1:
        raise MalformedLineError(1, "n, m and l must all be positive")
    if len(lines) - 1 < m:
        raise MalformedLineError(len(lines) + 1, f"header announces {m} edges, found {len(lines) - 1}")
    if len(lines) - 1 > m:
        raise MalformedLineError(m + 2, f"unexpected line after the {m} announced edges")
    edges = []
    seen = {}
    for lineno, line in enumerate(lines[1:], start=2):
        u, v, c = _ints(line, lineno, "edge 'u v c'")
        if u >= n or v >= n:
            raise IdOutOfRangeError(lineno, f"node id out of range [0, {n})")
        if c >= ell:
            raise IdOutOfRangeError(lineno, f"label id out of range [0, {ell})")
        if u == v:
            raise SelfLoopError(lineno, f"self-loop on node {u}")
        key = (min(u, v), max(u, v), c)
        if key in seen:
            raise DuplicateEdgeError(lineno, f"duplicate of the edge on line {seen[key]}")
        seen[key] = lineno
        edges.append((u, v, c))
    return LabelledGraph(n, tuple(edges), ell)


def write_instance(graph: LabelledGraph) -> str:
    if graph.edge_count < 1:
        raise InputDomainError("instance format needs at least one edge")
    canon = graph.canonical()
    out = [f"{canon.node_count} {canon.edge_count} {canon.label_count}"]
    out.extend(f"{u} {v} {c}" for u, v, c in canon.edges)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class GeneratorParams:
    node_count: int
    label_count: int
    edge_density: float
    rng_seed: int = 0

    @property
    def edge_target(self) -> int:
        """round(d * n(n-1)/2), halves rounded up."""
        return math.floor(self.edge_density * self.node_count * (self.node_count - 1) / 2 + 0.5)

    def validate(self) -> None:
        if self.node_count < 2:
            raise InputDomainError("node_count must be at least 2")
        if self.label_count < 1:
            raise InputDomainError("label_count must be at least 1")
        if not 0 < self.edge_density <= 1:
            raise InputDomainError("edge_density must lie in (0, 1]")
        if self.edge_target < 1:
            raise InputDomainError("density too low: the instance would have no edges")
        if not 0 <= self.rng_seed < 2**64:
            raise InputDomainError("rng_seed must be a 64-bit unsigned integer")


def _sample(params: GeneratorParams, rng: np.random.Generator) -> LabelledGraph:
    n, ell, m = params.node_count, params.label_count, params.edge_target
    pairs = list(combinations(range(n), 2))
    chosen = rng.choice(len(pairs), size=m, replace=False)
    covered = min(m, ell)
    labels = list(range(covered)) + rng.integers(0, ell, size=m - covered).tolist()
    edges = [(*pairs[i], c) for i, c in zip(chosen.tolist(), labels)]
    return LabelledGraph(n, tuple(edges), ell).canonical()


def generate(params: GeneratorParams) -> LabelledGraph:
    """Random instance with m = round(d n(n-1)/2) distinct node pairs.

    The first min(m, l) sampled edges get labels 0, 1, ... so every label
    occurs when m >= l; the rest get uniform labels.  Edges come back in
    canonical order.
    """
    params.validate()
    return _sample(params, np.random.Generator(np.random.PCG64(params.rng_seed)))


def generate_connected(params: GeneratorParams, max_attempts: int = 1000):
    """Resample from the same stream until the full label set connects the graph.

    Returns ``(graph, attempts)``; the graph is None if every attempt failed.
    """
    params.validate()
    rng = np.random.Generator(np.random.PCG64(params.rng_seed))
    graph: Optional[LabelledGraph] = None
    for attempt in range(1, max_attempts + 1):
        graph = _sample(params, rng)
        if graph.is_connected(graph.all_labels):
            return graph, attempt
    return None, max_attempts
