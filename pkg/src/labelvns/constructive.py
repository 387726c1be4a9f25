"""Greedy (MVCA) and Boltzmann-randomised label-set construction."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import AbstractSet, List, Optional, Tuple

import numpy as np

from .exceptions import InputDomainError
from .graph import LabelledGraph, LabelSet
from .problems import ProblemSpec

# Rejected draws per step, as a multiple of the pool size, before falling
# back to the greedy-best label.
REDRAW_FACTOR = 10


@dataclass(frozen=True)
class TemperatureSchedule:
    current_temperature: float
    alpha: float

    @classmethod
    def from_best(cls, best_size: int) -> "TemperatureSchedule":
        """T0 = |best| and alpha = 1/|best|.

        An empty best set gives T = 0, i.e. purely greedy acceptance.
        """
        if best_size < 1:
            return cls(0.0, 1.0)
        return cls(float(best_size), 1.0 / best_size)


def cooling_step(schedule: TemperatureSchedule) -> TemperatureSchedule:
    return replace(schedule, current_temperature=schedule.alpha * schedule.current_temperature)


def acceptance_probability(delta: float, temperature: float) -> float:
    """Boltzmann acceptance ``exp(-delta / T)``; certain for non-positive delta."""
    if delta <= 0:
        return 1.0
    if temperature <= 0:
        return 0.0
    return math.exp(-delta / temperature)


def _check_start(graph: LabelledGraph, allowed: AbstractSet[int], start: AbstractSet[int]):
    allowed = graph.check_labels(allowed)
    start = graph.check_labels(start)
    if not start <= allowed:
        raise InputDomainError("start labels must be a subset of the allowed labels")
    return allowed, start


def _greedy_choice(graph: LabelledGraph, current: set, pool: List[int]) -> Tuple[int, int]:
    # pool is sorted, so min over (count, label) breaks ties by smallest id
    return min(zip(graph.extension_counts(current, pool), pool))


def mvca(graph: LabelledGraph, allowed: AbstractSet[int], problem: ProblemSpec,
         start: AbstractSet[int] = frozenset()) -> LabelSet:
    """Maximum Vertex Covering Algorithm.

    Starting from ``start``, keep adding the allowed label that leaves the
    fewest components until the problem's stopping rule holds or nothing is
    left to add.  The result can be infeasible if ``allowed`` is too poor.
    """
    allowed, start = _check_start(graph, allowed, start)
    current = set(start)
    pool = sorted(allowed - start)
    count = graph.component_count(current)
    while pool and not problem.is_done(len(current), count):
        count, label = _greedy_choice(graph, current, pool)
        current.add(label)
        pool.remove(label)
    return frozenset(current)


def probabilistic_construct(graph: LabelledGraph, allowed: AbstractSet[int], problem: ProblemSpec,
                            start: AbstractSet[int], schedule: TemperatureSchedule,
                            rng: np.random.Generator,
                            trace: Optional[list] = None) -> LabelSet:
    """Randomised MVCA with Boltzmann acceptance of worse labels.

    Each step draws a label uniformly from the remaining pool.  Its
    deterioration ``delta`` is its component count minus the best component
    count any remaining label would give.  ``delta == 0`` is accepted
    outright, otherwise with probability ``exp(-delta/T)``.  Rejected labels
    stay in the pool.  The schedule cools once per accepted label.

    If ``trace`` is a list, one ``(label, delta, temperature)`` tuple is
    appended per accepted label.
    """
    allowed, start = _check_start(graph, allowed, start)
    current = set(start)
    pool = sorted(allowed - start)
    count = graph.component_count(current)
    while pool and not problem.is_done(len(current), count):
        counts = graph.extension_counts(current, pool)
        best_count = min(counts)
        temperature = schedule.current_temperature
        chosen = None
        for _ in range(REDRAW_FACTOR * len(pool)):
            i = int(rng.integers(len(pool)))
            delta = counts[i] - best_count
            if delta == 0 or rng.random() < acceptance_probability(delta, temperature):
                chosen = i
                break
        if chosen is None:
            chosen = counts.index(best_count)
        label = pool.pop(chosen)
        count = counts[chosen]
        current.add(label)
        if trace is not None:
            trace.append((label, count - best_count, temperature))
        schedule = cooling_step(schedule)
    return frozenset(current)
