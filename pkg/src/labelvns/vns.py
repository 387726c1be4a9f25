"""Basic VNS, Complementary VNS and Intelligent VNS over label sets.

All three share the same skeleton: shake the incumbent by deleting ``q``
random labels, repair it with a local search, move on strict improvement
(``q = 1``) or widen the neighbourhood (``q += 1``), and stop the inner loop
once ``q`` passes ``q_max``.  Co-VNS restarts every outer iteration from a
greedy solution built only from labels the incumbent does not use; Int-VNS
builds that restart solution (and the feasibility repairs) with the
Boltzmann constructive, and adapts ``q_max`` reactively.

Randomness comes exclusively from a ``numpy.random.Generator`` backed by
PCG64 and seeded with ``SolverConfig.rng_seed``.
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass, field
from typing import AbstractSet, List, Optional, Tuple

import numpy as np

from .constructive import TemperatureSchedule, mvca, probabilistic_construct
from .exceptions import InputDomainError, UnsolvableInstanceError
from .graph import EdgeForest, LabelledGraph, LabelSet, extract_forest
from .problems import Evaluation, ProblemSpec, better_than, evaluate

GREEDY = "greedy"
PROBABILISTIC = "probabilistic"


class Variant(enum.Enum):
    BASIC_VNS = "basic"
    CO_VNS = "covns"
    INT_VNS = "intvns"


@dataclass(frozen=True)
class SolverConfig:
    variant: Variant = Variant.INT_VNS
    max_iterations: Optional[int] = None
    max_elapsed: Optional[float] = None  # seconds
    rng_seed: int = 0

    def __post_init__(self):
        if self.max_iterations is None and self.max_elapsed is None:
            raise InputDomainError("at least one of max_iterations / max_elapsed must be bounded")
        if self.max_iterations is not None and self.max_iterations < 1:
            raise InputDomainError("max_iterations must be positive")
        if self.max_elapsed is not None and self.max_elapsed <= 0:
            raise InputDomainError("max_elapsed must be positive")
        if not 0 <= self.rng_seed < 2**64:
            raise InputDomainError("rng_seed must be a 64-bit unsigned integer")


@dataclass
class SearchState:
    best: LabelSet
    best_eval: Evaluation
    incumbent: LabelSet
    incumbent_eval: Evaluation
    q: int
    q_max: int
    iteration: int
    rng: np.random.Generator


@dataclass(frozen=True)
class SolveResult:
    labels: LabelSet
    evaluation: Evaluation
    forest: EdgeForest
    iterations_used: int
    wall_time: float  # seconds
    trace: Tuple[Tuple[int, Evaluation], ...] = ()


@dataclass
class SearchLog:
    """Optional event log filled in by :func:`solve`.

    ``shakes`` holds ``(q, q_max)`` at every shake, ``complementary`` and
    ``local_search`` hold ``(input, output)`` label-set pairs, and
    ``qmax_updates`` holds ``(iteration, q_max, |best|)`` after every
    reactive update.
    """
    shakes: List[Tuple[int, int]] = field(default_factory=list)
    complementary: List[Tuple[LabelSet, LabelSet]] = field(default_factory=list)
    local_search: List[Tuple[LabelSet, LabelSet]] = field(default_factory=list)
    qmax_updates: List[Tuple[int, int, int]] = field(default_factory=list)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_initial(graph: LabelledGraph, problem: ProblemSpec, rng: np.random.Generator) -> LabelSet:
    """Add labels in uniformly random order until the solution is feasible.

    For kLSF construction stops at the budget, or earlier once connected.
    """
    problem.check_graph(graph)
    if problem.is_mlst and not graph.is_connected(graph.all_labels):
        raise UnsolvableInstanceError("graph is disconnected even with every label; no spanning tree exists")
    current = set()
    count = graph.component_count(current)
    for label in rng.permutation(graph.label_count):
        if problem.is_done(len(current), count):
            break
        current.add(int(label))
        count = graph.component_count(current)
    return frozenset(current)


def shake(incumbent: AbstractSet[int], q: int, rng: np.random.Generator) -> LabelSet:
    """Delete ``min(q, |incumbent|)`` distinct labels chosen uniformly at random."""
    members = sorted(incumbent)
    k = min(q, len(members))
    if k == 0:
        return frozenset(members)
    drop = set(rng.choice(len(members), size=k, replace=False).tolist())
    return frozenset(c for i, c in enumerate(members) if i not in drop)


def _construct(graph, allowed, problem, start, mode, schedule, rng) -> LabelSet:
    if mode == PROBABILISTIC:
        return probabilistic_construct(graph, allowed, problem, start, schedule, rng)
    if mode == GREEDY:
        return mvca(graph, allowed, problem, start)
    raise InputDomainError(f"unknown construction mode {mode!r}")


def complementary(graph: LabelledGraph, incumbent: AbstractSet[int], problem: ProblemSpec,
                  mode: str, schedule: TemperatureSchedule, rng: np.random.Generator) -> LabelSet:
    """Build a solution using only labels absent from ``incumbent``.

    The result may be infeasible when the complementary space is too poor;
    it is empty when the incumbent already uses every label.
    """
    allowed = graph.all_labels - graph.check_labels(incumbent)
    if not allowed:
        return frozenset()
    return _construct(graph, allowed, problem, frozenset(), mode, schedule, rng)


def _drop_redundant(graph: LabelledGraph, labels: LabelSet, problem: ProblemSpec) -> LabelSet:
    current = labels
    current_eval = evaluate(graph, current, problem)
    changed = True
    while changed:
        changed = False
        for label in sorted(current, reverse=True):
            trial = current - {label}
            trial_eval = evaluate(graph, trial, problem)
            if not better_than(current_eval, trial_eval, problem):
                current, current_eval = trial, trial_eval
                changed = True
    return current


def local_search(graph: LabelledGraph, candidate: AbstractSet[int], problem: ProblemSpec,
                 mode: str, schedule: TemperatureSchedule, rng: np.random.Generator) -> LabelSet:
    """Repair, then prune, then (kLSF only) greedily refill a candidate.

    MLST candidates are first completed until connected using ``mode``;
    over-budget kLSF candidates lose random labels down to the budget.
    Labels are then dropped, highest id first so ties keep the smaller ids,
    repeating passes while any drop leaves the evaluation no worse.  kLSF
    finally adds greedy labels until the budget is used or the graph is
    connected.
    """
    current = graph.check_labels(candidate)
    if problem.is_mlst:
        if not graph.is_connected(current):
            current = _construct(graph, graph.all_labels, problem, current, mode, schedule, rng)
    elif len(current) > problem.label_budget:
        members = sorted(current)
        keep = rng.choice(len(members), size=problem.label_budget, replace=False)
        current = frozenset(members[i] for i in keep.tolist())
    current = _drop_redundant(graph, current, problem)
    if not problem.is_mlst:
        current = mvca(graph, graph.all_labels, problem, current)
    return current


def reactive_update_qmax(improved: bool, q_max: int, best: AbstractSet[int]) -> int:
    """Shrink ``q_max`` after an improvement, grow it otherwise.

    The result is clamped to ``[ceil(|best|/2), 2*|best|]`` (lower end at
    least 1).
    """
    size = len(best)
    lo = max(1, math.ceil(size / 2))
    hi = max(lo, 2 * size)
    q_max = q_max - 1 if improved else q_max + 1
    return min(max(q_max, lo), hi)


def solve(graph: LabelledGraph, problem: ProblemSpec, config: SolverConfig,
          log: Optional[SearchLog] = None) -> SolveResult:
    """Run the configured VNS variant and return the best solution found.

    One iteration is one outer pass: for Co-VNS and Int-VNS a complementary
    restart, then the shake / local search loop over ``q = 1..q_max``.
    """
    started = time.perf_counter()
    deadline = None if config.max_elapsed is None else started + config.max_elapsed
    variant = config.variant
    mode = PROBABILISTIC if variant is Variant.INT_VNS else GREEDY

    rng = make_rng(config.rng_seed)
    initial = random_initial(graph, problem, rng)
    initial_eval = evaluate(graph, initial, problem)
    state = SearchState(best=initial, best_eval=initial_eval, incumbent=initial,
                        incumbent_eval=initial_eval, q=1, q_max=max(1, len(initial)),
                        iteration=0, rng=rng)
    trace = [(0, initial_eval)]

    def out_of_time() -> bool:
        return deadline is not None and time.perf_counter() >= deadline

    while (config.max_iterations is None or state.iteration < config.max_iterations) and not out_of_time():
        if variant is not Variant.BASIC_VNS:
            source = state.best if variant is Variant.INT_VNS else state.incumbent
            schedule = TemperatureSchedule.from_best(len(state.best))
            restart = complementary(graph, source, problem, mode, schedule, rng)
            if log is not None:
                log.complementary.append((source, restart))
            state.incumbent = restart
            state.incumbent_eval = evaluate(graph, restart, problem)

        state.q = 1
        while state.q <= state.q_max:
            if log is not None:
                log.shakes.append((state.q, state.q_max))
            shaken = shake(state.incumbent, state.q, rng)
            schedule = TemperatureSchedule.from_best(len(state.best))
            candidate = local_search(graph, shaken, problem, mode, schedule, rng)
            if log is not None:
                log.local_search.append((shaken, candidate))
            candidate_eval = evaluate(graph, candidate, problem)
            if better_than(candidate_eval, state.incumbent_eval, problem):
                state.incumbent, state.incumbent_eval = candidate, candidate_eval
                state.q = 1
            else:
                state.q += 1
            if out_of_time():
                break

        state.iteration += 1
        improved = better_than(state.incumbent_eval, state.best_eval, problem)
        if improved:
            state.best, state.best_eval = state.incumbent, state.incumbent_eval
            trace.append((state.iteration, state.best_eval))
        if variant is Variant.INT_VNS:
            state.q_max = reactive_update_qmax(improved, state.q_max, state.best)
            if log is not None:
                log.qmax_updates.append((state.iteration, state.q_max, len(state.best)))

    return SolveResult(
        labels=state.best,
        evaluation=state.best_eval,
        forest=extract_forest(graph, state.best),
        iterations_used=state.iteration,
        wall_time=time.perf_counter() - started,
        trace=tuple(trace),
    )
