"""Exhaustive ground truth for small instances."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exceptions import OracleLimitError, UnsolvableInstanceError
from .graph import LabelledGraph, LabelSet
from .problems import Evaluation, ProblemSpec, better_than, make_evaluation

MAX_ORACLE_LABELS = 24


@dataclass(frozen=True)
class OracleResult:
    optimum: LabelSet
    evaluation: Evaluation
    subsets_examined: int


def exact_solve(graph: LabelledGraph, problem: ProblemSpec) -> OracleResult:
    """Enumerate label subsets by increasing size, lexicographically within a size.

    MLST returns the first connected subset.  kLSF scans every subset within
    the budget and keeps the first strictly better one, so ties resolve to
    the lexicographically smallest sorted member list.
    """
    ell = graph.label_count
    if ell > MAX_ORACLE_LABELS:
        raise OracleLimitError(f"exact solver refuses {ell} labels (limit {MAX_ORACLE_LABELS})")
    problem.check_graph(graph)
    if problem.is_mlst and not graph.is_connected(graph.all_labels):
        raise UnsolvableInstanceError("graph is disconnected even with every label; no spanning tree exists")

    max_size = ell if problem.is_mlst else problem.label_budget
    examined = 0
    best = best_eval = None
    for size in range(max_size + 1):
        for subset in combinations(range(ell), size):
            examined += 1
            ev = make_evaluation(size, graph.component_count(subset), problem)
            if problem.is_mlst:
                if ev.feasible:
                    return OracleResult(frozenset(subset), ev, examined)
            elif best_eval is None or better_than(ev, best_eval, problem):
                best, best_eval = subset, ev
    return OracleResult(frozenset(best), best_eval, examined)
