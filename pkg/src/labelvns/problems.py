"""MLST and kLSF objectives, and the total order every search component uses.

MLST wants the fewest labels that connect the graph.  kLSF wants the fewest
connected components using at most ``label_budget`` labels.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

from .exceptions import InputDomainError
from .graph import LabelledGraph


class ProblemKind(enum.Enum):
    MLST = "mlst"
    KLSF = "klsf"


@dataclass(frozen=True)
class ProblemSpec:
    kind: ProblemKind
    label_budget: Optional[int] = None

    def __post_init__(self):
        if self.kind is ProblemKind.KLSF:
            if self.label_budget is None or self.label_budget < 1:
                raise InputDomainError("kLSF needs a positive label budget")
        elif self.label_budget is not None:
            raise InputDomainError("MLST takes no label budget")

    @classmethod
    def mlst(cls) -> "ProblemSpec":
        return cls(ProblemKind.MLST)

    @classmethod
    def klsf(cls, label_budget: int) -> "ProblemSpec":
        return cls(ProblemKind.KLSF, label_budget)

    @property
    def is_mlst(self) -> bool:
        return self.kind is ProblemKind.MLST

    def check_graph(self, graph: LabelledGraph) -> None:
        if self.kind is ProblemKind.KLSF and self.label_budget > graph.label_count:
            raise InputDomainError(
                f"label budget {self.label_budget} exceeds label count {graph.label_count}")

    def is_done(self, label_count: int, component_count: int) -> bool:
        """Stopping rule shared by the constructive heuristics."""
        if component_count == 1:
            return True
        return self.kind is ProblemKind.KLSF and label_count >= self.label_budget


@dataclass(frozen=True)
class Evaluation:
    label_count: int
    component_count: int
    feasible: bool


def make_evaluation(label_count: int, component_count: int, problem: ProblemSpec) -> Evaluation:
    if problem.is_mlst:
        feasible = component_count == 1
    else:
        feasible = label_count <= problem.label_budget
    return Evaluation(label_count, component_count, feasible)


def evaluate(graph: LabelledGraph, labels: Iterable[int], problem: ProblemSpec) -> Evaluation:
    labels = graph.check_labels(labels)
    return make_evaluation(len(labels), graph.component_count(labels), problem)


def better_than(a: Evaluation, b: Evaluation, problem: ProblemSpec) -> bool:
    """True iff ``a`` is strictly better than ``b``.

    Feasibility dominates.  Feasible MLST solutions compare by label count;
    feasible kLSF solutions by (components, labels).  Infeasible MLST
    solutions compare by (components, labels), infeasible kLSF ones by
    label count.
    """
    if a.feasible != b.feasible:
        return a.feasible
    if problem.is_mlst:
        if a.feasible:
            return a.label_count < b.label_count
        return (a.component_count, a.label_count) < (b.component_count, b.label_count)
    if a.feasible:
        return (a.component_count, a.label_count) < (b.component_count, b.label_count)
    return a.label_count < b.label_count
