import pytest
from hypothesis import given, strategies as st

from labelvns import Evaluation, InputDomainError, LabelledGraph, ProblemSpec, better_than, evaluate

from conftest import labelled_graphs, label_subsets

MLST = ProblemSpec.mlst()


def test_evaluate_examples(triangle, two_pairs):
    assert evaluate(triangle, {0}, MLST) == Evaluation(1, 1, True)
    assert evaluate(triangle, set(), MLST) == Evaluation(0, 3, False)
    assert evaluate(two_pairs, {0, 1}, ProblemSpec.klsf(1)) == Evaluation(2, 2, False)


def test_better_than_examples():
    assert better_than(Evaluation(2, 1, True), Evaluation(3, 1, True), MLST)
    assert better_than(Evaluation(3, 2, True), Evaluation(3, 3, True), ProblemSpec.klsf(3))
    assert better_than(Evaluation(4, 1, True), Evaluation(2, 2, False), MLST)


def test_better_than_infeasible_orders():
    assert better_than(Evaluation(5, 2, False), Evaluation(1, 3, False), MLST)
    assert better_than(Evaluation(3, 9, False), Evaluation(4, 1, False), ProblemSpec.klsf(2))


@pytest.mark.parametrize("kwargs", [
    dict(kind=ProblemSpec.mlst().kind, label_budget=2),
    dict(kind=ProblemSpec.klsf(1).kind, label_budget=None),
    dict(kind=ProblemSpec.klsf(1).kind, label_budget=0),
])
def test_problem_spec_validation(kwargs):
    with pytest.raises(InputDomainError):
        ProblemSpec(**kwargs)


def test_budget_above_label_count_rejected(two_pairs):
    with pytest.raises(InputDomainError):
        ProblemSpec.klsf(3).check_graph(two_pairs)


evaluations = st.builds(Evaluation, st.integers(0, 6), st.integers(1, 6), st.booleans())
problems = st.sampled_from([MLST, ProblemSpec.klsf(2)])


@given(evaluations, evaluations, evaluations, problems)
def test_better_than_is_strict_weak_order(a, b, c, problem):
    assert not better_than(a, a, problem)
    if better_than(a, b, problem):
        assert not better_than(b, a, problem)
    if better_than(a, b, problem) and better_than(b, c, problem):
        assert better_than(a, c, problem)
    # incomparability is transitive
    inc = lambda x, y: not better_than(x, y, problem) and not better_than(y, x, problem)
    if inc(a, b) and inc(b, c):
        assert inc(a, c)


@given(labelled_graphs())
def test_full_set_feasible_on_connected_graph(g):
    if g.component_count(g.all_labels) == 1:
        assert evaluate(g, g.all_labels, MLST).feasible


@given(st.data())
def test_klsf_within_budget_is_feasible(data):
    g = data.draw(labelled_graphs())
    k = data.draw(st.integers(1, g.label_count))
    labels = data.draw(label_subsets(g.label_count).filter(lambda s: len(s) <= k))
    assert evaluate(g, labels, ProblemSpec.klsf(k)).feasible
