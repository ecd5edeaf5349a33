import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from deadlock_safety import (
    Justification,
    Network,
    NotATree,
    OracleOutcome,
    Outcome,
    State,
    Topology,
    decide,
    is_leaf_wise_tree,
    is_wise,
    load_fixture,
    oracle_decide,
    satisfies_relaxed_wise,
)

from helpers import generated


class TestWise:
    def test_fixtures(self):
        assert is_wise(*load_fixture("fig1"))
        assert not is_wise(*load_fixture("fig2"))

    @given(generated(capacity=(2, 3)))
    def test_always_wise_with_large_buffers(self, instance):
        assert is_wise(*instance)


class TestRelaxedWise:
    def test_fig2_fails(self):
        assert not satisfies_relaxed_wise(*load_fixture("fig2"))

    def test_fig3_fails(self):
        assert not satisfies_relaxed_wise(*load_fixture("fig3"))

    @given(generated())
    def test_wise_implies_relaxed(self, instance):
        if is_wise(*instance):
            assert satisfies_relaxed_wise(*instance)

    def test_occupied_leaf_nobody_targets(self):
        network = Network.build({"A": 1, "B": 2, "C": 1}, [("A", "B"), ("B", "C")])
        state = State.from_routes([("A", "B"), ("B", "C")])
        assert not is_wise(network, state)
        assert satisfies_relaxed_wise(network, state)


class TestLeafWise:
    def test_fig2_holds(self):
        assert is_leaf_wise_tree(*load_fixture("fig2"))

    def test_fig3_fails_at_internal_vertex(self):
        assert not is_leaf_wise_tree(*load_fixture("fig3"))

    def test_wise_tree(self):
        network, _ = load_fixture("fig2")
        assert is_leaf_wise_tree(network, State.from_routes([("C", "B", "A")]))

    def test_requires_tree(self):
        with pytest.raises(NotATree):
            is_leaf_wise_tree(*load_fixture("fig1"))


class TestDecide:
    def test_fig1_unknown(self):
        verdict = decide(*load_fixture("fig1"))
        assert verdict.outcome is Outcome.UNKNOWN
        assert verdict.justification is Justification.THEOREM_INAPPLICABLE

    def test_fig2_bound_by_tree_rule(self):
        verdict = decide(*load_fixture("fig2"))
        assert verdict.outcome is Outcome.BOUND_TO_DEADLOCK
        assert verdict.justification is Justification.WEAK_DEADLOCK_ON_TREE
        assert verdict.witness.vertices == {"A", "C", "E"}

    def test_fig3_unknown(self):
        assert decide(*load_fixture("fig3")).outcome is Outcome.UNKNOWN

    def test_strong_deadlock_first(self):
        network, _ = load_fixture("fig2")
        verdict = decide(network, State.from_routes([("A", "B"), ("B", "A")]))
        assert verdict.justification is Justification.STRONG_DEADLOCK_PRESENT
        assert verdict.witness.vertices == {"A", "B"}

    def test_large_buffers_strong_set_decides(self):
        network = Network.build({"A": 2, "B": 2}, [("A", "B")])
        verdict = decide(network, State.from_routes([("A", "B"), ("B", "A")] * 2))
        assert verdict.outcome is Outcome.BOUND_TO_DEADLOCK
        verdict = decide(network, State.from_routes([("A", "B"), ("B", "A")]))
        assert verdict.justification is Justification.NO_STRONG_DEADLOCK_ALL_BUFFERS_AT_LEAST_2

    def test_wise_tree_weak_only_set_bound(self):
        # The empty unit vertex hides the mutual wait from the plain digraph.
        network = Network.build({"A": 2, "u": 1, "C": 2}, [("A", "u"), ("u", "C")])
        state = State.from_routes([("A", "u", "C")] * 2 + [("C", "u", "A")] * 2)
        assert is_wise(network, state)
        verdict = decide(network, state)
        assert verdict.justification is Justification.WEAK_DEADLOCK_ON_TREE
        assert verdict.witness.vertices == {"A", "C"}
        assert oracle_decide(network, state).outcome is OracleOutcome.BOUND_TO_DEADLOCK

    def test_wise_without_weak_set_safe(self):
        network, _ = load_fixture("fig1")
        verdict = decide(network, State.from_routes([("A", "E", "B")] * 2))
        assert verdict.justification is Justification.NO_WEAK_DEADLOCK_WISE

    @given(generated())
    def test_sound_against_oracle(self, instance):
        verdict = decide(*instance)
        exact = oracle_decide(*instance).outcome
        if verdict.outcome is Outcome.SAFE:
            assert exact is OracleOutcome.SAFE
        elif verdict.outcome is Outcome.BOUND_TO_DEADLOCK:
            assert exact is OracleOutcome.BOUND_TO_DEADLOCK

    @given(generated(topologies=(Topology.TREE, Topology.LINE), force_wise=True))
    def test_wise_trees_decided(self, instance):
        assert decide(*instance).outcome is not Outcome.UNKNOWN

    @given(generated(capacity=(2, 3)))
    def test_large_buffers_decided(self, instance):
        assert decide(*instance).outcome is not Outcome.UNKNOWN

    @given(generated(), st.randoms(use_true_random=False))
    def test_relabeling_invariant(self, instance, rnd: random.Random):
        network, state = instance
        names = [f"x{i}" for i in range(len(network.vertices))]
        rnd.shuffle(names)
        mapping = dict(zip(network.vertices, names))
        before = decide(network, state)
        after = decide(network.relabel(mapping), state.relabel(mapping))
        assert (before.outcome, before.justification) == (after.outcome, after.justification)
        if before.witness is not None:
            assert after.witness.vertices == {mapping[v] for v in before.witness.vertices}
