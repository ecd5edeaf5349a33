from hypothesis import given

from deadlock_safety import (
    Limits,
    Network,
    OracleOutcome,
    State,
    Strength,
    apply_plan,
    find_deadlock_set,
    load_fixture,
    oracle_decide,
    search,
    verify_plan,
)

from helpers import generated


def test_fig1_safe_with_witness():
    network, state = load_fixture("fig1")
    result = oracle_decide(network, state)
    assert result.outcome is OracleOutcome.SAFE
    assert verify_plan(network, state, result.witness_plan)
    assert len(result.witness_plan) == 12


def test_fig2_bound():
    result = oracle_decide(*load_fixture("fig2"))
    assert result.outcome is OracleOutcome.BOUND_TO_DEADLOCK
    assert result.witness_plan is None


def test_fig3_bound():
    assert oracle_decide(*load_fixture("fig3")).outcome is OracleOutcome.BOUND_TO_DEADLOCK


def test_limits():
    result = oracle_decide(*load_fixture("fig3"), Limits(max_states=2))
    assert result.outcome is OracleOutcome.RESOURCE_LIMIT_EXCEEDED
    assert result.explored_states == 2


def test_empty_state_is_safe():
    network, _ = load_fixture("fig1")
    result = oracle_decide(network, State())
    assert result.outcome is OracleOutcome.SAFE and result.witness_plan == ()


class TestVerifyPlan:
    def test_empty_plan_on_empty_state(self):
        network, _ = load_fixture("fig1")
        assert verify_plan(network, State(), ())

    def test_empty_plan_on_fig1(self):
        assert not verify_plan(*load_fixture("fig1"), ())

    def test_infeasible_plan(self):
        network, state = load_fixture("fig1")
        plan = oracle_decide(network, state).witness_plan
        assert not verify_plan(network, state, plan[1:])


def test_safe_state_can_walk_into_strong_deadlock():
    # Moving A's item first fills B and C with items waiting on each other;
    # delivering C's item first frees the network.
    network = Network.build({"A": 1, "B": 1, "C": 1}, [("A", "B"), ("B", "C")])
    state = State.from_routes([("A", "B", "C"), ("C", "B")])
    assert oracle_decide(network, state).outcome is OracleOutcome.SAFE
    found = search(network, state, lambda s: find_deadlock_set(network, s, Strength.STRONG) is not None)
    assert found.found
    assert find_deadlock_set(network, found.final_state, Strength.STRONG).vertices == {"B", "C"}
    assert apply_plan(network, state, found.plan) == found.final_state


@given(generated(vertex_count=(2, 5), item_count=(0, 4)))
def test_memoization_does_not_change_outcome(instance):
    with_memo = oracle_decide(*instance)
    without = oracle_decide(*instance, memoize=False)
    assert with_memo.outcome is without.outcome
    assert with_memo.witness_plan == without.witness_plan


@given(generated())
def test_witness_is_replayable(instance):
    network, state = instance
    result = oracle_decide(network, state)
    if result.outcome is OracleOutcome.SAFE:
        for k in range(len(result.witness_plan) + 1):
            prefix_state = apply_plan(network, state, result.witness_plan[:k])
            assert oracle_decide(network, prefix_state).outcome is OracleOutcome.SAFE
        assert verify_plan(network, state, result.witness_plan)


@given(generated())
def test_deterministic(instance):
    assert oracle_decide(*instance) == oracle_decide(*instance)
