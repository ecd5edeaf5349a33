"""Classify states as safe, bound to deadlock, or undecided by polynomial rules.

The decision ladder, first applicable rule wins:

1. a strong deadlock set exists: bound to deadlock;
2. every buffer has at least two slots: safe;
3. the state is wise (or relaxed-wise) and has no weak deadlock set: safe;
4. the network is a tree, the state is wise or leaf-wise, and a weak
   deadlock set exists: bound to deadlock;
5. otherwise unknown.

``UNKNOWN`` is an honest answer; :mod:`deadlock_safety.oracle` settles such
states exactly when they are small enough.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .followers import DeadlockSet, Strength, find_deadlock_set, wise_follower_of
from .model import ModelError, Network, State, VertexId


class Outcome(enum.Enum):
    SAFE = "Safe"
    BOUND_TO_DEADLOCK = "BoundToDeadlock"
    UNKNOWN = "Unknown"


class Justification(enum.Enum):
    STRONG_DEADLOCK_PRESENT = "StrongDeadlockPresent"
    WEAK_DEADLOCK_ON_TREE = "WeakDeadlockOnTree"
    NO_WEAK_DEADLOCK_WISE = "NoWeakDeadlockWise"
    NO_STRONG_DEADLOCK_ALL_BUFFERS_AT_LEAST_2 = "NoStrongDeadlockAllBuffersAtLeast2"
    THEOREM_INAPPLICABLE = "TheoremInapplicable"


class NotATree(ModelError):
    pass


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    justification: Justification
    witness: DeadlockSet | None = None

    def __str__(self) -> str:
        text = f"{self.outcome.value} ({self.justification.value})"
        if self.witness is not None:
            text += f", witness {self.witness}"
        return text


def _unit_saturated(network: Network, state: State) -> list[VertexId]:
    load = state.occupancy()
    return [v for v in network.vertices if network.capacity[v] == 1 and load[v] == 1]


def is_wise(network: Network, state: State) -> bool:
    """No unit-capacity vertex holds an item."""
    return not _unit_saturated(network, state)


def satisfies_relaxed_wise(network: Network, state: State) -> bool:
    """No occupied unit-capacity vertex is the wise follower of a stored route."""
    blocked = set(_unit_saturated(network, state))
    if not blocked:
        return True
    return not any(wise_follower_of(network, state, route) in blocked for _, route, _ in state.entries)


def is_leaf_wise_tree(network: Network, state: State) -> bool:
    """Occupied unit-capacity vertices are all leaves of the tree.

    Raises:
        NotATree: the network is not a tree.
    """
    if not network.is_tree():
        raise NotATree("network is not a tree")
    return all(network.degree(v) == 1 for v in _unit_saturated(network, state))


def decide(network: Network, state: State) -> Verdict:
    strong = find_deadlock_set(network, state, Strength.STRONG)
    if strong is not None:
        return Verdict(Outcome.BOUND_TO_DEADLOCK, Justification.STRONG_DEADLOCK_PRESENT, strong)
    if all(b >= 2 for b in network.capacity.values()):
        return Verdict(Outcome.SAFE, Justification.NO_STRONG_DEADLOCK_ALL_BUFFERS_AT_LEAST_2)

    weak = find_deadlock_set(network, state, Strength.WEAK)
    wise = is_wise(network, state)
    if weak is None and (wise or satisfies_relaxed_wise(network, state)):
        return Verdict(Outcome.SAFE, Justification.NO_WEAK_DEADLOCK_WISE)
    if weak is not None and network.is_tree() and (wise or is_leaf_wise_tree(network, state)):
        return Verdict(Outcome.BOUND_TO_DEADLOCK, Justification.WEAK_DEADLOCK_ON_TREE, weak)
    return Verdict(Outcome.UNKNOWN, Justification.THEOREM_INAPPLICABLE)
