"""Follower networks and detection of strong and weak deadlock sets.

The follower network has an arc ``u -> v`` whenever ``v`` is the next
vertex on some route stored at ``u``.  The wise follower network skips,
along each route, vertices that are empty unit-capacity transit points,
stopping at the destination at the latest.

A vertex set is a deadlock set when all its vertices are saturated and it
is closed under (wise) followers.  Such a set exists exactly when the free
vertices fail to dominate the transitive closure of the corresponding
network, and the undominated vertices form the largest one.
"""

from __future__ import annotations

import enum
from collections.abc import Collection, Iterable
from dataclasses import dataclass

from .model import Network, Route, State, VertexId


class Kind(enum.Enum):
    PLAIN = "plain"
    WISE = "wise"


class Strength(enum.Enum):
    STRONG = "strong"
    WEAK = "weak"

    @property
    def kind(self) -> Kind:
        return Kind.PLAIN if self is Strength.STRONG else Kind.WISE


@dataclass(frozen=True)
class FollowerDigraph:
    nodes: frozenset[VertexId]
    arcs: frozenset[tuple[VertexId, VertexId]]
    kind: Kind

    def successors(self, u: VertexId) -> list[VertexId]:
        return sorted(v for a, v in self.arcs if a == u)

    def sorted_arcs(self) -> list[tuple[VertexId, VertexId]]:
        return sorted(self.arcs)


@dataclass(frozen=True)
class DeadlockSet:
    vertices: frozenset[VertexId]
    strength: Strength

    def __str__(self) -> str:
        return "{" + ",".join(sorted(self.vertices)) + "}"


def free_vertices(network: Network, state: State) -> set[VertexId]:
    load = state.occupancy()
    return {v for v in network.vertices if load[v] < network.capacity[v]}


def _is_transit(network: Network, load, v: VertexId) -> bool:
    return network.capacity[v] == 1 and load[v] == 0


def wise_follower_of(network: Network, state: State, route: Route) -> VertexId:
    """First waypoint after the start that is the destination or not an empty unit buffer."""
    return _wise_index(network, state.occupancy(), route)[1]


def _wise_index(network: Network, load, route: Route) -> tuple[int, VertexId]:
    for i in range(1, len(route) - 1):
        if not _is_transit(network, load, route[i]):
            return i, route[i]
    return len(route) - 1, route[-1]


def wise_index(network: Network, state: State, route: Route) -> int:
    """Position of the wise follower on ``route`` (1 when it is the follower)."""
    return _wise_index(network, state.occupancy(), route)[0]


def build_follower_digraph(network: Network, state: State, kind: Kind) -> FollowerDigraph:
    if kind is Kind.PLAIN:
        arcs = {(u, route[1]) for u, route, _ in state.entries}
    else:
        load = state.occupancy()
        arcs = {(u, _wise_index(network, load, route)[1]) for u, route, _ in state.entries}
    return FollowerDigraph(frozenset(network.vertices), frozenset(arcs), kind)


def transitive_closure(digraph: FollowerDigraph) -> FollowerDigraph:
    """Arc ``u -> v`` for every non-empty directed path from ``u`` to ``v``."""
    succ: dict[VertexId, list[VertexId]] = {v: [] for v in digraph.nodes}
    for u, v in digraph.arcs:
        succ[u].append(v)
    closure: set[tuple[VertexId, VertexId]] = set()
    for start in digraph.nodes:
        seen: set[VertexId] = set()
        stack = list(succ[start])
        while stack:
            w = stack.pop()
            if w in seen:
                continue
            seen.add(w)
            stack.extend(succ[w])
        closure.update((start, w) for w in seen)
    return FollowerDigraph(digraph.nodes, frozenset(closure), digraph.kind)


def undominated(digraph: FollowerDigraph, targets: Collection[VertexId]) -> set[VertexId]:
    """Nodes outside ``targets`` with no arc into ``targets``."""
    dominated = set(targets)
    dominated.update(u for u, v in digraph.arcs if v in targets)
    return set(digraph.nodes) - dominated


def find_deadlock_set(network: Network, state: State, strength: Strength) -> DeadlockSet | None:
    """The largest deadlock set of the given strength, or ``None`` if there is none."""
    closure = transitive_closure(build_follower_digraph(network, state, strength.kind))
    stuck = undominated(closure, free_vertices(network, state))
    return DeadlockSet(frozenset(stuck), strength) if stuck else None


def is_deadlock_set(network: Network, state: State, vertices: Iterable[VertexId], strength: Strength) -> bool:
    """Check the deadlock-set definition directly: saturated and closed under followers."""
    members = set(vertices)
    if not members:
        return False
    load = state.occupancy()
    if any(load[v] != network.capacity[v] for v in members):
        return False
    digraph = build_follower_digraph(network, state, strength.kind)
    return all(v in members for u, v in digraph.arcs if u in members)
