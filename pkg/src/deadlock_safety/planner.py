"""Freeing plans for wise states without weak deadlock sets.

Each step advances one item from its vertex straight to its wise follower,
crossing only empty unit-capacity vertices on the way, and is chosen so
that the resulting state is again wise (or relaxed-wise) with no weak
deadlock set.  Every hop lowers the potential by one, so the plan empties
the network after exactly ``potential(state)`` single-edge moves.

For relaxed-wise states that are not wise a single advance does not
always keep the state relaxed-wise; the planner then bridges to the next
such state by bounded exhaustive search.

Plans are listed move by move.  Their length equals the potential, which
grows with the number of items and is not polynomial in the instance
description when many identical items are present.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decide import is_wise, satisfies_relaxed_wise
from .followers import Strength, find_deadlock_set, free_vertices, wise_index
from .model import ModelError, Move, MovePlan, Network, Route, State, VertexId, apply_plan, potential
from .oracle import Limits, search


class WiseFollowerSaturated(ModelError):
    pass


class NoSafeStep(ModelError):
    pass


class PreconditionViolated(ModelError):
    pass


@dataclass(frozen=True)
class WiseAdvance:
    source: VertexId
    route: Route
    target: VertexId
    hops: MovePlan


def expand_wise_advance(network: Network, state: State, route: Route) -> WiseAdvance:
    """Single-edge moves carrying one item of ``route`` to its wise follower.

    Raises:
        WiseFollowerSaturated: the wise follower has no free slot.
    """
    k = wise_index(network, state, route)
    target = route[k]
    if state.sigma(target) >= network.capacity[target]:
        raise WiseFollowerSaturated(f"wise follower {target!r} of {route} is saturated")
    hops = tuple(Move(route[i], route[i:], route[i + 1]) for i in range(k))
    return WiseAdvance(route[0], route, target, hops)


def _is_wiseish(network: Network, state: State) -> bool:
    return is_wise(network, state) or satisfies_relaxed_wise(network, state)


def is_plannable(network: Network, state: State) -> bool:
    return _is_wiseish(network, state) and find_deadlock_set(network, state, Strength.WEAK) is None


def _candidates(network: Network, state: State) -> list[tuple[VertexId, VertexId, Route]]:
    free = free_vertices(network, state)
    found = []
    for u, route, _ in state.entries:
        target = route[wise_index(network, state, route)]
        if target in free:
            found.append((target, u, route))
    return sorted(found)


def _safe_step(network: Network, state: State) -> tuple[WiseAdvance, State]:
    if state.is_empty():
        raise NoSafeStep("state is empty")
    for _, _, route in _candidates(network, state):
        advance = expand_wise_advance(network, state, route)
        after = apply_plan(network, state, advance.hops)
        if is_plannable(network, after):
            return advance, after
    raise NoSafeStep("no advance keeps the state wise and free of weak deadlock sets")


def select_safe_step(network: Network, state: State) -> WiseAdvance:
    """Pick the first advance into a free wise follower that keeps the state plannable.

    Candidates are ordered by target vertex, then source vertex, then route.

    Raises:
        NoSafeStep: no candidate passes, which only happens when the
            preconditions (wise or relaxed-wise, no weak deadlock set,
            non-empty) do not hold.
    """
    return _safe_step(network, state)[0]


def _bridge(network: Network, state: State, limits: Limits) -> tuple[MovePlan, State]:
    start = state
    result = search(network, state, lambda s: s != start and is_plannable(network, s), limits)
    if not result.found:
        raise NoSafeStep("no reachable wise or relaxed-wise state without weak deadlock sets")
    return result.plan, result.final_state


def segments(network: Network, state: State, limits: Limits = Limits()) -> list[tuple[MovePlan, State]]:
    """Successive pieces of a freeing plan, each with the state it ends in.

    Normally each piece is the hops of one :class:`WiseAdvance`.  From a
    relaxed-wise state that is not wise, no single advance may keep the
    state plannable; the piece is then the first move sequence found
    by depth-first search within ``limits`` that reaches a plannable state.
    Every returned state is wise or relaxed-wise with no weak deadlock set.

    Raises:
        PreconditionViolated: the state is not wise or relaxed-wise, or it
            has a weak deadlock set.
        NoSafeStep: a bridging search failed within ``limits``.
    """
    if not _is_wiseish(network, state):
        raise PreconditionViolated("state is neither wise nor relaxed-wise")
    if find_deadlock_set(network, state, Strength.WEAK) is not None:
        raise PreconditionViolated("state has a weak deadlock set")
    pieces = []
    while potential(state) > 0:
        try:
            advance, state = _safe_step(network, state)
            pieces.append((advance.hops, state))
        except NoSafeStep:
            if is_wise(network, state):
                raise
            moves, state = _bridge(network, state, limits)
            pieces.append((moves, state))
    return pieces


def freeing_plan(network: Network, state: State, limits: Limits = Limits()) -> MovePlan:
    """Single-edge moves that deliver every item; see :func:`segments`."""
    return tuple(move for moves, _ in segments(network, state, limits) for move in moves)
