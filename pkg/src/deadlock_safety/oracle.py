"""Exact safety decisions by exhaustive search over feasible moves.

A state is safe exactly when the empty state can be reached: every move
lowers the potential by one, so any maximal move sequence either empties
the network or stops at a non-empty state with no feasible move, and such
a state always contains a strong deadlock set.

The move graph is acyclic for the same reason, which makes depth-first
search with a set of already-expanded states sound.  States are memoized
by their canonical ``(vertex, route, count)`` encoding.  The search is
exponential in general and meant for small instances.
"""

from __future__ import annotations

import enum
import time
from collections.abc import Callable
from dataclasses import dataclass

from .model import Move, MovePlan, Network, State, _shift, apply_plan, feasible_moves

CanonicalState = tuple[tuple[str, tuple[str, ...], int], ...]

DEFAULT_MAX_STATES = 1_000_000
DEFAULT_MAX_TIME = 60.0


class OracleOutcome(enum.Enum):
    SAFE = "Safe"
    BOUND_TO_DEADLOCK = "BoundToDeadlock"
    RESOURCE_LIMIT_EXCEEDED = "ResourceLimitExceeded"


@dataclass(frozen=True)
class Limits:
    max_states: int = DEFAULT_MAX_STATES
    max_time: float = DEFAULT_MAX_TIME


@dataclass(frozen=True)
class OracleResult:
    outcome: OracleOutcome
    explored_states: int
    witness_plan: MovePlan | None = None


@dataclass(frozen=True)
class SearchResult:
    found: bool
    exhausted_limits: bool
    explored_states: int
    plan: MovePlan | None = None
    final_state: State | None = None


def canonical_state(state: State) -> CanonicalState:
    return state.entries


def search(
    network: Network,
    state: State,
    goal: Callable[[State], bool],
    limits: Limits = Limits(),
    memoize: bool = True,
) -> SearchResult:
    """Depth-first search for a reachable state satisfying ``goal``.

    Moves are expanded in :func:`feasible_moves` order, so the returned
    plan is deterministic for fixed inputs and limits.
    """
    deadline = time.monotonic() + limits.max_time
    seen: set[CanonicalState] = set()
    explored = 0
    path: list[Move] = []
    stack: list[tuple[State, list[Move]]] = []

    def enter(s: State) -> bool:
        nonlocal explored
        explored += 1
        if memoize:
            seen.add(canonical_state(s))
        if goal(s):
            return True
        stack.append((s, feasible_moves(network, s)[::-1]))
        return False

    if enter(state):
        return SearchResult(True, False, explored, (), state)
    while stack:
        if explored >= limits.max_states or time.monotonic() > deadline:
            return SearchResult(False, True, explored)
        current, pending = stack[-1]
        if not pending:
            stack.pop()
            if path:
                path.pop()
            continue
        move = pending.pop()
        nxt = _shift(current, move)
        if memoize and canonical_state(nxt) in seen:
            continue
        path.append(move)
        if enter(nxt):
            return SearchResult(True, False, explored, tuple(path), nxt)
    return SearchResult(False, False, explored)


def oracle_decide(
    network: Network,
    state: State,
    limits: Limits = Limits(),
    memoize: bool = True,
) -> OracleResult:
    """Safe iff the empty state is reachable; a witness plan comes with ``SAFE``."""
    result = search(network, state, State.is_empty, limits, memoize)
    if result.found:
        return OracleResult(OracleOutcome.SAFE, result.explored_states, result.plan)
    if result.exhausted_limits:
        return OracleResult(OracleOutcome.RESOURCE_LIMIT_EXCEEDED, result.explored_states)
    return OracleResult(OracleOutcome.BOUND_TO_DEADLOCK, result.explored_states)


def verify_plan(network: Network, state: State, plan: MovePlan) -> bool:
    """True iff ``plan`` is feasible from ``state`` and leaves the network empty."""
    try:
        return apply_plan(network, state, plan).is_empty()
    except ValueError:
        return False
