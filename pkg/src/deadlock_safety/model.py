"""Networks, routes, states and the semantics of feasible moves.

A :class:`Network` is an undirected graph whose vertices carry a buffer
capacity.  A :class:`State` places items on vertices; each item carries a
fixed simple route, stored as a tuple of vertex ids whose first entry is
the vertex where the item currently sits and whose last entry is its
destination.  Items that reach their destination vanish, so every stored
route has at least two waypoints.

All values are immutable.  States are kept in a canonical form (sorted
``(vertex, route, count)`` triples) so equal states compare and hash equal
regardless of how they were built.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from types import MappingProxyType

VertexId = str
Route = tuple[VertexId, ...]
Entry = tuple[VertexId, Route, int]


class ModelError(ValueError):
    """Base class for invalid networks, states and moves."""


class InvalidNetwork(ModelError):
    pass


class CapacityExceeded(ModelError):
    def __init__(self, vertex: VertexId, load: int, capacity: int) -> None:
        super().__init__(f"vertex {vertex!r} holds {load} items but has capacity {capacity}")
        self.vertex = vertex


class NonSimpleRoute(ModelError):
    def __init__(self, route: Route) -> None:
        super().__init__(f"route {format_route(route)} repeats a vertex")
        self.route = route


class EdgeMissing(ModelError):
    def __init__(self, u: VertexId, v: VertexId) -> None:
        super().__init__(f"route uses {u!r}-{v!r}, which is not an edge")
        self.u = u
        self.v = v


class RouteStartMismatch(ModelError):
    def __init__(self, vertex: VertexId, route: Route) -> None:
        super().__init__(f"route {format_route(route)} is stored at {vertex!r}")
        self.vertex = vertex
        self.route = route


class ZeroLengthRoute(ModelError):
    def __init__(self, vertex: VertexId, route: Route) -> None:
        super().__init__(f"route {format_route(route)} at {vertex!r} has no edge")
        self.vertex = vertex
        self.route = route


class UnknownVertex(ModelError):
    def __init__(self, vertex: VertexId) -> None:
        super().__init__(f"unknown vertex {vertex!r}")
        self.vertex = vertex


class InfeasibleMove(ModelError):
    pass


class InfeasibleMoveAt(InfeasibleMove):
    def __init__(self, index: int, move: Move, reason: str) -> None:
        super().__init__(f"move {index} ({move}) is infeasible: {reason}")
        self.index = index
        self.move = move


def format_route(route: Sequence[VertexId]) -> str:
    return "(" + ",".join(route) + ")"


@dataclass(frozen=True)
class Network:
    """Undirected graph with a positive buffer capacity at every vertex.

    Build instances through :meth:`build`, which checks the invariants.
    """

    capacity: Mapping[VertexId, int]
    edges: frozenset[frozenset[VertexId]]
    vertices: tuple[VertexId, ...]
    _adjacency: Mapping[VertexId, tuple[VertexId, ...]]

    @classmethod
    def build(
        cls,
        capacity: Mapping[VertexId, int],
        edges: Iterable[tuple[VertexId, VertexId]],
    ) -> Network:
        for v, b in capacity.items():
            if not isinstance(b, int) or isinstance(b, bool) or b < 1:
                raise InvalidNetwork(f"vertex {v!r} has capacity {b!r}; capacities must be integers >= 1")
        edge_set: set[frozenset[VertexId]] = set()
        adjacency: dict[VertexId, list[VertexId]] = {v: [] for v in capacity}
        for u, v in edges:
            for endpoint in (u, v):
                if endpoint not in capacity:
                    raise UnknownVertex(endpoint)
            if u == v:
                raise InvalidNetwork(f"self-loop at {u!r}")
            key = frozenset((u, v))
            if key in edge_set:
                raise InvalidNetwork(f"duplicate edge {u!r}-{v!r}")
            edge_set.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
        return cls(
            capacity=MappingProxyType(dict(capacity)),
            edges=frozenset(edge_set),
            vertices=tuple(sorted(capacity)),
            _adjacency=MappingProxyType({v: tuple(sorted(n)) for v, n in adjacency.items()}),
        )

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return frozenset((u, v)) in self.edges

    def neighbors(self, v: VertexId) -> tuple[VertexId, ...]:
        return self._adjacency[v]

    def degree(self, v: VertexId) -> int:
        return len(self._adjacency[v])

    def sorted_edges(self) -> list[tuple[VertexId, VertexId]]:
        return sorted(tuple(sorted(e)) for e in self.edges)  # type: ignore[misc]

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in self._adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def is_tree(self) -> bool:
        """True for connected acyclic graphs (|E| = |V| - 1 and connected)."""
        return bool(self.vertices) and len(self.edges) == len(self.vertices) - 1 and self.is_connected()

    def relabel(self, mapping: Mapping[VertexId, VertexId]) -> Network:
        return Network.build(
            {mapping[v]: b for v, b in self.capacity.items()},
            [(mapping[u], mapping[v]) for u, v in self.sorted_edges()],
        )


@dataclass(frozen=True)
class State:
    """Item placement plus routes, as a canonical multiset.

    ``entries`` holds sorted ``(vertex, route, count)`` triples with
    ``count >= 1``; identical routes at the same vertex are merged into one
    triple.  The vertex is normally ``route[0]``; :func:`validate` rejects
    states where it is not.
    """

    entries: tuple[Entry, ...] = ()

    @classmethod
    def from_entries(cls, entries: Iterable[tuple[VertexId, Sequence[VertexId], int]]) -> State:
        counts: Counter[tuple[VertexId, Route]] = Counter()
        for vertex, route, count in entries:
            if count < 0:
                raise ModelError(f"negative item count {count} for route {format_route(route)}")
            counts[vertex, tuple(route)] += count
        return cls(tuple(sorted((v, r, c) for (v, r), c in counts.items() if c > 0)))

    @classmethod
    def from_routes(cls, routes: Iterable[Sequence[VertexId]]) -> State:
        """One item per route, placed at the route's first waypoint."""
        return cls.from_entries((route[0] if route else "", route, 1) for route in routes)

    @classmethod
    def from_mapping(cls, routes_at: Mapping[VertexId, Iterable[Sequence[VertexId]]]) -> State:
        return cls.from_entries((v, route, 1) for v, routes in routes_at.items() for route in routes)

    def sigma(self, vertex: VertexId) -> int:
        return sum(c for v, _, c in self.entries if v == vertex)

    def occupancy(self) -> Counter[VertexId]:
        load: Counter[VertexId] = Counter()
        for v, _, c in self.entries:
            load[v] += c
        return load

    def routes_at(self, vertex: VertexId) -> list[tuple[Route, int]]:
        return [(r, c) for v, r, c in self.entries if v == vertex]

    def routes(self) -> list[tuple[VertexId, Route]]:
        """Every distinct ``(vertex, route)`` pair, in canonical order."""
        return [(v, r) for v, r, _ in self.entries]

    def item_count(self) -> int:
        return sum(c for _, _, c in self.entries)

    def is_empty(self) -> bool:
        return not self.entries

    def relabel(self, mapping: Mapping[VertexId, VertexId]) -> State:
        return State.from_entries((mapping[v], tuple(mapping[w] for w in r), c) for v, r, c in self.entries)

    def _replace_counts(self, delta: Mapping[tuple[VertexId, Route], int]) -> State:
        counts = Counter({(v, r): c for v, r, c in self.entries})
        for key, d in delta.items():
            counts[key] += d
        return State(tuple(sorted((v, r, c) for (v, r), c in counts.items() if c > 0)))


@dataclass(frozen=True, order=True)
class Move:
    """Shift of one item carrying ``route`` from ``source`` to ``target``."""

    source: VertexId
    route: Route
    target: VertexId

    @classmethod
    def along(cls, route: Sequence[VertexId]) -> Move:
        route = tuple(route)
        return cls(route[0], route, route[1])

    def __str__(self) -> str:
        return f"{self.source} -> {self.target} : {' '.join(self.route)}"


MovePlan = tuple[Move, ...]


def validate(network: Network, state: State) -> State:
    """Return ``state`` unchanged if it is a valid state of ``network``.

    Raises:
        UnknownVertex: a route or placement names a vertex not in the network.
        RouteStartMismatch: a route is stored away from its first waypoint.
        ZeroLengthRoute: a route has fewer than two waypoints.
        NonSimpleRoute: a route visits a vertex twice.
        EdgeMissing: consecutive waypoints are not adjacent.
        CapacityExceeded: a vertex holds more items than its capacity.
    """
    for vertex, route, _ in state.entries:
        if len(route) < 2:
            raise ZeroLengthRoute(vertex, route)
        if vertex not in network.capacity:
            raise UnknownVertex(vertex)
        if route[0] != vertex:
            raise RouteStartMismatch(vertex, route)
        for w in route:
            if w not in network.capacity:
                raise UnknownVertex(w)
        if len(set(route)) != len(route):
            raise NonSimpleRoute(route)
        for u, w in zip(route, route[1:]):
            if not network.has_edge(u, w):
                raise EdgeMissing(u, w)
    for vertex, load in sorted(state.occupancy().items()):
        if load > network.capacity[vertex]:
            raise CapacityExceeded(vertex, load, network.capacity[vertex])
    return state


def follower_of(route: Sequence[VertexId]) -> VertexId:
    return route[1]


def feasible_moves(network: Network, state: State) -> list[Move]:
    """All feasible single-edge moves, sorted by source then route.

    A route at ``u`` yields a move when its follower ``v`` has a free slot.
    A free slot is required even when ``v`` is the destination.
    """
    load = state.occupancy()
    return [
        Move(u, route, route[1])
        for u, route, _ in state.entries
        if load[route[1]] < network.capacity[route[1]]
    ]


def _check_move(network: Network, state: State, move: Move) -> str | None:
    if len(move.route) < 2 or move.route[0] != move.source or move.route[1] != move.target:
        return "target is not the follower of source on the route"
    if not any(v == move.source and r == move.route for v, r, _ in state.entries):
        return f"no item with route {format_route(move.route)} at {move.source!r}"
    if state.sigma(move.target) >= network.capacity[move.target]:
        return f"vertex {move.target!r} is saturated"
    return None


def apply_move(network: Network, state: State, move: Move) -> State:
    """Apply one feasible move; the item vanishes if ``target`` is its destination.

    Raises:
        InfeasibleMove: the move is not feasible in ``state``.
    """
    reason = _check_move(network, state, move)
    if reason is not None:
        raise InfeasibleMove(f"{move}: {reason}")
    return _shift(state, move)


def _shift(state: State, move: Move) -> State:
    delta = {(move.source, move.route): -1}
    if len(move.route) > 2:
        delta[move.target, move.route[1:]] = delta.get((move.target, move.route[1:]), 0) + 1
    return state._replace_counts(delta)


def apply_plan(network: Network, state: State, plan: Iterable[Move]) -> State:
    """Apply moves left to right.

    Raises:
        InfeasibleMoveAt: carries the zero-based index of the first bad move.
    """
    for index, move in enumerate(plan):
        reason = _check_move(network, state, move)
        if reason is not None:
            raise InfeasibleMoveAt(index, move, reason)
        state = _shift(state, move)
    return state


def potential(state: State) -> int:
    """Total number of route edges still to be travelled by all items."""
    return sum((len(route) - 1) * count for _, route, count in state.entries)
