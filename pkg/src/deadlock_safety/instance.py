"""Line-oriented instance files.

Grammar (one directive per line, ``#`` starts a comment)::

    dsp-instance 1
    vertex <id> <capacity>
    edge <u> <v>
    item <count> <v0> <v1> ... <vk>

``dsp-instance`` must come first and carries the format version.  Vertex
ids are any token without whitespace or ``#``.  An ``item`` line places
``count`` identical items at ``v0``, each routed along ``v0 ... vk``.

Serialization always writes the normalized form: vertices and edges
sorted, each edge with its endpoints sorted, and identical item lines
merged and sorted by route.
"""

from __future__ import annotations

from collections import Counter
from importlib import resources
from dataclasses import dataclass, field

from .model import (
    CapacityExceeded,
    ModelError,
    Move,
    MovePlan,
    Network,
    Route,
    State,
    VertexId,
    validate,
)

FORMAT_VERSION = 1
HEADER = "dsp-instance"


class InstanceError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class InstanceSyntaxError(InstanceError):
    pass


class ValidationError(InstanceError):
    """A well-formed document that does not describe a valid state.

    ``cause`` is the underlying :class:`~deadlock_safety.model.ModelError`.
    """

    def __init__(self, cause: ModelError, line: int | None = None) -> None:
        super().__init__(str(cause), line)
        self.cause = cause


@dataclass
class InstanceDocument:
    format_version: int = FORMAT_VERSION
    vertices: list[tuple[VertexId, int]] = field(default_factory=list)
    edges: list[tuple[VertexId, VertexId]] = field(default_factory=list)
    items: list[tuple[Route, int]] = field(default_factory=list)

    def normalized(self) -> InstanceDocument:
        merged: Counter[Route] = Counter()
        for route, count in self.items:
            merged[tuple(route)] += count
        return InstanceDocument(
            self.format_version,
            sorted(self.vertices),
            sorted(tuple(sorted(e)) for e in self.edges),  # type: ignore[misc]
            sorted((r, c) for r, c in merged.items() if c > 0),
        )

    def to_model(self) -> tuple[Network, State]:
        """Build and validate the network and state.

        Raises:
            ValidationError: wraps the first model error found.
        """
        try:
            network = Network.build(dict(self.vertices), self.edges)
            state = State.from_entries((r[0] if r else "", r, c) for r, c in self.items)
            return network, validate(network, state)
        except ModelError as exc:
            raise ValidationError(exc) from exc

    @classmethod
    def from_model(cls, network: Network, state: State) -> InstanceDocument:
        return cls(
            FORMAT_VERSION,
            [(v, network.capacity[v]) for v in network.vertices],
            network.sorted_edges(),
            [(route, count) for _, route, count in state.entries],
        )


def serialize(doc: InstanceDocument) -> str:
    doc = doc.normalized()
    lines = [f"{HEADER} {doc.format_version}"]
    lines += [f"vertex {v} {b}" for v, b in doc.vertices]
    lines += [f"edge {u} {v}" for u, v in doc.edges]
    lines += [f"item {c} {' '.join(r)}" for r, c in doc.items]
    return "\n".join(lines) + "\n"


def _positive_int(token: str, what: str, line: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise InstanceSyntaxError(f"{what} must be an integer, got {token!r}", line) from None
    if value < 1:
        raise InstanceSyntaxError(f"{what} must be >= 1, got {value}", line)
    return value


def parse_document(text: str) -> InstanceDocument:
    doc, _ = _parse(text)
    return doc


def _parse(text: str) -> tuple[InstanceDocument, dict[tuple[str, object], int]]:
    doc = InstanceDocument()
    where: dict[tuple[str, object], int] = {}
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        keyword, args = tokens[0], tokens[1:]
        if not header_seen:
            if keyword != HEADER or len(args) != 1:
                raise InstanceSyntaxError(f"expected '{HEADER} <version>' header", lineno)
            doc.format_version = _positive_int(args[0], "format version", lineno)
            if doc.format_version != FORMAT_VERSION:
                raise InstanceSyntaxError(f"unsupported format version {doc.format_version}", lineno)
            header_seen = True
        elif keyword == "vertex":
            if len(args) != 2:
                raise InstanceSyntaxError("expected 'vertex <id> <capacity>'", lineno)
            if ("vertex", args[0]) in where:
                raise InstanceSyntaxError(f"vertex {args[0]!r} declared twice", lineno)
            doc.vertices.append((args[0], _positive_int(args[1], "capacity", lineno)))
            where["vertex", args[0]] = lineno
        elif keyword == "edge":
            if len(args) != 2:
                raise InstanceSyntaxError("expected 'edge <u> <v>'", lineno)
            doc.edges.append((args[0], args[1]))
            where.setdefault(("edge", frozenset(args)), lineno)
        elif keyword == "item":
            if len(args) < 2:
                raise InstanceSyntaxError("expected 'item <count> <v0> ... <vk>'", lineno)
            route = tuple(args[1:])
            doc.items.append((route, _positive_int(args[0], "item count", lineno)))
            where.setdefault(("item", route), lineno)
        else:
            raise InstanceSyntaxError(f"unknown directive {keyword!r}", lineno)
    if not header_seen:
        raise InstanceSyntaxError(f"missing '{HEADER}' header")
    return doc, where


def parse_instance(text: str) -> tuple[Network, State]:
    """Parse and validate an instance file.

    Raises:
        InstanceSyntaxError: malformed line.
        ValidationError: well-formed but invalid; ``line`` points at the
            offending declaration when one can be identified.
    """
    doc, where = _parse(text)
    try:
        network = Network.build(dict(doc.vertices), doc.edges)
    except ModelError as exc:
        raise ValidationError(exc, _edge_line(doc, where, exc)) from exc
    for route, count in doc.items:
        try:
            validate(network, State.from_entries([(route[0], route, count)]))
        except CapacityExceeded:
            pass
        except ModelError as exc:
            raise ValidationError(exc, where["item", route]) from exc
    state = State.from_entries((r[0], r, c) for r, c in doc.items)
    try:
        validate(network, state)
    except CapacityExceeded as exc:
        raise ValidationError(exc, where.get(("vertex", exc.vertex))) from exc
    return network, state


def _edge_line(doc: InstanceDocument, where: dict, exc: ModelError) -> int | None:
    vertex = getattr(exc, "vertex", None)
    for u, v in doc.edges:
        if vertex is not None and vertex in (u, v):
            return where.get(("edge", frozenset((u, v))))
    return None


def format_plan(plan: MovePlan) -> str:
    """One move per line: ``source -> target : v0 v1 ... vk``."""
    return "".join(f"{move}\n" for move in plan)


def parse_plan(text: str) -> MovePlan:
    moves = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        ends = head.split("->")
        route = tuple(tail.split())
        if not sep or len(ends) != 2 or len(route) < 2:
            raise InstanceSyntaxError("expected 'source -> target : v0 v1 ... vk'", lineno)
        source, target = ends[0].strip(), ends[1].strip()
        if route[0] != source or route[1] != target:
            raise InstanceSyntaxError("source and target must be the first two route vertices", lineno)
        moves.append(Move(source, route, target))
    return tuple(moves)


FIXTURES = ("fig1", "fig2", "fig3")


def fixture_text(name: str) -> str:
    """Text of a bundled example instance (``fig1``, ``fig2`` or ``fig3``)."""
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    return resources.files(__package__).joinpath("fixtures", f"{name}.dsp").read_text()


def load_fixture(name: str) -> tuple[Network, State]:
    return parse_instance(fixture_text(name))
