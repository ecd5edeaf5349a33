"""Seeded random instances for property checks and experiments."""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass

from .instance import InstanceDocument
from .model import VertexId


class Topology(enum.Enum):
    TREE = "tree"
    LINE = "line"
    GRID = "grid"
    RANDOM_CONNECTED = "random-connected"


class GenerationInfeasible(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorConfig:
    """Ranges are inclusive ``(low, high)`` pairs.

    With ``force_wise`` items are only placed on vertices of capacity at
    least two, so no unit-capacity vertex is occupied.
    """

    seed: int
    vertex_count: tuple[int, int] = (2, 8)
    topology: Topology = Topology.TREE
    capacity: tuple[int, int] = (1, 3)
    item_count: tuple[int, int] = (1, 6)
    force_wise: bool = False
    extra_edge_probability: float = 0.3

    def __post_init__(self) -> None:
        for name in ("vertex_count", "capacity", "item_count"):
            low, high = getattr(self, name)
            if low > high:
                raise ValueError(f"{name} range {low}..{high} is empty")
        if self.vertex_count[0] < 1 or self.capacity[0] < 1 or self.item_count[0] < 0:
            raise ValueError("vertex_count and capacity must be >= 1, item_count >= 0")


def _names(n: int) -> list[VertexId]:
    width = len(str(n - 1))
    return [f"v{i:0{width}d}" for i in range(n)]


def _edges(rng: random.Random, n: int, topology: Topology, p_extra: float) -> list[tuple[int, int]]:
    if topology is Topology.LINE:
        return [(i, i + 1) for i in range(n - 1)]
    if topology is Topology.GRID:
        cols = math.ceil(math.sqrt(n))
        edges = []
        for i in range(n):
            if (i + 1) % cols and i + 1 < n:
                edges.append((i, i + 1))
            if i + cols < n:
                edges.append((i, i + cols))
        return edges
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    if topology is Topology.RANDOM_CONNECTED:
        present = set(edges)
        for i in range(n):
            for j in range(i + 1, n):
                if (i, j) not in present and rng.random() < p_extra:
                    edges.append((i, j))
    return edges


def _random_simple_path(rng: random.Random, adjacency: list[list[int]], source: int, target: int) -> list[int]:
    # Randomized DFS; the DFS-tree path to target is simple.
    parent = {source: source}
    stack = [source]
    while stack:
        u = stack.pop()
        if u == target:
            break
        neighbors = adjacency[u][:]
        rng.shuffle(neighbors)
        for w in neighbors:
            if w not in parent:
                parent[w] = u
                stack.append(w)
    path = [target]
    while path[-1] != source:
        path.append(parent[path[-1]])
    return path[::-1]


def generate_instance(config: GeneratorConfig) -> InstanceDocument:
    """Random valid instance; equal configs give equal documents.

    Raises:
        GenerationInfeasible: the drawn item count does not fit in the
            buffers that may hold items.
    """
    rng = random.Random(config.seed)
    n = rng.randint(*config.vertex_count)
    names = _names(n)
    capacity = [rng.randint(*config.capacity) for _ in range(n)]
    edges = _edges(rng, n, config.topology, config.extra_edge_probability)
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adjacency[i].append(j)
        adjacency[j].append(i)

    items = rng.randint(*config.item_count)
    room = [b if (b >= 2 or not config.force_wise) else 0 for b in capacity]
    if n < 2:
        room = [0] * n
    if items > sum(room):
        raise GenerationInfeasible(f"{items} items do not fit in {sum(room)} usable slots")

    routes = []
    for _ in range(items):
        source = rng.choice([v for v in range(n) if room[v] > 0])
        room[source] -= 1
        target = rng.choice([v for v in range(n) if v != source])
        routes.append(tuple(names[v] for v in _random_simple_path(rng, adjacency, source, target)))

    doc = InstanceDocument(
        vertices=list(zip(names, capacity)),
        edges=[(names[i], names[j]) for i, j in edges],
        items=[(route, 1) for route in routes],
    )
    return doc.normalized()
