"""Independent reference implementations used as test oracles.

These recompute followers, wise followers and deadlock sets straight from
the definitions, without the follower-network code under test.
"""

from __future__ import annotations

from itertools import combinations

from hypothesis import reject
from hypothesis import strategies as st

from deadlock_safety import GenerationInfeasible, GeneratorConfig, Topology, generate_instance


def loads(network, state):
    return {v: sum(c for u, _, c in state.entries if u == v) for v in network.vertices}


def naive_followers(state, u):
    return {route[1] for v, route, _ in state.entries if v == u}


def naive_wise_followers(network, state, u):
    load = loads(network, state)
    found = set()
    for v, route, _ in state.entries:
        if v != u:
            continue
        for i, w in enumerate(route[1:], start=1):
            if i == len(route) - 1 or not (network.capacity[w] == 1 and load[w] == 0):
                found.add(w)
                break
    return found


def is_deadlock_by_definition(network, state, members, weak):
    load = loads(network, state)
    if not members or any(load[v] != network.capacity[v] for v in members):
        return False
    for u in members:
        succ = naive_wise_followers(network, state, u) if weak else naive_followers(state, u)
        if not succ <= members:
            return False
    return True


def brute_force_deadlock_sets(network, state, weak):
    """Every non-empty vertex subset satisfying the deadlock-set definition."""
    family = []
    vertices = network.vertices
    for k in range(1, len(vertices) + 1):
        for subset in combinations(vertices, k):
            if is_deadlock_by_definition(network, state, set(subset), weak):
                family.append(frozenset(subset))
    return family


def instances(configs):
    """Networks and states for each config whose generation is feasible."""
    for config in configs:
        try:
            doc = generate_instance(config)
        except GenerationInfeasible:
            continue
        yield doc.to_model()


def collect(count, make_config, keep=lambda network, state: True, max_seeds=100_000):
    found = []
    for seed in range(max_seeds):
        for network, state in instances([make_config(seed)]):
            if keep(network, state):
                found.append((network, state))
        if len(found) >= count:
            return found
    raise AssertionError(f"only {len(found)} instances found")


@st.composite
def generated(draw, topologies=tuple(Topology), vertex_count=(2, 7), capacity=(1, 3), item_count=(0, 6), force_wise=None):
    config = GeneratorConfig(
        seed=draw(st.integers(0, 2**32)),
        vertex_count=vertex_count,
        topology=draw(st.sampled_from(topologies)),
        capacity=capacity,
        item_count=item_count,
        force_wise=draw(st.booleans()) if force_wise is None else force_wise,
    )
    try:
        doc = generate_instance(config)
    except GenerationInfeasible:
        reject()
    return doc.to_model()
