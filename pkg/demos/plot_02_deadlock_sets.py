"""
Strong and weak deadlock sets
=============================

Each occupied vertex points at the next hop of its items.  A vertex set
from which no free vertex can be reached along these arcs is a deadlock
set.  Following plain next hops gives strong sets, which are deadlocked
right now.  Skipping over empty unit buffers gives weak sets, which warn
that a deadlock is unavoidable on some networks.
"""

from deadlock_safety import Kind, Strength, build_follower_digraph, find_deadlock_set, free_vertices, load_fixture

network, state = load_fixture("fig2")
print("free vertices:", sorted(free_vertices(network, state)))

for kind in Kind:
    digraph = build_follower_digraph(network, state, kind)
    print(f"{kind.name.lower()} arcs:", digraph.sorted_arcs())

# The plain arcs all reach a free vertex, the wise arcs do not.
for strength in Strength:
    print(f"{strength.name.lower()} deadlock set:", find_deadlock_set(network, state, strength))
