"""
Networks, states and moves
==========================

A network gives every vertex a buffer capacity.  A state places items on
vertices, each carrying the simple route it still has to travel.  Moving
an item one hop spends one unit of potential, so a full delivery always
takes exactly as many moves as the starting potential.
"""

from deadlock_safety import Network, State, apply_move, feasible_moves, potential

# Three vertices on a line; the middle one holds two items.
network = Network.build({"A": 1, "B": 2, "C": 1}, [("A", "B"), ("B", "C")])
state = State.from_routes([("A", "B", "C"), ("C", "B")])
print("potential:", potential(state))

# Only moves whose target has a free slot are allowed.
for move in feasible_moves(network, state):
    print("feasible:", move)

# Greedily play the first feasible move until everything is delivered.
while not state.is_empty():
    move = feasible_moves(network, state)[0]
    state = apply_move(network, state, move)
    print(f"{move}  ->  potential {potential(state)}")
