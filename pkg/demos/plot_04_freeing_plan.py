"""
Building a freeing plan
=======================

When no unit-capacity buffer holds an item and no weak deadlock set
exists, the planner delivers everything without search.  It repeatedly advances one item to its next non-trivial
waypoint, choosing an advance that keeps the state safe.
"""

from deadlock_safety import Network, State, format_plan, freeing_plan, potential, verify_plan

network = Network.build(
    {"A": 2, "E": 1, "B": 2, "F": 1, "C": 2},
    [("A", "E"), ("E", "B"), ("B", "F"), ("F", "C")],
)
state = State.from_routes([("A", "E", "B", "F", "C"), ("C", "F", "B"), ("B", "E", "A")])

plan = freeing_plan(network, state)
print(format_plan(plan), end="")
print(f"{len(plan)} moves for potential {potential(state)}; verified: {verify_plan(network, state, plan)}")
