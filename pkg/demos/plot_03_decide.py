"""
Deciding safety
===============

``decide`` runs polynomial checks and returns one of three outcomes.  It
is sound: a Safe or BoundToDeadlock verdict is never wrong, and Unknown
means no polynomial rule applied.  The exhaustive oracle settles the
unknown cases on small instances.
"""

from deadlock_safety import decide, load_fixture, oracle_decide

for name in ("fig1", "fig2", "fig3"):
    network, state = load_fixture(name)
    verdict = decide(network, state)
    exact = oracle_decide(network, state)
    print(f"{name}: {verdict.outcome.value} ({verdict.justification.value}), witness {verdict.witness}")
    print(f"      oracle: {exact.outcome.value} after {exact.explored_states} states")
