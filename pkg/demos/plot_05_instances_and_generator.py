"""
Instance files and random instances
===================================

Instances are plain text: a version header, then ``vertex``, ``edge`` and
``item`` lines.  The seeded generator produces valid instances in the
same format, which makes it easy to hunt for disagreements between the
fast check and the exhaustive oracle.
"""

from collections import Counter

from deadlock_safety import GenerationInfeasible, GeneratorConfig, Topology, decide, generate_instance, serialize

doc = generate_instance(GeneratorConfig(seed=7, vertex_count=(5, 5), topology=Topology.TREE, force_wise=True))
print(serialize(doc))

verdicts = Counter()
for seed in range(300):
    config = GeneratorConfig(seed=seed, topology=Topology.RANDOM_CONNECTED, vertex_count=(3, 7))
    try:
        network, state = generate_instance(config).to_model()
    except GenerationInfeasible:
        continue
    verdicts[decide(network, state).outcome.value] += 1
print("verdicts on random connected networks:", dict(verdicts))
