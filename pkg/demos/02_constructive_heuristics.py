"""Greedy MVCA versus the Boltzmann constructive.

The greedy always adds the label leaving the fewest components.  The
probabilistic version draws labels at random and accepts a worse one with
probability exp(-delta/T), where T starts at |best| and is multiplied by
1/|best| after every accepted label.
"""
# %%
from collections import Counter

from labelvns import (GeneratorParams, ProblemSpec, TemperatureSchedule, cooling_step,
                      generate_connected, mvca, probabilistic_construct)
from labelvns.vns import make_rng

g, _ = generate_connected(GeneratorParams(25, 15, 0.15, 4))
mlst = ProblemSpec.mlst()

greedy = mvca(g, g.all_labels, mlst)
print("MVCA:", sorted(greedy), "size", len(greedy))

# %%
# The cooling law with |best| = 4: 4, 1, 0.25, 0.0625, ...
schedule = TemperatureSchedule.from_best(4)
temps = []
for _ in range(5):
    temps.append(schedule.current_temperature)
    schedule = cooling_step(schedule)
print("temperatures:", temps)

# %%
# Forty randomised constructions from the same schedule.  Early picks are
# diverse, later ones are almost greedy because the temperature collapses.
sizes = Counter()
worse_first_picks = 0
for seed in range(40):
    trace = []
    labels = probabilistic_construct(g, g.all_labels, mlst, set(), TemperatureSchedule.from_best(len(greedy)),
                                     make_rng(seed), trace)
    sizes[len(labels)] += 1
    worse_first_picks += trace[0][1] > 0
print("solution sizes:", dict(sorted(sizes.items())))
print("runs whose first label was not a greedy choice:", worse_first_picks)
