"""Basic VNS, Co-VNS and Int-VNS on MLST, checked against the exact optimum."""
# %%
import numpy as np

from labelvns import (GeneratorParams, ProblemSpec, SearchLog, SolverConfig, Variant, exact_solve,
                      generate_connected, solve)

mlst = ProblemSpec.mlst()
instances = [generate_connected(GeneratorParams(16, 14, 0.2, s))[0] for s in range(20)]
optima = [exact_solve(g, mlst).evaluation.label_count for g in instances]
print("optimum sizes:", optima)

# %%
# At this scale every variant usually ends on the optimum; the trace tells
# how many outer iterations each one needed to get there.
for variant in Variant:
    gaps, reached = [], []
    for s, (g, opt) in enumerate(zip(instances, optima)):
        result = solve(g, mlst, SolverConfig(variant, max_iterations=10, rng_seed=s))
        gaps.append(result.evaluation.label_count - opt)
        reached.append(result.trace[-1][0])
    print(f"{variant.value:7} mean gap {np.mean(gaps):.3f}  optimal on {gaps.count(0)}/{len(gaps)}  "
          f"mean iteration of last improvement {np.mean(reached):.2f}")

# %%
# Inside one Int-VNS run: the complementary restarts never reuse labels of
# the best solution, and q_max follows the reactive rule.
log = SearchLog()
result = solve(instances[0], mlst, SolverConfig(Variant.INT_VNS, max_iterations=15, rng_seed=1), log)
print("best:", sorted(result.labels), "improvements:", [(it, ev.label_count) for it, ev in result.trace])
print("first restarts (source -> restart):", [(sorted(a), sorted(b)) for a, b in log.complementary[:3]])
print("q_max after each iteration:", [q for _, q, _ in log.qmax_updates])
