"""k-labelled spanning forests: fewest components with at most k labels."""
# %%
from labelvns import (GeneratorParams, ProblemSpec, SolverConfig, Variant, exact_solve, generate,
                      solve)

g = generate(GeneratorParams(14, 10, 0.25, 3))
print(f"n={g.node_count} m={g.edge_count} labels={g.label_count}")

# %%
# Larger budgets buy fewer components, until the graph is connected.
for k in range(1, 7):
    problem = ProblemSpec.klsf(k)
    exact = exact_solve(g, problem)
    heur = solve(g, problem, SolverConfig(Variant.INT_VNS, max_iterations=50, rng_seed=k))
    print(f"k={k}: oracle {exact.evaluation.component_count} components {sorted(exact.optimum)}, "
          f"Int-VNS {heur.evaluation.component_count} components {sorted(heur.labels)}")
