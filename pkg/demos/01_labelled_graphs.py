"""Labelled graphs, label-induced subgraphs and spanning forests.

Run with ``python demos/01_labelled_graphs.py``.
"""
# %%
from labelvns import LabelledGraph, components, extract_forest, hamming_distance

# A 5-node graph with three labels.  Label 0 forms a path 0-1-2, label 1
# joins 2-3-4, label 2 is a shortcut 0-4 plus a parallel copy of edge 1-2.
g = LabelledGraph(5, ((0, 1, 0), (1, 2, 0), (2, 3, 1), (3, 4, 1), (0, 4, 2), (1, 2, 2)), 3)

# %%
# A label set keeps exactly the edges carrying those labels.
for labels in [set(), {0}, {1}, {0, 1}, {2}]:
    part = components(g, labels)
    print(f"labels={sorted(labels)!s:8} components={part.component_count} assignment={part.assignment}")

# %%
# {0, 1} connects the graph, so a spanning tree can be read off it.  Edges are
# scanned in index order and kept when they join two components.
forest = extract_forest(g, {0, 1})
print("spanning tree edges:", [g.edges[i] for i in forest.edges])

# %%
# Solutions are compared through the Hamming distance on label sets.
print("distance {0,1} vs {1,2}:", hamming_distance({0, 1}, {1, 2}))
