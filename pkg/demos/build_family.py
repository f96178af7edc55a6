"""
Building a signed complete graph from overlapping cliques
=========================================================

"""

# Every instance is fixed by three numbers: the clique order h, the number
# of private vertices p each clique keeps to itself, and the number of
# cliques k.  The cliques all share a common (h - p)-clique, so the vertex
# count works out to n = h + (k - 1) * p.
from seidelspectra.family import (
    adjacency_matrix,
    clique_vertices,
    make_params,
    seidel_matrix,
    signed_edges,
    vertex_labels,
)

params = make_params(h=3, p=1, k=2)
print("params:", params)

# The vertex order is fixed: first the private block of each of the first
# k - 1 cliques, then the h "hub" vertices (the common clique followed by
# the last clique's private block).
for index, label in enumerate(vertex_labels(params)):
    print(f"  vertex {index}: {label}")

# Each clique can be read back as a sorted index tuple.
for j in range(1, params.k + 1):
    print(f"clique {j}:", clique_vertices(params, j))

# The union of the cliques is the graph of negative edges.  Its 0/1
# adjacency matrix and the resulting Seidel matrix S = J - I - 2A:
print("adjacency:")
print(adjacency_matrix(params))
print("Seidel matrix:")
print(seidel_matrix(params))

# The same data as an edge list with signs, the form the CLI exports.
for i, j, sign in signed_edges(params):
    print(f"  {i} -- {j}  {'+' if sign > 0 else '-'}")
