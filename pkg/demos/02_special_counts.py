"""
Closed forms and specialised sums
=================================

Even orientations have a closed form per connected component; N-divisible
orientations come out of an edge-colouring sum with roots of unity; Eulerian
orientations of regular graphs come from the subgraph degree enumerator; and
mixed Eulerian/even orientations have an explicit existence bound.
"""

from orientcount import (ConstraintProfile, VertexPartition, brute_force_count,
                         eulerian_regular_count, even_orientation_count, mixed_count,
                         mixed_lower_bound, n_divisible_count)
from orientcount.graph import Graph, complete_bipartite_graph, complete_graph, cycle_graph

# Even orientations of a connected graph: 2^(|E|-|V|) (1 + (-1)^|E|).
for name, g in [("C3", cycle_graph(3)), ("K4", complete_graph(4)), ("K5", complete_graph(5))]:
    print(f"even orientations of {name}: {even_orientation_count(g)}")

# 3-divisible orientations of K_{3,3}: all edges point away from one side.
k33 = complete_bipartite_graph(3, 3)
print("3-divisible orientations of K33:", n_divisible_count(k33, 3))

# Eulerian orientations of regular graphs of even degree.
for name, g in [("C6", cycle_graph(6)), ("K5", complete_graph(5))]:
    print(f"Eulerian orientations of {name}: {eulerian_regular_count(g)}")

# Mixed orientations: Eulerian on part1, even out-degree on the rest.
c4 = cycle_graph(4)
chord = Graph(4, c4.edges + ((0, 2), (0, 2)))
part = VertexPartition.from_part1(chord, [1, 3])
bound, hypothesis = mixed_lower_bound(chord, part)
print(f"mixed count {mixed_count(chord, part)}, bound {bound}, hypothesis holds: {hypothesis}")

# The hypothesis is sufficient but not necessary: on the path v4-v1-v2-v3 with
# v1 Eulerian it fails, yet an admissible orientation exists.
path = Graph(4, ((0, 1), (0, 3), (1, 2)))
part = VertexPartition.from_part1(path, [0])
print("path:", mixed_lower_bound(path, part), "count", mixed_count(path, part))
print("brute force agrees:", brute_force_count(path, ConstraintProfile.mixed(path, [0])))
