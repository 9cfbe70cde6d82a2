"""Odd cycles, paths and their disjoint unions give complete intersections.

The edge binomials of such a graph form a regular sequence, so the Koszul
complex on them is the minimal resolution: beta_{i,2i} = C(|E|, i) and the
regularity equals the number of edges.
"""

from edgeideals import graphs as G
from edgeideals.ideals import build_ideal
from edgeideals.resolution import betti_table_schreyer, koszul_table
from edgeideals.ring import make_ring
from edgeideals.theorems import predicted_regularity

for name in ("cycle:3", "cycle:5", "path:4", "cycle:3+path:3"):
    g = G.named_graph(name)
    ideal = build_ideal("parity", g, make_ring(g.n, 32003))
    print(f"== {name}: {len(g.edges)} edges")
    print("generators:", ", ".join(str(f) for f in ideal.gens))
    table = betti_table_schreyer(ideal)
    print(table.diagram())
    ci = table == koszul_table(len(g.edges), 2 * g.n)
    print(f"Koszul pattern: {ci}   reg = {table.regularity()}   predicted = {predicted_regularity(g)}\n")

# an even cycle is bipartite but not a complete intersection
g = G.cycle_graph(6)
table = betti_table_schreyer(build_ideal("parity", g, make_ring(6, 32003)))
print("== cycle:6 for contrast")
print(table.diagram())
print("Koszul pattern:", table == koszul_table(6, 12))
