"""Which graphs have a pure resolution?

Exactly the complete bipartite graphs and the disjoint unions of odd cycles
and paths. The smallest graphs outside both families (the diamond, K_4 and a
triangle with a pendant edge) already show two internal degrees in
homological degree 3.
"""

from collections import Counter

from edgeideals import graphs as G
from edgeideals.theorems import betti, pure_family

for name in ("diamond", "complete:4", "paw", "claw", "complete_bipartite:2,3"):
    t = betti("parity", G.named_graph(name))
    print(f"== {name}: pure = {t.is_pure()}, beta_3_5 = {t.beta(3, 5)}, beta_3_6 = {t.beta(3, 6)}")
    print(t.diagram(), "\n")

tally = Counter()
for n in range(1, 6):
    for g in G.enumerate_graphs(n):
        tally[(betti("parity", g).is_pure(), pure_family(g))] += 1
print("(pure, in family) counts over all graphs with n <= 5:", dict(tally))
