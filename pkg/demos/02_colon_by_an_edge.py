"""Removing one edge from a non-bipartite graph and taking a colon.

For C_5 and the edge {1,2}, deleting the edge leaves a path. The colon
ideal (I_{G-e} : gbar_e) can be described three ways: from the graph
(pairs of neighbours of the edge's endpoints), by elimination, and as the
image under Phi of a binomial edge ideal. All three agree, and the short
exact sequence they sit in bounds the regularity of I_G.
"""

from edgeideals import graphs as G
from edgeideals.groebner import buchberger
from edgeideals.ideals import colon_generators_combinatorial, colon_generators_phi
from edgeideals.resolution import betti_table_schreyer
from edgeideals.ring import make_ring
from edgeideals.theorems import colon_of_edge, reg, same_ideal

P = 32003
for name, e in (("cycle:5", (1, 2)), ("diamond", None), ("paw", (1, 2))):
    g = G.named_graph(name)
    e = e or next(x for x in g.sorted_edges() if G.is_bipartite(G.delete_edge(g, x)))
    ring = make_ring(g.n, P)
    comb = colon_generators_combinatorial(g, e, ring)
    elim = colon_of_edge(g, e, P)
    phi = colon_generators_phi(g, e, ring)
    print(f"== {name}, edge {e}")
    print("combinatorial generators:")
    for f, tag in zip(comb.gens, comb.tags):
        print(f"   {str(f):<28} {tag}")
    print("reduced Groebner basis of the colon:", ", ".join(str(f) for f in buchberger(elim).basis))
    print("combinatorial == elimination:", same_ideal(comb, elim), "  elimination == Phi image:", same_ideal(elim, phi))
    rest = reg("parity", G.delete_edge(g, e), P)
    colon_reg = betti_table_schreyer(elim).regularity()
    print(f"reg(S/I_G) = {reg('parity', g, P)} <= max({rest}, {colon_reg} + 1)\n")
