"""Where does reg(S/I_G) sit between the induced-path length and n?

For connected graphs the regularity is at least the length of the longest
induced path and at least the length of the longest induced odd cycle; the
upper bound n is only conjectural, so it is probed here, not asserted.
"""

from collections import Counter

from edgeideals import graphs as G
from edgeideals.theorems import reg, reg_lower_bound

N_MAX = 5
gaps = Counter()
for n in range(2, N_MAX + 1):
    for g in G.enumerate_graphs(n, connected_only=True):
        r = reg("parity", g)
        ell = G.longest_induced_path_length(g)
        assert reg_lower_bound(g) <= r
        gaps[(n, r - ell, n - r)] += 1
        if ell > r or r > n:
            print("counterexample to the conjectured bounds:", G.to_graph6(g))

print("n  reg-ell  n-reg  graphs")
for (n, lo, hi), count in sorted(gaps.items()):
    print(f"{n}  {lo:>7}  {hi:>5}  {count:>6}")
