"""
Neighborhood sequences on a path
================================

A closed neighborhood sequence picks vertices one at a time, and every pick
must reach some vertex that no earlier closed neighborhood reached.  Open
sequences play the same game with open neighborhoods.  Here we look at
the five-vertex path.
"""

from nbseq import Graph, CnsSolution, OnsSolution, is_cns, is_ons, profile

# vertices 0-1-2-3-4
p5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])

# Picking 1 then 3 covers everything: N[1] = {0,1,2}, N[3] = {2,3,4}.
print("(1, 3) closed sequence:", is_cns(p5, (1, 3)))
# 2 after 1 adds vertex 3, so it is legal; picking 1 again is not.
print("(1, 2) closed sequence:", is_cns(p5, (1, 2)))

# %%
# Every achievable length of a dominating closed sequence, with one
# witness per length.  The longest one is the Grundy domination number.
cns = CnsSolution(p5)
for length in cns.lengths:
    print(f"  length {length}: {cns.witness(length)}")

# %%
# Open sequences.  A single vertex never dominates itself through its open
# neighborhood, so the shortest total dominating sequence is longer here.
ons = OnsSolution(p5)
print("total dominating lengths:", sorted(ons.total_lengths))
print("dominating lengths:      ", sorted(ons.dominating_lengths))
w = ons.dominating_witness(min(ons.dominating_lengths))
print("shortest dominating ONS:", w, "valid:", is_ons(p5, w))

# %%
# All six numbers at once.
print(profile(p5))
