"""
Total and open uniformity on small graphs
=========================================

For open neighborhood sequences there are two natural questions: are all
total dominating sequences the same length (total uniform), and are all
dominating ones (open uniform)?  We tally every labeled graph on up to six
vertices and compare against the complete multipartite graphs.
"""

from collections import Counter

from nbseq import (
    all_labeled_graphs,
    classify_open_uniform,
    classify_total_uniform,
    gen_complete_bipartite,
    is_complete_multipartite,
)

star = gen_complete_bipartite(1, 3)
print("star K_{1,3}: total", classify_total_uniform(star).outcome(), " open", classify_open_uniform(star).outcome())

# %%
# The census.  Graphs with an isolated vertex have no total dominating
# sequence at all and are reported as undefined.
total, opened = Counter(), Counter()
multipartite_total = multipartite_open = 0
for n in range(1, 7):
    for g in all_labeled_graphs(n):
        t = classify_total_uniform(g)
        o = classify_open_uniform(g)
        total[t.outcome()] += 1
        opened[o.outcome()] += 1
        parts = is_complete_multipartite(g)
        if t.k == 2:
            multipartite_total += parts is not None
        if o.k == 2:
            multipartite_open += parts is not None and min(map(len, parts)) >= 2

print("total:", sorted(total.items(), key=str))
print("open: ", sorted(opened.items(), key=str))
print("total 2-uniform that are complete multipartite:", multipartite_total, "of", total["uniform", 2])
print("open 2-uniform with all parts >= 2:", multipartite_open, "of", opened["uniform", 2])
