"""
Exact A(n, d) for tiny n
========================

All n^(n-2) trees become vertices of a conflict graph; an (n, d) code is
an independent set in it.  Branch and bound finds the maximum.  Budgets
count search nodes, so reruns are bit-identical.
"""

from __future__ import annotations

import time

from treecodes.oracle import SearchBudget, conflict_graph, exact_A, greedy_code

for n in (4, 5):
    for d in range(1, n):
        g = conflict_graph(n, d)
        t0 = time.perf_counter()
        r = exact_A(n, d)
        greedy = max(len(greedy_code(n, d, s)) for s in range(20))
        print(f"n={n} d={d}: {g.order} trees, max conflict degree {g.max_degree:3d}, "
              f"A={r.value:3d} certified={r.certified} nodes={r.nodes:7d} "
              f"greedy best={greedy:3d} ({time.perf_counter() - t0:.2f}s)")

# with a tiny budget the answer is only a lower bound
r = exact_A(5, 2, SearchBudget(1000))
print("A(5,2) with 1000 nodes:", r.value, "certified" if r.certified else "not certified")
