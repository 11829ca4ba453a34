#!/usr/bin/env python3
"""Tour of the extremal family H(r,d) and its closed-form count.

H(r,d) lives on r*d vertices: d marked vertices, each joined to every edge
of an (r-1)-uniform perfect matching on the remaining (r-1)*d vertices.
H(2,d) is the complete bipartite graph K_{d,d}.  The number of independent
sets has a closed form, which we validate here against exhaustive counting.
"""

from hyperind import build_hrd, count_brute, ind_hrd_formula, \
    quasi_bipartition, write_hypergraph

print("=== H(3,2): 6 vertices, 4 edges, 2-regular ===")
g, layout = build_hrd(3, 2)
print(write_hypergraph(g))
print(f"marked vertices: {sorted(layout.marked)}")
print(f"matching groups: {list(layout.groups)}")

cert = quasi_bipartition(g)
print(f"\nquasi-bipartite with A = {sorted(cert.a_side)}")
for a in sorted(cert.a_side):
    print(f"  link of {a}: {list(cert.link_matchings[a])} (a perfect matching)")

print("\n=== closed form vs brute force ===")
print(f"{'r':>3} {'d':>3} {'formula':>10} {'brute':>10}")
for r in (2, 3, 4):
    for d in (1, 2, 3):
        formula = ind_hrd_formula(r, d)
        brute = count_brute(build_hrd(r, d)[0])
        status = "ok" if formula == brute else "MISMATCH"
        print(f"{r:>3} {d:>3} {formula:>10} {brute:>10}  {status}")
