#!/usr/bin/env python3
"""H(r,d) versus the natural rival constructions.

Among d-regular r-graphs one might first guess that complete r-partite
r-graphs (when d = t^(r-1)) or 3-partite transversal designs (the linear
candidates) maximize the number of independent sets.  Comparing disjoint
unions at a common vertex count L = lcm of the block sizes keeps everything
in exact integers: H wins strictly whenever r >= 3.
"""

from hyperind import compare_constructions

print("complete r-partite rivals (d = t^(r-1)):")
for r, t in [(2, 2), (3, 2), (3, 3), (4, 2)]:
    rep = compare_constructions(r, t=t)
    print(f"  r={r} t={t} (d={rep.d}): ind(H)={rep.ind_hrd} "
          f"ind(rival)={rep.ind_rival}; at L={rep.L}: "
          f"{rep.hrd_power} vs {rep.rival_power} -> {rep.winner}")

print("\ncyclic 3-partite transversal designs (d = m):")
for m in (2, 3, 4, 5):
    rep = compare_constructions(3, m=m)
    print(f"  m={m}: ind(H)={rep.ind_hrd} ind(rival)={rep.ind_rival}; "
          f"at L={rep.L}: {rep.hrd_power} vs {rep.rival_power} -> {rep.winner}")
