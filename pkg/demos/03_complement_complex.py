"""Building the exterior complex of a complement one multidegree at a time."""
# %%
from srtor.complement import build_complement_complex, build_full_exterior_complex, monomial_labels
from srtor.complexes import format_set, full_mask, minimal_complement
from srtor.corpus import corpus
from srtor.linalg import ZZ

square = corpus()["cycle4"]
P = minimal_complement(square)
top = full_mask(4)

# %% only the product of both diagonals covers all four vertices
C = build_complement_complex(P, top)
for n in sorted(C.degrees):
    print(n, [[format_set(t) for t in monomial_labels(P, top, int(u))] for u in C.degrees[n]])
print("H:", {n: str(H) for n, H in C.homology(ZZ).items()})

# %% the octagon: about 830k generators, collapsed before any elimination
octagon = corpus()["cycle8"]
P8 = minimal_complement(octagon)
C8 = build_complement_complex(P8, full_mask(8))
print("generators:", C8.size, "after reduction:", C8.reduced().size)
print("H:", {n: str(H) for n, H in C8.homology(ZZ).items()})

# %% without the covering condition the complex is acyclic
F = build_full_exterior_complex(P8)
print("full exterior complex:", F.size, "cells, homology", F.homology(ZZ))
