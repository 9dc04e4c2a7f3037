"""Exact integer ranks and torsion from boundary matrices."""
# %%
from srtor.corpus import corpus
from srtor.linalg import GF, QQ, ZZ, IntMatrix, rank_fraction_free, smith_normal_form
from srtor.simplicial import reduced_chain_complex, reduced_cohomology_groups, reduced_homology

M = IntMatrix.from_dense([[2, 0], [0, 3]])
print("invariant factors, rank:", smith_normal_form(M))
print("fraction-free rank:", rank_fraction_free(M))

# %% the projective plane on six vertices
rp2 = corpus()["rp2_6"]
C = reduced_chain_complex(rp2)
print("cells by dimension:", {k: C.rank(k) for k in sorted(C.degrees)})
print("d_2 invariant factors (last few):", smith_normal_form(C.differential(2))[0][-3:])

# %% homology over the integers, the rationals and F_2
for c in (ZZ, QQ, GF(2)):
    print(c, "homology  ", {k: str(H) for k, H in reduced_homology(rp2, c).items()})
    print(c, "cohomology", {k: str(H) for k, H in reduced_cohomology_groups(rp2, c).items()})
