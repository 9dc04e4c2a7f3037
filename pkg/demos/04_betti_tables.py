"""Bigraded Betti tables and moment-angle Poincare polynomials."""
# %%
from srtor.corpus import corpus
from srtor.linalg import GF, QQ, ZZ
from srtor.tor import betti_table, poincare_polynomial

K = corpus()

# %%
for name in ("cycle4", "cycle5", "cycle6", "octahedron", "boundary_simplex3"):
    t = betti_table(K[name], QQ)
    print(f"{name:18s} {poincare_polynomial(t)}")

# %% torsion only shows up over Z, and changes the answer over F_2
rp2 = K["rp2_6"]
tz = betti_table(rp2, ZZ)
print("Z torsion:", [(i, J, tors) for i, J, r, tors in tz.rows() if tors])
print("Q:  ", poincare_polynomial(betti_table(rp2, QQ)))
print("F_2:", poincare_polynomial(betti_table(rp2, GF(2))))
