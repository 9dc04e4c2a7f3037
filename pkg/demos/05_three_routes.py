"""Cross-checking the complement, full-subcomplex and nerve computations."""
# %%
from srtor.complement import build_nerve_complex, injected_sign_fault
from srtor.complexes import minimal_complement
from srtor.corpus import corpus
from srtor.linalg import GF, ZZ
from srtor.tor import verify

K = corpus()

# %%
for name in ("cycle4", "rp2_6", "octahedron"):
    report = verify(K[name], coeffs_list=(ZZ, GF(2), GF(3)))
    kinds = sorted({c.check for c in report.comparisons})
    print(f"{name:12s} {report.verdict}  {len(report.comparisons)} comparisons {kinds}")
    for note in report.skipped:
        print("   skipped", note)

# %% the nerve of the octahedron's three antipodal pairs
N = build_nerve_complex(minimal_complement(K["octahedron"]))
print("nerve faces:", {k: N.rank(k) for k in sorted(N.degrees)})

# %% a single flipped sign is caught
with injected_sign_fault():
    bad = verify(K["cycle4"], coeffs_list=(ZZ,))
print("with a flipped sign:", bad.verdict)
for c in bad.mismatches()[:2]:
    print("  ", c.describe())
