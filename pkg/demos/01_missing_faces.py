"""Missing faces, non-faces and the two canonical complements of a square."""
# %%
from srtor.complexes import SimplicialComplex, all_nonfaces, format_set, full_subcomplex, maximal_complement, minimal_complement, missing_faces, to_mask

square = SimplicialComplex.from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])
print(square)

# %% minimal non-faces are the two diagonals
print("missing faces:", [format_set(t) for t in missing_faces(square)])
print("all non-faces:", [format_set(t) for t in all_nonfaces(square)])

# %% the complement used by default, and the largest possible one
print("minimal:", [format_set(t) for t in minimal_complement(square).generators])
print("maximal:", [format_set(t) for t in maximal_complement(square).generators])

# %% restricting to a diagonal leaves two isolated points
print(full_subcomplex(square, to_mask([1, 3])))

# %% a ghost vertex is itself a missing face
ghost = SimplicialComplex.from_facets(3, [[1, 2]])
print("ghost:", [format_set(t) for t in missing_faces(ghost)])
