"""Simplicial complexes on ``[m]`` with bitmask vertex sets.

A vertex set is a plain ``int``: bit ``i - 1`` is set when vertex ``i`` is a
member. Set algebra is then ``|``, ``&``, ``~`` and ``int.bit_count``.
Labels exposed to users are 1-based, matching ``[m] = {1, ..., m}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

MAX_VERTICES = 63


class InvalidComplementError(ValueError):
    """A proposed complement generator is a face (or empty, or out of range)."""

    def __init__(self, message: str, subset: int | None = None):
        super().__init__(message)
        self.subset = subset


def to_mask(vertices: Iterable[int]) -> int:
    """Pack 1-based vertex labels into a bitmask."""
    mask = 0
    for v in vertices:
        if v < 1:
            raise ValueError(f"vertex labels are 1-based, got {v}")
        mask |= 1 << (v - 1)
    return mask


def members(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into its sorted 1-based labels."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def full_mask(m: int) -> int:
    return (1 << m) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def canonical_key(mask: int) -> tuple[int, int]:
    """Sort key: cardinality first, then the bitmask value."""
    return (mask.bit_count(), mask)


def format_set(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


def _maximal(masks: Iterable[int]) -> tuple[int, ...]:
    uniq = sorted(set(masks), key=canonical_key, reverse=True)
    kept: list[int] = []
    for s in uniq:
        if not any(is_subset(s, t) for t in kept):
            kept.append(s)
    return tuple(sorted(kept, key=canonical_key))


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of subsets of ``[m]``, stored by its facets.

    The empty simplex is always a face. Vertices of ``[m]`` that are not
    faces (ghost vertices) are allowed.
    """

    m: int
    facets: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.m <= MAX_VERTICES:
            raise ValueError(f"m must lie in [0, {MAX_VERTICES}], got {self.m}")
        top = full_mask(self.m)
        for f in self.facets:
            if f & ~top:
                raise ValueError(f"facet {format_set(f)} is not a subset of [{self.m}]")
        object.__setattr__(self, "facets", _maximal(self.facets) or (0,))

    @classmethod
    def from_facets(cls, m: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(m, tuple(to_mask(f) for f in facets))

    @classmethod
    def simplex(cls, m: int) -> "SimplicialComplex":
        return cls(m, (full_mask(m),))

    def __contains__(self, face: int) -> bool:
        return any(face & ~f == 0 for f in self.facets)

    @cached_property
    def faces(self) -> tuple[int, ...]:
        """All faces including the empty one, in canonical order."""
        seen: set[int] = set()
        for f in self.facets:
            sub = f
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return tuple(sorted(seen, key=canonical_key))

    @property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def is_simplex(self) -> bool:
        return self.facets == (full_mask(self.m),)

    def facet_lists(self) -> list[list[int]]:
        return [list(members(f)) for f in self.facets if f]

    def __repr__(self) -> str:
        fs = ", ".join(format_set(f) for f in self.facets)
        return f"SimplicialComplex(m={self.m}, facets=[{fs}])"


def all_nonfaces(K: SimplicialComplex) -> tuple[int, ...]:
    """Every nonempty subset of ``[m]`` that is not a face, canonically sorted."""
    faces = set(K.faces)
    return tuple(s for s in range(1, 1 << K.m) if s not in faces)


def missing_faces(K: SimplicialComplex) -> tuple[int, ...]:
    """Minimal non-faces of ``K`` in canonical order."""
    faces = set(K.faces)
    out = []
    for s in range(1, 1 << K.m):
        if s in faces:
            continue
        # all codimension-one subsets being faces is enough (downward closure)
        t = s
        ok = True
        while t:
            low = t & -t
            if s ^ low not in faces:
                ok = False
                break
            t ^= low
        if ok:
            out.append(s)
    return tuple(sorted(out, key=canonical_key))


def full_subcomplex(K: SimplicialComplex, J: int) -> SimplicialComplex:
    """Faces of ``K`` contained in ``J``; vertex labels are kept."""
    if J & ~full_mask(K.m):
        raise ValueError(f"{format_set(J)} is not a subset of [{K.m}]")
    return SimplicialComplex(K.m, tuple(f & J for f in K.facets))


def from_missing_faces(m: int, mf: Sequence[int]) -> SimplicialComplex:
    """Rebuild a complex as the family of sets containing no missing face."""
    faces = [s for s in range(1 << m) if not any(is_subset(t, s) for t in mf)]
    return SimplicialComplex(m, tuple(faces))


@dataclass(frozen=True)
class Complement:
    """An ordered list of non-faces that contains every missing face.

    The order is fixed at construction; exterior-algebra signs depend on it.
    """

    generators: tuple[int, ...]
    parent_m: int

    def __len__(self) -> int:
        return len(self.generators)

    def restricted(self, J: int) -> "Complement":
        """Generators contained in ``J``, original order kept."""
        return Complement(tuple(t for t in self.generators if is_subset(t, J)), self.parent_m)

    def validate(self, K: SimplicialComplex) -> None:
        seen = set()
        top = full_mask(K.m)
        for t in self.generators:
            if t == 0:
                raise InvalidComplementError("the empty set cannot be a complement generator", t)
            if t & ~top:
                raise InvalidComplementError(f"{format_set(t)} is not a subset of [{K.m}]", t)
            if t in K:
                raise InvalidComplementError(f"{format_set(t)} is a face of K", t)
            if t in seen:
                raise InvalidComplementError(f"{format_set(t)} appears twice", t)
            seen.add(t)
        for t in missing_faces(K):
            if t not in seen:
                raise InvalidComplementError(f"missing face {format_set(t)} is absent", t)


def make_complement(K: SimplicialComplex, extra: Iterable[int] = ()) -> Complement:
    """Missing faces in canonical order followed by the deduplicated extras."""
    gens = list(missing_faces(K))
    have = set(gens)
    for t in extra:
        if t in K:
            raise InvalidComplementError(f"{format_set(t)} is a face of K, not a valid complement generator", t)
        if t not in have:
            gens.append(t)
            have.add(t)
    P = Complement(tuple(gens), K.m)
    P.validate(K)
    return P


def minimal_complement(K: SimplicialComplex) -> Complement:
    return make_complement(K)


def maximal_complement(K: SimplicialComplex) -> Complement:
    """All non-faces; missing faces come first so the order stays canonical."""
    return make_complement(K, sorted(all_nonfaces(K), key=canonical_key))
