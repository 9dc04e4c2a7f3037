"""JSON documents describing a simplicial complex on ``[m]``.

A document looks like::

    {"name": "cycle4", "m": 4, "facets": [[1, 2], [2, 3], [3, 4], [1, 4]],
     "complement": [[1, 3]]}

``name`` and ``complement`` are optional. Vertex labels are 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .complexes import (
    MAX_VERTICES,
    Complement,
    InvalidComplementError,
    SimplicialComplex,
    canonical_key,
    format_set,
    make_complement,
    members,
    to_mask,
)


class DocumentError(ValueError):
    """Malformed or inconsistent complex document."""


@dataclass(frozen=True)
class ComplexDocument:
    m: int
    facets: tuple[tuple[int, ...], ...]
    complement: tuple[tuple[int, ...], ...] | None = None
    name: str | None = None

    @property
    def complex(self) -> SimplicialComplex:
        return SimplicialComplex.from_facets(self.m, self.facets)

    def given_complement(self) -> Complement | None:
        """The document's complement entries, topped up with the missing faces."""
        if self.complement is None:
            return None
        return make_complement(self.complex, [to_mask(c) for c in self.complement])

    def label(self) -> str:
        return self.name or f"complex on [{self.m}]"


def _int_lists(value, field_name: str, m: int) -> list[tuple[int, ...]]:
    if not isinstance(value, list):
        raise DocumentError(f"{field_name} must be a list of integer lists")
    out = []
    for entry in value:
        if not isinstance(entry, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in entry):
            raise DocumentError(f"{field_name} entry {entry!r} is not a list of integers")
        for v in entry:
            if not 1 <= v <= m:
                raise DocumentError(f"vertex {v} in {field_name} is outside [1, {m}]")
        if len(set(entry)) != len(entry):
            raise DocumentError(f"{field_name} entry {entry!r} repeats a vertex")
        out.append(tuple(sorted(entry)))
    return out


def document_from_dict(data) -> ComplexDocument:
    if not isinstance(data, dict):
        raise DocumentError("a complex document must be a JSON object")
    unknown = set(data) - {"m", "facets", "complement", "name"}
    if unknown:
        raise DocumentError(f"unknown fields: {', '.join(sorted(unknown))}")
    m = data.get("m")
    if not isinstance(m, int) or isinstance(m, bool) or not 1 <= m <= MAX_VERTICES:
        raise DocumentError(f"m must be an integer in [1, {MAX_VERTICES}], got {m!r}")
    if "facets" not in data:
        raise DocumentError("missing field: facets")
    facets = _int_lists(data["facets"], "facets", m)
    K = SimplicialComplex.from_facets(m, facets)
    # canonical form: maximal faces only, in canonical order
    facets = [members(f) for f in K.facets]
    complement = None
    if data.get("complement") is not None:
        entries = _int_lists(data["complement"], "complement", m)
        for e in entries:
            if to_mask(e) in K:
                raise DocumentError(f"complement entry {format_set(to_mask(e))} is a face")
        complement = tuple(sorted(set(entries), key=lambda e: canonical_key(to_mask(e))))
        try:
            make_complement(K, [to_mask(e) for e in complement]).validate(K)
        except InvalidComplementError as exc:
            raise DocumentError(str(exc)) from exc
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError("name must be a string")
    return ComplexDocument(m, tuple(facets), complement, name)


def parse_complex(text: str) -> ComplexDocument:
    """Parse and validate a JSON document."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON: {exc}") from exc
    return document_from_dict(data)


def serialize(doc: ComplexDocument) -> str:
    """Canonical one-line JSON; ``parse_complex`` reads it back unchanged."""
    data: dict = {}
    if doc.name is not None:
        data["name"] = doc.name
    data["m"] = doc.m
    data["facets"] = [list(f) for f in doc.facets]
    if doc.complement is not None:
        data["complement"] = [list(c) for c in doc.complement]
    return json.dumps(data)


def document_for(K: SimplicialComplex, name: str | None = None) -> ComplexDocument:
    return ComplexDocument(K.m, tuple(members(f) for f in K.facets), None, name)
