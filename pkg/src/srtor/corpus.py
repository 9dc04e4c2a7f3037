"""Named test complexes shipped with the package as JSON documents."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .complexes import SimplicialComplex
from .io import ComplexDocument, parse_complex


@lru_cache(maxsize=None)
def _documents() -> dict[str, ComplexDocument]:
    out = {}
    for entry in resources.files("srtor").joinpath("data").iterdir():
        if entry.name.endswith(".json"):
            doc = parse_complex(entry.read_text())
            out[doc.name or entry.name[:-5]] = doc
    return dict(sorted(out.items(), key=lambda kv: (kv[1].m, kv[0])))


def corpus_names() -> list[str]:
    """Names sorted by vertex count, then alphabetically."""
    return list(_documents())


def load(name: str) -> ComplexDocument:
    try:
        return _documents()[name]
    except KeyError:
        raise KeyError(f"no corpus entry named {name!r}") from None


def corpus() -> dict[str, SimplicialComplex]:
    return {name: doc.complex for name, doc in _documents().items()}
