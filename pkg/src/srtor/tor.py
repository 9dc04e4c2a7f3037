"""Bigraded Tor of a face ring by three routes, plus Betti tables.

* complement route: homology of the ``J``-graded exterior complex of a
  simplicial complement;
* Hochster route: reduced cohomology of the full subcomplex ``K_J`` in
  degree ``|J| - i - 1``;
* nerve route (``J = [m]`` only): reduced homology of the nerve of the
  complement, shifted up by two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .complement import DEFAULT_MAX_GENS, ComplexTooLargeError, build_complement_complex, build_nerve_complex
from .complexes import (
    Complement,
    SimplicialComplex,
    canonical_key,
    format_set,
    full_mask,
    full_subcomplex,
    is_subset,
    maximal_complement,
    members,
    minimal_complement,
    missing_faces,
)
from .linalg import QQ, ZZ, Coefficients, GF, HomologyGroup, NonComposableError
from .simplicial import reduced_cohomology_groups

ROUTES = ("complement", "hochster")


def subsets_in_order(m: int) -> list[int]:
    """All ``J`` of ``[m]``, by cardinality and then bitmask value."""
    return sorted(range(1 << m), key=canonical_key)


def complement_groups(P: Complement, J: int, coeffs: Coefficients, max_gens: int = DEFAULT_MAX_GENS) -> dict[int, HomologyGroup]:
    """Nonzero ``H_i`` of the ``J``-graded complement complex."""
    return build_complement_complex(P, J, max_gens).homology(coeffs)


def hochster_groups(K: SimplicialComplex, J: int, coeffs: Coefficients) -> dict[int, HomologyGroup]:
    """Nonzero ``H~^{|J|-i-1}(K_J)`` keyed by ``i``."""
    size = J.bit_count()
    groups = reduced_cohomology_groups(full_subcomplex(K, J), coeffs)
    return {size - k - 1: H for k, H in groups.items()}


def nerve_groups(P: Complement, coeffs: Coefficients) -> dict[int, HomologyGroup]:
    """Nonzero ``H~_{n-2}`` of the nerve, keyed by ``n``."""
    if not len(P):
        raise ValueError("the nerve comparison needs a non-empty complement (K must not be a simplex)")
    return {k + 2: H for k, H in build_nerve_complex(P).homology(coeffs).items()}


def tor_via_complement(K: SimplicialComplex, P: Complement, i: int, J: int, coeffs: Coefficients,
                       max_gens: int = DEFAULT_MAX_GENS) -> HomologyGroup:
    return complement_groups(P, J, coeffs, max_gens).get(i, HomologyGroup())


def tor_via_hochster(K: SimplicialComplex, i: int, J: int, coeffs: Coefficients) -> HomologyGroup:
    return hochster_groups(K, J, coeffs).get(i, HomologyGroup())


def tor_via_nerve(K: SimplicialComplex, P: Complement, n: int, coeffs: Coefficients) -> HomologyGroup:
    return nerve_groups(P, coeffs).get(n, HomologyGroup())


@dataclass(frozen=True)
class BettiTable:
    """Sparse map ``(i, J) -> Tor_{i,J}``; zero groups are left out."""

    m: int
    coeffs: Coefficients
    entries: dict[tuple[int, int], HomologyGroup]

    def __post_init__(self):
        clean = {k: H for k, H in self.entries.items() if not H.is_zero}
        ordered = dict(sorted(clean.items(), key=lambda kv: (kv[0][0], canonical_key(kv[0][1]))))
        object.__setattr__(self, "entries", ordered)
        if self.coeffs.is_field and any(H.torsion for H in ordered.values()):
            raise ValueError("torsion in a table over a field")

    def __getitem__(self, key: tuple[int, int]) -> HomologyGroup:
        return self.entries.get(key, HomologyGroup())

    def __len__(self) -> int:
        return len(self.entries)

    def ranks(self) -> dict[tuple[int, int], int]:
        return {k: H.free_rank for k, H in self.entries.items()}

    def rows(self) -> list[tuple[int, tuple[int, ...], int, tuple[int, ...]]]:
        return [(i, members(J), H.free_rank, H.torsion) for (i, J), H in self.entries.items()]

    def by_total_degree(self) -> dict[int, int]:
        """Free ranks summed over ``2|J| - i``."""
        out: dict[int, int] = {}
        for (i, J), H in self.entries.items():
            d = 2 * J.bit_count() - i
            out[d] = out.get(d, 0) + H.free_rank
        return {d: c for d, c in sorted(out.items()) if c}


def _needed_subsets(K: SimplicialComplex) -> list[int]:
    # K_J is a simplex unless J holds a missing face; then only J = {} can carry Tor
    mf = missing_faces(K)
    return [J for J in subsets_in_order(K.m) if J == 0 or any(is_subset(t, J) for t in mf)]


def check_size(P: Complement, subsets: Iterable[int], max_gens: int) -> None:
    for J in subsets:
        n = sum(1 for t in P.generators if is_subset(t, J))
        if n > max_gens:
            raise ComplexTooLargeError(J, n, max_gens)


def betti_table(K: SimplicialComplex, coeffs: Coefficients, route: str = "complement",
                complement: Complement | None = None, max_gens: int = DEFAULT_MAX_GENS) -> BettiTable:
    """All nonzero ``Tor_{i,J}`` through one route.

    The complement route defaults to the minimal complement and refuses up
    front (``ComplexTooLargeError``) if any ``J`` would exceed ``max_gens``.
    """
    if route not in ROUTES:
        raise ValueError(f"route must be one of {ROUTES}, got {route!r}")
    subsets = _needed_subsets(K)
    entries = {}
    if route == "complement":
        P = complement if complement is not None else minimal_complement(K)
        check_size(P, subsets, max_gens)
        for J in subsets:
            for i, H in complement_groups(P, J, coeffs, max_gens).items():
                entries[(i, J)] = H
    else:
        for J in subsets:
            for i, H in hochster_groups(K, J, coeffs).items():
                entries[(i, J)] = H
    return BettiTable(K.m, coeffs, entries)


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial in ``t`` stored as ``{exponent: coefficient}``."""

    coeffs: dict[int, int]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {e: c for e, c in sorted(self.coeffs.items()) if c})

    def __call__(self, t):
        return sum(c * t**e for e, c in self.coeffs.items())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.coeffs.items():
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if not mono:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def poincare_polynomial(table: BettiTable) -> Polynomial:
    """Betti numbers of the moment-angle complex: ``sum rank * t^(2|J| - i)``."""
    if not table.coeffs.is_field:
        raise ValueError("Poincare polynomials need field coefficients")
    return Polynomial(table.by_total_degree())


# ---------------------------------------------------------------------------
# verification


@dataclass
class Comparison:
    """One ``(i, J)`` slot compared across routes for one coefficient ring."""

    check: str
    coeffs: Coefficients
    i: int | None
    J: int
    results: dict[str, HomologyGroup | str]

    @property
    def ok(self) -> bool:
        vals = list(self.results.values())
        return all(isinstance(v, HomologyGroup) for v in vals) and all(v == vals[0] for v in vals)

    def describe(self) -> str:
        res = "; ".join(f"{k}: {v}" for k, v in self.results.items())
        where = "all i" if self.i is None else f"i={self.i}"
        return f"[{self.check}] {self.coeffs} {where} J={format_set(self.J)}: {res}"


@dataclass
class VerificationReport:
    """Every populated comparison, plus checks that could not be run."""

    comparisons: list[Comparison] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.comparisons)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def mismatches(self) -> list[Comparison]:
        return [c for c in self.comparisons if not c.ok]


def _safe_groups(fn, *args) -> dict[int, HomologyGroup] | str:
    try:
        return fn(*args)
    except _BuildFailed as exc:
        return str(exc)
    except (NonComposableError, ComplexTooLargeError) as exc:
        return f"error: {exc}"


def _safe_build(P: Complement, J: int, max_gens: int):
    try:
        return build_complement_complex(P, J, max_gens)
    except ComplexTooLargeError as exc:
        return f"error: {exc}"


def _homology_of(built, coeffs: Coefficients) -> dict[int, HomologyGroup]:
    if isinstance(built, str):
        raise _BuildFailed(built)
    return built.homology(coeffs)


class _BuildFailed(Exception):
    pass


def _compare(report: VerificationReport, check: str, coeffs: Coefficients, J: int, routes: dict) -> None:
    degrees: set[int] = set()
    for g in routes.values():
        if isinstance(g, dict):
            degrees.update(g)
    if any(isinstance(g, str) for g in routes.values()):
        # a route failed outright: one entry for the whole of J
        report.comparisons.append(Comparison(check, coeffs, None, J, {
            name: (g if isinstance(g, str) else ", ".join(f"H_{i}={H}" for i, H in g.items()) or "0")
            for name, g in routes.items()}))
        return
    for i in sorted(degrees):
        res = {name: (g if isinstance(g, str) else g.get(i, HomologyGroup())) for name, g in routes.items()}
        report.comparisons.append(Comparison(check, coeffs, i, J, res))


def verify(K: SimplicialComplex, P: Complement | None = None,
           coeffs_list: Sequence[Coefficients] = (ZZ, QQ, GF(2)),
           max_gens: int = DEFAULT_MAX_GENS) -> VerificationReport:
    """Cross-check the routes on every ``J`` and every listed coefficient ring.

    * complement vs Hochster on all ``J``;
    * complement vs nerve (shifted by two) on ``J = [m]`` when ``P`` is non-empty;
    * minimal-style ``P`` vs the maximal complement on all ``J``, when the
      maximal one fits under ``max_gens``.
    """
    if P is None:
        P = minimal_complement(K)
    P.validate(K)
    report = VerificationReport()
    top = full_mask(K.m)
    subsets = subsets_in_order(K.m)
    try:
        check_size(P, subsets, max_gens)
    except ComplexTooLargeError as exc:
        report.skipped.append(f"complement route: {exc}")
        return report
    Pmax = maximal_complement(K)
    try:
        check_size(Pmax, subsets, max_gens)
    except ComplexTooLargeError as exc:
        Pmax = None
        report.skipped.append(f"maximal complement: {exc}")
    # J outermost so each complex is built and reduced once for all rings
    for J in subsets:
        built = _safe_build(P, J, max_gens)
        built_max = _safe_build(Pmax, J, max_gens) if Pmax is not None and Pmax.generators != P.generators else None
        for coeffs in coeffs_list:
            comp = _safe_groups(_homology_of, built, coeffs)
            _compare(report, "hochster", coeffs, J, {"complement": comp, "hochster": hochster_groups(K, J, coeffs)})
            if J == top and len(P):
                _compare(report, "nerve", coeffs, J, {"complement": comp, "nerve": nerve_groups(P, coeffs)})
            if built_max is not None:
                _compare(report, "maximal", coeffs, J,
                         {"complement": comp, "maximal": _safe_groups(_homology_of, built_max, coeffs)})
    report.comparisons.sort(key=lambda c: (coeffs_list.index(c.coeffs), c.check != "hochster", c.check,
                                           canonical_key(c.J), -1 if c.i is None else c.i))
    if not len(P):
        report.skipped.append("nerve: K is a simplex, the complement is empty")
    return report


def iter_table_diff(a: BettiTable, b: BettiTable) -> Iterator[tuple[int, int, HomologyGroup, HomologyGroup]]:
    for key in sorted(set(a.entries) | set(b.entries), key=lambda k: (k[0], canonical_key(k[1]))):
        if a[key] != b[key]:
            yield key[0], key[1], a[key], b[key]
