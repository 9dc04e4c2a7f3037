"""Bigraded Tor of Stanley-Reisner face rings, computed three ways."""

from .chain import FreeChainComplex
from .complement import (
    ComplexTooLargeError,
    build_complement_complex,
    build_full_exterior_complex,
    build_nerve_complex,
)
from .complexes import (
    Complement,
    InvalidComplementError,
    SimplicialComplex,
    all_nonfaces,
    full_subcomplex,
    make_complement,
    maximal_complement,
    minimal_complement,
    missing_faces,
    to_mask,
)
from .io import ComplexDocument, DocumentError, parse_complex, serialize
from .linalg import GF, QQ, ZZ, Coefficients, HomologyGroup, IntMatrix, NonComposableError, smith_normal_form
from .simplicial import reduced_cohomology, reduced_homology
from .tor import (
    BettiTable,
    VerificationReport,
    betti_table,
    poincare_polynomial,
    tor_via_complement,
    tor_via_hochster,
    tor_via_nerve,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "FreeChainComplex",
    "ComplexTooLargeError",
    "build_complement_complex",
    "build_full_exterior_complex",
    "build_nerve_complex",
    "Complement",
    "InvalidComplementError",
    "SimplicialComplex",
    "all_nonfaces",
    "full_subcomplex",
    "make_complement",
    "maximal_complement",
    "minimal_complement",
    "missing_faces",
    "to_mask",
    "ComplexDocument",
    "DocumentError",
    "parse_complex",
    "serialize",
    "GF",
    "QQ",
    "ZZ",
    "Coefficients",
    "HomologyGroup",
    "IntMatrix",
    "NonComposableError",
    "smith_normal_form",
    "reduced_cohomology",
    "reduced_homology",
    "BettiTable",
    "VerificationReport",
    "betti_table",
    "poincare_polynomial",
    "tor_via_complement",
    "tor_via_hochster",
    "tor_via_nerve",
    "verify",
]
