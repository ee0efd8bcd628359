"""Christoffel words, Markoff triples, and the trace map between them."""
from .conjecture import CollisionReport, cross_check, injectivity_scan
from .errors import DomainError, InvariantViolation
from .markoff import (
    MarkoffTriple,
    TripleProvenance,
    check_equation,
    flip_max,
    is_proper,
    markoff_tree,
    neighbors,
    triple_of_word,
    word_of_triple,
)
from .matrices import (
    Mat2,
    commutator,
    commutator_trace,
    fricke_residual,
    inverse,
    markoff_number,
    mu,
    power_trace_residuals,
    trace,
)
from .words import (
    FactoredWord,
    Slope,
    christoffel_tree,
    christoffel_word,
    is_christoffel,
    lattice_path,
    render_path,
    standard_factorization,
)

__version__ = "0.1.0"
