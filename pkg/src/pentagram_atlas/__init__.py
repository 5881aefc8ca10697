"""Finite-geometric classification of three-qubit Mermin pentagrams."""
from .classifier import (
    AtlasRow,
    ContextKind,
    PentagramIndex,
    TypeSignature,
    build_atlas,
    context_kind_census,
    klein_census,
    load_table1,
    signature,
    structural_suite,
    two_edge_neighbors,
)
from .enumerator import (
    ContextGraph,
    Pentagram,
    enumerate_contexts,
    enumerate_pentagrams,
    pentagrams_on_quadric,
    validate_pentagram,
)
from .pauli import OBSERVABLES, ObservableKind, PauliObservable, Phase, kind, is_symmetric, parse, signed_product, symplectic_form
from .polar_space import (
    KLEIN_QUADRIC,
    Context,
    FanoPlane,
    IsotropicLine,
    PlaneClass,
    classify_plane,
    enumerate_lines,
    enumerate_planes,
    extend_to_fano,
    line_at_infinity,
    make_context,
    make_line,
    on_quadric,
)

__version__ = "0.1.0"

__all__ = [
    "load_table1",
    "AtlasRow",
    "Context",
    "ContextGraph",
    "ContextKind",
    "FanoPlane",
    "IsotropicLine",
    "KLEIN_QUADRIC",
    "OBSERVABLES",
    "ObservableKind",
    "PauliObservable",
    "Pentagram",
    "PentagramIndex",
    "Phase",
    "PlaneClass",
    "TypeSignature",
    "build_atlas",
    "classify_plane",
    "context_kind_census",
    "enumerate_contexts",
    "enumerate_lines",
    "enumerate_pentagrams",
    "enumerate_planes",
    "extend_to_fano",
    "is_symmetric",
    "kind",
    "klein_census",
    "line_at_infinity",
    "make_context",
    "make_line",
    "on_quadric",
    "parse",
    "pentagrams_on_quadric",
    "signature",
    "signed_product",
    "structural_suite",
    "symplectic_form",
    "two_edge_neighbors",
    "validate_pentagram",
]
