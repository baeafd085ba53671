"""Exact classification of genus-2 curves with dihedral automorphism groups.

The heavy lifting lives in the C++ extension ``_gd2core``; this package
re-exports its functions under stable names. The extension is found either
inside the installed package (scikit-build layout) or on ``sys.path`` when
running against a plain CMake build tree.
"""

try:
    from . import _gd2core as _core
except ImportError:  # plain cmake build: extension sits on sys.path
    import _gd2core as _core

DomainError = _core.DomainError
ObstructedError = _core.ObstructedError
ParseError = _core.ParseError
SearchBoundError = _core.SearchBoundError

absolute_invariant = _core.absolute_invariant
build_model = _core.build_model
classify_type = _core.classify_type
dedekind_eta = _core.dedekind_eta
endomorphism_algebra = _core.endomorphism_algebra
hauptmodul_h0 = _core.hauptmodul_h0
hilbert_symbol = _core.hilbert_symbol
invariants = _core.invariants
is_cm_parameter = _core.is_cm_parameter
make_galois_data = _core.make_galois_data
poly_discriminant = _core.poly_discriminant
quotient_j_invariants = _core.quotient_j_invariants
realize_matrices_check = _core.realize_matrices_check
solve_conic = _core.solve_conic
squarefree_part = _core.squarefree_part
twist_relation = _core.twist_relation
verify_qcurve_identity = _core.verify_qcurve_identity

__all__ = [n for n in dir() if not n.startswith("_")]
