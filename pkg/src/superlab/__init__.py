"""Exact verification toolkit for identities of nonassociative superalgebras.

The package builds finite-dimensional superalgebras over the rationals
extended by a primitive cube root of unity, superizes multilinear identities
by the Koszul sign rule, and checks them by exhaustive evaluation on graded
bases.  Grassmann envelopes, Young symmetrizers on associative words, and a
catalog of concrete algebras round out the toolkit; a command line runner
replays whole check suites from a TOML manifest.
"""

from .scalars import EPS, ONE, ZERO, QEps, format_scalar, parse_scalar, qeps
from .polynomials import (
    Monomial,
    Poly,
    SuperPoly,
    associator,
    commutator,
    eps_bracket,
    expand_operator_word,
    format_poly,
    identity_library,
    jacobian,
    jordan_product,
    koszul_sign,
    linearize_full,
    linearize_partial,
    monomial,
    multilinearize,
    parse_poly,
    poly,
    superize,
)
from .superalgebras import (
    Element,
    GrassmannEnvelope,
    SuperAlgebra,
    Witness,
    envelope,
    evaluate,
    from_json,
    grassmann,
    is_identity,
    is_superidentity,
    mul,
    operator_relation_holds,
    split_null_extension,
    subalgebra_closure,
    to_json,
    validate,
)
from .tableaux import (
    AssocPoly,
    YoungTable,
    assoc_word,
    eps_fkn,
    phi,
    phi_row,
    psi,
    psi_col,
    rect_family,
    stabilizers,
    substitute_super,
)
from .catalog import (
    CONSTRUCTORS,
    FAMILIES,
    CatalogEntry,
    ConformanceReport,
    alt_A,
    alt_B,
    alt_Bp,
    conformance,
    defining_identities,
    eps_A,
    jord_A,
    jord_Bn,
    jord_core,
    jord_fn,
    jordan_basis_monomials,
    malc_A,
    malc_An,
    malc_barAn,
    malc_fn,
    malc_gn,
    malc_superAn,
    metab_Ar,
    metab_As,
    nilalt_basis_words,
    run_smoke,
    smoke_equations,
    smoke_relations,
    standard_entries,
)
from .suites import (
    SUITE_NAMES,
    CheckSpec,
    Report,
    SuiteError,
    load_manifest,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "QEps",
    "qeps",
    "EPS",
    "ONE",
    "ZERO",
    "parse_scalar",
    "format_scalar",
    "Monomial",
    "Poly",
    "SuperPoly",
    "monomial",
    "poly",
    "koszul_sign",
    "superize",
    "expand_operator_word",
    "linearize_full",
    "linearize_partial",
    "multilinearize",
    "commutator",
    "jordan_product",
    "associator",
    "jacobian",
    "eps_bracket",
    "identity_library",
    "format_poly",
    "parse_poly",
    "SuperAlgebra",
    "Element",
    "Witness",
    "GrassmannEnvelope",
    "validate",
    "mul",
    "evaluate",
    "is_identity",
    "is_superidentity",
    "grassmann",
    "envelope",
    "split_null_extension",
    "subalgebra_closure",
    "operator_relation_holds",
    "to_json",
    "from_json",
    "YoungTable",
    "AssocPoly",
    "assoc_word",
    "stabilizers",
    "phi",
    "psi",
    "substitute_super",
    "phi_row",
    "psi_col",
    "eps_fkn",
    "rect_family",
    "CatalogEntry",
    "ConformanceReport",
    "conformance",
    "defining_identities",
    "alt_A",
    "alt_B",
    "alt_Bp",
    "nilalt_basis_words",
    "jord_A",
    "jord_core",
    "jord_Bn",
    "jord_fn",
    "jordan_basis_monomials",
    "malc_A",
    "malc_An",
    "malc_fn",
    "malc_gn",
    "malc_superAn",
    "malc_barAn",
    "metab_Ar",
    "metab_As",
    "eps_A",
    "smoke_equations",
    "smoke_relations",
    "run_smoke",
    "standard_entries",
    "CONSTRUCTORS",
    "FAMILIES",
    "SuiteError",
    "CheckSpec",
    "Report",
    "SUITE_NAMES",
    "load_manifest",
    "run_suite",
    "__version__",
]
