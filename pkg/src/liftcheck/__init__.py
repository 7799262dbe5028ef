"""Exact weak-liftability checker for cyclic modules over hypersurface quotients."""

from .corpus import corpus_names, run_all, run_fixture
from .domains import GF, QQ, ZZ, Scalar
from .groebner import (
    GroebnerBasis,
    MembershipCertificate,
    clear_cache,
    eliminate,
    groebner_basis,
    normal_form,
)
from .ideals import (
    IdealHandle,
    SocleData,
    canonical_generators,
    colon,
    contains,
    dimension,
    equal_ideals,
    ideal,
    ideal_member,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    is_nonzerodivisor,
    maximal_ideal,
    radical_member,
    reduced_groebner,
    saturate,
    socle_data,
    symbolic_square,
    zero_ideal,
)
from .liftcrit import (
    BettiReport,
    CriterionCheck,
    LiftDecision,
    Verdict,
    Witness,
    betti_relations,
    certify_lift_cyclic,
    graded_obstruction,
    group_ring_weaklift,
    obstruction_suite,
    weaklift_cm1,
    weaklift_cyclic,
    weaklift_gor0,
)
from .loci import LocusResult, enumerate_locus, locus_formula_nwl, subspace_check
from .modules import (
    GradedMatrix,
    ModuleCertificate,
    VectorPoly,
    minimal_generators,
    module_member,
    syzygy_matrix,
    syzygy_module,
)
from .orders import GREVLEX, LEX, MonomialOrder, elimination_order
from .poly import (
    Polynomial,
    RingContext,
    degree_check,
    parse_poly,
    poly_arith,
    reduce_mod_prime,
    substitute_zero,
    verify_identity,
)
from .report import REPORT_SCHEMA, SCHEMA_ID, build_corpus_report, build_report, render_report
from .resolutions import (
    BettiTable,
    Resolution,
    betti_numbers,
    minimalize_matrix,
    pd_decide,
    resolve_truncated,
)

__version__ = "0.1.0"

__all__ = [
    "GF",
    "QQ",
    "ZZ",
    "Scalar",
    "GREVLEX",
    "LEX",
    "MonomialOrder",
    "elimination_order",
    "Polynomial",
    "RingContext",
    "degree_check",
    "parse_poly",
    "poly_arith",
    "reduce_mod_prime",
    "substitute_zero",
    "verify_identity",
    "GroebnerBasis",
    "MembershipCertificate",
    "clear_cache",
    "eliminate",
    "groebner_basis",
    "normal_form",
    "IdealHandle",
    "SocleData",
    "canonical_generators",
    "colon",
    "contains",
    "dimension",
    "equal_ideals",
    "ideal",
    "ideal_member",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "intersect",
    "is_nonzerodivisor",
    "maximal_ideal",
    "radical_member",
    "reduced_groebner",
    "saturate",
    "socle_data",
    "symbolic_square",
    "zero_ideal",
    "GradedMatrix",
    "ModuleCertificate",
    "VectorPoly",
    "minimal_generators",
    "module_member",
    "syzygy_matrix",
    "syzygy_module",
    "BettiTable",
    "Resolution",
    "betti_numbers",
    "minimalize_matrix",
    "pd_decide",
    "resolve_truncated",
    "BettiReport",
    "CriterionCheck",
    "LiftDecision",
    "Verdict",
    "Witness",
    "betti_relations",
    "certify_lift_cyclic",
    "graded_obstruction",
    "group_ring_weaklift",
    "obstruction_suite",
    "weaklift_cm1",
    "weaklift_cyclic",
    "weaklift_gor0",
    "LocusResult",
    "enumerate_locus",
    "locus_formula_nwl",
    "subspace_check",
    "REPORT_SCHEMA",
    "SCHEMA_ID",
    "build_corpus_report",
    "build_report",
    "render_report",
    "corpus_names",
    "run_all",
    "run_fixture",
    "__version__",
]
