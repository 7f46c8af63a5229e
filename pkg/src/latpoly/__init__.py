"""Exact arithmetic for lattice polytopes.

Counting data (Ehrhart counts, the h*-polynomial, degree and codegree),
affine unimodular normal forms and equivalence, lattice pyramids with
geometric and algebraic detection, the graded monoid over a polytope
with its toric ideal and the associated quantitative bounds, and small
classification tables with their census. Everything computes in
arbitrary-precision integer and rational arithmetic.
"""

__version__ = "0.1.0"

from .classify import (
    ClassificationTable,
    HStarCensusRow,
    c_linear,
    census_by_hstar,
    enumerate_2d,
    enumerate_simplices,
    exceptional_triangle,
    lawrence_prism,
    partition_count,
    scan_leading_coefficient,
    scan_scott,
)
from .corpus import load_corpus, load_expected, shipped_corpus_dir
from .ehrhart import (
    EhrhartData,
    HStarPolynomial,
    codegree,
    degree,
    ehrhart_data,
    hstar,
    hstar_from_series,
    reciprocity_check,
)
from .errors import (
    AllHeightsZero,
    DimensionMismatch,
    InternalInconsistency,
    LatPolyError,
    MalformedSeries,
    NotFullDimensional,
    ParseError,
    RegularSequenceNotFound,
    ValidationError,
)
from .monoid import (
    Binomial,
    BinomialIdealPresentation,
    GradedCone,
    MonoidGenerators,
    algebraic_pyramid_apexes,
    artinian_hilbert_function,
    binomial_count_bound,
    graded_cone,
    minimal_monoid_generators,
    pyramid_detectors_agree,
    stabilization_index,
    theorem_bound,
    toric_ideal_minimal_generators,
    verify_generation,
)
from .polyio import (
    canonical_json,
    parse_polytope_file,
    parse_polytope_text,
    polytope_to_json_obj,
    polytope_to_text,
)
from .polytope import (
    AffineUnimodularMap,
    FacetDescription,
    LatticePolytope,
    NormalForm,
    apply_map,
    are_equivalent,
    facet_description,
    interior_points_in_dilate,
    lattice_points_in_dilate,
    normal_form,
    normalized_volume,
    project_to_full_dim,
    random_unimodular_map,
    triangulation,
)
from .pyramids import (
    PyramidDecomposition,
    base_opposite_apex,
    geometric_pyramid_apexes,
    k_fold_pyramid,
    peel,
    pyramid,
    pyramid_injectivity_check,
)
from .verify import run_verify_all
