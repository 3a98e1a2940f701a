"""Exact-arithmetic Schur modules, apolarity contractions, and rank analysis.

The package is organised bottom-up:

  combinatorics  partitions, tableaux, words, Littlewood-Richardson data
  linalg         exact rational sparse matrices, kernels, subspace lattice
  spaces         Schur / skew Schur modules inside wedge-tensor ambients
  points         flag points (the structured-rank-1 tensors)
  apolarity      contractions, catalecticants, apolar pieces
  ideals         multiplication maps and flag-point ideals
  ranks          lower bounds, rank-1 tests, and the second-secant classifier
  cli            the `schur` command (canonical JSON in and out)
"""

from .combinatorics import (
    ColumnStructure,
    Partition,
    SkewShape,
    Tableau,
    Word,
    alpha,
    beta,
    column_structure,
    conjugate,
    enumerate_sstd,
    enumerate_std,
    is_yamanouchi,
    lr_coefficient,
    lr_tableaux,
    mu_e,
    schur_dimension,
    sigma_map,
    tprime,
    word_of,
)
from .linalg import (
    LabeledVector,
    RationalMatrix,
    Subspace,
    intersect,
    is_subspace,
)
from .linalg import membership as subspace_membership
from .spaces import (
    AmbientElement,
    SkewAmbientElement,
    WordTensor,
    a_lambda,
    ambient_to_word,
    apply_matrix,
    b_lambda,
    basis_element,
    membership,
    schur_basis,
    skew_membership,
    skew_schur_basis,
    skew_symmetrizer,
    word_to_ambient,
    young_symmetrizer,
)
from .points import (
    FlagPoint,
    annihilator_chain,
    coordinate_flag_point,
    flag_tensor,
    highest_weight_vector,
    random_flag_point,
)
from .apolarity import (
    CatalecticantMatrix,
    apolar_contains,
    apolar_piece,
    catalecticant,
    catalecticant_rank,
    image_generator,
    schur_apolarity,
    skew_apolarity,
)
from .ideals import (
    IdealPiece,
    ideal_intersection,
    ideal_piece,
    multiplication_map,
    verify_top_degree,
)
from .ranks import (
    OrbitData,
    Sigma2Unclassified,
    Sigma2Verdict,
    classify_sigma2,
    decomposition_membership,
    grassmann_rank1_test,
    lambda_rank_lower_bound,
    lower_bound_trace,
    solve_coefficients,
    tangent_space_basis,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
