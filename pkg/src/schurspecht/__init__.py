"""Exact computations with Specht and Schur module presentations in characteristic zero."""

__version__ = "0.1.0"

from .combinat import (Partition, conjugate, exchange_vectors, hook_dim, partitions_of,
                       partitions_up_to, tabloid_count)
from .criteria import (CriterionReport, c_scalar, d_coeff, eigen_sum, gamma_two_row_verdict,
                       gr_verdict, identify_coker, multirow_coker_verdict, sgr_verdict, sigma_sum)
from .exactla import SparseMatrix, image_contains, rank, reduce_mod_image
from .exalg import MapDescriptor, apply_map, build_map, comult, compose, wedge
from .schur import SchurModel, coker_dim, pieri_dims, schur_model, summand_scalar_empirical
from .specht import (RelationFamily, canonical_tabloid, quotient_dim, relation_vectors,
                     schur_functor_restrict, sym_action, tabloid_basis)

__all__ = [
    "Partition", "conjugate", "exchange_vectors", "hook_dim", "partitions_of", "partitions_up_to",
    "tabloid_count", "CriterionReport", "c_scalar", "d_coeff", "eigen_sum", "gamma_two_row_verdict",
    "gr_verdict", "identify_coker", "multirow_coker_verdict", "sgr_verdict", "sigma_sum",
    "SparseMatrix", "image_contains", "rank", "reduce_mod_image", "MapDescriptor", "apply_map",
    "build_map", "comult", "compose", "wedge", "SchurModel", "coker_dim", "pieri_dims",
    "schur_model", "summand_scalar_empirical", "RelationFamily", "canonical_tabloid",
    "quotient_dim", "relation_vectors", "schur_functor_restrict", "sym_action", "tabloid_basis",
]
