"""Exact q-matroid toolkit: cycle lattices, order-complex Euler characteristics and rank weights."""

from .codes import RankMetricCode, generalized_rank_weights, support, verify_lemma62
from .errors import AxiomError, BudgetExceeded, ConsistencyError
from .euler import chain_census, euler_formula, euler_report, homology_rank
from .gf import FieldSpec, gaussian_binomial, make_field
from .linalg import Subspace
from .qmatroid import QMatroid, dual, from_representation, from_table, uniform

__version__ = "0.1.0"

__all__ = [
    "AxiomError", "BudgetExceeded", "ConsistencyError", "FieldSpec", "QMatroid", "RankMetricCode",
    "Subspace", "chain_census", "dual", "euler_formula", "euler_report", "from_representation",
    "from_table", "gaussian_binomial", "generalized_rank_weights", "homology_rank", "make_field",
    "support", "uniform", "verify_lemma62",
]
