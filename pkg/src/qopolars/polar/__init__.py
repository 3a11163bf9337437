from qopolars.polar.contacts import deepest_common_vertex, p_contact, pairwise_p_contact, series_resultant
from qopolars.polar.derivative import normalized_derivative
from qopolars.polar.merle import merle_decomposition, polar_index
from qopolars.polar.predictions import (
    branch_contact,
    degree_row,
    eggers_factorization,
    predict_resultant_polytope,
    self_contact,
)
from qopolars.polar.profiler import PolarProfiler, degree_table, format_degree_table
from qopolars.polar.types import (
    ContactRelation,
    EggersFactorPrediction,
    MerleFactor,
    MerlePrediction,
    PolarProfile,
)
