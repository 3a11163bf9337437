from qopolars.polytope.types import (
    ElementaryPolytope,
    Face,
    NewtonPolytope,
    PolytopeOrder,
    RondSchoberCertificate,
    ScaledPolytope,
)
from qopolars.polytope.newton import (
    canonical_decomposition,
    contained_in,
    is_polygonal,
    merge_elementaries,
    minkowski_sum,
    newton_polytope,
    polytope_order,
    project,
    project_and_support,
    project_elementary,
    rond_schober_reducible,
    sum_elementaries,
    symbolic_restriction,
)
