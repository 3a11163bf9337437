from qopolars.verify.oracles import (
    default_substitutions,
    divide_in_t,
    resultant_in_t,
    resultant_oracle,
    resultant_structure_check,
    root_product_polygon,
    separates_heights,
    verify_derivative_charpoly,
    verify_factor_contacts,
    verify_higher_kuo_lu,
    verify_resultant_polytope,
)
from qopolars.verify.puiseux import (
    PuiseuxResult,
    PuiseuxRoot,
    cluster_orders,
    conjugate_groups,
    newton_puiseux_roots,
)
from qopolars.verify.runner import VerificationRunner
from qopolars.verify.types import VerificationEntry, VerificationReport
