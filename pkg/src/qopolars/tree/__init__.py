from qopolars.tree.types import (
    BarCounts,
    CharacteristicExponents,
    EggersTree,
    EggersVertex,
    KuoLuTree,
    PseudoBall,
)
from qopolars.tree.kuolu import (
    bar_counts,
    build_kuo_lu,
    characteristic_polynomial,
    closed_form_order,
    closed_form_polynomial,
    contains,
    in_interior,
    sub_tree,
)
from qopolars.tree.eggers import (
    bars_at_height,
    build_eggers,
    characteristic_exponents,
    conjugacy_classes,
    extension_degree,
    t_k_by_cases,
)
