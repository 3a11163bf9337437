from qopolars.charpoly.types import CharacteristicData, RegularityReport, RegularitySplit
from qopolars.charpoly.characteristic import (
    chain_increment_holds,
    characteristic_data,
    closed_characteristic_data,
    has_power_shape,
    irreducible_shape,
    transport_holds,
)
from qopolars.charpoly.regularity import (
    al_derivative_shape,
    derivative_split,
    kuo_lu_regular,
    observed_derivative_shape,
)
