from qopolars.roots.types import Branch, GaloisAutomorphism, RootSet
from qopolars.roots.contact import (
    check_strong_triangle,
    contact,
    contact_matrix,
    expand_branches,
    galois_orbit,
    validate_quasi_ordinary,
)
