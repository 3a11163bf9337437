from qopolars.algebra.rational import Rational, rat, rat_str
from qopolars.algebra.cyclotomic import CyclotomicNumber, ONE, ZERO
from qopolars.algebra.unipoly import (
    UniPoly,
    nth_roots,
    poly_derivative,
    poly_gcd,
    squarefree_decomposition,
    tower_roots,
)
from qopolars.algebra.resultant import resultant, sylvester_resultant
