# tests/test_algebra.py
import random

import pytest

from qopolars.algebra.cyclotomic import CyclotomicNumber
from qopolars.algebra.rational import rat, rat_str
from qopolars.algebra.resultant import resultant
from qopolars.algebra.unipoly import UniPoly, nth_roots, poly_gcd, squarefree_decomposition, tower_roots

SEED = 20240611


def _random_poly(rng: random.Random, degree: int) -> UniPoly:
    coeffs = [rng.randint(-5, 5) for _ in range(degree)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
    return UniPoly(coeffs)


def test_cyclotomic_basics():
    print("\n=== Cyclotomic arithmetic ===")
    i = CyclotomicNumber.zeta(4)
    assert i * i == -1
    assert CyclotomicNumber.zeta(3) ** 3 == 1
    assert CyclotomicNumber.zeta(6, 3) == -1

    root2 = CyclotomicNumber.sqrt_rational(2)
    print(f"sqrt(2) = {root2}")
    assert root2 * root2 == 2
    assert CyclotomicNumber.sqrt_rational(-3) ** 2 == -3
    assert CyclotomicNumber.sqrt_rational(rat(9, 4)) == rat(3, 2)

    # ζ_4 lives in Q(ζ_8) but is stored with its minimal conductor
    assert (CyclotomicNumber.zeta(8) ** 2).conductor == 4
    assert root2.conjugate_by(3) == -root2
    assert rat_str(rat(-6, 4)) == "-3/2"


def test_division_and_inverse():
    a = CyclotomicNumber.zeta(5) + 2
    assert a * a.inverse() == 1
    assert (a / a) == 1
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber.zero().inverse()


def test_polynomial_powers():
    p = UniPoly([1, 1])
    assert p ** 0 == 1
    assert p ** 2 == UniPoly([1, 2, 1])
    with pytest.raises(ValueError):
        p ** -1


def test_tower_roots_splits_cyclotomic_and_quadratic_factors():
    print("\n=== Roots in the cyclotomic tower ===")
    z2_plus_1 = UniPoly([1, 0, 1])
    roots, leftover = tower_roots(z2_plus_1 * z2_plus_1 * UniPoly([-2, 0, 1]))
    print(f"roots: {[(str(r), m) for r, m in roots]}, leftover {leftover}")
    assert leftover == 1
    assert sorted(m for _, m in roots) == [1, 1, 2, 2]
    found = {r for r, _ in roots}
    assert CyclotomicNumber.zeta(4) in found
    assert CyclotomicNumber.sqrt_rational(2) in found

    # the real cube root of 2 generates a non-abelian extension
    _, leftover = tower_roots(UniPoly([-2, 0, 0, 1]))
    assert leftover.degree == 3


def test_square_root_of_a_unit_outside_radicals():
    root2 = CyclotomicNumber.sqrt_rational(2)
    rho = 3 + 2 * root2
    roots, leftover = tower_roots(UniPoly([-rho, 0, 1]))
    print(f"\nroots of z^2 - ({rho}): {[str(r) for r, _ in roots]}")
    assert leftover == 1
    assert {r for r, _ in roots} == {1 + root2, -1 - root2}
    assert set(nth_roots(rho, 2)) == {1 + root2, -1 - root2}
    # (1 + sqrt(2))^(2/3) is not in an abelian extension
    assert nth_roots(rho, 3) is None


def test_squarefree_reconstruction_property():
    """S_m are monic, squarefree, pairwise coprime and rebuild the monic input."""
    rng = random.Random(SEED)
    for _ in range(200):
        count = rng.randint(1, 4)
        values = rng.sample(range(-6, 7), count)
        multiplicities = [rng.randint(1, 3) for _ in values]
        p = UniPoly.constant(rng.choice([1, 2, -3]))
        for value, m in zip(values, multiplicities):
            p = p * UniPoly([-value, 1]) ** m

        parts = squarefree_decomposition(p)
        rebuilt = UniPoly.constant(1)
        for m, s in parts.items():
            assert s.lc == 1
            assert poly_gcd(s, s.derivative()).degree == 0
            rebuilt = rebuilt * s ** m
        assert rebuilt == p.monic()
        for m, value in zip(multiplicities, values):
            assert parts[m](rat(value)) == 0


def test_resultant_multiplicativity_property():
    rng = random.Random(SEED + 1)
    for _ in range(200):
        p = _random_poly(rng, rng.randint(1, 3))
        q1 = _random_poly(rng, rng.randint(1, 3))
        q2 = _random_poly(rng, rng.randint(1, 2))
        assert resultant(p, q1 * q2) == resultant(p, q1) * resultant(p, q2)


def test_resultant_is_product_over_roots():
    rng = random.Random(SEED + 2)
    for _ in range(50):
        roots = [rat(rng.randint(-4, 4)) for _ in range(rng.randint(1, 3))]
        p = UniPoly.from_roots(roots)
        q = _random_poly(rng, rng.randint(1, 3))
        expected = CyclotomicNumber.one()
        for r in roots:
            expected = expected * q(r)
        assert resultant(p, q) == expected


if __name__ == "__main__":
    test_cyclotomic_basics()
    test_tower_roots_splits_cyclotomic_and_quadratic_factors()
