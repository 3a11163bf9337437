# tests/test_roots_tree.py
import random
from pathlib import Path

import pytest

from qopolars.algebra.cyclotomic import CyclotomicNumber
from qopolars.algebra.rational import rat
from qopolars.algebra.unipoly import UniPoly
from qopolars.charpoly.characteristic import (
    chain_increment_holds,
    characteristic_data,
    has_power_shape,
    irreducible_shape,
    transport_holds,
)
from qopolars.charpoly.regularity import al_derivative_shape, observed_derivative_shape
from qopolars.polar.predictions import degree_row
from qopolars.roots.contact import (
    check_strong_triangle,
    contact,
    contact_matrix,
    expand_branches,
    validate_quasi_ordinary,
)
from qopolars.roots.types import Branch
from qopolars.series.exponent import Exponent
from qopolars.series.fractional import FractionalSeries
from qopolars.series.literal import parse_series
from qopolars.tree.eggers import build_eggers
from qopolars.tree.kuolu import bar_counts, build_kuo_lu, characteristic_polynomial, closed_form_order
from qopolars.utils.errors import InputSemanticError, NotQuasiOrdinaryError
from qopolars.utils.example_utils import setup

CORPUS = Path(__file__).parent.parent / "corpus"
NAMES = ["x1", "x2"]


def _random_branches(rng: random.Random):
    branches = []
    for i in range(rng.randint(1, 3)):
        denominator = rng.choice([1, 2])
        terms = {}
        for _ in range(rng.randint(1, 3)):
            exponent = Exponent.of(rat(rng.randint(denominator, 3 * denominator), denominator))
            terms[exponent] = rng.choice([-2, -1, 1, 2])
        branches.append(Branch(f"f{i + 1}", FractionalSeries(1, terms), denominator))
    return branches


def test_two_branch_tree():
    print("\n=== Kuo-Lu tree of (y^2 - x1^3 x2^2)(y - x1^5 x2^2) ===")
    problem, roots, tree, eggers, f = setup(CORPUS / "two_branches.qo")
    assert tree.degree == 3
    assert roots.degrees() == {"f1": 2, "f2": 1}

    finite = tree.finite_bars()
    assert len(finite) == 1
    bar = finite[0]
    print(f"bar h={bar.height}, m={bar.m}")
    assert bar.height == Exponent.of(rat(3, 2), 1)
    assert bar.m == 3
    assert len(bar.children) == 3
    assert characteristic_polynomial(tree, bar) == UniPoly([0, -1, 0, 1])
    assert closed_form_order(tree, bar, range(3)) == Exponent.of(rat(9, 2), 3)
    # heights total 5/2, so the default precision is three times that
    assert problem.precision == rat(15, 2)

    (vertex,) = eggers.finite_vertices()
    assert vertex.name == "[B1]"
    assert (vertex.size, vertex.degree) == (1, 2)
    assert vertex.dashed == {"f1": False, "f2": True}


def test_two_branch_characteristic_data():
    problem, roots, tree, eggers, f = setup(CORPUS / "two_branches.qo")
    bar = tree.finite_bars()[0]
    data = characteristic_data(f, bar)
    assert data.polynomial == UniPoly([0, -1, 0, 1])
    assert data.order == Exponent.of(rat(9, 2), 3)

    counts = bar_counts(tree, 1)
    assert (counts[bar.index].m, counts[bar.index].n_k, counts[bar.index].t_k) == (3, 2, 2)
    assert all(counts[leaf.index].t_k == 0 for leaf in tree.leaves())


def test_four_branch_trees():
    print("\n=== Four branches sharing (3/2,1) ===")
    problem, roots, tree, eggers, f = setup(CORPUS / "four_branches.qo")
    assert tree.degree == 16
    root_bar = tree.bar(tree.root)
    assert root_bar.height == Exponent.of(rat(3, 2), 1)
    assert characteristic_polynomial(tree, root_bar) == (
        UniPoly([-1, 0, 1]) ** 4 * UniPoly([-2, 0, 1]) ** 4
    )
    heights = sorted(str(b.height) for b in tree.finite_bars())
    assert heights == ["(3/2,1)"] + ["(7/4,3/2)"] * 4

    sizes = [(v.name, v.size) for v in eggers.finite_vertices()]
    print(f"Eggers vertices: {sizes}")
    assert sizes == [("[B1]", 1), ("[B2]", 2), ("[B3]", 2)]
    assert all(v.dashed and not any(v.dashed.values()) for v in eggers.finite_vertices())


def test_smooth_branch_is_a_single_leaf():
    problem, roots, tree, eggers, f = setup(CORPUS / "smooth.qo")
    assert tree.degree == 1
    assert tree.finite_bars() == []
    assert eggers.finite_vertices() == []


def test_contact_and_quasi_ordinary_checks():
    a = parse_series("x1^(3/2)*x2 + x1^2*x2^2", NAMES)
    b = parse_series("-x1^(3/2)*x2", NAMES)
    assert contact(a, b) == Exponent.of(rat(3, 2), 1)
    assert contact(a, a, same=True).is_infinite
    # x1 - x2 has no dominant monomial
    assert contact(parse_series("x1", NAMES), parse_series("x2", NAMES)) is None
    with pytest.raises(NotQuasiOrdinaryError):
        contact_matrix([parse_series("x1", NAMES), parse_series("x2", NAMES)])
    # 0, x1 and x2 + x1^2 have pairwise differences without a dominant monomial
    with pytest.raises(NotQuasiOrdinaryError):
        validate_quasi_ordinary(
            [parse_series("0", NAMES), parse_series("x1", NAMES), parse_series("x2 + x1^2", NAMES)]
        )
    with pytest.raises(InputSemanticError):
        expand_branches([Branch("f1", a, 1)])


def test_random_root_sets_respect_the_tree_invariants():
    """Ultrametric contacts, closed-form characteristic data and Σ N·t_k = n - k."""
    rng = random.Random(31)
    checked = 0
    while checked < 200:
        try:
            roots = expand_branches(_random_branches(rng))
            tree = build_kuo_lu(roots.roots, validate_quasi_ordinary(roots.roots))
        except InputSemanticError:
            # two branches produced a common root
            continue
        checked += 1
        n = tree.degree
        assert check_strong_triangle(contact_matrix(roots.roots), n) == []

        f = roots.polynomial()
        for bar in tree.finite_bars():
            data = characteristic_data(f, bar)
            assert data.polynomial == characteristic_polynomial(tree, bar)
            assert data.order == closed_form_order(tree, bar, range(n))

        eggers = build_eggers(tree, roots)
        for k in range(1, n):
            assert sum(degree_row(tree, eggers, k).values()) == n - k
            assert sum(c.t_k for c in bar_counts(tree, k).values()) == n - k


def _check_bar_shapes(tree, eggers, roots, f):
    for bar in tree.finite_bars():
        vertex = eggers.class_of(bar.index)
        assert has_power_shape(characteristic_data(f, bar).polynomial, vertex.degree)
        for label in [b.label for b in roots.branches]:
            p = roots.polynomial([label])
            assert irreducible_shape(characteristic_data(p, bar).polynomial, vertex.degree) is not None
            if bar.parent is not None:
                parent = tree.bar(bar.parent)
                assert chain_increment_holds(tree, p, roots.indices_of(label), parent, bar)
            for other in vertex.bars[1:]:
                assert transport_holds(p, tree.bar(vertex.representative), tree.bar(other), roots.conductor)


def test_derivative_shape_matches_differentiation():
    print("\n=== Shape of ((z^n - c)^e)^(k) ===")
    rng = random.Random(47)
    checked = 0
    for n in range(1, 5):
        for e in range(1, 5):
            for k in range(1, e * n):
                for _ in range(3):
                    c = CyclotomicNumber.from_rational(rat(rng.choice([-3, -2, -1, 1, 2, 5]), rng.randint(1, 4)))
                    c = c * rng.choice([1, CyclotomicNumber.zeta(3), CyclotomicNumber.sqrt_rational(2)])
                    assert al_derivative_shape(n, e, k) == observed_derivative_shape(n, e, k, c), (n, e, k, c)
                    checked += 1
    print(f"checked {checked} derivatives")
    assert checked >= 200
    with pytest.raises(ValueError):
        al_derivative_shape(2, 2, 4)


def test_random_root_sets_have_shaped_characteristic_polynomials():
    """z^a·H(z^n) at every bar, branch shapes, chain increments and conjugate transport."""
    rng = random.Random(53)
    checked = 0
    while checked < 200:
        try:
            roots = expand_branches(_random_branches(rng))
            tree = build_kuo_lu(roots.roots, validate_quasi_ordinary(roots.roots))
        except InputSemanticError:
            continue
        checked += 1
        _check_bar_shapes(tree, build_eggers(tree, roots), roots, roots.polynomial())


@pytest.mark.parametrize("name", ["two_branches.qo", "four_branches.qo", "irreducible.qo"])
def test_corpus_bars_have_shaped_characteristic_polynomials(name):
    problem, roots, tree, eggers, f = setup(CORPUS / name)
    _check_bar_shapes(tree, eggers, roots, f)


def test_conjugate_bars_transport_characteristic_data():
    problem, roots, tree, eggers, f = setup(CORPUS / "irreducible.qo")
    (top, inner) = eggers.finite_vertices()
    assert len(inner.bars) == 2
    first, second = (tree.bar(i) for i in inner.bars)
    assert transport_holds(f, first, second, roots.conductor)
    # the root bar and an inner bar sit at different heights
    assert not transport_holds(f, tree.bar(top.representative), first, roots.conductor)


if __name__ == "__main__":
    test_two_branch_tree()
    test_four_branch_trees()
