# tests/test_polar.py
from pathlib import Path

import pytest

from qopolars.algebra.rational import rat
from qopolars.algebra.unipoly import UniPoly
from qopolars.charpoly.regularity import kuo_lu_regular
from qopolars.polar.contacts import p_contact, pairwise_p_contact
from qopolars.polar.derivative import normalized_derivative
from qopolars.polar.merle import merle_decomposition
from qopolars.polar.predictions import degree_row, eggers_factorization, predict_resultant_polytope, self_contact
from qopolars.polar.profiler import PolarProfiler, degree_table, format_degree_table
from qopolars.polar.types import ORACLE_CHECKED
from qopolars.polytope.newton import sum_elementaries
from qopolars.polytope.types import ElementaryPolytope, NewtonPolytope, ScaledPolytope
from qopolars.series.exponent import Exponent
from qopolars.series.literal import parse_series_poly
from qopolars.series.ypoly import SeriesYPoly
from qopolars.utils.errors import HypothesisViolated, InputSemanticError
from qopolars.utils.example_utils import setup

CORPUS = Path(__file__).parent.parent / "corpus"


def _monomial(*entries) -> NewtonPolytope:
    return NewtonPolytope.monomial(Exponent.of(*entries))


def test_two_branch_second_polar():
    problem, roots, tree, eggers, f = setup(CORPUS / "two_branches.qo")
    (factor,) = eggers_factorization(tree, eggers, roots, 2)
    print(f"\np_{factor.name}: degree {factor.degree}, G = {factor.polynomial}")
    assert factor.degree == 1
    assert factor.polynomial == UniPoly([0, 1])
    assert factor.self_contact == ScaledPolytope(rat(1), _monomial(rat(3, 2), 1))
    assert not kuo_lu_regular(tree, 2).regular
    with pytest.raises(HypothesisViolated):
        predict_resultant_polytope(tree, roots, ["f1", "f2"], 2)


def test_two_branch_resultant_prediction():
    problem, roots, tree, eggers, f = setup(CORPUS / "two_branches.qo")
    assert kuo_lu_regular(tree, 1).regular
    predicted = predict_resultant_polytope(tree, roots, ["f1", "f2"], 1)
    print(f"\npredicted Δ(Res): {predicted.describe()}")
    assert predicted == sum_elementaries([ElementaryPolytope(Exponent.of(9, 6), 2)], 2)
    only_f2 = predict_resultant_polytope(tree, roots, ["f2"], 1)
    assert only_f2 == sum_elementaries([ElementaryPolytope(Exponent.of(3, 2), 2)], 2)


def test_four_branch_degree_table():
    print("\n=== Degrees of the Eggers factors ===")
    problem, roots, tree, eggers, f = setup(CORPUS / "four_branches.qo")
    table = degree_table(tree, eggers, range(1, 16))
    print(format_degree_table(table))
    assert list(table[1].values()) == [3, 6, 6]
    assert list(table[2].values()) == [6, 4, 4]
    assert list(table[3].values()) == [9, 2, 2]
    for k in range(4, 16):
        assert list(table[k].values()) == [16 - k, 0, 0]

    assert [p.degree for p in eggers_factorization(tree, eggers, roots, 2)] == [6, 4, 4]
    assert all(kuo_lu_regular(tree, k).regular for k in range(1, 16))


def test_four_branch_contacts():
    problem, roots, tree, eggers, f = setup(CORPUS / "four_branches.qo")
    top, *inner = eggers.finite_vertices()
    assert self_contact(top, tree, roots) == ScaledPolytope(rat(1, 4), _monomial(6, 4))
    for vertex in inner:
        own = self_contact(vertex, tree, roots)
        print(f"\nself-contact of {vertex.name}: {own.describe()}")
        assert own == ScaledPolytope(rat(1, 8), _monomial(13, 10))

    assert pairwise_p_contact(tree, eggers, roots, "f11", "f21") == self_contact(top, tree, roots)
    near = pairwise_p_contact(tree, eggers, roots, "f11", "f12")
    assert near.region == _monomial(rat(13, 8), rat(5, 4))

    # the same value straight from the roots
    first = [tree.roots[i] for i in roots.indices_of("f11")]
    second = [tree.roots[i] for i in roots.indices_of("f12")]
    direct = p_contact(roots.polynomial(["f11"]), roots.polynomial(["f12"]), second, first)
    assert direct == near


def test_merle_decomposition_of_an_irreducible_input():
    print("\n=== Merle decomposition of f11 ===")
    problem, roots, tree, eggers, f = setup(CORPUS / "irreducible.qo")
    first = merle_decomposition(tree, eggers, roots, 1)
    assert first.i_k == 2
    assert [x.degree for x in first.factors] == [1, 2]
    assert [(x.a, x.d) for x in first.factors] == [(1, 0), (1, 0)]
    assert first.total_degree == 3

    second = merle_decomposition(tree, eggers, roots, 2)
    assert second.i_k == 1
    assert [x.degree for x in second.factors] == [2]

    third = merle_decomposition(tree, eggers, roots, 3)
    assert [(x.degree, x.a, x.d) for x in third.factors] == [(1, 1, 0)]

    problem, roots, tree, eggers, f = setup(CORPUS / "two_branches.qo")
    with pytest.raises(InputSemanticError):
        merle_decomposition(tree, eggers, roots, 1)


def test_profile_summary():
    problem, roots, tree, eggers, f = setup(CORPUS / "irreducible.qo")
    profiler = PolarProfiler(tree, eggers, roots, 1)
    profile = profiler.generate_profile()
    assert profile.regular
    assert profile.degree == 3
    assert profile.merle is not None
    summary = profiler.get_profile_summary()
    print("\n" + summary)
    assert "Kuo-Lu 1-regular: yes" in summary
    assert "Merle decomposition (i_k = 2)" in summary


def test_profile_flags_the_attaining_branch_for_the_oracle():
    problem, roots, tree, eggers, f = setup(CORPUS / "two_branches.qo")
    for k in (1, 2):
        data = PolarProfiler(tree, eggers, roots, k).generate_profile().to_json()
        (factor,) = data["factors"]
        flagged = [c for c in factor["contacts"] if c["provenance"] == ORACLE_CHECKED]
        print(f"\nk={k}: {[c['text'] for c in flagged]}")
        assert len(flagged) == 1
        assert flagged[0]["relation"] == "some equal"
        assert flagged[0]["branch"] == "f1,f2"
        assert "for some f_i in {f1,f2}" in flagged[0]["text"]
    assert "[oracle-checked]" in PolarProfiler(tree, eggers, roots, 1).get_profile_summary()


def test_three_lines_second_polar_is_not_regular():
    print("\n=== y^3 + x^2 y ===")
    problem, roots, tree, eggers, f = setup(CORPUS / "three_lines.qo")
    assert problem.precision == 7
    assert normalized_derivative(f, 2) == SeriesYPoly.y(1)
    report = kuo_lu_regular(tree, 2)
    assert not report.regular
    with pytest.raises(HypothesisViolated):
        predict_resultant_polytope(tree, roots, [b.label for b in roots.branches], 2)

    profile = PolarProfiler(tree, eggers, roots, 2).generate_profile()
    assert profile.resultant is None
    assert any("hypothesis violated" in note for note in profile.notes)


@pytest.mark.parametrize(
    "name, polar, expected_small, expected_big",
    [
        ("quartic_a0.qo", "y^2", Exponent.of(8), Exponent.of(rat(2, 3))),
        ("quartic_a1.qo", "y^2 + x^2/6", Exponent.of(1), Exponent.of(rat(2, 3))),
    ],
)
def test_contacts_with_the_second_polar(name, polar, expected_small, expected_big):
    problem, roots, tree, eggers, f = setup(CORPUS / name)
    g = normalized_derivative(f, 2)
    assert g == parse_series_poly(polar, ["x"])

    by_degree = {degree: label for label, degree in roots.degrees().items()}
    assert sorted(by_degree) == [1, 3]
    for degree, expected in ((1, expected_small), (3, expected_big)):
        label = by_degree[degree]
        branch_roots = [tree.roots[i] for i in roots.indices_of(label)]
        value = p_contact(g, roots.polynomial([label]), roots_of_p=branch_roots)
        print(f"\ncont_P({label}, f^(2)) = {value.describe()}")
        assert value.region == NewtonPolytope.monomial(expected)


def test_degree_rows_follow_the_tree():
    problem, roots, tree, eggers, f = setup(CORPUS / "two_branches.qo")
    assert degree_row(tree, eggers, 1) == {"[B1]": 2}
    assert degree_row(tree, eggers, 2) == {"[B1]": 1}


if __name__ == "__main__":
    test_four_branch_degree_table()
    test_merle_decomposition_of_an_irreducible_input()
