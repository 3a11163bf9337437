# tests/test_verify.py
from pathlib import Path

import pytest

from qopolars.algebra.rational import rat
from qopolars.polar.derivative import normalized_derivative
from qopolars.polytope.newton import project, sum_elementaries
from qopolars.polytope.types import ElementaryPolytope
from qopolars.series.exponent import Exponent
from qopolars.series.fractional import FractionalSeries
from qopolars.series.literal import parse_series, parse_series_poly
from qopolars.series.ypoly import SeriesYPoly
from qopolars.utils.errors import IndeterminateError
from qopolars.utils.example_utils import setup
from qopolars.verify.oracles import (
    default_substitutions,
    divide_in_t,
    resultant_in_t,
    resultant_oracle,
    retry_substitutions,
    root_product_polygon,
    separates_heights,
    verify_derivative_charpoly,
    verify_factor_contacts,
    verify_higher_kuo_lu,
    verify_resultant_polytope,
)
from qopolars.verify.puiseux import cluster_orders, conjugate_groups, newton_puiseux_roots
from qopolars.verify.runner import VerificationRunner
from qopolars.verify.types import INCONCLUSIVE, MATCH, SKIPPED

CORPUS = Path(__file__).parent.parent / "corpus"
U = ["x"]


def _u(text: str) -> FractionalSeries:
    return parse_series(text, U)


def test_substitution_batches():
    assert default_substitutions(1) == [(1,)]
    assert default_substitutions(2) == [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1)]
    assert retry_substitutions(2) == [(1, 4), (4, 1), (2, 3), (3, 2)]
    # (2, 2) is proportional to (1, 1) and never chosen
    assert (2, 2) not in default_substitutions(2, 8)

    problem, roots, tree, eggers, f = setup(CORPUS / "four_branches.qo")
    assert separates_heights(tree, (1, 1))
    assert separates_heights(tree, (2, 1))


def test_exact_arithmetic_in_t():
    u = _u("x")
    a = SeriesYPoly(1, [-(u * u), FractionalSeries.zero(1), FractionalSeries.constant(1, 1)])
    b = SeriesYPoly(1, [-u, FractionalSeries.constant(1, 1)])
    assert divide_in_t(a, b) == SeriesYPoly(1, [u, FractionalSeries.constant(1, 1)])
    with pytest.raises(ArithmeticError):
        divide_in_t(b, a)

    g = parse_series_poly("y - x", U)
    p = parse_series_poly("y^2", U)
    assert resultant_in_t(g, p) == SeriesYPoly(1, [u * u, FractionalSeries.constant(1, -1)])
    with pytest.raises(IndeterminateError):
        resultant_in_t(g.truncate(3), p)


def test_newton_puiseux_expansion():
    print("\n=== Newton-Puiseux ===")
    expansion = newton_puiseux_roots(parse_series_poly("y^2 - x^3", U), 10)
    roots = expansion.expanded()
    print(f"roots: {[str(r) for r in roots]}")
    assert not expansion.partial
    assert all(r.is_exact for r in expansion.roots)
    assert set(roots) == {_u("x^(3/2)"), _u("-x^(3/2)")}
    assert conjugate_groups(roots) == [[0, 1]]

    cusp = newton_puiseux_roots(parse_series_poly("y^3 + x^2*y", U), 7).expanded()
    assert set(cusp) == {_u("0"), _u("I*x"), _u("-I*x")}
    assert len(conjugate_groups(cusp)) == 3


def test_cluster_orders_follow_shared_roots():
    orders = cluster_orders(parse_series_poly("y^2 - x^3", U), [_u("x^(3/2)")])
    assert len(orders) == 2
    assert orders.count(None) == 1
    assert rat(3, 2) in orders


def test_resultant_oracles_agree_on_two_branch():
    print("\n=== Resultant oracles along (1,1) ===")
    problem, roots, tree, eggers, f = setup(CORPUS / "two_branches.qo")
    g_bar = normalized_derivative(f, 1).substitute_monomial((1, 1))
    f_bar = f.substitute_monomial((1, 1))
    alphas = [r.substitute_monomial((1, 1)) for r in tree.roots]
    expected = sum_elementaries([ElementaryPolytope(Exponent.of(15), 2)], 1)

    exact_polygon, exact = resultant_oracle(g_bar, f_bar, alphas, exact_max=12)
    print(f"exact: {exact_polygon.describe()}")
    assert exact is not None
    assert exact.degree == 2
    assert exact_polygon == expected

    clustered, none = resultant_oracle(g_bar, f_bar, alphas, exact_max=2)
    assert none is None
    assert clustered == expected
    assert root_product_polygon(g_bar, alphas) == expected


def test_verify_resultant_polytope_matches():
    problem, roots, tree, eggers, f = setup(CORPUS / "two_branches.qo")
    batch = [(1, 1), (1, 2), (2, 1)]
    for exact_max in (12, 2):
        report = verify_resultant_polytope(tree, roots, f, ["f1", "f2"], 1, batch, exact_max)
        assert [e.status for e in report.entries] == [MATCH, MATCH, MATCH]
        assert [e.substitution for e in report.entries] == batch

    predicted = sum_elementaries([ElementaryPolytope(Exponent.of(9, 6), 2)], 2)
    assert report.entries[1].predicted == project(predicted, (1, 2)).describe()


def test_verify_skips_when_not_regular():
    problem, roots, tree, eggers, f = setup(CORPUS / "three_lines.qo")
    labels = [b.label for b in roots.branches]
    report = verify_resultant_polytope(tree, roots, f, labels, 2)
    assert report.violations
    assert report.entries[0].status == SKIPPED


def test_verify_derivative_characteristic_data():
    problem, roots, tree, eggers, f = setup(CORPUS / "two_branches.qo")
    for k in (1, 2):
        report = verify_derivative_charpoly(tree, f, k)
        assert report.entries
        assert all(e.status == MATCH for e in report.entries)


def test_higher_kuo_lu_positions():
    print("\n=== Roots of the polars of y^3 + x^2 y ===")
    problem, roots, tree, eggers, f = setup(CORPUS / "three_lines.qo")

    regular = verify_higher_kuo_lu(tree, roots, f, 1, problem.precision)
    for e in regular.entries:
        print(f"[{e.status}] {e.claim}: {e.predicted} / {e.oracle}")
    assert all(e.status == MATCH for e in regular.entries)

    irregular = verify_higher_kuo_lu(tree, roots, f, 2, problem.precision)
    witness = [e for e in irregular.entries if e.claim.startswith("contacts of interior roots")]
    assert len(witness) == 1
    assert witness[0].status == MATCH
    assert "witness" in witness[0].detail

    low = verify_higher_kuo_lu(tree, roots, f, 1, 1)
    assert low.entries[0].status == INCONCLUSIVE
    assert low.entries[0].indeterminate
    assert low.indeterminate

    problem, roots, tree, eggers, f = setup(CORPUS / "two_branches.qo")
    assert verify_higher_kuo_lu(tree, roots, f, 1, 9).entries[0].status == SKIPPED


def test_polar_factors_attain_the_self_contact():
    print("\n=== Branches attaining the self-contact ===")
    problem, roots, tree, eggers, f = setup(CORPUS / "three_lines.qo")
    for k in (1, 2):
        report = verify_factor_contacts(tree, eggers, roots, f, k, problem.precision)
        for e in report.entries:
            print(f"[{e.status}] {e.claim}: {e.predicted} / {e.oracle}")
        assert report.entries
        assert all(e.status == MATCH for e in report.entries)
        assert all(e.theorem_backed for e in report.entries)

    for name in ("quartic_a0.qo", "quartic_a1.qo"):
        problem, roots, tree, eggers, f = setup(CORPUS / name)
        for k in range(1, tree.degree):
            assert not verify_factor_contacts(tree, eggers, roots, f, k, problem.precision).mismatches

    problem, roots, tree, eggers, f = setup(CORPUS / "two_branches.qo")
    assert verify_factor_contacts(tree, eggers, roots, f, 1, 9).entries[0].status == SKIPPED


def test_runner_on_two_branch():
    problem, roots, tree, eggers, f = setup(CORPUS / "two_branches.qo")
    runner = VerificationRunner(tree, eggers, roots, f, 1, problem.precision, [(1, 1), (1, 2)])
    report = runner.run_all()
    print(f"\nverification: {report.status}, {len(report.entries)} entries")
    assert not report.mismatches
    assert not report.violations
    assert report.count(MATCH) >= 5

    blocked = VerificationRunner(tree, eggers, roots, f, 2, problem.precision, [(1, 1)]).run_all()
    assert blocked.violations
    assert not [e for e in blocked.mismatches if e.theorem_backed]


if __name__ == "__main__":
    test_resultant_oracles_agree_on_two_branch()
    test_runner_on_two_branch()
