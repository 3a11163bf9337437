# tests/test_cli.py
import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from qopolars.algebra.cyclotomic import CyclotomicNumber
from qopolars.algebra.rational import rat
from qopolars.cli.commands import cli
from qopolars.cli.inputs import parse_input
from qopolars.polar.predictions import eggers_factorization
from qopolars.polytope.types import NewtonPolytope
from qopolars.series.exponent import Exponent
from qopolars.series.fractional import FractionalSeries
from qopolars.utils.errors import InputSemanticError, InputSyntaxError
from qopolars.utils.example_utils import setup
from qopolars.verify.runner import VerificationRunner
from qopolars.verify.types import INCONCLUSIVE, SKIPPED, VerificationEntry, VerificationReport

CORPUS = Path(__file__).parent.parent / "corpus"
SETTINGS = ("QO_PRECISION", "QO_LOG_LEVEL", "QO_SUBSTITUTIONS", "QO_EXACT_RESULTANT_MAX")


@pytest.fixture
def runner(monkeypatch, tmp_path):
    for name in SETTINGS:
        monkeypatch.delenv(name, raising=False)
    # keep a stray .env in the working directory out of the run
    monkeypatch.chdir(tmp_path)
    return CliRunner()


def _invoke(runner: CliRunner, *args):
    result = runner.invoke(cli, [str(a) for a in args])
    print(f"\n$ qo {' '.join(str(a) for a in args)}  ->  exit {result.exit_code}")
    print(result.output)
    return result


def test_parse_two_branches():
    problem = parse_input(
        'vars=[x1, x2]\nbranch{root="x1^(3/2)*x2", denom=2}; branch{root="x1^5*x2^2", denom=1, name=g}\nprecision=9'
    )
    assert problem.names == ["x1", "x2"]
    assert [b.label for b in problem.branches] == ["f1", "g"]
    assert [b.denominator for b in problem.branches] == [2, 1]
    assert problem.precision == 9
    assert not problem.is_polynomial


def test_parse_polynomial_input():
    problem = parse_input('vars=[x]; poly="y^3 + x^2*y"  # cusp with a line')
    assert problem.is_polynomial
    assert problem.poly.degree == 3
    assert problem.branches == []


def test_parse_input_errors():
    with pytest.raises(InputSyntaxError) as info:
        parse_input('vars=[x1, x2]\n\n\nbranch{root="x1^(3/0)", denom=2}')
    assert info.value.line == 4
    with pytest.raises(InputSemanticError, match="missing vars"):
        parse_input('branch{root="x1", denom=1}')
    with pytest.raises(InputSemanticError, match="not both"):
        parse_input('vars=[x]; branch{root="x", denom=1}; poly="y^2 - x^3"')
    with pytest.raises(InputSemanticError):
        parse_input('vars=[x]; branch{root="x"}')
    with pytest.raises(InputSyntaxError):
        parse_input("vars=[x] @")


def test_tree_command_renders_dot(runner):
    result = _invoke(runner, "tree", "--format", "dot", CORPUS / "two_branches.qo")
    assert result.exit_code == 0
    assert "digraph kuolu" in result.output
    assert "(3/2,1)" in result.output
    assert "digraph eggers" in result.output
    # f2 is dashed at the single finite vertex
    assert "style=dashed" in result.output


def test_polar_command_degree_table(runner):
    result = _invoke(runner, "polar", "-k", "2", CORPUS / "four_branches.qo")
    assert result.exit_code == 0
    rows = [line.split() for line in result.output.splitlines()]
    assert ["2", "6", "4", "4"] in rows
    assert "Kuo-Lu 2-regular: yes" in result.output


def test_contact_and_polytope_commands(runner):
    result = _invoke(runner, "contact", CORPUS / "two_branches.qo", "f1", "f2")
    assert result.exit_code == 0
    assert "cont_P(f1, f2) =" in result.output

    result = _invoke(runner, "polytope", CORPUS / "two_branches.qo")
    assert result.exit_code == 0
    assert "reducible (q=(3/2,1), i0=2)" in result.output

    result = _invoke(runner, "contact", CORPUS / "two_branches.qo", "f1", "nonsense")
    assert result.exit_code == 1


def test_verify_exit_codes(runner):
    print("\n=== verify ===")
    ok = _invoke(runner, "verify", "-k", "1", CORPUS / "two_branches.qo")
    assert ok.exit_code == 0
    assert "Verification:" in ok.output

    violated = _invoke(runner, "verify", "-k", "2", CORPUS / "three_lines.qo")
    assert violated.exit_code == 2
    assert "not 2-regular" in violated.output


def test_verify_exits_3_when_precision_blocks_every_claim(runner, monkeypatch):
    blocked = VerificationReport()
    blocked.add(
        VerificationEntry("higher Kuo-Lu lemma", None, None, INCONCLUSIVE, detail="too short", indeterminate=True)
    )
    blocked.add(VerificationEntry("resultant polytope of f", None, None, SKIPPED))
    monkeypatch.setattr(VerificationRunner, "run_all", lambda self: blocked)
    result = _invoke(runner, "verify", "-k", "1", CORPUS / "two_branches.qo")
    assert result.exit_code == 3
    assert "raise QO_PRECISION" in result.output

    # inconclusive for another reason still exits 0
    blocked.entries[0].indeterminate = False
    assert _invoke(runner, "verify", "-k", "1", CORPUS / "two_branches.qo").exit_code == 0


def test_json_reports_are_deterministic_and_exact(runner):
    print("\n=== JSON reports ===")
    cases = {
        "tree": ("tree", "--format", "json", CORPUS / "four_branches.qo"),
        "polar": ("polar", "-k", "2", "--format", "json", CORPUS / "four_branches.qo"),
        "verify": ("verify", "-k", "1", "--format", "json", CORPUS / "two_branches.qo"),
    }
    data = {}
    for name, args in cases.items():
        texts = []
        for attempt in (1, 2):
            target = Path(f"{name}-{attempt}.json")
            assert _invoke(runner, *args, "-o", target).exit_code == 0
            texts.append(target.read_text(encoding="utf-8"))
        assert texts[0] == texts[1]
        data[name] = json.loads(texts[0])

    problem, roots, tree, eggers, f = setup(CORPUS / "four_branches.qo")
    bars = data["tree"]["kuo_lu"]["bars"]
    assert len(bars) == len(tree.bars)
    for entry in bars:
        bar = tree.bar(entry["index"])
        assert Exponent.from_json(entry["height"], 2) == bar.height
        center = entry["center"]
        terms = {
            Exponent.from_json(t["exponent"], 2): CyclotomicNumber.from_json(t["coefficient"])
            for t in center["terms"]
        }
        precision = None if center["precision"] is None else rat(center["precision"])
        assert FractionalSeries(2, terms, precision) == bar.center
    # sqrt(2) from f21 and f22 is written as an element of Q(ζ_8)
    assert any(t["coefficient"]["conductor"] > 1 for entry in bars for t in entry["center"]["terms"])

    (profile,) = data["polar"]["profiles"]
    factors = eggers_factorization(tree, eggers, roots, 2)
    assert [x["degree"] for x in profile["factors"]] == [x.degree for x in factors]
    for entry, factor in zip(profile["factors"], factors):
        region = entry["self_contact"]["region"]
        vertices = [tuple(rat(a) for a in v) for v in region["vertices"]]
        assert rat(entry["self_contact"]["factor"]) == factor.self_contact.factor
        assert NewtonPolytope(region["dimension"], vertices) == factor.self_contact.region

    report = data["verify"]
    assert report["counts"]["match"] > 0
    assert not report["violations"]
    assert sum(report["counts"].values()) == len(report["entries"])


def test_bad_setting_fails_before_any_command(runner, monkeypatch):
    monkeypatch.setenv("QO_EXACT_RESULTANT_MAX", "1")
    result = _invoke(runner, "tree", CORPUS / "smooth.qo")
    assert result.exit_code != 0


if __name__ == "__main__":
    test_parse_two_branches()
    test_parse_input_errors()
