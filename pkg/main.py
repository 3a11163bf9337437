import logging
import sys
from pathlib import Path

from qopolars.cli.render import render_report, render_tree
from qopolars.polar.profiler import PolarProfiler, degree_table, format_degree_table
from qopolars.utils.errors import QOError
from qopolars.utils.example_utils import setup
from qopolars.utils.setup_utils import setup_environment
from qopolars.verify.runner import VerificationRunner

CORPUS = Path(__file__).parent / "corpus"
DEFAULT_INPUT = CORPUS / "two_branches.qo"


def print_header(msg: str):
    """Print a styled header."""
    print("\n" + "=" * 50)
    print(msg)
    print("=" * 50 + "\n")


def print_section(msg: str):
    print(f"\n{msg}\n{'-' * 50}")


def main():
    settings = setup_environment()
    logging.basicConfig(level=settings.log_level)
    logger = logging.getLogger(__name__)
    path = Path(sys.argv[1]) if len(sys.argv) > 1 else DEFAULT_INPUT

    try:
        print_header(f"Polars of {path.name}")
        problem, roots, tree, eggers, f = setup(path, settings)
        print(f"f = {f}")
        print(f"degree {tree.degree}, {len(roots.branches)} branch(es), precision {problem.precision}")

        print_section("Kuo-Lu and Eggers trees")
        print(render_tree(tree, eggers, roots))

        print_section("Degrees of the Eggers factors")
        ks = list(range(1, tree.degree))
        print(format_degree_table(degree_table(tree, eggers, ks)))

        for k in ks:
            print_section(f"Polar of order {k}")
            print(PolarProfiler(tree, eggers, roots, k).get_profile_summary())

            report = VerificationRunner(
                tree, eggers, roots, f, k, problem.precision, settings.substitutions, settings.exact_resultant_max
            ).run_all()
            print()
            print(render_report(report))

    except QOError as e:
        logger.error(f"{type(e).__name__}: {str(e)}")
        print(f"\nerror: {str(e)}")
        sys.exit(e.exit_code)


if __name__ == "__main__":
    main()
