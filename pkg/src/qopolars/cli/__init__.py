from qopolars.cli.inputs import ProblemInput, parse_input, read_input
