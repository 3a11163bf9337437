# src/qopolars/cli/inputs.py
"""
Reader for ``.qo`` problem files.

    # (y^2 - x1^3*x2^2)(y - x1^5*x2^2)
    vars=[x1, x2]
    branch{root="x1^(3/2)*x2", denom=2}
    branch{root="x1^5*x2^2", denom=1, name=f2}
    precision=9

Statements are separated by newlines or ``;``. A problem gives either
branches or one ``poly="..."`` in a single variable.
"""
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

from qopolars.algebra.rational import Rational, rat
from qopolars.roots.types import Branch
from qopolars.series.literal import parse_series, parse_series_poly
from qopolars.series.ypoly import SeriesYPoly
from qopolars.utils.errors import InputSemanticError, InputSyntaxError

logger = logging.getLogger(__name__)

TOKEN = re.compile(
    r"""
    (?P<comment>\#[^\n]*)
  | (?P<newline>\n)
  | (?P<space>[ \t\r]+)
  | (?P<string>"[^"\n]*")
  | (?P<number>-?\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<punct>[=;,\[\]{}])
    """,
    re.VERBOSE,
)
KEYWORDS = ("vars", "branch", "poly", "precision", "conductor")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


@dataclass
class ProblemInput:
    names: List[str]
    branches: List[Branch] = field(default_factory=list)
    poly: Optional[SeriesYPoly] = None
    precision: Optional[Rational] = None
    conductor: Optional[int] = None
    source: Optional[str] = None

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def is_polynomial(self) -> bool:
        return self.poly is not None


def tokenize(text: str) -> Iterator[Token]:
    line, start = 1, 0
    position = 0
    while position < len(text):
        match = TOKEN.match(text, position)
        if match is None:
            raise InputSyntaxError(f"unexpected character {text[position]!r}", line, position - start + 1)
        kind = match.lastgroup
        if kind == "newline":
            yield Token("sep", "\n", line, position - start + 1)
            line, start = line + 1, match.end()
        elif kind == "punct" and match.group() == ";":
            yield Token("sep", ";", line, position - start + 1)
        elif kind not in ("space", "comment"):
            yield Token(kind, match.group(), line, position - start + 1)
        position = match.end()
    yield Token("end", "", line, position - start + 1)


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(tokenize(text))
        self.position = 0
        self.raw: Dict[str, List] = {key: [] for key in KEYWORDS}

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def advance(self) -> Token:
        token = self.current
        self.position += 1
        return token

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        token = self.current
        if token.kind != kind or (text is not None and token.text != text):
            wanted = text or kind
            raise InputSyntaxError(f"expected {wanted!r}, found {token.text or 'end of input'!r}", token.line, token.column)
        return self.advance()

    def parse(self) -> Dict[str, List]:
        while self.current.kind != "end":
            if self.current.kind == "sep":
                self.advance()
                continue
            self.statement()
            if self.current.kind not in ("sep", "end"):
                token = self.current
                raise InputSyntaxError(f"expected end of statement, found {token.text!r}", token.line, token.column)
        return self.raw

    def statement(self) -> None:
        keyword = self.expect("name")
        if keyword.text not in KEYWORDS:
            raise InputSyntaxError(f"unknown statement {keyword.text!r}", keyword.line, keyword.column)
        if keyword.text == "branch":
            self.raw["branch"].append((keyword, self.fields()))
            return
        self.expect("punct", "=")
        if keyword.text == "vars":
            self.raw["vars"].append((keyword, self.name_list()))
        else:
            self.raw[keyword.text].append((keyword, self.value()))

    def name_list(self) -> List[str]:
        self.expect("punct", "[")
        names = [self.expect("name").text]
        while self.current.text == ",":
            self.advance()
            names.append(self.expect("name").text)
        self.expect("punct", "]")
        return names

    def fields(self) -> Dict[str, Token]:
        self.expect("punct", "{")
        out: Dict[str, Token] = {}
        while True:
            key = self.expect("name")
            self.expect("punct", "=")
            out[key.text] = self.value()
            if self.current.text != ",":
                break
            self.advance()
        self.expect("punct", "}")
        return out

    def value(self) -> Token:
        token = self.current
        if token.kind not in ("string", "number", "name"):
            raise InputSyntaxError(f"expected a value, found {token.text or 'end of input'!r}", token.line, token.column)
        return self.advance()


def _literal(token: Token) -> Tuple[str, int, int]:
    """Text of a quoted literal and the position of its first character."""
    if token.kind != "string":
        raise InputSyntaxError("expected a quoted literal", token.line, token.column)
    return token.text[1:-1], token.line, token.column + 1


def _integer(token: Token, what: str) -> int:
    if token.kind != "number" or "/" in token.text or int(token.text) < 1:
        raise InputSemanticError(f"{what} must be a positive integer, got {token.text!r} (line {token.line})")
    return int(token.text)


def _rational(token: Token) -> Rational:
    text = token.text.strip('"')
    try:
        numerator, _, denominator = text.partition("/")
        value = rat(int(numerator), int(denominator or 1))
    except (ValueError, ZeroDivisionError):
        raise InputSyntaxError(f"malformed rational {token.text!r}", token.line, token.column)
    if value <= 0:
        raise InputSemanticError(f"precision must be positive, got {text}")
    return value


def _single(raw: Dict[str, List], key: str):
    entries = raw[key]
    if len(entries) > 1:
        keyword = entries[1][0]
        raise InputSemanticError(f"{key} given twice (line {keyword.line})")
    return entries[0][1] if entries else None


def parse_input(text: str, source: Optional[str] = None) -> ProblemInput:
    """Parse and validate a problem; orbits are expanded later by the roots module."""
    raw = _Parser(text).parse()
    names = _single(raw, "vars")
    if names is None:
        raise InputSemanticError("missing vars=[...]")
    problem = ProblemInput(names=names, source=source)

    precision = _single(raw, "precision")
    if precision is not None:
        problem.precision = _rational(precision)
    conductor = _single(raw, "conductor")
    if conductor is not None:
        problem.conductor = _integer(conductor, "conductor")

    for index, (keyword, fields) in enumerate(raw["branch"], start=1):
        unknown = sorted(set(fields) - {"root", "denom", "name"})
        if unknown:
            raise InputSemanticError(f"branch on line {keyword.line}: unknown field(s) {', '.join(unknown)}")
        if "root" not in fields or "denom" not in fields:
            raise InputSemanticError(f"branch on line {keyword.line} needs root= and denom=")
        text, line, column = _literal(fields["root"])
        root = parse_series(text, names, line=line, column=column)
        label = fields["name"].text.strip('"') if "name" in fields else f"f{index}"
        problem.branches.append(Branch(label, root, _integer(fields["denom"], "denom")))

    poly = _single(raw, "poly")
    if poly is not None:
        if problem.branches:
            raise InputSemanticError("give either branches or poly, not both")
        text, line, column = _literal(poly)
        problem.poly = parse_series_poly(text, names, line=line, column=column)
        if problem.nvars != 1:
            raise InputSemanticError("poly= inputs are supported in one variable; give branches for d > 1")
        if not problem.poly.is_weierstrass():
            raise InputSemanticError(f"{problem.poly} is not a Weierstrass polynomial")
    elif not problem.branches:
        raise InputSemanticError("no branch and no poly given")

    logger.debug(f"parsed problem: {len(problem.branches)} branches, poly={problem.poly}")
    return problem


def read_input(path) -> ProblemInput:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputSemanticError(f"cannot read {path}: {str(e)}")
    return parse_input(text, source=str(path))
