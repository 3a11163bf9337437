# src/qopolars/algebra/unipoly.py
from math import factorial, gcd as int_gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import Poly, QQ, Rational as SympyRational, Symbol, integer_nthroot, totient

from qopolars.algebra.cyclotomic import ONE, ZERO, CyclotomicNumber
from qopolars.algebra.rational import Rational, rat


def _c(value) -> CyclotomicNumber:
    if isinstance(value, CyclotomicNumber):
        return value
    return CyclotomicNumber.from_rational(value)


class UniPoly:
    """Dense univariate polynomial over Q(ζ_N), coefficients low to high."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        items = [_c(c) for c in coeffs]
        while items and items[-1].is_zero():
            items.pop()
        self.coeffs: Tuple[CyclotomicNumber, ...] = tuple(items)

    @classmethod
    def constant(cls, value) -> "UniPoly":
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, coeff=ONE) -> "UniPoly":
        return cls([ZERO] * degree + [_c(coeff)])

    @classmethod
    def from_roots(cls, roots: Iterable[CyclotomicNumber]) -> "UniPoly":
        result = cls.constant(ONE)
        for root in roots:
            result = result * cls([-_c(root), ONE])
        return result

    @property
    def degree(self) -> int:
        """-1 stands for the degree of the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def lc(self) -> CyclotomicNumber:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, i: int) -> CyclotomicNumber:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def support(self) -> List[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    # arithmetic

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (CyclotomicNumber, int, Rational)) and not isinstance(other, bool):
            scalar = _c(other)
            return UniPoly(c * scalar for c in self.coeffs)
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError(f"negative power {exponent} of a polynomial")
        result = UniPoly.constant(ONE)
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [ZERO] * max(len(remainder) - other.degree, 1)
        inv_lc = other.lc.inverse()
        while len(remainder) - 1 >= other.degree and remainder:
            shift = len(remainder) - 1 - other.degree
            factor = remainder[-1] * inv_lc
            quotient[shift] = factor
            for j, c in enumerate(other.coeffs):
                remainder[shift + j] = remainder[shift + j] - factor * c
            remainder.pop()
            while remainder and remainder[-1].is_zero():
                remainder.pop()
        return UniPoly(quotient), UniPoly(remainder)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return quotient

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * self.lc.inverse()

    def derivative(self, k: int = 1, normalized: bool = False) -> "UniPoly":
        if k < 0:
            raise ValueError(f"derivative order must be non-negative, got {k}")
        n = self.degree
        out = []
        for i in range(k, len(self.coeffs)):
            out.append(self.coeffs[i] * (factorial(i) // factorial(i - k)))
        result = UniPoly(out)
        if normalized and n >= k:
            result = result * QQ(factorial(n - k), factorial(n))
        return result

    def __call__(self, value) -> CyclotomicNumber:
        value = _c(value)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def scale_variable(self, omega: CyclotomicNumber) -> "UniPoly":
        """p(ω·z)."""
        factor = ONE
        out = []
        for c in self.coeffs:
            out.append(c * factor)
            factor = factor * omega
        return UniPoly(out)

    def is_polynomial_in_power(self, n: int) -> Optional[int]:
        """Residue r when every exponent of self is ≡ r (mod n), else None."""
        support = self.support()
        if not support:
            return 0
        residues = {i % n for i in support}
        return residues.pop() if len(residues) == 1 else None

    # comparison and rendering

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            try:
                other = _as_poly(other)
            except TypeError:
                return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_json(self) -> List:
        return [c.to_json() for c in self.coeffs]

    def __str__(self):
        return format_poly(self, "z")

    def __repr__(self):
        return f"UniPoly({self})"


def _as_poly(value) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, (CyclotomicNumber, int, Rational)) and not isinstance(value, bool):
        return UniPoly.constant(value)
    raise TypeError(f"cannot use {value!r} as a polynomial")


def format_poly(p: UniPoly, var: str) -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        power = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not power:
            terms.append(str(c))
        elif c == 1:
            terms.append(power)
        elif c == -1:
            terms.append(f"-{power}")
        else:
            terms.append(f"{c}*{power}")
    return " + ".join(terms).replace("+ -", "- ")


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_derivative(p: UniPoly, k: int, normalized: bool = False) -> UniPoly:
    return p.derivative(k, normalized=normalized)


def squarefree_decomposition(p: UniPoly) -> Dict[int, UniPoly]:
    """Yun's algorithm: {m: S_m} with p = const·∏ S_m^m, S_m monic squarefree."""
    if p.is_zero():
        raise ValueError("zero input")
    result: Dict[int, UniPoly] = {}
    if p.degree == 0:
        return result
    derivative = p.derivative()
    a = poly_gcd(p, derivative)
    b = p.exact_div(a)
    c = derivative.exact_div(a)
    d = c - b.derivative()
    m = 1
    while b.degree > 0:
        s = poly_gcd(b, d)
        if s.degree > 0:
            result[m] = s
        b = b.exact_div(s)
        c = d.exact_div(s)
        d = c - b.derivative()
        m += 1
    return result


# roots inside the tower

RootList = List[Tuple[CyclotomicNumber, int]]


def tower_roots(p: UniPoly) -> Tuple[RootList, UniPoly]:
    """
    Roots of p that can be located in Q(ζ_N), with multiplicities, and the
    monic cofactor carrying every root that could not be located.
    """
    located: RootList = []
    leftover = UniPoly.constant(ONE)
    for m, factor in sorted(squarefree_decomposition(p).items()):
        roots, rest = _split_squarefree(factor)
        located.extend((root, m) for root in roots)
        leftover = leftover * rest ** m
    located.sort(key=lambda item: item[0].sort_key())
    return located, leftover


def _split_squarefree(s: UniPoly) -> Tuple[List[CyclotomicNumber], UniPoly]:
    roots: List[CyclotomicNumber] = []
    if s.coeff(0).is_zero():
        roots.append(ZERO)
        s = s.exact_div(UniPoly.monomial(1))
    if s.degree <= 0:
        return roots, UniPoly.constant(ONE)
    if all(c.is_rational() for c in s.coeffs):
        found, rest = _split_rational(s)
    else:
        found, rest = _split_generic(s)
    return roots + found, rest


def _split_rational(s: UniPoly) -> Tuple[List[CyclotomicNumber], UniPoly]:
    z = Symbol("z")
    dense = [SympyRational(int(v.numerator), int(v.denominator))
             for v in (c.rational_value() for c in reversed(s.coeffs))]
    _, factors = Poly(dense, z, domain=QQ).factor_list()
    roots: List[CyclotomicNumber] = []
    rest = UniPoly.constant(ONE)
    for factor, _multiplicity in factors:
        as_uni = UniPoly(rat(c) for c in reversed(factor.all_coeffs())).monic()
        found = _roots_of_irreducible(as_uni)
        if found is None:
            rest = rest * as_uni
        else:
            roots.extend(found)
    return roots, rest


def _split_generic(s: UniPoly) -> Tuple[List[CyclotomicNumber], UniPoly]:
    s = s.monic()
    if s.degree == 1:
        return [-s.coeff(0)], UniPoly.constant(ONE)
    support = s.support()
    step = 0
    for i in support:
        step = int_gcd(step, i)
    if step > 1:
        inner = UniPoly(s.coeff(i * step) for i in range(s.degree // step + 1))
        inner_roots, inner_rest = _split_squarefree(inner)
        roots: List[CyclotomicNumber] = []
        rest = UniPoly.constant(ONE)
        for rho in inner_roots:
            found = nth_roots(rho, step)
            if found is None:
                rest = rest * UniPoly([-rho] + [ZERO] * (step - 1) + [ONE])
            else:
                roots.extend(found)
        if inner_rest.degree > 0:
            rest = rest * _inflate(inner_rest, step)
        return roots, rest
    if s.degree == 2:
        found = _quadratic_roots(s)
        if found is not None:
            return found, UniPoly.constant(ONE)
    return [], s


def _inflate(p: UniPoly, step: int) -> UniPoly:
    """p(z^step)."""
    out = [ZERO] * (p.degree * step + 1)
    for i, c in enumerate(p.coeffs):
        out[i * step] = c
    return UniPoly(out)


def _quadratic_roots(s: UniPoly) -> Optional[List[CyclotomicNumber]]:
    a, b, c = s.coeff(2), s.coeff(1), s.coeff(0)
    disc = b * b - 4 * a * c
    roots = nth_roots(disc, 2)
    if roots is None:
        return None
    return [(-b + roots[0]) / (2 * a), (-b + roots[1]) / (2 * a)]


def _roots_of_irreducible(f: UniPoly) -> Optional[List[CyclotomicNumber]]:
    """f monic, irreducible over Q."""
    n = f.degree
    if n == 1:
        return [-f.coeff(0)]
    if n == 2:
        return _quadratic_roots(f)
    if f.support() == [0, n]:
        return nth_roots(-f.coeff(0), n)
    order = _cyclotomic_order(f)
    if order is not None:
        return [CyclotomicNumber.zeta(order, k) for k in range(1, order + 1) if int_gcd(k, order) == 1]
    return None


def _cyclotomic_order(f: UniPoly) -> Optional[int]:
    n = f.degree
    for m in range(1, 4 * n * n + 3):
        if int(totient(m)) != n:
            continue
        candidate = UniPoly.from_roots(
            CyclotomicNumber.zeta(m, k) for k in range(1, m + 1) if int_gcd(k, m) == 1
        )
        if candidate == f:
            return m
    return None


def _rational_root(value: Rational, n: int) -> Optional[Rational]:
    num, exact_num = integer_nthroot(int(value.numerator), n)
    den, exact_den = integer_nthroot(int(value.denominator), n)
    if exact_num and exact_den:
        return QQ(int(num), int(den))
    return None


def nth_roots(rho: CyclotomicNumber, n: int) -> Optional[List[CyclotomicNumber]]:
    """
    All n solutions of z^n = rho when they lie in the tower, else None.

    Solutions of the form sqrt(q)·ζ, with q > 0 rational and ζ a root of
    unity, are read off directly. Any other solution, such as 1 + sqrt(2),
    is found by splitting the rational norm of z^n - rho.
    """
    if n == 1:
        return [rho]
    if rho.is_zero():
        return [ZERO] * n
    found = _radical_roots(rho, n)
    if found is None and not rho.is_rational():
        found = _norm_roots(rho, n)
    return found


def _radical_roots(rho: CyclotomicNumber, n: int) -> Optional[List[CyclotomicNumber]]:
    order = 2 * rho.conductor
    power = rho ** order
    if not power.is_rational() or power.rational_value() <= 0:
        return None
    # |z|^(2·n·conductor) = rho^order
    q = _rational_root(power.rational_value(), n * rho.conductor)
    if q is None:
        return None
    modulus = CyclotomicNumber.sqrt_rational(q)
    unit = rho / modulus ** n
    for t in range(order):
        if unit == CyclotomicNumber.zeta(order, t):
            # the n-th roots of ζ_order^t are ζ_{order·n}^{t + order·j}
            return [modulus * CyclotomicNumber.zeta(order * n, t + order * j) for j in range(n)]
    return None


def _norm_roots(rho: CyclotomicNumber, n: int) -> Optional[List[CyclotomicNumber]]:
    """Split ∏_σ (z^n - σ(rho)) over Q and keep the roots of z^n - rho."""
    conductor = rho.conductor
    orbit = {rho.conjugate_by(a) for a in range(1, conductor + 1) if int_gcd(a, conductor) == 1}
    norm = UniPoly.constant(ONE)
    for value in sorted(orbit, key=lambda c: c.sort_key()):
        norm = norm * UniPoly([-value] + [ZERO] * (n - 1) + [ONE])
    if not all(c.is_rational() for c in norm.coeffs):
        return None
    candidates, _ = _split_rational(norm)
    roots = sorted({z for z in candidates if z ** n == rho}, key=lambda c: c.sort_key())
    return roots if len(roots) == n else None
