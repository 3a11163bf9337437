# src/qopolars/algebra/cyclotomic.py
"""
Exact arithmetic in the cyclotomic tower Q(ζ_N).

An element is stored in its minimal conductor N (never ≡ 2 mod 4) as the
coefficient vector of a polynomial in ζ_N of degree < φ(N), reduced modulo
the N-th cyclotomic polynomial. Minimal conductors make the representation
canonical, so equality and hashing are plain tuple comparisons.
"""
from functools import lru_cache, total_ordering
from typing import Dict, List, Sequence, Tuple

from sympy import QQ, cyclotomic_poly, factorint, totient
try:  # SymPy >= 1.13: the sympy.ntheory name is a deprecated wrapper returning sympy.Integer
    from sympy.external.ntheory import legendre as legendre_symbol
except ImportError:
    from sympy.ntheory import legendre_symbol
from sympy.polys.densearith import dup_mul, dup_rem
from sympy.polys.euclidtools import dup_invert

from qopolars.algebra.rational import Rational, RationalLike, lcm, rat, rat_str

Coeffs = Tuple[Rational, ...]


@lru_cache(maxsize=None)
def _phi_dense(n: int) -> List[Rational]:
    """Φ_n as a dense high-to-low list over QQ."""
    if n == 1:
        return [QQ(1), QQ(-1)]
    return [QQ(int(c)) for c in cyclotomic_poly(n, polys=True).all_coeffs()]


@lru_cache(maxsize=None)
def _degree(n: int) -> int:
    return int(totient(n))


@lru_cache(maxsize=None)
def _primes(n: int) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted(factorint(n).items()))


def _to_dup(coeffs: Sequence[Rational]) -> List[Rational]:
    dense = list(reversed(coeffs))
    while dense and not dense[0]:
        dense.pop(0)
    return dense


def _from_dup(dense: Sequence[Rational], length: int) -> Coeffs:
    low = list(reversed(dense))
    low += [QQ(0)] * (length - len(low))
    return tuple(low[:length])


def _reduce(n: int, coeffs: Sequence[Rational]) -> Coeffs:
    """Reduce an arbitrary polynomial in ζ_n modulo Φ_n."""
    length = _degree(n)
    if len(coeffs) <= length:
        return tuple(coeffs) + (QQ(0),) * (length - len(coeffs))
    rem = dup_rem(_to_dup(coeffs), _phi_dense(n), QQ)
    return _from_dup(rem, length)


def _embed(n: int, coeffs: Coeffs, m: int) -> Coeffs:
    """Image of an element of Q(ζ_n) in Q(ζ_m), n | m."""
    if n == m:
        return coeffs
    step = m // n
    spread = [QQ(0)] * ((len(coeffs) - 1) * step + 1)
    for i, c in enumerate(coeffs):
        spread[i * step] = c
    return _reduce(m, spread)


def _descend(n: int, coeffs: Coeffs, p: int, power: int):
    """Coefficients in Q(ζ_{n/p}) when the element lies there, else None."""
    m = n // p
    if power >= 2:
        if any(c for j, c in enumerate(coeffs) if j % p):
            return None
        return tuple(coeffs[::p])[: _degree(m)]

    # p exactly divides n: Q(ζ_n) = Q(ζ_m)(ζ_p), basis ζ_p^b for b < p-1
    inv_p = pow(p, -1, m) if m > 1 else 0
    inv_m = pow(m, -1, p)
    parts: List[List[Rational]] = [[QQ(0)] * max(m, 1) for _ in range(p)]
    for j, c in enumerate(coeffs):
        if not c:
            continue
        a = (j * inv_p) % m if m > 1 else 0
        b = (j * inv_m) % p
        parts[b][a] += c
    reduced = [_reduce(m, part) for part in parts]
    last = reduced[p - 1]
    for b in range(1, p - 1):
        if any(x - y for x, y in zip(reduced[b], last)):
            return None
    return tuple(x - y for x, y in zip(reduced[0], last))


def _canonical(n: int, coeffs: Coeffs) -> Tuple[int, Coeffs]:
    changed = True
    while changed and n > 1:
        changed = False
        for p, power in _primes(n):
            lower = _descend(n, coeffs, p, power)
            if lower is not None:
                n, coeffs = n // p, lower
                changed = True
                break
    return n, coeffs


@total_ordering
class CyclotomicNumber:
    """An element of Q(ζ_N) in canonical (minimal-conductor) form."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: Sequence[Rational]):
        n, reduced = _canonical(conductor, _reduce(conductor, [rat(c) for c in coeffs]))
        self.conductor = n
        self.coeffs = reduced
        self._hash = hash((n, reduced))

    # constructors

    @classmethod
    def from_rational(cls, value: RationalLike) -> "CyclotomicNumber":
        return cls(1, [rat(value)])

    @classmethod
    def zero(cls) -> "CyclotomicNumber":
        return cls(1, [QQ(0)])

    @classmethod
    def one(cls) -> "CyclotomicNumber":
        return cls(1, [QQ(1)])

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CyclotomicNumber":
        """ζ_n^k with ζ_n = exp(2πi/n)."""
        if n < 1:
            raise ValueError(f"conductor must be positive, got {n}")
        k %= n
        spread = [QQ(0)] * (k + 1)
        spread[k] = QQ(1)
        return cls(n, spread)

    @classmethod
    def sqrt_rational(cls, value: RationalLike) -> "CyclotomicNumber":
        """Principal square root of a rational, expressed through Gauss sums."""
        q = rat(value)
        if not q:
            return cls.zero()
        negative = q < 0
        radicand = int(abs(q.numerator)) * int(q.denominator)
        outside = 1
        result = cls.one()
        for p, power in factorint(radicand).items():
            outside *= p ** (power // 2)
            if power % 2:
                result = result * _sqrt_prime(p)
        result = result * cls.from_rational(QQ(outside, int(q.denominator)))
        if negative:
            result = result * cls.zeta(4)
        return result

    # predicates and views

    def is_zero(self) -> bool:
        return self.conductor == 1 and not self.coeffs[0]

    def is_rational(self) -> bool:
        return self.conductor == 1

    def rational_value(self) -> Rational:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    # arithmetic

    def _lift(self, other: "CyclotomicNumber") -> Tuple[int, Coeffs, Coeffs]:
        m = lcm(self.conductor, other.conductor)
        return m, _embed(self.conductor, self.coeffs, m), _embed(other.conductor, other.coeffs, m)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.conductor == 1 and other.conductor == 1:
            return CyclotomicNumber(1, [self.coeffs[0] + other.coeffs[0]])
        m, a, b = self._lift(other)
        return CyclotomicNumber(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.conductor == 1 and other.conductor == 1:
            return CyclotomicNumber(1, [self.coeffs[0] * other.coeffs[0]])
        if other.conductor == 1:
            return CyclotomicNumber(self.conductor, [c * other.coeffs[0] for c in self.coeffs])
        if self.conductor == 1:
            return CyclotomicNumber(other.conductor, [c * self.coeffs[0] for c in other.coeffs])
        m, a, b = self._lift(other)
        product = dup_mul(_to_dup(a), _to_dup(b), QQ)
        return CyclotomicNumber(m, list(reversed(product)) or [QQ(0)])

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(ζ_N)")
        if self.conductor == 1:
            return CyclotomicNumber(1, [1 / self.coeffs[0]])
        inv = dup_invert(_to_dup(self.coeffs), _phi_dense(self.conductor), QQ)
        return CyclotomicNumber(self.conductor, list(reversed(inv)))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicNumber.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate_by(self, a: int) -> "CyclotomicNumber":
        """Image under the field automorphism ζ_N ↦ ζ_N^a, gcd(a, N) = 1."""
        n = self.conductor
        spread: Dict[int, Rational] = {}
        for j, c in enumerate(self.coeffs):
            if c:
                spread[(j * a) % n] = spread.get((j * a) % n, QQ(0)) + c
        dense = [QQ(0)] * (max(spread, default=0) + 1)
        for j, c in spread.items():
            dense[j] = c
        return CyclotomicNumber(n, dense)

    # comparison, hashing, rendering

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __lt__(self, other):
        """Deterministic total order used only for rendering and sorting."""
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return self._hash

    def sort_key(self) -> Tuple:
        return (self.conductor, self.coeffs)

    def to_json(self) -> Dict:
        return {"conductor": self.conductor, "coefficients": [rat_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Dict) -> "CyclotomicNumber":
        return cls(int(data["conductor"]), [rat(c) for c in data["coefficients"]])

    def __str__(self):
        if self.conductor == 1:
            return rat_str(self.coeffs[0])
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            power = "" if j == 0 else (f"z{self.conductor}" if j == 1 else f"z{self.conductor}^{j}")
            if not power:
                terms.append(rat_str(c))
            elif c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f"-{power}")
            else:
                terms.append(f"{rat_str(c)}*{power}")
        return "(" + " + ".join(terms).replace("+ -", "- ") + ")"

    def __repr__(self):
        return f"CyclotomicNumber({self})"


def _coerce(value):
    if isinstance(value, CyclotomicNumber):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return CyclotomicNumber.from_rational(value)
    return NotImplemented


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> CyclotomicNumber:
    if p == 2:
        # ζ_8 + ζ_8^7
        return CyclotomicNumber(8, [QQ(0), QQ(1), QQ(0), QQ(-1)])
    gauss = [QQ(0)] + [QQ(legendre_symbol(a, p)) for a in range(1, p)]
    g = CyclotomicNumber(p, gauss)
    if p % 4 == 1:
        return g
    return -CyclotomicNumber.zeta(4) * g


ZERO = CyclotomicNumber.zero()
ONE = CyclotomicNumber.one()
