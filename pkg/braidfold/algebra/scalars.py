"""Exact scalars in Z[v, v^-1] and its fraction field, and quantum integers.

LaurentPoly is kept as a map from exponent to integer coefficient.  Anything
that needs a polynomial gcd or an exact quotient is handed to sympy's
univariate polynomial ring over ZZ after shifting the exponents to start at
zero.

"""

from sympy.polys.rings import ring
from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed

from braidfold.exceptions import InvalidInputError

from functools import lru_cache
from typing import Dict, Iterable, List, Union


_POLY_RING, _V = ring("v", ZZ)


class LaurentPoly:
    """Laurent polynomial in v with integer coefficients.

    Args:
        terms: Map from exponent to coefficient.  Zero coefficients are
            dropped, so equal polynomials always carry identical term maps.

    """

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Union[Dict[int, int], None] = None):
        if terms is None:
            terms = {}
        self._terms = {int(e): int(c) for e, c in terms.items() if c != 0}
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> 'LaurentPoly':
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> 'LaurentPoly':
        return cls({exponent: coeff})

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def valuation(self) -> int:
        """Lowest exponent.  The zero polynomial has no valuation."""
        assert self._terms, "The zero Laurent polynomial has no valuation."
        return min(self._terms)

    @property
    def degree(self) -> int:
        assert self._terms, "The zero Laurent polynomial has no degree."
        return max(self._terms)

    def shift(self, k: int) -> 'LaurentPoly':
        """Multiply by v^k."""
        if k == 0:
            return self
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def bar(self) -> 'LaurentPoly':
        """Substitute v -> v^-1."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def evaluate_mod(self, v0: int, p: int) -> int:
        """Value at v = v0 in the field with p elements (v0 must be a unit)."""
        total = 0
        for e, c in self._terms.items():
            total += c * pow(v0, e, p)
        return total % p

    # Arithmetic.

    def __add__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, RationalFn):
            return NotImplemented
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'LaurentPoly':
        if n < 0:
            assert self.is_monomial(), "Only monomials are invertible in Z[v, v^-1]."
            ((e, c),) = self._terms.items()
            assert c in (1, -1), "Only signed powers of v are invertible."
            return LaurentPoly({e * n: 1 if n % 2 == 0 else c})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other: 'LaurentPoly') -> 'LaurentPoly':
        """Quotient self / other, which must be exact in Z[v, v^-1].

        Only call this where exactness is guaranteed (quantum binomials,
        fraction-free elimination steps).

        """
        assert not other.is_zero(), "Division by the zero Laurent polynomial."
        if self.is_zero():
            return ZERO
        if other.is_monomial():
            ((e, c),) = other._terms.items()
            if all(coeff % c == 0 for coeff in self._terms.values()):
                return LaurentPoly({k - e: coeff // c
                                    for k, coeff in self._terms.items()})
        val_a, poly_a = self._to_poly()
        val_b, poly_b = other._to_poly()
        try:
            quotient = poly_a.exquo(poly_b)
        except ExactQuotientFailed:
            raise AssertionError(f"Division of {self} by {other} is not exact.")
        return _from_poly(quotient, val_a - val_b)

    def _to_poly(self):
        """Return (valuation, polynomial in ZZ[v] with nonzero constant term)."""
        val = self.valuation
        poly = _POLY_RING.from_dict({(e - val,): c
                                     for e, c in self._terms.items()})
        return val, poly

    # Comparison and hashing.

    def __eq__(self, other):
        other = _coerce_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            if e == 0:
                mono = f"{abs(c)}"
            else:
                power = "v" if e == 1 else f"v^{e}"
                mono = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            text += f" {sign} {mono}"
        return text

    # Canonical JSON.

    def to_json(self) -> List[List[int]]:
        return [[e, c] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: List[List[int]]) -> 'LaurentPoly':
        terms = {}
        for e, c in data:
            terms[int(e)] = terms.get(int(e), 0) + int(c)
        return cls(terms)


def _coerce_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    return NotImplemented


def _from_poly(poly, shift: int) -> LaurentPoly:
    return LaurentPoly({monom[0] + shift: int(c) for monom, c in poly.terms()})


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
V = LaurentPoly({1: 1})


def v_power(k: int) -> LaurentPoly:
    """The monomial v^k."""
    return LaurentPoly({k: 1})


class RationalFn:
    """Element of Q(v), stored as a canonical reduced fraction.

    Use rf_normalize (or the arithmetic operators) to build instances;
    the constructor trusts its inputs to be canonical already.

    Attributes:
        num: Numerator, a LaurentPoly carrying every power of v.
        den: Denominator, a polynomial with nonzero constant term and
            positive leading coefficient.

    """

    __slots__ = ('num', 'den', '_hash')

    def __init__(self, num: LaurentPoly, den: LaurentPoly = None):
        self.num = num
        self.den = ONE if den is None else den
        self._hash = None

    @classmethod
    def coerce(cls, x) -> 'RationalFn':
        if isinstance(x, RationalFn):
            return x
        if isinstance(x, int):
            return cls(LaurentPoly({0: x}), ONE)
        if isinstance(x, LaurentPoly):
            return cls(x, ONE)
        raise TypeError(f"Cannot interpret {type(x).__name__} as a rational function.")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == ONE

    def __add__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return rf_normalize(self.num + other.num, self.den)
        return rf_normalize(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RF_ZERO
        if self.is_laurent() and other.is_laurent():
            return RationalFn(self.num * other.num, ONE)
        return rf_normalize(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> 'RationalFn':
        if self.is_zero():
            raise ZeroDivisionError("The zero rational function is not invertible.")
        return rf_normalize(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalFn.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> 'RationalFn':
        if n < 0:
            return self.inverse() ** (-n)
        return rf_normalize(self.num ** n, self.den ** n)

    def __eq__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.den == ONE:
            return repr(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self) -> Dict[str, List[List[int]]]:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> 'RationalFn':
        if isinstance(data, list):
            return rf_normalize(LaurentPoly.from_json(data), ONE)
        return rf_normalize(LaurentPoly.from_json(data["num"]),
                            LaurentPoly.from_json(data["den"]))


def rf_normalize(num: LaurentPoly, den: LaurentPoly) -> RationalFn:
    """Reduce num/den to the canonical fraction.

    The gcd is taken in ZZ[v] (integer content included) after moving every
    power of v into the numerator; the denominator is left with nonzero
    constant term and positive leading coefficient.

    Args:
        num: Numerator.
        den: Denominator, nonzero.

    Returns:
        The canonical RationalFn equal to num/den.

    Raises:
        ZeroDivisionError: den is zero.

    """
    num = _coerce_laurent(num)
    den = _coerce_laurent(den)
    if den.is_zero():
        raise ZeroDivisionError("Rational function with zero denominator.")
    if num.is_zero():
        return RF_ZERO

    val_n, poly_n = num._to_poly()
    val_d, poly_d = den._to_poly()
    shift = val_n - val_d

    if poly_d == 1:
        return RationalFn(num.shift(-val_d), ONE)
    if poly_d == -1:
        return RationalFn((-num).shift(-val_d), ONE)

    _, poly_n, poly_d = poly_n.cofactors(poly_d)
    if poly_d.LC < 0:
        poly_n, poly_d = -poly_n, -poly_d
    return RationalFn(_from_poly(poly_n, shift), _from_poly(poly_d, 0))


RF_ZERO = RationalFn(ZERO, ONE)
RF_ONE = RationalFn(ONE, ONE)


@lru_cache(maxsize=None)
def quantum_integer(n: int, eps: int = 1) -> LaurentPoly:
    """Gaussian integer [n] at v_i = v^eps.

    [n] = (v_i^n - v_i^-n) / (v_i - v_i^-1), evaluated by exact division.
    Negative n is allowed: [-n] = -[n].

    """
    assert eps > 0, f"Symmetrizer exponent must be positive, got {eps}."
    if n == 0:
        return ZERO
    numerator = LaurentPoly({eps * n: 1, -eps * n: -1})
    denominator = LaurentPoly({eps: 1, -eps: -1})
    return numerator.exact_div(denominator)


@lru_cache(maxsize=None)
def quantum_factorial(n: int, eps: int = 1) -> LaurentPoly:
    """[n]! = [n][n-1]...[1] at v_i = v^eps, with [0]! = 1."""
    if n < 0:
        raise InvalidInputError(f"Quantum factorial of negative integer {n}.")
    result = ONE
    for k in range(1, n + 1):
        result = result * quantum_integer(k, eps)
    return result


@lru_cache(maxsize=None)
def quantum_binomial(n: int, k: int, eps: int = 1) -> LaurentPoly:
    """Gaussian binomial [n choose k] at v_i = v^eps (exact quotient)."""
    if n < 0 or k < 0:
        raise InvalidInputError(f"Quantum binomial needs nonnegative "
                                f"arguments, got ({n}, {k}).")
    if k > n:
        raise InvalidInputError(f"Quantum binomial with k={k} > n={n}.")
    return quantum_factorial(n, eps).exact_div(
        quantum_factorial(k, eps) * quantum_factorial(n - k, eps))


def scalar_from_json(data) -> Union[LaurentPoly, RationalFn]:
    """Decode either scalar form (list of pairs, or a num/den dict)."""
    if isinstance(data, dict):
        return RationalFn.from_json(data)
    return LaurentPoly.from_json(data)


def common_denominator(values: Iterable[RationalFn]) -> LaurentPoly:
    """Least common multiple of the denominators of some rational functions."""
    lcm = _POLY_RING.one
    for x in values:
        if x.den != ONE:
            lcm = lcm.lcm(x.den._to_poly()[1])
    if lcm.LC < 0:
        lcm = -lcm
    return _from_poly(lcm, 0)


def clear_denominators(values: List[RationalFn]) -> List[LaurentPoly]:
    """Scale a vector of rational functions to Laurent polynomials.

    Every entry is multiplied by the same common denominator, so the scaled
    vector spans the same line over Q(v).

    """
    common = common_denominator(values)
    return [x.num * common.exact_div(x.den) for x in values]
