"""The free algebra on the generators theta_i and Lusztig's bilinear form.

Elements are finite linear combinations of words with coefficients in Q(v).
The form is evaluated on pairs of words by peeling the leftmost letter:

    (theta_i w, u) = (theta_i, theta_i) (w, _ir(u)),  (1, 1) = 1,

with (theta_i, theta_i) = 1 / (1 - v_i^-2).  Every peeling step contributes
one factor (theta_i, theta_i), so for words u, w of weight nu

    (u, w) = prod_i (theta_i, theta_i)^nu_i * P(u, w)

where P(u, w) is a Laurent polynomial.  Only P is computed recursively (and
memoized); the normalization is applied once per weight.

"""

from braidfold.algebra.cartan import CartanDatum, Weight, check_weight
from braidfold.algebra.scalars import LaurentPoly, RationalFn, ZERO, ONE, \
    RF_ZERO, RF_ONE, rf_normalize, quantum_factorial, v_power
from braidfold.exceptions import DatumMismatch, InvalidInputError, \
    NotHomogeneous

from collections import defaultdict
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple, Union


# A word theta_{i_1} ... theta_{i_k} is the tuple (i_1, ..., i_k).
Word = Tuple[int, ...]

Scalar = Union[RationalFn, LaurentPoly, int]


def word_weight(C: CartanDatum, word: Word) -> Weight:
    nu = [0] * C.n
    for letter in word:
        nu[letter] += 1
    return tuple(nu)


class Element:
    """Formal linear combination of words over Q(v).

    Args:
        datum: The ambient Cartan datum.
        terms: Map from word to coefficient; zero coefficients are dropped.

    Note:
        Equality (==) is equality in the free algebra.  Use
        falg.is_equal_in_f for equality modulo the quantum Serre relations.

    """

    __slots__ = ('datum', 'terms')

    def __init__(self, datum: CartanDatum,
                 terms: Union[Dict[Word, Scalar], None] = None):
        self.datum = datum
        self.terms = {}
        if terms:
            for word, c in terms.items():
                c = RationalFn.coerce(c)
                if not c.is_zero():
                    word = tuple(int(x) for x in word)
                    for letter in word:
                        datum.check_index(letter)
                    self.terms[word] = c

    @classmethod
    def _trusted(cls, datum: CartanDatum,
                 terms: Dict[Word, RationalFn]) -> 'Element':
        x = cls.__new__(cls)
        x.datum = datum
        x.terms = {w: c for w, c in terms.items() if not c.is_zero()}
        return x

    @classmethod
    def zero(cls, datum: CartanDatum) -> 'Element':
        return cls._trusted(datum, {})

    @classmethod
    def one(cls, datum: CartanDatum) -> 'Element':
        return cls._trusted(datum, {(): RF_ONE})

    @classmethod
    def generator(cls, datum: CartanDatum, i: int) -> 'Element':
        datum.check_index(i)
        return cls._trusted(datum, {(i,): RF_ONE})

    @classmethod
    def from_word(cls, datum: CartanDatum, word: Iterable[int],
                  coeff: Scalar = 1) -> 'Element':
        return cls(datum, {tuple(word): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Word) -> RationalFn:
        return self.terms.get(tuple(word), RF_ZERO)

    def weight_components(self) -> Dict[Weight, 'Element']:
        parts = defaultdict(dict)
        for word, c in self.terms.items():
            parts[word_weight(self.datum, word)][word] = c
        return {nu: Element._trusted(self.datum, t) for nu, t in parts.items()}

    def is_homogeneous(self) -> bool:
        return len({word_weight(self.datum, w) for w in self.terms}) <= 1

    def weight(self) -> Union[Weight, None]:
        """Weight of a homogeneous element (None for the zero element).

        Raises:
            NotHomogeneous: The element has several weight components.

        """
        weights = {word_weight(self.datum, w) for w in self.terms}
        if len(weights) > 1:
            raise NotHomogeneous(f"Element has components in weights "
                                 f"{sorted(weights)}.")
        return weights.pop() if weights else None

    def _check_datum(self, other: 'Element'):
        if self.datum != other.datum:
            raise DatumMismatch("Elements live over different Cartan data.")

    def __add__(self, other: 'Element') -> 'Element':
        if not isinstance(other, Element):
            return NotImplemented
        self._check_datum(other)
        terms = dict(self.terms)
        for word, c in other.terms.items():
            terms[word] = terms[word] + c if word in terms else c
        return Element._trusted(self.datum, terms)

    def __neg__(self) -> 'Element':
        return Element._trusted(self.datum,
                                {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: 'Element') -> 'Element':
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> 'Element':
        c = RationalFn.coerce(c)
        if c.is_zero():
            return Element.zero(self.datum)
        return Element._trusted(self.datum,
                                {w: c * x for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        if isinstance(other, (RationalFn, LaurentPoly, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (RationalFn, LaurentPoly, int)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.datum == other.datum and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for word in sorted(self.terms):
            mono = "*".join(f"t{i}" for i in word) if word else "1"
            parts.append(f"({self.terms[word]})*{mono}")
        return " + ".join(parts)

    def to_json(self) -> Dict[str, list]:
        return {"terms": [{"word": list(word),
                           "coeff": self.terms[word].to_json()}
                          for word in sorted(self.terms)]}

    @classmethod
    def from_json(cls, datum: CartanDatum, data: Dict[str, list]) -> 'Element':
        terms = {}
        try:
            for entry in data["terms"]:
                word = tuple(int(x) for x in entry["word"])
                coeff = entry.get("coeff", [[0, 1]])
                c = RationalFn.from_json(coeff)
                terms[word] = terms[word] + c if word in terms else c
        except (KeyError, TypeError) as e:
            raise InvalidInputError(f"Malformed element JSON: {e}.")
        return cls(datum, terms)


def multiply(x: Element, y: Element) -> Element:
    """Product in the free algebra: bilinear extension of concatenation."""
    x._check_datum(y)
    terms = {}
    for u, a in x.terms.items():
        for w, b in y.terms.items():
            word = u + w
            c = a * b
            terms[word] = terms[word] + c if word in terms else c
    return Element._trusted(x.datum, terms)


def product(C: CartanDatum, factors: Iterable[Element]) -> Element:
    result = Element.one(C)
    for f in factors:
        result = multiply(result, f)
    return result


def divided_power(C: CartanDatum, i: int, n: int) -> Element:
    """theta_i^(n) = theta_i^n / [n]_{v_i}!."""
    C.check_index(i)
    if n < 0:
        raise InvalidInputError(f"Divided power needs n >= 0, got {n}.")
    coeff = rf_normalize(ONE, quantum_factorial(n, C.eps[i]))
    return Element._trusted(C, {(i,) * n: coeff})


def i_derivation(i: int, x: Element) -> Element:
    """The twisted derivation _ir.

    On a word theta_{j_1} ... theta_{j_k} it sums, over the positions l with
    j_l = i, v^{(alpha_{j_1} + ... + alpha_{j_{l-1}}, alpha_i)} times the word
    with letter l removed.

    """
    C = x.datum
    C.check_index(i)
    terms = {}
    for word, c in x.terms.items():
        exponent = 0
        for l, letter in enumerate(word):
            if letter == i:
                reduced = word[:l] + word[l + 1:]
                value = c * v_power(exponent)
                terms[reduced] = terms[reduced] + value if reduced in terms \
                    else value
            exponent += C.pairing(letter, i)
    return Element._trusted(C, terms)


def right_derivation(i: int, x: Element) -> Element:
    """The mirror derivation r_i, twisting by the weight of the suffix."""
    C = x.datum
    C.check_index(i)
    terms = {}
    for word, c in x.terms.items():
        exponent = 0
        for l in reversed(range(len(word))):
            letter = word[l]
            if letter == i:
                reduced = word[:l] + word[l + 1:]
                value = c * v_power(exponent)
                terms[reduced] = terms[reduced] + value if reduced in terms \
                    else value
            exponent += C.pairing(letter, i)
    return Element._trusted(C, terms)


def words_of_weight(C: CartanDatum, nu: Iterable[int]) -> Tuple[Word, ...]:
    """All words of weight nu, in lexicographic order."""
    return _words_of_weight(C, check_weight(C, nu, nonnegative=True))


@lru_cache(maxsize=None)
def _words_of_weight(C: CartanDatum, nu: Weight) -> Tuple[Word, ...]:

    def extend(remaining):
        if not any(remaining):
            yield ()
            return
        for i, count in enumerate(remaining):
            if count:
                rest = remaining[:i] + (count - 1,) + remaining[i + 1:]
                for tail in extend(rest):
                    yield (i,) + tail

    return tuple(extend(nu))


@lru_cache(maxsize=1 << 20)
def reduced_pairing(C: CartanDatum, u: Word, w: Word) -> LaurentPoly:
    """P(u, w): the word pairing with the (theta_i, theta_i) factors removed.

    Both words must have the same weight.

    """
    if not u:
        return ONE if not w else ZERO
    i = u[0]
    rest = u[1:]
    total = ZERO
    exponent = 0
    for l, letter in enumerate(w):
        if letter == i:
            total = total + reduced_pairing(C, rest, w[:l] + w[l + 1:]).shift(exponent)
        exponent += C.pairing(letter, i)
    return total


@lru_cache(maxsize=None)
def generator_norm(C: CartanDatum, i: int) -> RationalFn:
    """(theta_i, theta_i) = 1 / (1 - v_i^-2)."""
    e = 2 * C.eps[i]
    return rf_normalize(LaurentPoly({e: 1}), LaurentPoly({e: 1, 0: -1}))


@lru_cache(maxsize=None)
def form_normalization(C: CartanDatum, nu: Weight) -> RationalFn:
    """prod_i (theta_i, theta_i)^nu_i."""
    result = RF_ONE
    for i, k in enumerate(nu):
        if k:
            result = result * generator_norm(C, i) ** k
    return result


def word_pairing(C: CartanDatum, u: Word, w: Word) -> RationalFn:
    nu = word_weight(C, u)
    if nu != word_weight(C, w):
        return RF_ZERO
    p = reduced_pairing(C, tuple(u), tuple(w))
    if p.is_zero():
        return RF_ZERO
    return form_normalization(C, nu) * p


def reduced_pair_with_word(x: Element, w: Word) -> RationalFn:
    """sum_u x_u P(u, w) over the words u of x having the weight of w."""
    C = x.datum
    nu = word_weight(C, w)
    total = RF_ZERO
    for u, c in x.terms.items():
        if word_weight(C, u) == nu:
            p = reduced_pairing(C, u, w)
            if not p.is_zero():
                total = total + c * p
    return total


def pair(x: Element, y: Element) -> RationalFn:
    """Lusztig's symmetric bilinear form (x, y).

    Words of different weights are orthogonal.

    Args:
        x: Element of the free algebra.
        y: Element over the same datum.

    Returns:
        The exact value in Q(v).

    Raises:
        DatumMismatch: x and y live over different Cartan data.

    """
    x._check_datum(y)
    C = x.datum
    x_parts = x.weight_components()
    total = RF_ZERO
    for nu, y_part in y.weight_components().items():
        x_part = x_parts.get(nu)
        if x_part is None:
            continue
        partial = RF_ZERO
        for w, b in y_part.terms.items():
            s = reduced_pair_with_word(x_part, w)
            if not s.is_zero():
                partial = partial + s * b
        if not partial.is_zero():
            total = total + form_normalization(C, nu) * partial
    return total
