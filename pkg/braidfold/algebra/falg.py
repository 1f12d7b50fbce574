"""Lusztig's algebra f as the quotient of the free algebra by the form radical.

Zero tests, weight-space dimensions, membership in the subalgebras _if and
^if, and the orthogonal projections onto them all reduce to pairings with
words.  The radical of the form is the quantum Serre ideal, so an element
is zero in f exactly when it pairs to zero with every word of its weight.

"""

from braidfold.algebra.cartan import CartanDatum, Weight, check_weight, \
    height, simple_root, sub_weights
from braidfold.algebra.freealg import Element, Word, words_of_weight, \
    reduced_pairing, reduced_pair_with_word, form_normalization, \
    i_derivation
from braidfold.algebra.scalars import LaurentPoly, RationalFn
from braidfold.algebra import linalg
from braidfold.exceptions import NotHomogeneous, ResourceLimit

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Tuple, Union
import logging


DEFAULT_MAX_HEIGHT = 8


def check_height(nu: Iterable[int], max_height: int = DEFAULT_MAX_HEIGHT):
    if height(nu) > max_height:
        raise ResourceLimit(f"Weight {list(nu)} has height {height(nu)}, "
                            f"above the bound {max_height}.")


@dataclass(frozen=True)
class WeightSpace:
    """A weight space of the free algebra with the Gram matrix of the form.

    The Gram matrix is kept in reduced form: gram(a, b) equals
    normalization * reduced_gram[a][b], where normalization is
    prod_i (theta_i, theta_i)^nu_i.  Both have the same rank.

    Attributes:
        weight: The weight nu.
        words: All words of weight nu, in lexicographic order.
        reduced_gram: Laurent-polynomial Gram matrix P(words[a], words[b]).
        normalization: The common factor of all Gram entries.
        pivots: Indices of the first independent columns.
        rank: dim f_nu.

    """

    weight: Weight
    words: Tuple[Word, ...]
    reduced_gram: Tuple[Tuple[LaurentPoly, ...], ...]
    normalization: RationalFn
    pivots: Tuple[int, ...]
    rank: int

    def gram(self, a: int, b: int) -> RationalFn:
        return self.normalization * self.reduced_gram[a][b]

    @property
    def pivot_words(self) -> Tuple[Word, ...]:
        return tuple(self.words[k] for k in self.pivots)

    def to_json(self) -> dict:
        return {"weight": list(self.weight),
                "words": len(self.words),
                "rank": self.rank,
                "pivots": [list(self.words[k]) for k in self.pivots]}


def gram_matrix(C: CartanDatum, words: List[Word]) -> List[List[LaurentPoly]]:
    """Reduced Gram matrix of a list of words of one weight (symmetric)."""
    n = len(words)
    gram = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            gram[a][b] = gram[b][a] = reduced_pairing(C, words[a], words[b])
    return gram


def weight_space(C: CartanDatum, nu: Iterable[int],
                 max_height: int = DEFAULT_MAX_HEIGHT) -> WeightSpace:
    """Enumerate a weight space and compute its Gram matrix and exact rank.

    Args:
        C: Cartan datum.
        nu: Nonnegative weight.
        max_height: Resource bound on the height of nu.

    Returns:
        The WeightSpace of nu.

    Raises:
        ResourceLimit: The height of nu exceeds max_height.

    """
    nu = check_weight(C, nu, nonnegative=True)
    check_height(nu, max_height)
    return _weight_space(C, nu)


@lru_cache(maxsize=256)
def _weight_space(C: CartanDatum, nu: Weight) -> WeightSpace:
    words = words_of_weight(C, nu)
    gram = gram_matrix(C, list(words))
    rank, pivots = linalg.exact_rank(gram)
    logging.debug(f"Weight space {list(nu)}: {len(words)} words, rank {rank}.")
    return WeightSpace(weight=nu,
                       words=words,
                       reduced_gram=tuple(tuple(row) for row in gram),
                       normalization=form_normalization(C, nu),
                       pivots=tuple(pivots),
                       rank=rank)


def dim_weight(C: CartanDatum, nu: Iterable[int],
               max_height: int = DEFAULT_MAX_HEIGHT) -> int:
    """dim f_nu."""
    return weight_space(C, nu, max_height).rank


def _homogeneous_weight(x: Element, operation: str) -> Union[Weight, None]:
    try:
        return x.weight()
    except NotHomogeneous:
        raise NotHomogeneous(f"{operation} needs a homogeneous element.")


def is_zero_in_f(x: Element, max_height: int = DEFAULT_MAX_HEIGHT) -> bool:
    """True iff the homogeneous element x pairs to zero with every word.

    Raises:
        NotHomogeneous: x has several weight components.
        ResourceLimit: The weight of x is too high.

    """
    nu = _homogeneous_weight(x, "is_zero_in_f")
    if nu is None:
        return True
    check_height(nu, max_height)
    for w in words_of_weight(x.datum, nu):
        if not reduced_pair_with_word(x, w).is_zero():
            return False
    return True


def is_equal_in_f(x: Element, y: Element,
                  max_height: int = DEFAULT_MAX_HEIGHT) -> bool:
    """Equality in f, weight component by weight component."""
    return all(is_zero_in_f(part, max_height)
               for part in (x - y).weight_components().values())


def membership_left(i: int, x: Element,
                    max_height: int = DEFAULT_MAX_HEIGHT) -> bool:
    """x lies in _if, i.e. _ir(x) is zero in f."""
    _homogeneous_weight(x, "membership_left")
    x.datum.check_index(i)
    return is_zero_in_f(i_derivation(i, x), max_height)


def membership_right(i: int, x: Element,
                     max_height: int = DEFAULT_MAX_HEIGHT) -> bool:
    """x lies in ^if, i.e. x is orthogonal to f theta_i."""
    nu = _homogeneous_weight(x, "membership_right")
    C = x.datum
    C.check_index(i)
    if nu is None or nu[i] == 0:
        return True
    check_height(nu, max_height)
    for w in words_of_weight(C, sub_weights(nu, simple_root(C, i))):
        if not reduced_pair_with_word(x, w + (i,)).is_zero():
            return False
    return True


def _as_index_set(C: CartanDatum, index_set: Union[int, Iterable[int]]) \
        -> Tuple[int, ...]:
    if isinstance(index_set, int):
        index_set = (index_set,)
    index_set = tuple(sorted(set(int(i) for i in index_set)))
    for i in index_set:
        C.check_index(i)
    return index_set


def _orthogonal_split(x: Element, span: List[Word]) -> Tuple[Element, Element]:
    """Write x = p + c with c in the span of the given words and p orthogonal
    to all of them."""
    C = x.datum
    if not span or x.is_zero():
        return x, Element.zero(C)
    gram = gram_matrix(C, span)
    rank, pivots = linalg.exact_rank(gram)
    if rank == 0:
        return x, Element.zero(C)
    rhs = [reduced_pair_with_word(x, span[k]) for k in pivots]
    sub = [[gram[a][b] for b in pivots] for a in pivots]
    coords = linalg.solve(sub, rhs)
    assert coords is not None, "Pivot block of a Gram matrix must be invertible."
    c = Element(C, {span[k]: coords[n] for n, k in enumerate(pivots)})
    p = x - c
    for w in span:
        assert reduced_pair_with_word(p, w).is_zero(), \
            f"Projection residual is not orthogonal to {w}: the Gram system " \
            f"restricted to the complement is inconsistent."
    logging.debug(f"Orthogonal split against {len(span)} words (rank {rank}).")
    return p, c


def decompose_left(index_set: Union[int, Iterable[int]], x: Element,
                   max_height: int = DEFAULT_MAX_HEIGHT) \
        -> Tuple[Element, Element]:
    """x = p + c with p in the intersection of the _if and c in sum theta_i f.

    Returns:
        (p, c), where c is an explicit combination of words beginning with
        a letter of index_set.

    """
    C = x.datum
    index_set = _as_index_set(C, index_set)
    nu = _homogeneous_weight(x, "proj_left")
    if nu is None:
        return x, Element.zero(C)
    check_height(nu, max_height)
    span = [w for w in words_of_weight(C, nu) if w and w[0] in index_set]
    return _orthogonal_split(x, span)


def decompose_right(index_set: Union[int, Iterable[int]], x: Element,
                    max_height: int = DEFAULT_MAX_HEIGHT) \
        -> Tuple[Element, Element]:
    """Mirror of decompose_left with the complement sum f theta_i."""
    C = x.datum
    index_set = _as_index_set(C, index_set)
    nu = _homogeneous_weight(x, "proj_right")
    if nu is None:
        return x, Element.zero(C)
    check_height(nu, max_height)
    span = [w for w in words_of_weight(C, nu) if w and w[-1] in index_set]
    return _orthogonal_split(x, span)


def proj_left(index_set: Union[int, Iterable[int]], x: Element,
              max_height: int = DEFAULT_MAX_HEIGHT) -> Element:
    """Orthogonal projection onto the intersection of the _if, i in index_set.

    Args:
        index_set: A single index or a set of pairwise distinct indices.
        x: Homogeneous element.
        max_height: Resource bound.

    Returns:
        The component of x in _if (intersected over index_set), as an
        element of the free algebra representing it.

    """
    return decompose_left(index_set, x, max_height)[0]


def proj_right(index_set: Union[int, Iterable[int]], x: Element,
               max_height: int = DEFAULT_MAX_HEIGHT) -> Element:
    """Orthogonal projection onto ^if (intersected over index_set)."""
    return decompose_right(index_set, x, max_height)[0]


def admissible_index_sets(C: CartanDatum) -> List[Tuple[int, ...]]:
    """Sets of at least two pairwise orthogonal indices (a_ij = 0).

    These are the index sets that arise as vertex orbits of an admissible
    automorphism: no arrows, hence no Cartan coupling, inside an orbit.

    """
    result = []
    for size in range(2, C.n + 1):
        for subset in combinations(C.indices, size):
            if all(C.a(i, j) == 0 for i, j in combinations(subset, 2)):
                result.append(subset)
    return result


def coordinate_vector(x: Element, words: List[Word]) -> List[RationalFn]:
    """Coefficients of x on a list of words (free-algebra coordinates)."""
    return [x.coefficient(w) for w in words]
