"""Random words, weights and elements for property checks and unit tests.

Every sampler draws from a numpy RandomState, so a seed fixes the output.

"""

import numpy as np

from braidfold.algebra.cartan import CartanDatum, Weight, weights_of_height
from braidfold.algebra.freealg import Element, Word
from braidfold.algebra.braid import generator_products, expand_product, \
    symmetry_height
from braidfold.algebra.scalars import LaurentPoly

from typing import List, Optional, Tuple, Union


def _rng(seed: Union[int, np.random.RandomState, None]) -> np.random.RandomState:
    if isinstance(seed, np.random.RandomState):
        return seed
    return np.random.RandomState(seed)


def random_weight(C: CartanDatum, height: int,
                  seed: Union[int, np.random.RandomState, None] = None) -> Weight:
    """Uniformly chosen nonnegative weight of the given height."""
    assert height >= 0, "height must be nonnegative."
    rng = _rng(seed)
    weights = weights_of_height(C, height)
    return weights[rng.randint(len(weights))]


def random_word(C: CartanDatum, nu: Weight,
                seed: Union[int, np.random.RandomState, None] = None) -> Word:
    """Uniformly shuffled word of weight nu."""
    rng = _rng(seed)
    letters = np.repeat(np.arange(C.n), np.array(nu, dtype=np.int64))
    rng.shuffle(letters)
    return tuple(int(x) for x in letters)


def random_laurent(seed: Union[int, np.random.RandomState, None] = None,
                   max_terms: int = 2,
                   max_exponent: int = 2,
                   max_coeff: int = 2) -> LaurentPoly:
    """Nonzero Laurent polynomial with small exponents and coefficients."""
    rng = _rng(seed)
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms + 1)):
            e = int(rng.randint(-max_exponent, max_exponent + 1))
            c = int(rng.randint(-max_coeff, max_coeff + 1))
            terms[e] = terms.get(e, 0) + c
        p = LaurentPoly(terms)
        if not p.is_zero():
            return p


def random_element(C: CartanDatum, nu: Weight, n_terms: int = 3,
                   seed: Union[int, np.random.RandomState, None] = None) -> Element:
    """Homogeneous element: random coefficients on random words of weight nu."""
    rng = _rng(seed)
    x = Element.zero(C)
    for _ in range(n_terms):
        x = x + Element.from_word(C, random_word(C, nu, rng), random_laurent(rng))
    return x


def random_member(C: CartanDatum, i: int, nu: Weight, n_terms: int = 2,
                  primed: bool = False,
                  seed: Union[int, np.random.RandomState, None] = None) -> Element:
    """Random element of _if (or ^if when primed) of weight nu.

    A random combination of generator products; zero when no product has
    weight nu.

    """
    rng = _rng(seed)
    products = generator_products(C, i, nu)
    x = Element.zero(C)
    if not products:
        return x
    for _ in range(n_terms):
        gp = products[rng.randint(len(products))]
        x = x + expand_product(C, gp, primed=primed).scale(random_laurent(rng))
    return x


def random_word_pairs(C: CartanDatum, n_pairs: int, max_height: int,
                      seed: Union[int, np.random.RandomState, None] = None) \
        -> List[Tuple[Word, Word]]:
    """Pairs of words of a common random weight of height 1..max_height."""
    assert max_height >= 1, "max_height must be at least 1."
    rng = _rng(seed)
    pairs = []
    for _ in range(n_pairs):
        nu = random_weight(C, int(rng.randint(1, max_height + 1)), rng)
        pairs.append((random_word(C, nu, rng), random_word(C, nu, rng)))
    return pairs


def random_member_weight(C: CartanDatum, i: int, max_height: int,
                         seed: Union[int, np.random.RandomState, None] = None) \
        -> Optional[Weight]:
    """Random weight that _if can reach, with nu and s_i(nu) of height <= max_height.

    Such weights have at least one letter j != i and nu_i bounded by the
    sum of -a_ij nu_j.

    Returns:
        The weight, or None when no weight fits the bound.

    """
    rng = _rng(seed)
    candidates = [nu for h in range(1, max_height + 1)
                  for nu in weights_of_height(C, h)
                  if generator_products(C, i, nu)
                  and symmetry_height(C, i, nu) <= max_height]
    if not candidates:
        return None
    return candidates[rng.randint(len(candidates))]
