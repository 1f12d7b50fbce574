"""The elements f(i,j;m), f'(i,j;m) and Lusztig's symmetries T_i on _if.

_if is generated by the f(i,j;m) (j != i, 0 <= m <= -a_ij) and ^if by the
f'(i,j;m).  T_i : _if -> ^if is the algebra isomorphism with

    T_i(f(i,j;m)) = f'(i,j;-a_ij-m).

It is evaluated by writing x as a combination of products of generators
(an exact solve against a basis of the weight space) and substituting.

"""

from braidfold.algebra.cartan import CartanDatum, Weight, height, \
    reflect_weight, sub_weights
from braidfold.algebra.freealg import Element, divided_power, multiply, \
    product, pair, reduced_pair_with_word, words_of_weight
from braidfold.algebra.falg import DEFAULT_MAX_HEIGHT, check_height, \
    weight_space, is_zero_in_f, membership_left, membership_right, \
    coordinate_vector
from braidfold.algebra.scalars import RationalFn, v_power
from braidfold.algebra import linalg
from braidfold.exceptions import InvalidInputError, NotHomogeneous, \
    NotInSubalgebra

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple, Union
import logging


@dataclass(frozen=True)
class GeneratorProduct:
    """Product f(i,j_1;m_1) f(i,j_2;m_2) ... (or its primed version).

    Attributes:
        i: The distinguished index.
        factors: Sequence of (j, m) with j != i and 0 <= m <= -a_ij.

    """

    i: int
    factors: Tuple[Tuple[int, int], ...]

    def weight(self, C: CartanDatum) -> Weight:
        nu = [0] * C.n
        for j, m in self.factors:
            nu[self.i] += m
            nu[j] += 1
        return tuple(nu)

    def to_json(self) -> List[List[int]]:
        return [[j, m] for j, m in self.factors]


def _check_pair(C: CartanDatum, i: int, j: int):
    C.check_index(i)
    C.check_index(j)
    if i == j:
        raise InvalidInputError(f"f(i,j;m) needs i != j, got i = j = {i}.")


@lru_cache(maxsize=None)
def _f_element(C: CartanDatum, i: int, j: int, m: int, primed: bool) -> Element:
    terms = {}
    e = C.eps[i]
    for r in range(m + 1):
        s = m - r
        sign = -1 if r % 2 else 1
        scalar = v_power(-e * r * (-C.a(i, j) - m + 1)) * sign
        left, right = (s, r) if primed else (r, s)
        monomial = product(C, [divided_power(C, i, left),
                               Element.generator(C, j),
                               divided_power(C, i, right)])
        for word, c in monomial.terms.items():
            value = c * scalar
            terms[word] = terms[word] + value if word in terms else value
    return Element(C, terms)


def f_gen(C: CartanDatum, i: int, j: int, m: int) -> Element:
    """f(i,j;m) = sum_{r+s=m} (-1)^r v_i^{-r(-a_ij-m+1)} theta_i^(r) theta_j theta_i^(s).

    Any m >= 0 is accepted, including m > -a_ij.

    """
    _check_pair(C, i, j)
    if m < 0:
        raise InvalidInputError(f"f(i,j;m) needs m >= 0, got {m}.")
    return _f_element(C, i, j, m, False)


def f_gen_prime(C: CartanDatum, i: int, j: int, m: int) -> Element:
    """f'(i,j;m): as f(i,j;m) with theta_i^(r) and theta_i^(s) swapped."""
    _check_pair(C, i, j)
    if m < 0:
        raise InvalidInputError(f"f'(i,j;m) needs m >= 0, got {m}.")
    return _f_element(C, i, j, m, True)


def serre_relator(C: CartanDatum, i: int, j: int) -> Element:
    """The quantum Serre relator f(i,j;1-a_ij)."""
    _check_pair(C, i, j)
    return f_gen(C, i, j, 1 - C.a(i, j))


def generator_products(C: CartanDatum, i: int, nu: Weight) -> List[GeneratorProduct]:
    """Every ordered product of generators f(i,j;m) of weight nu.

    Each factor carries exactly one letter j != i, so the number of factors
    is the height of nu minus nu_i.  Products are listed in lexicographic
    order of their factor sequences.

    """
    C.check_index(i)
    candidates = [(j, m) for j in C.indices if j != i
                  for m in range(-C.a(i, j) + 1)]
    result = []

    def extend(prefix, remaining):
        if not any(remaining):
            result.append(GeneratorProduct(i=i, factors=tuple(prefix)))
            return
        for j, m in candidates:
            if remaining[j] >= 1 and remaining[i] >= m:
                rest = list(remaining)
                rest[j] -= 1
                rest[i] -= m
                prefix.append((j, m))
                extend(prefix, rest)
                prefix.pop()

    if sum(x for k, x in enumerate(nu) if k != i) > 0:
        extend([], list(nu))
    return result


def expand_product(C: CartanDatum, gp: GeneratorProduct, primed: bool) -> Element:
    """Multiply out a generator product with f (or f' when primed)."""
    build = f_gen_prime if primed else f_gen
    return product(C, [build(C, gp.i, j, m) for j, m in gp.factors])


def substitute_product(C: CartanDatum, gp: GeneratorProduct,
                       inverse: bool = False) -> Element:
    """Image of a generator product under T_i (or T_i^-1 when inverse).

    Each factor (j, m) becomes f'(i,j;-a_ij-m) (f(i,j;-a_ij-m) for the
    inverse), factor order preserved.

    """
    build = f_gen if inverse else f_gen_prime
    return product(C, [build(C, gp.i, j, -C.a(gp.i, j) - m)
                       for j, m in gp.factors])


def symmetry_height(C: CartanDatum, i: int, nu: Weight) -> int:
    """Largest height T_i touches on weight nu: that of nu or of s_i(nu)."""
    return max(height(nu), height(reflect_weight(C, i, nu)))


def check_symmetry_height(C: CartanDatum, i: int, nu: Weight,
                          max_height: int = DEFAULT_MAX_HEIGHT):
    """Raise ResourceLimit unless both nu and s_i(nu) fit under max_height."""
    check_height(nu, max_height)
    check_height(reflect_weight(C, i, nu), max_height)


def _coordinate_system(C: CartanDatum, nu: Weight,
                       elements: List[Element],
                       max_height: int):
    """Rows (pairings with the pivot words of nu) of the coordinate matrix."""
    ws = weight_space(C, nu, max_height)
    matrix = [[reduced_pair_with_word(e, w) for e in elements]
              for w in ws.pivot_words]
    return ws, matrix


@dataclass
class SymmetryResult:
    """Image of an element under T_i or T_i^-1 with the solve certificate.

    Attributes:
        image: The image element.
        products: Generator products spanning the source weight space.
        coordinates: Coefficients of x on the expanded products (mod the
            radical).

    """

    image: Element
    products: List[GeneratorProduct] = field(default_factory=list)
    coordinates: List[RationalFn] = field(default_factory=list)

    def certificate_json(self) -> Dict[str, list]:
        return {"coordinates": [c.to_json() for c in self.coordinates],
                "products": [p.to_json() for p in self.products]}


def apply_symmetry(i: int, x: Element, inverse: bool = False,
                   max_height: int = DEFAULT_MAX_HEIGHT) -> SymmetryResult:
    """T_i(x) for x in _if, or T_i^-1(x) for x in ^if.

    Args:
        i: Index of the symmetry.
        x: Homogeneous element of the domain subalgebra.
        inverse: Apply T_i^-1 instead of T_i.
        max_height: Resource bound.

    Returns:
        SymmetryResult holding the image (of weight s_i(nu)) and the
        coordinates used.

    Raises:
        NotHomogeneous: x has several weight components.
        NotInSubalgebra: x is not in _if (resp. ^if).
        ResourceLimit: The weight of x or of its image s_i(nu) is too high.

    """
    C = x.datum
    C.check_index(i)
    try:
        nu = x.weight()
    except NotHomogeneous:
        raise NotHomogeneous("Lusztig symmetries need a homogeneous element.")
    if nu is None:
        return SymmetryResult(image=Element.zero(C))
    check_symmetry_height(C, i, nu, max_height)

    in_domain = membership_right(i, x, max_height) if inverse \
        else membership_left(i, x, max_height)
    if not in_domain:
        side = "^if" if inverse else "_if"
        raise NotInSubalgebra(f"Element of weight {list(nu)} is not in {side} "
                              f"for i = {i}.")

    products = generator_products(C, i, nu)
    if not products:
        # The subalgebra vanishes in this weight, so x is zero in f.
        return SymmetryResult(image=Element.zero(C))

    elements = [expand_product(C, gp, primed=inverse) for gp in products]
    ws, matrix = _coordinate_system(C, nu, elements, max_height)
    if ws.rank == 0:
        return SymmetryResult(image=Element.zero(C), products=products)
    rhs = [reduced_pair_with_word(x, w) for w in ws.pivot_words]
    coordinates = linalg.solve(matrix, rhs)
    if coordinates is None:
        raise NotInSubalgebra(f"Element of weight {list(nu)} is not spanned by "
                              f"products of generators for i = {i}.")

    image = Element.zero(C)
    for gp, a in zip(products, coordinates):
        if not a.is_zero():
            image = image + substitute_product(C, gp, inverse).scale(a)
    logging.debug(f"{'T^-1' if inverse else 'T'}_{i} on weight {list(nu)}: "
                  f"{len(products)} products, target weight "
                  f"{list(reflect_weight(C, i, nu))}.")
    return SymmetryResult(image=image, products=products,
                          coordinates=coordinates)


def ti_apply(i: int, x: Element, max_height: int = DEFAULT_MAX_HEIGHT) -> Element:
    """Lusztig's symmetry T_i : _if -> ^if."""
    return apply_symmetry(i, x, inverse=False, max_height=max_height).image


def ti_inverse_apply(i: int, x: Element,
                     max_height: int = DEFAULT_MAX_HEIGHT) -> Element:
    """T_i^-1 : ^if -> _if."""
    return apply_symmetry(i, x, inverse=True, max_height=max_height).image


def well_defined(C: CartanDatum, i: int, nu: Weight,
                 inverse: bool = False,
                 max_height: int = DEFAULT_MAX_HEIGHT) \
        -> Tuple[bool, Union[List[RationalFn], None]]:
    """Check that the generator substitution is well defined on weight nu.

    Every combination of generator products that vanishes in f must have a
    substituted image that vanishes in f.

    Returns:
        (ok, witness): witness is a failing kernel vector, or None.

    """
    products = generator_products(C, i, nu)
    if not products:
        return True, None
    check_symmetry_height(C, i, nu, max_height)
    elements = [expand_product(C, gp, primed=inverse) for gp in products]
    _, matrix = _coordinate_system(C, nu, elements, max_height)
    kernel = linalg.nullspace(matrix, ncols=len(products))
    images = [substitute_product(C, gp, inverse) for gp in products]
    for vector in kernel:
        combination = Element.zero(C)
        for a, image in zip(vector, images):
            if not a.is_zero():
                combination = combination + image.scale(a)
        if not is_zero_in_f(combination, max_height):
            return False, vector
    logging.debug(f"Substitution well defined on weight {list(nu)} "
                  f"(kernel dimension {len(kernel)}).")
    return True, None


def form_compatibility(i: int, x: Element, y: Element,
                       max_height: int = DEFAULT_MAX_HEIGHT) -> bool:
    """Compare (T_i x, T_i y) with (x, y).  Logged, not a theorem here."""
    lhs = pair(ti_apply(i, x, max_height), ti_apply(i, y, max_height))
    rhs = pair(x, y)
    agree = lhs == rhs
    logging.info(f"Form compatibility of T_{i}: (T x, T y) = {lhs}, "
                 f"(x, y) = {rhs}, equal: {agree}.")
    return agree


def ideal_dimension(C: CartanDatum, nu: Weight,
                    max_height: int = DEFAULT_MAX_HEIGHT) -> int:
    """Dimension of the two-sided ideal generated by the Serre relators,
    intersected with the weight space of nu.

    Spanned by u * f(i,j;1-a_ij) * w over words u, w and ordered pairs
    i != j whose weights add up to nu.

    """
    check_height(nu, max_height)
    words = list(words_of_weight(C, nu))
    rows = []
    seen = set()
    for i in C.indices:
        for j in C.indices:
            if i == j:
                continue
            relator = serre_relator(C, i, j)
            rho = relator.weight()
            rest = sub_weights(nu, rho)
            if any(x < 0 for x in rest):
                continue
            for left_weight in _sub_weights_below(rest):
                right_weight = sub_weights(rest, left_weight)
                for u in words_of_weight(C, left_weight):
                    for w in words_of_weight(C, right_weight):
                        key = (i, j, u, w)
                        if key in seen:
                            continue
                        seen.add(key)
                        element = multiply(multiply(Element.from_word(C, u),
                                                    relator),
                                           Element.from_word(C, w))
                        rows.append(coordinate_vector(element, words))
    if not rows:
        return 0
    return linalg.rank(rows)


def _sub_weights_below(nu: Weight) -> List[Weight]:
    """All weights mu with 0 <= mu <= nu coordinatewise."""
    result = [()]
    for bound in nu:
        result = [prefix + (k,) for prefix in result for k in range(bound + 1)]
    return result
