"""Symmetrizable Cartan data, the form on the root lattice, and reflections."""

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components, breadth_first_order

from braidfold.algebra.scalars import LaurentPoly, v_power
from braidfold.exceptions import InvalidInputError, NotGCM, \
    NotSymmetrizable, RankMismatch

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple
import math


# A weight is a tuple of integer coordinates over the index set I.
Weight = Tuple[int, ...]


@dataclass(frozen=True)
class CartanDatum:
    """A symmetrizable generalized Cartan matrix with its symmetrizers.

    Build instances through validate_cartan, which checks the invariants.

    Attributes:
        A: Cartan matrix as a tuple of rows.
        eps: Symmetrizers, positive integers with eps_i a_ij = eps_j a_ji.

    """

    A: Tuple[Tuple[int, ...], ...]
    eps: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.eps)

    @property
    def indices(self) -> range:
        return range(self.n)

    def a(self, i: int, j: int) -> int:
        return self.A[i][j]

    def pairing(self, i: int, j: int) -> int:
        """(alpha_i, alpha_j) = eps_i a_ij."""
        return self.eps[i] * self.A[i][j]

    def v_i(self, i: int) -> LaurentPoly:
        """v_i = v^eps_i."""
        return v_power(self.eps[i])

    def check_index(self, i: int):
        if not (isinstance(i, (int, np.integer)) and 0 <= i < self.n):
            raise InvalidInputError(f"Index {i} is out of range for a "
                                    f"datum of rank {self.n}.")

    def to_json(self) -> Dict[str, list]:
        return {"A": [list(row) for row in self.A], "eps": list(self.eps)}

    @classmethod
    def from_json(cls, data: Dict[str, list]) -> 'CartanDatum':
        try:
            return validate_cartan(data["A"], data["eps"])
        except KeyError as e:
            raise InvalidInputError(f"Cartan datum JSON is missing key {e}.")

    def __repr__(self):
        return f"CartanDatum(A={[list(r) for r in self.A]}, eps={list(self.eps)})"


def validate_cartan(A: Sequence[Sequence[int]],
                    eps: Sequence[int]) -> CartanDatum:
    """Check a generalized Cartan matrix and its symmetrizers.

    Args:
        A: Square integer matrix.
        eps: Positive integer symmetrizers, one per row.

    Returns:
        The validated CartanDatum.

    Raises:
        InvalidInputError: Shapes do not match or eps is not positive.
        NotGCM: A diagonal entry is not 2, an off-diagonal entry is
            positive, or a_ij = 0 while a_ji != 0.
        NotSymmetrizable: eps_i a_ij != eps_j a_ji for some i, j.

    """
    try:
        a = np.array(A, dtype=np.int64)
        d = np.array(eps, dtype=np.int64)
    except (TypeError, ValueError):
        raise InvalidInputError("Cartan matrix and symmetrizers must be integers.")
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInputError(f"Cartan matrix must be square, got shape {a.shape}.")
    n = a.shape[0]
    if d.shape != (n,):
        raise InvalidInputError(f"Expected {n} symmetrizers, got {d.shape}.")
    if np.any(d <= 0):
        raise InvalidInputError(f"Symmetrizers must be positive, got {list(eps)}.")

    if np.any(np.diag(a) != 2):
        raise NotGCM(f"Diagonal entries must be 2, got {np.diag(a).tolist()}.")
    off = a - np.diag(np.diag(a))
    if np.any(off > 0):
        raise NotGCM("Off-diagonal entries must be nonpositive.")
    if np.any((off == 0) != (off.T == 0)):
        raise NotGCM("a_ij = 0 must hold exactly when a_ji = 0.")

    da = np.diag(d) @ a
    if not np.array_equal(da, da.T):
        i, j = [int(x) for x in np.argwhere(da != da.T)[0]]
        raise NotSymmetrizable(f"eps_{i} a_{i}{j} = {da[i, j]} differs from "
                               f"eps_{j} a_{j}{i} = {da[j, i]}.")

    return CartanDatum(A=tuple(tuple(int(x) for x in row) for row in a),
                       eps=tuple(int(x) for x in d))


def minimal_symmetrizer(A: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Smallest positive symmetrizers, with gcd 1 on each connected component.

    Raises:
        NotSymmetrizable: No positive diagonal D makes DA symmetric.

    """
    a = np.array(A, dtype=np.int64)
    n = a.shape[0]
    adjacency = sp.csr_matrix(((a != 0) & ~np.eye(n, dtype=bool)).astype(np.int8))
    n_components, labels = connected_components(adjacency, directed=False)

    eps = [Fraction(0)] * n
    for component in range(n_components):
        root = int(np.flatnonzero(labels == component)[0])
        order, predecessors = breadth_first_order(adjacency, root,
                                                  directed=False,
                                                  return_predecessors=True)
        eps[root] = Fraction(1)
        for j in order[1:]:
            i = predecessors[j]
            if a[j, i] == 0:
                raise NotSymmetrizable(f"a_{j}{i} = 0 but a_{i}{j} != 0.")
            eps[j] = eps[i] * int(a[i, j]) / int(a[j, i])
        members = [int(x) for x in order]
        scale = math.lcm(*[eps[k].denominator for k in members])
        ints = [int(eps[k] * scale) for k in members]
        g = math.gcd(*ints)
        for k, value in zip(members, ints):
            eps[k] = Fraction(value // g)

    result = tuple(int(x) for x in eps)
    da = np.diag(result) @ a
    if np.any(np.array(result) <= 0) or not np.array_equal(da, da.T):
        raise NotSymmetrizable(f"Matrix {a.tolist()} is not symmetrizable.")
    return result


def cartan_from_matrix(A: Sequence[Sequence[int]]) -> CartanDatum:
    """Validate A with its minimal symmetrizers."""
    return validate_cartan(A, minimal_symmetrizer(A))


def rank2(a: int, b: int) -> CartanDatum:
    """The rank-2 datum [[2, -a], [-b, 2]] with minimal symmetrizers."""
    return cartan_from_matrix([[2, -a], [-b, 2]])


def finite_type(letter: str, n: int) -> CartanDatum:
    """Cartan datum of finite type A_n, B_n, C_n or G_2.

    Nodes are numbered along the Dynkin diagram; for B_n the last node is
    short (eps = 2, ..., 2, 1), for C_n it is long, and G_2 uses
    A = [[2, -1], [-3, 2]] with eps = (3, 1).

    """
    a = 2 * np.eye(n, dtype=np.int64)
    for k in range(n - 1):
        a[k, k + 1] = a[k + 1, k] = -1
    if letter == 'A':
        eps = [1] * n
    elif letter == 'B':
        assert n >= 2, "B_n needs n >= 2."
        a[n - 1, n - 2] = -2
        eps = [2] * (n - 1) + [1]
    elif letter == 'C':
        assert n >= 2, "C_n needs n >= 2."
        a[n - 2, n - 1] = -2
        eps = [1] * (n - 1) + [2]
    elif letter == 'G':
        assert n == 2, "G_2 is the only type G."
        a[1, 0] = -3
        eps = [3, 1]
    else:
        raise InvalidInputError(f"Unknown finite type {letter}{n}.")
    return validate_cartan(a.tolist(), eps)


def check_weight(C: CartanDatum, nu: Sequence[int],
                 nonnegative: bool = False) -> Weight:
    """Return nu as a Weight tuple after checking its length (and sign)."""
    nu = tuple(int(x) for x in nu)
    if len(nu) != C.n:
        raise RankMismatch(f"Weight {list(nu)} has length {len(nu)}, "
                           f"but the datum has rank {C.n}.")
    if nonnegative and any(x < 0 for x in nu):
        raise InvalidInputError(f"Grading weight {list(nu)} must be nonnegative.")
    return nu


def simple_root(C: CartanDatum, i: int) -> Weight:
    C.check_index(i)
    return tuple(1 if k == i else 0 for k in C.indices)


def zero_weight(C: CartanDatum) -> Weight:
    return (0,) * C.n


def height(nu: Sequence[int]) -> int:
    return sum(nu)


def add_weights(nu: Sequence[int], mu: Sequence[int]) -> Weight:
    return tuple(x + y for x, y in zip(nu, mu))


def sub_weights(nu: Sequence[int], mu: Sequence[int]) -> Weight:
    return tuple(x - y for x, y in zip(nu, mu))


def sym_form(C: CartanDatum, nu: Sequence[int], mu: Sequence[int]) -> int:
    """(nu, mu) = sum_ij nu_i mu_j eps_i a_ij on the root lattice."""
    nu = check_weight(C, nu)
    mu = check_weight(C, mu)
    total = 0
    for i, x in enumerate(nu):
        if x == 0:
            continue
        for j, y in enumerate(mu):
            if y != 0:
                total += x * y * C.pairing(i, j)
    return total


def reflect_weight(C: CartanDatum, i: int, nu: Sequence[int]) -> Weight:
    """Simple reflection s_i(nu) = nu - <nu, alpha_i^vee> alpha_i."""
    C.check_index(i)
    nu = check_weight(C, nu)
    coord = -nu[i] - sum(C.a(i, j) * nu[j] for j in C.indices if j != i)
    return tuple(coord if k == i else x for k, x in enumerate(nu))


def weights_of_height(C: CartanDatum, h: int) -> List[Weight]:
    """All nonnegative weights of height h, in lexicographic order."""
    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest
    return sorted(compositions(h, C.n))
