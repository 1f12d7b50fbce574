"""Exact linear algebra over Z[v, v^-1] and Q(v).

Ranks come from fraction-free (Bareiss) elimination, with a cheap filter
that specializes v to a random unit modulo a large prime first: a
specialization can only lose rank, so a full specialized rank is already a
certificate.  Solves and kernels reduce to Bareiss echelon forms followed by
back substitution in Q(v).

"""

import numpy as np

from braidfold.algebra.scalars import LaurentPoly, RationalFn, ZERO, ONE, \
    RF_ZERO, RF_ONE, clear_denominators

from typing import List, Sequence, Tuple, Union
import logging


# Largest prime below 2^31.
MODULAR_PRIME = 2147483647

Scalar = Union[LaurentPoly, RationalFn, int]


def _specialization_point(seed: int, p: int) -> int:
    return int(np.random.RandomState(seed).randint(2, p - 1))


def modular_rank(matrix: Sequence[Sequence[LaurentPoly]],
                 seed: int = 0,
                 p: int = MODULAR_PRIME) -> Tuple[int, List[int]]:
    """Rank of a Laurent-polynomial matrix specialized at a random v mod p.

    Args:
        matrix: Rows of LaurentPoly entries.
        seed: Seed choosing the specialization point.
        p: Prime modulus.

    Returns:
        rank: Rank over the field with p elements.  Never exceeds the exact
            rank over Q(v).
        pivots: Pivot columns found by greedy elimination.

    """
    m = len(matrix)
    if m == 0:
        return 0, []
    n = len(matrix[0])
    v0 = _specialization_point(seed, p)
    a = np.empty((m, n), dtype=object)
    for i, row in enumerate(matrix):
        for j, x in enumerate(row):
            a[i, j] = x.evaluate_mod(v0, p)

    r = 0
    pivots = []
    for c in range(n):
        pivot = None
        for i in range(r, m):
            if a[i, c] % p != 0:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            a[[r, pivot], :] = a[[pivot, r], :]
        inv = pow(int(a[r, c]), -1, p)
        a[r, :] = (a[r, :] * inv) % p
        for i in range(r + 1, m):
            if a[i, c] % p != 0:
                a[i, :] = (a[i, :] - a[i, c] * a[r, :]) % p
        pivots.append(c)
        r += 1
        if r == m:
            break
    return r, pivots


def bareiss_echelon(matrix: Sequence[Sequence[LaurentPoly]],
                    pivot_columns: Union[int, None] = None) \
        -> Tuple[List[List[LaurentPoly]], List[int]]:
    """Fraction-free row echelon form over Z[v, v^-1].

    Columns without a pivot are skipped, so the pivots are the first
    independent columns in order.  Every division is exact (each entry is a
    minor of the input).

    Args:
        matrix: Rows of LaurentPoly entries.  Not modified.
        pivot_columns: Only the first pivot_columns columns may hold pivots;
            the remaining columns (e.g. right-hand sides) are carried along.

    Returns:
        rows: Echelon form.  Row k has its leading entry at pivots[k]; rows
            past len(pivots) vanish on the pivot-eligible columns.
        pivots: Pivot column indices.

    """
    rows = [list(row) for row in matrix]
    m = len(rows)
    if m == 0:
        return rows, []
    n = len(rows[0])
    if pivot_columns is None:
        pivot_columns = n

    r = 0
    prev = ONE
    pivots = []
    for c in range(pivot_columns):
        if r == m:
            break
        k = next((i for i in range(r, m) if not rows[i][c].is_zero()), None)
        if k is None:
            continue
        if k != r:
            rows[r], rows[k] = rows[k], rows[r]
        pivot_row = rows[r]
        p = pivot_row[c]
        for i in range(r + 1, m):
            row = rows[i]
            factor = row[c]
            for j in range(c + 1, n):
                if factor.is_zero():
                    entry = p * row[j]
                else:
                    entry = p * row[j] - factor * pivot_row[j]
                row[j] = entry.exact_div(prev)
            row[c] = ZERO
        prev = p
        pivots.append(c)
        r += 1
    return rows, pivots


def exact_rank(matrix: Sequence[Sequence[LaurentPoly]],
               seed: int = 0) -> Tuple[int, List[int]]:
    """Certified rank and pivot columns of a Laurent-polynomial matrix."""
    if len(matrix) == 0:
        return 0, []
    n = len(matrix[0])
    rank, pivots = modular_rank(matrix, seed=seed)
    if rank == n:
        logging.debug(f"Full column rank {n} certified by specialization.")
        return rank, pivots
    _, pivots = bareiss_echelon(matrix)
    logging.debug(f"Exact elimination: rank {len(pivots)} "
                  f"(specialized rank {rank}).")
    return len(pivots), pivots


def _as_rational(x: Scalar) -> RationalFn:
    return RationalFn.coerce(x)


def _cleared_rows(matrix: Sequence[Sequence[Scalar]],
                  rhs: Union[Sequence[Scalar], None] = None) \
        -> List[List[LaurentPoly]]:
    rows = []
    for i, row in enumerate(matrix):
        values = [_as_rational(x) for x in row]
        if rhs is not None:
            values.append(_as_rational(rhs[i]))
        rows.append(clear_denominators(values))
    return rows


def rank(matrix: Sequence[Sequence[Scalar]]) -> int:
    """Rank over Q(v) of a matrix with rational-function entries."""
    if len(matrix) == 0:
        return 0
    return exact_rank(_cleared_rows(matrix))[0]


def _back_substitute(rows: List[List[LaurentPoly]],
                     pivots: List[int],
                     n: int,
                     x: List[RationalFn],
                     rhs_column: Union[int, None]) -> List[RationalFn]:
    for k in reversed(range(len(pivots))):
        c = pivots[k]
        row = rows[k]
        acc = RF_ZERO if rhs_column is None else _as_rational(row[rhs_column])
        for j in range(c + 1, n):
            if not row[j].is_zero() and not x[j].is_zero():
                acc = acc - x[j] * row[j]
        x[c] = acc / row[c]
    return x


def solve(matrix: Sequence[Sequence[Scalar]],
          rhs: Sequence[Scalar]) -> Union[List[RationalFn], None]:
    """One exact solution of matrix * x = rhs over Q(v).

    Free variables are set to zero.

    Args:
        matrix: m x n matrix of LaurentPoly / RationalFn / int entries.
        rhs: Length-m right-hand side.

    Returns:
        The solution as a list of n RationalFn, or None if the system is
        inconsistent.

    """
    m = len(matrix)
    assert len(rhs) == m, f"Right-hand side has length {len(rhs)}, expected {m}."
    if m == 0:
        return None
    n = len(matrix[0])
    rows, pivots = bareiss_echelon(_cleared_rows(matrix, rhs), pivot_columns=n)
    for row in rows[len(pivots):]:
        if not row[n].is_zero():
            return None
    x = [RF_ZERO] * n
    return _back_substitute(rows, pivots, n, x, rhs_column=n)


def nullspace(matrix: Sequence[Sequence[Scalar]],
              ncols: Union[int, None] = None) -> List[List[RationalFn]]:
    """Basis of the right kernel {x : matrix * x = 0} over Q(v).

    Args:
        matrix: m x n matrix.
        ncols: Number of columns, needed only when the matrix has no rows.

    Returns:
        One basis vector per non-pivot column, with a 1 in that column and
        zeros in the other free columns.

    """
    if len(matrix) == 0:
        assert ncols is not None, "Column count of an empty matrix is unknown."
        return [[RF_ONE if j == f else RF_ZERO for j in range(ncols)]
                for f in range(ncols)]
    n = len(matrix[0])
    rows, pivots = bareiss_echelon(_cleared_rows(matrix))
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [RF_ZERO] * n
        x[f] = RF_ONE
        basis.append(_back_substitute(rows, pivots, n, x, rhs_column=None))
    return basis
