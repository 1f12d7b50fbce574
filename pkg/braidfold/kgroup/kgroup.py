"""Formal Grothendieck-group classes for a rank-2 subdatum (i, j).

A KClass is a Z[v, v^-1]-combination of three kinds of symbols:

    I(m, p)  the class of the resolution piece, 0 <= p <= m;
    E(m)     the normalized extension class, lambda(E(m)) = f(i,j;m);
    C(m)     the constant-sheaf class, C(m) = v_i^{mN} E(m).

On the source side (after reflecting at i) E and C stand for E'(m) and
C'(m), and lambda(E'(m)) = f'(i,j;m).  N = -a_ij.

"""

from braidfold.algebra.braid import f_gen, f_gen_prime, ti_apply
from braidfold.algebra.cartan import CartanDatum
from braidfold.algebra.falg import DEFAULT_MAX_HEIGHT, is_equal_in_f
from braidfold.algebra.freealg import Element, divided_power, product
from braidfold.algebra.scalars import LaurentPoly, ZERO, ONE, v_power
from braidfold.quiver.quiver import QuiverAut, fold, orbit_is_sink, \
    orbit_is_source, reflect_quiver
from braidfold.exceptions import InvalidInputError

from dataclasses import dataclass, replace
from typing import Dict, List, Union
import logging


SINK = 'sink'
SOURCE = 'source'


@dataclass(frozen=True)
class KContext:
    """The data a K-group computation lives over.

    Attributes:
        datum: The (folded) Cartan datum.
        i: The orbit at which the quiver is reflected.
        j: The second index of the rank-2 subdatum.
        side: SINK if orbit i is a sink, SOURCE after reflecting.
        quiver: The quiver with automorphism, when the context came from one.

    """

    datum: CartanDatum
    i: int
    j: int
    side: str = SINK
    quiver: Union[QuiverAut, None] = None

    def __post_init__(self):
        self.datum.check_index(self.i)
        self.datum.check_index(self.j)
        if self.i == self.j:
            raise InvalidInputError(f"A K-group context needs two distinct "
                                    f"indices, got i = j = {self.i}.")
        assert self.side in (SINK, SOURCE), f"Unknown side '{self.side}'."

    @property
    def N(self) -> int:
        return -self.datum.a(self.i, self.j)

    @property
    def eps_i(self) -> int:
        return self.datum.eps[self.i]

    def v_i_power(self, k: int) -> LaurentPoly:
        """v_i^k."""
        return v_power(self.eps_i * k)

    def reflected(self) -> 'KContext':
        quiver = None if self.quiver is None else reflect_quiver(self.quiver, self.i)
        return replace(self, side=SOURCE if self.side == SINK else SINK,
                       quiver=quiver)

    def to_json(self) -> Dict[str, object]:
        data = {"datum": self.datum.to_json(), "i": self.i, "j": self.j,
                "N": self.N, "side": self.side}
        if self.quiver is not None:
            data["quiver"] = self.quiver.to_json()
        return data

    @classmethod
    def from_quiver(cls, qa: QuiverAut, i: int, j: int) -> 'KContext':
        """Sink-side context of a folded quiver.

        When orbit i is a source, the quiver is reflected at i first.

        Raises:
            InvalidInputError: Orbit i is neither a sink nor a source.

        """
        C, _ = fold(qa)
        if orbit_is_sink(qa, i):
            quiver = qa
        elif orbit_is_source(qa, i):
            logging.info(f"Orbit {i} is a source; reflecting the quiver first.")
            quiver = reflect_quiver(qa, i)
        else:
            raise InvalidInputError(f"Orbit {i} is neither a sink nor a source.")
        return cls(datum=C, i=i, j=j, side=SINK, quiver=quiver)


@dataclass(frozen=True, order=True)
class Symbol:
    """One basis symbol of the K-group: I(m, p), E(m) or C(m)."""

    kind: str
    m: int
    p: int = -1

    def __post_init__(self):
        if self.kind not in ('I', 'E', 'C'):
            raise InvalidInputError(f"Unknown K-group symbol kind '{self.kind}'.")
        if self.m < 0:
            raise InvalidInputError(f"Symbol {self} needs m >= 0.")
        if self.kind == 'I' and not 0 <= self.p <= self.m:
            raise InvalidInputError(f"Symbol I({self.m},{self.p}) needs 0 <= p <= m.")

    def __str__(self):
        if self.kind == 'I':
            return f"I({self.m},{self.p})"
        return f"{self.kind}({self.m})"


class KClass:
    """Finite Z[v, v^-1]-combination of symbols over one KContext.

    Args:
        context: The context shared by all symbols.
        combo: Map from Symbol to coefficient; zero coefficients are dropped.

    """

    def __init__(self, context: KContext,
                 combo: Union[Dict[Symbol, LaurentPoly], None] = None):
        self.context = context
        self.combo = {}
        for symbol, c in (combo or {}).items():
            c = c if isinstance(c, LaurentPoly) else LaurentPoly.constant(c)
            if not c.is_zero():
                self.combo[symbol] = c

    @classmethod
    def I(cls, context: KContext, m: int, p: int, coeff=ONE) -> 'KClass':
        return cls(context, {Symbol('I', m, p): coeff})

    @classmethod
    def E(cls, context: KContext, m: int, coeff=ONE) -> 'KClass':
        return cls(context, {Symbol('E', m): coeff})

    @classmethod
    def C(cls, context: KContext, m: int, coeff=ONE) -> 'KClass':
        return cls(context, {Symbol('C', m): coeff})

    def is_zero(self) -> bool:
        return not self.combo

    def coefficient(self, symbol: Symbol) -> LaurentPoly:
        return self.combo.get(symbol, ZERO)

    def _check_context(self, other: 'KClass'):
        if self.context != other.context:
            raise InvalidInputError("K-group classes live over different contexts.")

    def __add__(self, other: 'KClass') -> 'KClass':
        self._check_context(other)
        combo = dict(self.combo)
        for symbol, c in other.combo.items():
            combo[symbol] = combo.get(symbol, ZERO) + c
        return KClass(self.context, combo)

    def __neg__(self) -> 'KClass':
        return KClass(self.context, {s: -c for s, c in self.combo.items()})

    def __sub__(self, other: 'KClass') -> 'KClass':
        return self + (-other)

    def scale(self, c: Union[LaurentPoly, int]) -> 'KClass':
        return KClass(self.context, {s: x * c for s, x in self.combo.items()})

    def __eq__(self, other):
        if not isinstance(other, KClass):
            return NotImplemented
        return self.context == other.context and self.combo == other.combo

    def __repr__(self):
        if not self.combo:
            return "0"
        return " + ".join(f"({self.combo[s]})*{s}" for s in sorted(self.combo))

    def to_json(self) -> Dict[str, object]:
        return {"side": self.context.side,
                "terms": [{"symbol": str(s), "coeff": self.combo[s].to_json()}
                          for s in sorted(self.combo)]}


def _check_range(context: KContext, m: int):
    if not 0 <= m <= context.N:
        raise InvalidInputError(f"m = {m} is outside 0..N = {context.N}.")


def constant_sheaf_class(context: KContext, m: int) -> KClass:
    """The constant-sheaf class C(m)."""
    _check_range(context, m)
    return KClass.C(context, m)


def lambda_class(k: KClass) -> Element:
    """The map lambda into the free algebra.

    I(m, p) goes to theta_i^(m-p) theta_j theta_i^(p) on both sides; E(m)
    goes to f(i,j;m) (sink side) or f'(i,j;m) (source side), and
    C(m) = v_i^{mN} E(m).

    """
    ctx = k.context
    C, i, j = ctx.datum, ctx.i, ctx.j
    extension = f_gen if ctx.side == SINK else f_gen_prime
    total = Element.zero(C)
    for symbol, c in sorted(k.combo.items()):
        if symbol.kind == 'I':
            image = product(C, [divided_power(C, i, symbol.m - symbol.p),
                                Element.generator(C, j),
                                divided_power(C, i, symbol.p)])
        elif symbol.kind == 'E':
            image = extension(C, i, j, symbol.m)
        else:
            image = extension(C, i, j, symbol.m).scale(ctx.v_i_power(symbol.m * ctx.N))
        total = total + image.scale(c)
    return total


def resolve_E(context: KContext, m: int) -> KClass:
    """E(m) written in the I-classes.

    Sink side:   E(m)  = sum_p (-1)^p v_i^{-p(1+N-m)} I(m, m-p).
    Source side: E'(m) = sum_p (-1)^p v_i^{-p(1+N-m)} I(m, p).

    """
    _check_range(context, m)
    combo = {}
    for p in range(m + 1):
        sign = -1 if p % 2 else 1
        coeff = context.v_i_power(-p * (1 + context.N - m)) * sign
        q = m - p if context.side == SINK else p
        combo[Symbol('I', m, q)] = coeff
    return KClass(context, combo)


def resolve_class(k: KClass) -> KClass:
    """Replace every E and C symbol of k by its resolution in I-classes."""
    ctx = k.context
    result = KClass(ctx)
    for symbol, c in k.combo.items():
        if symbol.kind == 'I':
            result = result + KClass(ctx, {symbol: c})
            continue
        scalar = c if symbol.kind == 'E' else c * ctx.v_i_power(symbol.m * ctx.N)
        result = result + resolve_E(ctx, symbol.m).scale(scalar)
    return result


def omega_reflect(k: KClass) -> KClass:
    """Transport across the reflection at i, with m' = N - m.

    C(m) goes to v_i^{(m-m')N} C'(m'), hence E(m) goes to E'(m').  Applied
    to a source-side class it performs the inverse transport.

    Raises:
        InvalidInputError: k involves an I-class or some m > N.

    """
    ctx = k.context
    target = ctx.reflected()
    combo = {}
    for symbol, c in k.combo.items():
        if symbol.kind == 'I':
            raise InvalidInputError(f"{symbol} is not transported by the reflection.")
        _check_range(ctx, symbol.m)
        m_prime = ctx.N - symbol.m
        # The scalar v_i^{(m-m')N} belongs to the constant-sheaf symbol
        # C(m) = v_i^{mN} E(m); on E it cancels, so E(0) goes to 1 * E'(N),
        # not v_i^{-N} E'(N).
        if symbol.kind == 'C':
            c = c * ctx.v_i_power((symbol.m - m_prime) * ctx.N)
        image = Symbol(symbol.kind, m_prime)
        combo[image] = combo.get(image, ZERO) + c
    return KClass(target, combo)


def square_report(context: KContext, m: int,
                  max_height: int = DEFAULT_MAX_HEIGHT) -> Dict[str, object]:
    """Both paths around the square for v_i^{-mN} C(m).

    lhs = T_i(lambda(x)), rhs = lambda(omega(x)); they must agree in f.

    """
    if context.side != SINK:
        raise InvalidInputError("The square starts from a sink-side context.")
    _check_range(context, m)
    x = constant_sheaf_class(context, m).scale(context.v_i_power(-m * context.N))
    lhs = ti_apply(context.i, lambda_class(x), max_height)
    rhs = lambda_class(omega_reflect(x))
    equal = is_equal_in_f(lhs, rhs, max_height)
    logging.debug(f"Square at m = {m} (N = {context.N}): equal = {equal}.")
    return {"lhs": lhs.to_json(), "rhs": rhs.to_json(), "equal": equal}


def verify_square(context: KContext, m: int,
                  max_height: int = DEFAULT_MAX_HEIGHT) -> bool:
    """True iff T_i(lambda(x)) and lambda(omega(x)) agree in f."""
    return square_report(context, m, max_height)["equal"]


def square_sweep(context: KContext,
                 max_height: int = DEFAULT_MAX_HEIGHT) -> Dict[str, Dict[str, object]]:
    """square_report for every 0 <= m <= N, keyed by str(m)."""
    return {str(m): square_report(context, m, max_height)
            for m in range(context.N + 1)}


def rank2_contexts(C: CartanDatum, max_n: Union[int, None] = None) -> List[KContext]:
    """Sink-side contexts for every ordered pair of linked indices."""
    return [KContext(datum=C, i=i, j=j)
            for i in C.indices for j in C.indices
            if i != j and C.a(i, j) != 0
            and (max_n is None or -C.a(i, j) <= max_n)]
