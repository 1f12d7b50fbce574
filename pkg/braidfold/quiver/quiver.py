"""Quivers with admissible automorphism, folding and unfolding.

Folding sends a quiver with automorphism to the symmetrizable Cartan datum
whose indices are the vertex orbits:

    (gamma_i, gamma_i) = 2|i|,  (gamma_i, gamma_j) = -(arrows between i and j),
    a_ij = (gamma_i, gamma_j) / |i|,  eps_i = |i|.

Vertices and arrows are numbered from 0.  Orbits are ordered by their
smallest vertex.

"""

import numpy as np

from braidfold.algebra.cartan import CartanDatum, validate_cartan
from braidfold.exceptions import InvalidInputError, NotAdmissible, \
    NotCompatible

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple, Union
import logging
import math


class Arrow(NamedTuple):
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    """Finite quiver without loops; multiple arrows are allowed.

    Attributes:
        n_vertices: Number of vertices.
        arrows: Arrows in listed order; the arrow id is the position.

    """

    n_vertices: int
    arrows: Tuple[Arrow, ...]

    def __post_init__(self):
        assert self.n_vertices >= 0, "Vertex count must be nonnegative."
        for h, arrow in enumerate(self.arrows):
            for v in arrow:
                if not 0 <= v < self.n_vertices:
                    raise InvalidInputError(f"Arrow {h} = {tuple(arrow)} uses a "
                                            f"vertex outside 0..{self.n_vertices - 1}.")
            if arrow.source == arrow.target:
                raise InvalidInputError(f"Arrow {h} is a loop at vertex {arrow.source}.")

    @classmethod
    def from_arrows(cls, n_vertices: int,
                    arrows: Iterable[Sequence[int]]) -> 'Quiver':
        try:
            arrows = tuple(Arrow(int(s), int(t)) for s, t in arrows)
        except (TypeError, ValueError):
            raise InvalidInputError("Arrows must be [source, target] pairs.")
        return cls(n_vertices=int(n_vertices), arrows=arrows)

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    def arrow_counts(self) -> np.ndarray:
        """counts[a, b] is the number of arrows a -> b."""
        counts = np.zeros((self.n_vertices, self.n_vertices), dtype=np.int64)
        for s, t in self.arrows:
            counts[s, t] += 1
        return counts

    def is_sink(self, vertex: int) -> bool:
        return all(s != vertex for s, _ in self.arrows)

    def is_source(self, vertex: int) -> bool:
        return all(t != vertex for _, t in self.arrows)

    def reverse_at(self, vertices: Iterable[int]) -> 'Quiver':
        """Reverse every arrow with an endpoint in the given vertex set."""
        vertices = set(vertices)
        arrows = tuple(Arrow(t, s) if (s in vertices or t in vertices)
                       else Arrow(s, t) for s, t in self.arrows)
        return Quiver(n_vertices=self.n_vertices, arrows=arrows)


@dataclass(frozen=True)
class QuiverAut:
    """A quiver with an admissible automorphism.

    Build instances through validate_aut.

    Attributes:
        quiver: The underlying quiver.
        vperm: Vertex permutation, vperm[v] = a(v).
        aperm: Arrow permutation, aperm[h] = a(h).
        order: Order of the automorphism.

    """

    quiver: Quiver
    vperm: Tuple[int, ...]
    aperm: Tuple[int, ...]
    order: int

    @property
    def orbits(self) -> Tuple[Tuple[int, ...], ...]:
        return _cycles(self.vperm)

    @property
    def orbit_sizes(self) -> Tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)

    @property
    def orbit_map(self) -> Tuple[int, ...]:
        """orbit_map[v] is the orbit index of vertex v."""
        result = [0] * self.quiver.n_vertices
        for k, orbit in enumerate(self.orbits):
            for v in orbit:
                result[v] = k
        return tuple(result)

    def orbit_of(self, vertex: int) -> int:
        if not 0 <= vertex < self.quiver.n_vertices:
            raise InvalidInputError(f"Unknown vertex {vertex}.")
        return self.orbit_map[vertex]

    def check_orbit(self, i: int):
        if not (isinstance(i, (int, np.integer)) and 0 <= i < len(self.orbits)):
            raise InvalidInputError(f"Unknown orbit {i}; the automorphism has "
                                    f"{len(self.orbits)} orbits.")

    def to_json(self) -> Dict[str, list]:
        return {"vertices": self.quiver.n_vertices,
                "arrows": [[s, t] for s, t in self.quiver.arrows],
                "vperm": list(self.vperm),
                "aperm": list(self.aperm),
                "order": self.order,
                "orbits": [list(o) for o in self.orbits]}

    @classmethod
    def from_json(cls, data: Dict[str, list]) -> 'QuiverAut':
        try:
            quiver = Quiver.from_arrows(data["vertices"], data.get("arrows", []))
        except KeyError as e:
            raise InvalidInputError(f"Quiver JSON is missing key {e}.")
        vperm = data.get("vperm")
        if vperm is None:
            vperm = list(range(quiver.n_vertices))
        return validate_aut(quiver, vperm, data.get("aperm"))


def _check_permutation(perm: Sequence[int], size: int, name: str) -> Tuple[int, ...]:
    try:
        perm = tuple(int(x) for x in perm)
    except (TypeError, ValueError):
        raise InvalidInputError(f"{name} must be a list of integers.")
    if len(perm) != size or sorted(perm) != list(range(size)):
        raise InvalidInputError(f"{name} {list(perm)} is not a permutation "
                                f"of 0..{size - 1}.")
    return perm


def _cycles(perm: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """Cycles of a permutation, each listed from its smallest element."""
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append(tuple(cycle))
    return tuple(cycles)


def _permutation_order(perm: Sequence[int]) -> int:
    return math.lcm(1, *[len(c) for c in _cycles(perm)])


def infer_arrow_permutation(quiver: Quiver, vperm: Sequence[int]) -> Tuple[int, ...]:
    """Arrow permutation forced by a vertex permutation.

    Parallel arrows s -> t are sent, in listed order, to the parallel arrows
    vperm(s) -> vperm(t).

    Raises:
        NotCompatible: The two sets of parallel arrows differ in size.

    """
    parallel = defaultdict(list)
    for h, arrow in enumerate(quiver.arrows):
        parallel[arrow].append(h)
    aperm = [None] * quiver.n_arrows
    for arrow, ids in parallel.items():
        image = Arrow(vperm[arrow.source], vperm[arrow.target])
        targets = parallel.get(image, [])
        if len(targets) != len(ids):
            raise NotCompatible(f"{len(ids)} arrows {tuple(arrow)} but "
                                f"{len(targets)} arrows {tuple(image)}.")
        for h, g in zip(ids, targets):
            aperm[h] = g
    return tuple(aperm)


def validate_aut(quiver: Quiver, vperm: Sequence[int],
                 aperm: Union[Sequence[int], None] = None) -> QuiverAut:
    """Check that (vperm, aperm) is an admissible automorphism of the quiver.

    Args:
        quiver: The quiver.
        vperm: Vertex permutation.
        aperm: Arrow permutation; inferred from vperm when None.

    Returns:
        The validated QuiverAut.

    Raises:
        InvalidInputError: A permutation has the wrong size or repeats.
        NotAdmissible: An arrow joins two vertices of one orbit.
        NotCompatible: aperm does not commute with source and target.

    """
    vperm = _check_permutation(vperm, quiver.n_vertices, "Vertex permutation")

    orbit_map = {}
    for k, orbit in enumerate(_cycles(vperm)):
        for v in orbit:
            orbit_map[v] = k
    for h, (s, t) in enumerate(quiver.arrows):
        if orbit_map[s] == orbit_map[t]:
            raise NotAdmissible(f"Arrow {h} = ({s}, {t}) joins two vertices "
                                f"of the same orbit.")

    if aperm is None:
        aperm = infer_arrow_permutation(quiver, vperm)
    aperm = _check_permutation(aperm, quiver.n_arrows, "Arrow permutation")
    for h, (s, t) in enumerate(quiver.arrows):
        image = quiver.arrows[aperm[h]]
        if image != Arrow(vperm[s], vperm[t]):
            raise NotCompatible(f"Arrow {h} = ({s}, {t}) is sent to "
                                f"{tuple(image)}, expected "
                                f"({vperm[s]}, {vperm[t]}).")

    order = math.lcm(_permutation_order(vperm), _permutation_order(aperm))
    return QuiverAut(quiver=quiver, vperm=vperm, aperm=aperm, order=order)


def identity_aut(quiver: Quiver) -> QuiverAut:
    return validate_aut(quiver, range(quiver.n_vertices), range(quiver.n_arrows))


def fold(qa: QuiverAut) -> Tuple[CartanDatum, Tuple[int, ...]]:
    """The Cartan datum of a quiver with admissible automorphism.

    Returns:
        datum: GCM a_ij = (gamma_i, gamma_j) / |i| with eps_i = |i|.
        orbit_map: Orbit index of every vertex.

    """
    orbit_map = np.array(qa.orbit_map, dtype=np.int64)
    sizes = np.array(qa.orbit_sizes, dtype=np.int64)
    k = sizes.size
    form = np.diag(2 * sizes)
    for s, t in qa.quiver.arrows:
        i, j = orbit_map[s], orbit_map[t]
        form[i, j] -= 1
        form[j, i] -= 1

    assert np.all(form % sizes[:, None] == 0), \
        f"Arrow counts {form.tolist()} are not divisible by the orbit sizes " \
        f"{sizes.tolist()}."
    a = form // sizes[:, None]
    logging.debug(f"Folded {qa.quiver.n_vertices} vertices into {k} orbits "
                  f"of sizes {sizes.tolist()}.")
    return validate_cartan(a.tolist(), sizes.tolist()), tuple(int(x) for x in orbit_map)


def unfolded_datum(qa: QuiverAut) -> CartanDatum:
    """Symmetric Cartan datum of the quiver itself, indexed by its vertices."""
    datum, _ = fold(identity_aut(qa.quiver))
    return datum


def orbit_vertex_set(qa: QuiverAut, orbits: Iterable[int]) -> Tuple[int, ...]:
    """Vertices of the given orbits, as an index set of the unfolded datum.

    Vertices inside one orbit are never joined by an arrow.  Distinct orbits
    must not be joined either, so the union stays mutually orthogonal.

    Raises:
        InvalidInputError: An unknown orbit, or two orbits joined by arrows.

    """
    orbits = sorted(set(orbits))
    for i in orbits:
        qa.check_orbit(i)
    folded, _ = fold(qa)
    for i in orbits:
        for j in orbits:
            if i < j and folded.a(i, j) != 0:
                raise InvalidInputError(f"Orbits {i} and {j} are joined by "
                                        f"arrows and cannot be projected "
                                        f"along together.")
    return tuple(sorted(v for i in orbits for v in qa.orbits[i]))


def _orientation_table(C: CartanDatum,
                       orientation: Union[Iterable[Tuple[int, int]], None]) \
        -> Dict[Tuple[int, int], bool]:
    """Map each linked pair i < j to True when its arrows point from j to i."""
    flipped = {}
    for pair in (orientation or []):
        try:
            tail, head = (int(x) for x in pair)
        except (TypeError, ValueError):
            raise InvalidInputError(f"Orientation {pair} must be a pair of orbits.")
        C.check_index(tail)
        C.check_index(head)
        if tail == head or C.a(tail, head) == 0:
            raise InvalidInputError(f"Orbits {tail} and {head} are not linked; "
                                    f"they cannot be oriented.")
        key = (min(tail, head), max(tail, head))
        value = tail > head
        if flipped.get(key, value) != value:
            raise InvalidInputError(f"Conflicting orientations for orbits {key}.")
        flipped[key] = value
    return flipped


def unfold(C: CartanDatum,
           orientation: Union[Iterable[Tuple[int, int]], None] = None) -> QuiverAut:
    """A quiver with admissible automorphism folding to C.

    Orbit i gets eps_i consecutive vertices (i, s), s < eps_i.  For i < j with
    a_ij != 0 put T = -eps_i a_ij and L = lcm(eps_i, eps_j); the arrows are
    h_{t,s} for t < T/L and s < L, joining (i, s mod eps_i) with
    (j, s mod eps_j), and a(h_{t,s}) = h_{t,s+1 mod L}.

    Args:
        C: Cartan datum.
        orientation: Pairs (tail, head) of orbits whose arrows should point
            from tail to head.  Unlisted pairs point from the lower index to
            the higher one.

    Returns:
        The validated QuiverAut; fold returns C on it.

    """
    flipped = _orientation_table(C, orientation)
    offsets = np.concatenate([[0], np.cumsum(C.eps)]).astype(np.int64)
    n_vertices = int(offsets[-1])

    vperm = [0] * n_vertices
    for i in C.indices:
        for s in range(C.eps[i]):
            vperm[offsets[i] + s] = int(offsets[i] + (s + 1) % C.eps[i])

    arrows = []
    aperm = []
    for i in C.indices:
        for j in range(i + 1, C.n):
            if C.a(i, j) == 0:
                continue
            total = -C.eps[i] * C.a(i, j)
            period = math.lcm(C.eps[i], C.eps[j])
            assert total % period == 0, \
                f"Arrow count {total} between orbits {i} and {j} is not a " \
                f"multiple of lcm(eps) = {period}."
            for t in range(total // period):
                base = len(arrows)
                for s in range(period):
                    u = int(offsets[i] + s % C.eps[i])
                    w = int(offsets[j] + s % C.eps[j])
                    arrows.append(Arrow(w, u) if flipped.get((i, j)) else Arrow(u, w))
                    aperm.append(base + (s + 1) % period)

    quiver = Quiver(n_vertices=n_vertices, arrows=tuple(arrows))
    logging.debug(f"Unfolded rank {C.n} datum into {n_vertices} vertices and "
                  f"{len(arrows)} arrows.")
    return validate_aut(quiver, vperm, aperm)


def orbit_is_sink(qa: QuiverAut, i: int) -> bool:
    """Every vertex of orbit i is a sink."""
    qa.check_orbit(i)
    return all(qa.quiver.is_sink(v) for v in qa.orbits[i])


def orbit_is_source(qa: QuiverAut, i: int) -> bool:
    """Every vertex of orbit i is a source."""
    qa.check_orbit(i)
    return all(qa.quiver.is_source(v) for v in qa.orbits[i])


def reflect_quiver(qa: QuiverAut, i: int) -> QuiverAut:
    """sigma_i: reverse all arrows incident to orbit i.

    Arrow ids and both permutations are kept.

    """
    qa.check_orbit(i)
    quiver = qa.quiver.reverse_at(qa.orbits[i])
    return QuiverAut(quiver=quiver, vperm=qa.vperm, aperm=qa.aperm, order=qa.order)


def fold_report(qa: QuiverAut) -> Dict[str, list]:
    """Folded datum with its orbit tables, as JSON."""
    C, orbit_map = fold(qa)
    return {"datum": C.to_json(),
            "orbit_map": list(orbit_map),
            "orbits": [list(o) for o in qa.orbits]}


def orbit_pairs(qa: QuiverAut) -> List[Tuple[int, int]]:
    """Ordered pairs of distinct linked orbits."""
    C, _ = fold(qa)
    return [(i, j) for i in C.indices for j in C.indices
            if i != j and C.a(i, j) != 0]
