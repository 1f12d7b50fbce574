"""Verification suites: Serre relations, projections, symmetries, K-group square.

Each suite returns a list of check records
{"check": name, "passed": bool, "witness": ...}.  Per-check timings ("seconds")
are only kept when asked for, so default reports are reproducible byte for
byte.

"""

import numpy as np

from braidfold.algebra.braid import f_gen, f_gen_prime, serre_relator, \
    ti_apply, ti_inverse_apply, well_defined, ideal_dimension, symmetry_height
from braidfold.algebra.cartan import CartanDatum, simple_root, \
    weights_of_height
from braidfold.algebra.falg import DEFAULT_MAX_HEIGHT, decompose_left, \
    decompose_right, dim_weight, is_equal_in_f, is_zero_in_f, \
    membership_left, membership_right, proj_left, proj_right, \
    admissible_index_sets
from braidfold.algebra.freealg import pair, words_of_weight
from braidfold.data import simulate
from braidfold.kgroup.kgroup import KContext, lambda_class, resolve_E, \
    square_report, rank2_contexts
from braidfold.quiver.quiver import QuiverAut, fold, orbit_is_sink, \
    orbit_is_source, orbit_pairs

from typing import Dict, List, Union
import logging
import time


SUITES = ['serre', 'projections', 'braid', 'ksquare']

# Heights of the sampled checks; the height bound still caps them.
PROJECTION_HEIGHT = 5
WELL_DEFINED_HEIGHT = 4
RADICAL_HEIGHT = 4
KSQUARE_MAX_N = 3


def _record(check: str, passed: bool, witness=None,
            started: float = None) -> Dict[str, object]:
    if not passed:
        logging.warning(f"Check {check} FAILED.")
    record = {"check": check, "passed": bool(passed),
              "witness": witness if not passed else None}
    if started is not None:
        record["seconds"] = round(time.time() - started, 6)
    return record



def serre_suite(C: CartanDatum, max_height: int = DEFAULT_MAX_HEIGHT,
                **kwargs) -> List[Dict[str, object]]:
    """Serre relators vanish in f, and the radical is the Serre ideal."""
    checks = []
    for i in C.indices:
        for j in C.indices:
            if i == j:
                continue
            t = time.time()
            relator = serre_relator(C, i, j)
            checks.append(_record(f"serre({i},{j})",
                                  is_zero_in_f(relator, max_height),
                                  relator.to_json(), t))

    for h in range(1, min(max_height, RADICAL_HEIGHT) + 1):
        for nu in weights_of_height(C, h):
            t = time.time()
            words = len(words_of_weight(C, nu))
            dim = dim_weight(C, nu, max_height)
            ideal = ideal_dimension(C, nu, max_height)
            checks.append(_record(f"radical{list(nu)}", ideal + dim == words,
                                  {"words": words, "dim": dim, "ideal": ideal},
                                  t))
    return checks


def projections_suite(C: CartanDatum, max_height: int = DEFAULT_MAX_HEIGHT,
                      seed: int = 0, n_samples: int = 10,
                      **kwargs) -> List[Dict[str, object]]:
    """Both decompositions over singletons and the admissible index sets."""
    rng = np.random.RandomState(seed)
    index_sets = [(i,) for i in C.indices] + admissible_index_sets(C)
    top = min(max_height, PROJECTION_HEIGHT)
    checks = []
    for sample in range(n_samples):
        nu = simulate.random_weight(C, int(rng.randint(1, top + 1)), rng)
        x = simulate.random_element(C, nu, seed=rng)
        for index_set in index_sets:
            for side, decompose, project, member in (
                    ('left', decompose_left, proj_left, membership_left),
                    ('right', decompose_right, proj_right, membership_right)):
                t = time.time()
                p, c = decompose(index_set, x, max_height)
                ok = (is_equal_in_f(x, p + c, max_height)
                      and all(member(i, p, max_height) for i in index_set)
                      and pair(p, c).is_zero()
                      and is_equal_in_f(project(index_set, p, max_height), p,
                                        max_height))
                checks.append(_record(
                    f"proj_{side}{list(index_set)}#{sample}", ok,
                    {"weight": list(nu), "x": x.to_json()}, t))
    return checks


def braid_suite(C: CartanDatum, max_height: int = DEFAULT_MAX_HEIGHT,
                seed: int = 0, n_samples: int = 5,
                **kwargs) -> List[Dict[str, object]]:
    """Generator law, well-definedness and inverse round trips of T_i.

    Only weights nu with both nu and s_i(nu) under max_height are visited.

    """
    rng = np.random.RandomState(seed)
    checks = []
    for i in C.indices:
        for j in C.indices:
            if i == j:
                continue
            n = -C.a(i, j)
            for m in range(n + 1):
                if symmetry_height(C, i, f_gen(C, i, j, m).weight()) > max_height:
                    logging.info(f"Skipping T{i} on f({i},{j};{m}): above the "
                                 f"height bound {max_height}.")
                    continue
                t = time.time()
                image = ti_apply(i, f_gen(C, i, j, m), max_height)
                expected = f_gen_prime(C, i, j, n - m)
                checks.append(_record(f"T{i}(f({i},{j};{m}))",
                                      is_equal_in_f(image, expected, max_height),
                                      image.to_json(), t))
                t = time.time()
                back = ti_inverse_apply(i, f_gen_prime(C, i, j, m), max_height)
                checks.append(_record(f"T{i}^-1(f'({i},{j};{m}))",
                                      is_equal_in_f(back, f_gen(C, i, j, n - m),
                                                    max_height),
                                      back.to_json(), t))

        for h in range(1, min(max_height, WELL_DEFINED_HEIGHT) + 1):
            for nu in weights_of_height(C, h):
                if nu == simple_root(C, i) \
                        or symmetry_height(C, i, nu) > max_height:
                    continue
                for inverse in (False, True):
                    t = time.time()
                    ok, witness = well_defined(C, i, nu, inverse, max_height)
                    name = f"well_defined{'^-1' if inverse else ''}_{i}{list(nu)}"
                    checks.append(_record(name, ok, None if ok else
                                          [w.to_json() for w in witness], t))

        for sample in range(n_samples):
            nu = simulate.random_member_weight(C, i, min(max_height, 5), rng)
            if nu is None:
                break
            x = simulate.random_member(C, i, nu, seed=rng)
            t = time.time()
            y = ti_inverse_apply(i, ti_apply(i, x, max_height), max_height)
            checks.append(_record(f"inverse_{i}#{sample}",
                                  is_equal_in_f(x, y, max_height),
                                  {"x": x.to_json(), "round_trip": y.to_json()},
                                  t))
    return checks


def _contexts(C: CartanDatum, qa: Union[QuiverAut, None]) -> List[KContext]:
    if qa is None:
        return rank2_contexts(C, max_n=KSQUARE_MAX_N)
    contexts = []
    for i, j in orbit_pairs(qa):
        if -C.a(i, j) > KSQUARE_MAX_N:
            continue
        if orbit_is_sink(qa, i) or orbit_is_source(qa, i):
            contexts.append(KContext.from_quiver(qa, i, j))
        else:
            logging.info(f"Skipping orbit pair ({i}, {j}): orbit {i} is "
                         f"neither a sink nor a source.")
    return contexts


def ksquare_suite(C: CartanDatum, max_height: int = DEFAULT_MAX_HEIGHT,
                  qa: Union[QuiverAut, None] = None,
                  **kwargs) -> List[Dict[str, object]]:
    """Resolution identity and the commutative square for every m <= N."""
    checks = []
    for ctx in _contexts(C, qa):
        i, j = ctx.i, ctx.j
        for m in range(ctx.N + 1):
            t = time.time()
            resolved = lambda_class(resolve_E(ctx, m))
            checks.append(_record(f"resolve({i},{j};{m})",
                                  resolved == f_gen(C, i, j, m),
                                  resolved.to_json(), t))
            t = time.time()
            report = square_report(ctx, m, max_height)
            checks.append(_record(f"square({i},{j};{m})", report["equal"],
                                  {"lhs": report["lhs"], "rhs": report["rhs"]},
                                  t))
    return checks


_SUITE_FUNCTIONS = {'serre': serre_suite,
                    'projections': projections_suite,
                    'braid': braid_suite,
                    'ksquare': ksquare_suite}


def run_suites(C: CartanDatum, suite: str = 'all',
               qa: Union[QuiverAut, None] = None,
               seed: int = 0,
               max_height: int = DEFAULT_MAX_HEIGHT,
               timings: bool = False) -> Dict[str, object]:
    """Run one suite (or 'all') and collect a report.

    Args:
        C: Cartan datum (the folded datum when qa is given).
        suite: One of SUITES, or 'all'.
        qa: Quiver with automorphism, for the K-group square.
        seed: Seed of the random samples.
        max_height: Resource bound.
        timings: Keep the wall-clock "seconds" of every check record.

    Returns:
        {"passed": bool, "suites": {name: [check records]}}.

    """
    names = SUITES if suite == 'all' else [suite]
    assert all(name in _SUITE_FUNCTIONS for name in names), \
        f"Unknown suite '{suite}'; choose from {SUITES + ['all']}."
    if qa is not None:
        folded, _ = fold(qa)
        assert folded == C, "The quiver does not fold to the given datum."

    suites = {}
    for name in names:
        t = time.time()
        logging.info(f"Running suite '{name}'...")
        checks = _SUITE_FUNCTIONS[name](C, max_height=max_height, seed=seed, qa=qa)
        passed = sum(c["passed"] for c in checks)
        logging.info(f"Suite '{name}': {passed}/{len(checks)} checks passed "
                     f"in {time.time() - t:.2f} s.")
        if not timings:
            for c in checks:
                c.pop("seconds", None)
        suites[name] = checks
    return {"passed": all(c["passed"] for checks in suites.values() for c in checks),
            "suites": suites}
