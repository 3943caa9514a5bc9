"""Brute-force ground truth and instance generators.

Exhaustive enumeration over (partial) transversals is the independent oracle
against which the constructive machinery is validated: spanning counts,
minimum spanning partial-transversal size, and seeded generators for the two
structural families and for random spanning systems.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .colorful import ColourSystem, Transversal, structural_bcase, structural_pcase
from .cones import spanning
from .errors import BudgetExceeded, RecursionInvariantViolation
from .ratlin import Point, primitive_ray, unit

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class EnumerationReport:
    total_full_transversals: int
    spanning_full_count: int
    min_spanning_partial_size: object  # int, or None if no partial spans
    witness: object  # smallest spanning partial Transversal, if any


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(f"enumeration budget of {self.limit} checks exceeded")


# cones.spanning already sorts its input, applies a rank prune, and memoises
# process-wide, so permuted transversals and repeated systems share work
_spanning = spanning


def count_spanning_transversals(system: ColourSystem, budget=DEFAULT_BUDGET) -> int:
    """Exact number of full transversals whose positive hull is everything."""
    system.check_spanning()
    total = 1
    for s in system.sets:
        total *= len(s)
    if total > budget:
        raise BudgetExceeded(f"{total} full transversals exceed budget {budget}")
    count = 0
    for assignment in product(*(range(len(s)) for s in system.sets)):
        pts = tuple(system.sets[c][e] for c, e in enumerate(assignment))
        if _spanning(pts):
            count += 1
    return count


def min_spanning_partial_size(system: ColourSystem, budget=DEFAULT_BUDGET) -> int:
    """Smallest k such that some k-transversal spans; at most 2d."""
    report = enumerate_report(system, budget=budget, count_full=False)
    if report.min_spanning_partial_size is None:  # pragma: no cover
        raise RecursionInvariantViolation("spanning system without a spanning transversal")
    return report.min_spanning_partial_size


def enumerate_report(system: ColourSystem, budget=DEFAULT_BUDGET, count_full=True):
    system.check_spanning()
    d = system.dim
    bud = _Budget(budget)

    min_size = None
    witness = None
    # a spanning set needs at least d+1 generators, so smaller k cannot work
    for k in range(d + 1, 2 * d + 1):
        for colours in combinations(range(2 * d), k):
            for assignment in product(*(range(len(system.sets[c])) for c in colours)):
                bud.spend()
                pts = tuple(system.sets[c][e] for c, e in zip(colours, assignment))
                if _spanning(pts):
                    min_size = k
                    witness = Transversal(tuple(zip(colours, assignment)))
                    break
            if min_size is not None:
                break
        if min_size is not None:
            break

    total = 1
    for s in system.sets:
        total *= len(s)
    spanning_full = None
    if count_full:
        bud.spend(total)
        spanning_full = 0
        for assignment in product(*(range(len(s)) for s in system.sets)):
            pts = tuple(system.sets[c][e] for c, e in enumerate(assignment))
            if _spanning(pts):
                spanning_full += 1
    return EnumerationReport(total, spanning_full, min_size, witness)


def min_spanning_subset_size(points, budget=DEFAULT_BUDGET):
    """Smallest spanning subset of a single point set, or None."""
    points = [tuple(p) for p in points]
    d = len(points[0])
    bud = _Budget(budget)
    for k in range(d + 1, len(points) + 1):
        for combo in combinations(range(len(points)), k):
            bud.spend()
            if _spanning(tuple(points[i] for i in combo)):
                return k
    return None


# ---------------------------------------------------------------------------
# generators


def _unimodular_map(d, rng, steps=None):
    """Random integer matrix with determinant +-1, as a list of rows."""
    m = [[Fraction(1) if i == j else Fraction(0) for j in range(d)] for i in range(d)]
    if steps is None:
        steps = 3 * d
    for _ in range(steps):
        op = rng.randrange(3)
        i = rng.randrange(d)
        j = rng.randrange(d)
        if op == 0 and i != j:
            f = Fraction(rng.choice([-2, -1, 1, 2]))
            m[i] = [a + f * b for a, b in zip(m[i], m[j])]
        elif op == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        elif op == 2:
            m[i] = [-a for a in m[i]]
    return m


def _apply_map(m, p: Point) -> Point:
    return tuple(sum((row[k] * p[k] for k in range(len(p))), Fraction(0)) for row in m)


def _transform_system(system: ColourSystem, m) -> ColourSystem:
    return ColourSystem(
        system.dim,
        tuple(tuple(_apply_map(m, p) for p in s) for s in system.sets),
    )


def generate_bcase(d: int, transform_seed=None) -> ColourSystem:
    base = tuple(unit(d, i, s) for i in range(d) for s in (1, -1))
    system = ColourSystem(d, (base,) * (2 * d))
    if transform_seed is not None:
        system = _transform_system(system, _unimodular_map(d, random.Random(transform_seed)))
    return system


def generate_pcase(d: int, transform_seed=None) -> ColourSystem:
    f = tuple(unit(d, i) for i in range(d))
    f += (tuple(Fraction(-1) for _ in range(d)),)
    neg_f = tuple(tuple(-x for x in p) for p in f)
    system = ColourSystem(d, (f,) * d + (neg_f,) * d)
    if transform_seed is not None:
        system = _transform_system(system, _unimodular_map(d, random.Random(transform_seed)))
    return system


def _random_spanning_set(d, size, rng, coord_bound=3, attempts=2000):
    for _ in range(attempts):
        pts = []
        rays = set()
        tries = 0
        while len(pts) < size and tries < 200:
            tries += 1
            p = tuple(Fraction(rng.randint(-coord_bound, coord_bound)) for _ in range(d))
            if all(x == 0 for x in p):
                continue
            r = primitive_ray(p)
            if r in rays:
                continue
            rays.add(r)
            pts.append(p)
        if len(pts) == size and spanning(tuple(pts)):
            return tuple(pts)
    raise BudgetExceeded("could not sample a spanning set within the attempt budget")


def generate_random(d: int, sizes=None, seed=0, coord_bound=3) -> ColourSystem:
    """Seeded random spanning system; rejects the two structural families."""
    if sizes is None:
        sizes = d + 2
    if isinstance(sizes, int):
        sizes = [sizes] * (2 * d)
    if len(sizes) != 2 * d:
        raise ValueError(f"need {2 * d} sizes")
    if any(s < d + 1 for s in sizes):
        raise ValueError("each set needs at least d+1 points to span")
    rng = random.Random(seed)
    for _ in range(100):
        sets = tuple(_random_spanning_set(d, s, rng, coord_bound) for s in sizes)
        system = ColourSystem(d, sets)
        if structural_bcase(system) is None and structural_pcase(system) is None:
            return system
    raise BudgetExceeded("random generation kept hitting structural families")


def generate(kind: str, d: int, sizes=None, seed=0, transform_seed=None) -> ColourSystem:
    kind = kind.lower()
    if kind == "bcase":
        return generate_bcase(d, transform_seed=transform_seed)
    if kind == "pcase":
        return generate_pcase(d, transform_seed=transform_seed)
    if kind == "random":
        return generate_random(d, sizes=sizes, seed=seed)
    raise ValueError(f"unknown kind {kind!r} (expected bcase, pcase, or random)")
