"""Conic predicates and certificates.

Membership in a finitely generated cone, the "positively spans the whole
space" test, exact nearest point on a cone, and separating witnesses.  All
answers come with machine-checkable certificates over exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, ZeroPoint
from .ratlin import (
    Feasible,
    Point,
    add,
    dot,
    is_zero,
    lp_feasibility,
    null_space,
    rank,
    scale,
    solve_columns,
    sub,
    unit,
    zero_point,
)


@dataclass(frozen=True)
class ConicCertificate:
    """Witness that target = sum of coefficients * generators, coefficients >= 0.

    generator_indices point into whatever generator list the certificate was
    issued against; only strictly positive coefficients are recorded.
    """

    generator_indices: tuple
    coefficients: tuple
    target: Point

    def verify(self, generators) -> bool:
        if len(self.generator_indices) != len(self.coefficients):
            return False
        if len(set(self.generator_indices)) != len(self.generator_indices):
            return False
        acc = zero_point(len(self.target))
        for i, c in zip(self.generator_indices, self.coefficients):
            if c < 0 or not 0 <= i < len(generators):
                return False
            acc = add(acc, scale(c, generators[i]))
        return acc == tuple(self.target)


@dataclass(frozen=True)
class FarkasWitness:
    """Direction w with <w, a> <= 0 for every refuted generator, <w, target> > 0."""

    w: Point
    target: Point = None

    def verify(self, generators, target=None) -> bool:
        if target is None:
            target = self.target
        if any(dot(self.w, a) > 0 for a in generators):
            return False
        return target is None or dot(self.w, target) > 0


@dataclass(frozen=True)
class SpanCertificate:
    """Per-direction conic certificates for +e_1..+e_d, -e_1..-e_d."""

    dim: int
    certificates: tuple  # tuple of (direction point, ConicCertificate)

    def verify(self, generators) -> bool:
        d = self.dim
        want = [unit(d, i) for i in range(d)] + [unit(d, i, -1) for i in range(d)]
        dirs = [direction for direction, _ in self.certificates]
        if dirs != want:
            return False
        return all(
            cert.target == direction and cert.verify(generators)
            for direction, cert in self.certificates
        )


@dataclass(frozen=True)
class NearestPoint:
    point: Point
    support: tuple  # indices into the generator list, inclusion-minimal
    sqdist: Fraction


def _check_dims(points, d):
    for p in points:
        if len(p) != d:
            raise DimensionMismatch(f"expected dimension {d}, got {len(p)}")


def pos_membership(v: Point, generators):
    """Decide v in pos(generators); returns ConicCertificate or FarkasWitness."""
    if is_zero(v):
        raise ZeroPoint("membership target must be nonzero")
    if not generators:
        raise ValueError("generator list must be nonempty")
    _check_dims(generators, len(v))
    res = lp_feasibility(list(generators), v)
    if isinstance(res, Feasible):
        idx = tuple(j for j, c in enumerate(res.coefficients) if c != 0)
        coeffs = tuple(res.coefficients[j] for j in idx)
        return ConicCertificate(idx, coeffs, tuple(v))
    return FarkasWitness(res.witness, tuple(v))


# Process-wide memos.  The functions are pure and their inputs are small
# immutable tuples; the exhaustive d=2 sweeps hit the same generator tuples
# millions of times.  _SPAN_CACHE holds certificates keyed on the exact input
# tuple, _SPAN_BOOL holds booleans keyed on the sorted tuple (spanning is
# order-invariant).
_SPAN_CACHE = {}
_SPAN_BOOL = {}


def clear_span_cache():
    _SPAN_CACHE.clear()
    _SPAN_BOOL.clear()


def spans_space(generators):
    """Decide pos(generators) = R^d.

    Returns a SpanCertificate (conic certificates for every +-e_i) or a
    FarkasWitness whose closed halfspace {x : <w, x> <= 0} contains every
    generator.
    """
    generators = tuple(tuple(g) for g in generators)
    cached = _SPAN_CACHE.get(generators)
    if cached is not None:
        return cached
    if not generators:
        raise ValueError("generator list must be nonempty")
    d = len(generators[0])
    _check_dims(generators, d)

    if rank(list(generators)) < d:
        w = null_space(list(generators))[0]
        axis = next(i for i in range(d) if w[i] != 0)
        target = unit(d, axis, 1 if w[axis] > 0 else -1)
        result = FarkasWitness(w, target)
    else:
        certs = []
        result = None
        for direction in [unit(d, i) for i in range(d)] + [unit(d, i, -1) for i in range(d)]:
            res = pos_membership(direction, generators)
            if isinstance(res, FarkasWitness):
                result = res
                break
            certs.append((direction, res))
        if result is None:
            result = SpanCertificate(d, tuple(certs))
    _SPAN_CACHE[generators] = result
    return result


def spanning(generators) -> bool:
    key = tuple(sorted(tuple(tuple(g) for g in generators)))
    hit = _SPAN_BOOL.get(key)
    if hit is None:
        # cheap rank prune before the LP-backed certificate machinery
        hit = rank(list(key)) == len(key[0]) and isinstance(
            spans_space(key), SpanCertificate
        )
        _SPAN_BOOL[key] = hit
    return hit


def nearest_cone_point(v: Point, generators) -> NearestPoint:
    """Exact Euclidean-nearest point of pos(generators) to v.

    Enumerates linearly independent support subsets and keeps the one whose
    interior conic combination satisfies the exact optimality inequalities.
    Requires len(generators) <= d, which keeps the enumeration desk-scale.
    """
    d = len(v)
    _check_dims(generators, d)
    n = len(generators)
    if n > d:
        raise ValueError("nearest_cone_point expects a transversal-sized set (<= d points)")

    best = None
    for mask in range(1 << n):
        supp = tuple(i for i in range(n) if mask >> i & 1)
        pts = [generators[i] for i in supp]
        if pts and rank(pts) < len(pts):
            continue
        if supp:
            gram_cols = [tuple(dot(a, b) for a in pts) for b in pts]
            rhs = tuple(dot(a, v) for a in pts)
            lam = solve_columns(gram_cols, rhs)
            if lam is None or any(c <= 0 for c in lam):
                continue
            p = zero_point(d)
            for c, a in zip(lam, pts):
                p = add(p, scale(c, a))
        else:
            p = zero_point(d)
        w = sub(v, p)
        if any(dot(w, a) > 0 for a in generators):
            continue
        sq = dot(w, w)
        key = (sq, supp)
        if best is None or key < best[0]:
            best = (key, p)
    if best is None:  # pragma: no cover - projection always exists
        raise AssertionError("no KKT point found for cone projection")
    (sq, supp), p = best
    return NearestPoint(p, supp, sq)


def separating_witness(v: Point, p: Point) -> FarkasWitness:
    """w = v - p for a nearest cone point p != v; separates v from the cone."""
    if tuple(v) == tuple(p):
        raise ValueError("v lies on the cone; no separating witness exists")
    return FarkasWitness(sub(v, p), tuple(v))
