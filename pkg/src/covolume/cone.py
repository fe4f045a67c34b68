"""Rational polyhedral cones, their triangulations and adjoint polynomials.

The adjoint of a full-dimensional pointed cone with extreme rays ``V`` is

    sum over simplicial pieces s of  |det s| * prod_{v in V \\ s} (v . t)

which does not depend on the triangulation.  Two triangulations ship here:
a deterministic placing triangulation (the default) and a regular
triangulation from a random lifting, used as an independent cross-check.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .linalg import MatrixError, RationalMatrix, det, rank, solve
from .lp import feasible_point, in_conic_hull
from .ratpoly import Polynomial, mul, substitute_matrix

Vector = tuple[Fraction, ...]


class ConeError(ValueError):
    pass


class NotPointedOrNoCommonSide(ConeError):
    """No linear functional is strictly positive on every extreme ray."""


class NotFullDimensional(ConeError):
    pass


def as_vector(v: Sequence) -> Vector:
    return tuple(Fraction(str(x)) if isinstance(x, str) else Fraction(x) for x in v)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Primitive integer vector on the same ray (positive rescaling only)."""
    v = as_vector(v)
    if all(x == 0 for x in v):
        raise ConeError("the zero vector does not span a ray")
    lcm = 1
    for x in v:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return tuple(x // g for x in ints)


def _ray_order_key(v: tuple[int, ...]):
    return (-sum(v), tuple(-x for x in v))


def extreme_rays(generators: Sequence[Sequence]) -> list[Vector]:
    """Generators (first representative of each ray) not in the cone of the others."""
    if not generators:
        raise ConeError("a cone needs at least one generator")
    dims = {len(g) for g in generators}
    if len(dims) != 1:
        raise ConeError("generators have different dimensions")
    seen = {}
    for g in generators:
        g = as_vector(g)
        key = primitive(g)
        if key not in seen:
            seen[key] = g
    reps = list(seen.values())
    out = []
    for i, g in enumerate(reps):
        others = reps[:i] + reps[i + 1:]
        if not in_conic_hull(g, others):
            out.append(g)
    return out


@dataclass(frozen=True)
class Cone:
    ambient_dim: int
    generators: tuple[Vector, ...]
    extreme: tuple[Vector, ...]

    @classmethod
    def from_generators(cls, generators: Sequence[Sequence]) -> "Cone":
        gens = tuple(as_vector(g) for g in generators)
        if not gens:
            raise ConeError("a cone needs at least one generator")
        return cls(len(gens[0]), gens, tuple(extreme_rays(gens)))

    def canonical_extreme(self) -> list[tuple[int, ...]]:
        """Primitive integer extreme rays in canonical order."""
        return sorted((primitive(v) for v in self.extreme), key=_ray_order_key)

    def ordered_extreme(self) -> list[Vector]:
        """Extreme-ray representatives as given, in canonical order."""
        return sorted(self.extreme, key=lambda v: _ray_order_key(primitive(v)))

    def is_full_dimensional(self) -> bool:
        return rank(self.extreme) == self.ambient_dim

    def contains(self, point: Sequence) -> bool:
        return in_conic_hull(point, self.extreme)

    def to_json_obj(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "rays": [[str(x) for x in g] for g in self.generators]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Cone":
        try:
            rays = obj["rays"]
            d = int(obj.get("ambient_dim", len(rays[0]) if rays else 0))
        except (KeyError, TypeError, IndexError) as exc:
            raise ConeError(f"malformed cone JSON: {exc}") from exc
        if any(len(r) != d for r in rays):
            raise ConeError("ray length does not match ambient_dim")
        return cls.from_generators(rays)

    @classmethod
    def from_json(cls, text: str) -> "Cone":
        return cls.from_json_obj(json.loads(text))


def _dot(w: Sequence, v: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(w, v)), Fraction(0))


def positive_functional(c: Cone) -> tuple[Fraction, ...]:
    rays = c.canonical_extreme()
    d = c.ambient_dim
    candidates = []
    for k in range(d):
        e = [Fraction(0)] * d
        e[k] = Fraction(1)
        candidates.append(tuple(e))
        candidates.append(tuple(-x for x in e))
    candidates.append(tuple(Fraction(sum(r[k] for r in rays)) for k in range(d)))
    for w in candidates:
        if all(_dot(w, r) > 0 for r in rays):
            return w
    # w = wp - wm free;  w.r - s_r = 1, s_r >= 0
    m = len(rays)
    A = []
    for idx, r in enumerate(rays):
        row = [Fraction(x) for x in r] + [Fraction(-x) for x in r] + [Fraction(0)] * m
        row[2 * d + idx] = Fraction(-1)
        A.append(row)
    x = feasible_point(A, [1] * m)
    if x is None:
        raise NotPointedOrNoCommonSide("no linear functional is positive on every extreme ray")
    return tuple(x[k] - x[d + k] for k in range(d))


@dataclass(frozen=True)
class SimplicialPiece:
    indices: tuple[int, ...]
    rays: tuple[Vector, ...]
    volume: Fraction


@dataclass(frozen=True)
class Triangulation:
    rays: tuple[Vector, ...]
    pieces: tuple[SimplicialPiece, ...]
    method: str = "placing"

    @property
    def total_volume(self) -> Fraction:
        return sum((p.volume for p in self.pieces), Fraction(0))

    def index_sets(self) -> set[frozenset]:
        return {frozenset(p.indices) for p in self.pieces}


def _prepare(c: Cone, canonical: bool) -> list[Vector]:
    if canonical:
        rays = [as_vector(v) for v in c.canonical_extreme()]
    else:
        rays = c.ordered_extreme()
    if rank(rays) != c.ambient_dim:
        raise NotFullDimensional("the extreme rays do not span the ambient space")
    positive_functional(c)
    return rays


def _pieces(rays: Sequence[Vector], simplices) -> tuple[SimplicialPiece, ...]:
    out = []
    for s in sorted(tuple(sorted(s)) for s in simplices):
        vol = abs(det([rays[i] for i in s]))
        out.append(SimplicialPiece(s, tuple(rays[i] for i in s), vol))
    return tuple(out)


def triangulate(c: Cone, canonical: bool = True) -> Triangulation:
    """Placing triangulation: insert extreme rays in canonical order, coning over visible facets."""
    rays = _prepare(c, canonical)
    d = c.ambient_dim
    n = len(rays)

    def orient(idx: Sequence[int]) -> int:
        v = det([rays[i] for i in idx])
        return (v > 0) - (v < 0)

    start = []
    for i in range(n):
        if rank([rays[j] for j in start + [i]]) == len(start) + 1:
            start.append(i)
            if len(start) == d:
                break
    simplices = [tuple(start)]
    boundary: dict[tuple[int, ...], int] = {}
    for k in range(d):
        facet = tuple(x for j, x in enumerate(start) if j != k)
        boundary[facet] = start[k]
    for p in (i for i in range(n) if i not in start):
        visible = [f for f, opp in boundary.items() if orient(f + (p,)) * orient(f + (opp,)) < 0]
        if not visible:
            raise ConeError("ray inside the current hull; extreme-ray set is inconsistent")
        for f in visible:
            del boundary[f]
        for f in visible:
            simplices.append(tuple(sorted(f + (p,))))
            for k in range(len(f)):
                nf = tuple(sorted(f[:k] + f[k + 1:] + (p,)))
                if nf in boundary:
                    del boundary[nf]
                else:
                    boundary[nf] = f[k]
    return Triangulation(tuple(rays), _pieces(rays, simplices), "placing")


def regular_triangulation(c: Cone, rng: random.Random, canonical: bool = True,
                          max_tries: int = 20) -> Triangulation:
    """Regular triangulation induced by random heights on the cross-section."""
    rays = _prepare(c, canonical)
    d = c.ambient_dim
    n = len(rays)
    w = positive_functional(c)
    pts = [tuple(x / _dot(w, r) for x in r) for r in rays]
    bases = [s for s in combinations(range(n), d) if det([rays[i] for i in s]) != 0]
    for _ in range(max_tries):
        h = [Fraction(rng.randint(1, 10 ** 6), rng.randint(1, 1000)) for _ in range(n)]
        cells = []
        generic = True
        for s in bases:
            lam = solve([pts[i] for i in s], [h[i] for i in s])
            gaps = [h[j] - _dot(lam, pts[j]) for j in range(n) if j not in s]
            if any(g == 0 for g in gaps):
                generic = False
                break
            if all(g > 0 for g in gaps):
                cells.append(s)
        if generic:
            return Triangulation(tuple(rays), _pieces(rays, cells), "regular")
    raise ConeError("could not find generic heights")


def adjoint(c: Cone, triangulation: Optional[Triangulation] = None, canonical: bool = True) -> Polynomial:
    """Adjoint polynomial over the extreme rays (primitive integer representatives by default)."""
    T = triangulation if triangulation is not None else triangulate(c, canonical)
    return adjoint_from_triangulation(T)


def adjoint_from_triangulation(T: Triangulation) -> Polynomial:
    rays = T.rays
    d = len(rays[0])
    forms = [Polynomial.linear_form(v) for v in rays]
    total = Polynomial.zero(d)
    for piece in T.pieces:
        term = Polynomial.constant(d, piece.volume)
        members = set(piece.indices)
        for i, form in enumerate(forms):
            if i not in members:
                term = mul(term, form)
        total = total + term
    return total


def _matrix(A) -> RationalMatrix:
    return A if isinstance(A, RationalMatrix) else RationalMatrix.from_rows(A)


def transform(c: Cone, A) -> Cone:
    """The cone spanned by ``A v`` for the extreme rays ``v`` of ``c``."""
    A = _matrix(A)
    if A.shape != (c.ambient_dim, c.ambient_dim):
        raise ConeError("transform matrix has the wrong size")
    if A.det() == 0:
        raise ConeError("transform matrix is singular")
    ext = tuple(A @ v for v in c.extreme)
    return Cone(c.ambient_dim, ext, ext)


def adjoint_transform_check(c: Cone, A) -> bool:
    """Compare both sides of  adj(A P)(t) = |det A| adj(P)(A^T t)  exactly."""
    A = _matrix(A)
    lhs = adjoint(transform(c, A), canonical=False)
    rhs = substitute_matrix(adjoint(c, canonical=False), A.T).scale(abs(A.det()))
    return lhs == rhs


def orthantal_reduce(c: Cone, simplex_rays: Sequence[Sequence]) -> tuple[Cone, RationalMatrix]:
    """Map ``c`` into the nonnegative orthant using an enclosing simplex that shares a face with it.

    ``simplex_rays[0]`` is the apex ray; ``simplex_rays[1:]`` span the shared face.
    Returns ``(A^{-1} c, A)`` where the columns of ``A`` are the simplex rays.
    """
    d = c.ambient_dim
    cols = [as_vector(r) for r in simplex_rays]
    if len(cols) != d or any(len(r) != d for r in cols):
        raise ConeError(f"need {d} simplex rays of length {d}")
    if any(x < 0 for r in cols for x in r):
        raise ConeError("simplex rays must be nonnegative")
    A = RationalMatrix.from_rows([[cols[j][i] for j in range(d)] for i in range(d)])
    if A.det() == 0:
        raise ConeError("simplex rays are linearly dependent")
    for v in c.extreme:
        if not in_conic_hull(v, cols):
            raise ConeError(f"extreme ray {v} lies outside the enclosing simplex")
    ext = {primitive(v) for v in c.extreme}
    for r in cols[1:]:
        if primitive(r) not in ext:
            raise ConeError(f"simplex ray {r} is not an extreme ray of the cone")
    try:
        Ainv = A.inverse()
    except MatrixError as exc:
        raise ConeError(str(exc)) from exc
    return transform(c, Ainv), A


def recover_adjoint(reduced: Cone, A) -> Polynomial:
    """Adjoint of ``A * reduced`` from the reduced cone's adjoint (non-canonical representatives)."""
    A = _matrix(A)
    return substitute_matrix(adjoint(reduced, canonical=False), A.T).scale(abs(A.det()))
