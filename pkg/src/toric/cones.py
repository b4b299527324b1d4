"""Rational polyhedral cones with exact generator/facet duality.

Cones live in M_R = R^d and are described by integer generators. The
H-description (inner facet normals) is computed on demand by an incremental
double-description pass and cached; both descriptions are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import intlin
from .errors import DimensionError, StructureError
from .intlin import Vector, dot, primitive, vec_neg, vec_sub


def _rank_of(vectors, d):
    if not vectors:
        return 0
    return intlin.rank(intlin.matrix([tuple(v) for v in vectors]))


def _extreme_filter(rays, constraints, d, lineality_dim):
    """Keep exactly the rays extreme for {x : <a,x> >= 0, a in constraints}.

    A ray r is extreme (modulo lineality) iff the constraints active at r
    have rank equal to rank(constraints) - 1.
    """
    target = (d - lineality_dim) - 1
    kept = []
    seen = set()
    for r in rays:
        r = primitive(r)
        if r in seen:
            continue
        active = [a for a in constraints if dot(a, r) == 0]
        if _rank_of(active, d) == target:
            seen.add(r)
            kept.append(r)
    return kept


def dual_description(generators: Sequence[Vector], d: int):
    """Rays and lineality basis of {y : <y, g> >= 0 for all g}.

    Incremental double description: start from the full space (lineality =
    standard basis) and cut with one generator at a time. Returns
    (rays, lineality) with primitive integer vectors.
    """
    lin = [tuple(row) for row in intlin.identity(d)]
    rays: list[Vector] = []
    processed: list[Vector] = []
    for g in generators:
        g = tuple(g)
        if intlin.is_zero_vector(g):
            continue
        svals = [dot(g, l) for l in lin]
        if any(s != 0 for s in svals):
            # pivot a lineality direction out of the kernel of g
            i0 = next(i for i, s in enumerate(svals) if s != 0)
            l0, a0 = lin[i0], svals[i0]
            if a0 < 0:
                l0, a0 = vec_neg(l0), -a0
            new_lin = [
                primitive(tuple(a0 * x - s * y for x, y in zip(l, l0)))
                for i, (l, s) in enumerate(zip(lin, svals))
                if i != i0
            ]
            rays = [
                primitive(tuple(a0 * x - dot(g, r) * y for x, y in zip(r, l0)))
                for r in rays
            ]
            rays.append(primitive(l0))
            lin = new_lin
        else:
            scored = [(r, dot(g, r)) for r in rays]
            plus = [(r, s) for r, s in scored if s > 0]
            zero = [r for r, s in scored if s == 0]
            minus = [(r, s) for r, s in scored if s < 0]
            if minus:
                combos = []
                for p, sp in plus:
                    for m, sm in minus:
                        w = tuple(sp * a - sm * b for a, b in zip(m, p))
                        w = primitive(w)
                        if not intlin.is_zero_vector(w):
                            combos.append(w)
                rays = [p for p, _ in plus] + zero + combos
            # else: nothing to cut
        processed.append(g)
        if rays:
            rays = _extreme_filter(rays, processed, d, len(lin))
    rays = sorted(set(rays))
    return rays, lin


class Cone:
    """A rational polyhedral cone given by integer generators.

    Facet normals use the inner convention: v lies in the cone iff
    <n, v> >= 0 for every cached normal n. For cones that are not
    full-dimensional the normal list contains opposite pairs spanning the
    orthogonal complement, so membership is still exact.
    """

    def __init__(self, ambient_rank: int, generators: Sequence[Sequence[int]]):
        d = int(ambient_rank)
        if d < 1:
            raise DimensionError("ambient rank must be >= 1")
        gens = []
        for g in generators:
            g = tuple(int(x) for x in g)
            if len(g) != d:
                raise DimensionError(
                    f"generator of length {len(g)} in ambient rank {d}"
                )
            if not intlin.is_zero_vector(g):
                gens.append(g)
        self.ambient_rank = d
        self.generators = tuple(gens)
        self._normals: Optional[tuple[Vector, ...]] = None
        self._rays: Optional[tuple[Vector, ...]] = None

    def __repr__(self):
        return f"Cone(d={self.ambient_rank}, generators={list(self.generators)})"

    # -- duality -----------------------------------------------------------

    def facet_normals(self) -> tuple[Vector, ...]:
        if self._normals is None:
            rays, lin = dual_description(self.generators, self.ambient_rank)
            out = set(rays)
            for l in lin:
                l = primitive(l)
                out.add(l)
                out.add(vec_neg(l))
            self._normals = tuple(sorted(out))
        return self._normals

    def dual(self) -> "Cone":
        return Cone(self.ambient_rank, self.facet_normals())

    # -- predicates --------------------------------------------------------

    def contains(self, v: Sequence[int]) -> bool:
        v = tuple(int(x) for x in v)
        if len(v) != self.ambient_rank:
            raise DimensionError("point has wrong length")
        return all(dot(n, v) >= 0 for n in self.facet_normals())

    def is_strongly_convex(self) -> bool:
        """True iff the cone contains no line (dual is full-dimensional)."""
        return _rank_of(self.facet_normals(), self.ambient_rank) == self.ambient_rank

    def is_full_dimensional(self) -> bool:
        return _rank_of(self.generators, self.ambient_rank) == self.ambient_rank

    # -- rays --------------------------------------------------------------

    def primitive_rays(self) -> tuple[Vector, ...]:
        """Primitive generators of the extreme rays, lexicographically sorted.

        Only defined for strongly convex cones.
        """
        if self._rays is not None:
            return self._rays
        if not self.is_strongly_convex():
            raise StructureError("extreme rays of a non-pointed cone")
        d = self.ambient_rank
        normals = self.facet_normals()
        out = []
        seen = set()
        for g in self.generators:
            g = primitive(g)
            if g in seen:
                continue
            seen.add(g)
            active = [n for n in normals if dot(n, g) == 0]
            if _rank_of(active, d) == d - 1:
                out.append(g)
        self._rays = tuple(sorted(out))
        return self._rays


def grading_functional(c: Cone) -> Vector:
    """An integer functional strictly positive on c minus the origin:
    the sum of the facet normals (opposite pairs cancel)."""
    if not c.is_strongly_convex():
        raise StructureError("no positive grading on a non-pointed cone")
    total = [0] * c.ambient_rank
    for n in c.facet_normals():
        for i, x in enumerate(n):
            total[i] += x
    return tuple(total)


@dataclass(frozen=True)
class SimplicialCone:
    """d linearly independent rays; index is |det| of the ray matrix."""

    rays: tuple[Vector, ...]
    index: int = field(init=False)

    def __post_init__(self):
        d = len(self.rays[0])
        if len(self.rays) != d:
            raise StructureError("simplicial cone needs exactly d rays")
        m = intlin.columns(self.rays)
        idx = abs(intlin.det(m))
        if idx == 0:
            raise StructureError("rays are linearly dependent")
        object.__setattr__(self, "index", idx)

    def contains(self, v: Sequence[int]) -> bool:
        sol = intlin.solve_rational(intlin.columns(self.rays), tuple(v))
        return sol is not None and all(x >= 0 for x in sol)


def _facet_normal(facet_rays, other_ray):
    """Integer normal of the hyperplane spanned by d-1 independent rays,
    oriented towards other_ray (generalized cross product)."""
    d = len(other_ray)
    rows = [tuple(r) for r in facet_rays]
    n = []
    for j in range(d):
        minor = tuple(
            tuple(row[k] for k in range(d) if k != j) for row in rows
        )
        n.append((-1) ** j * intlin.det(minor))
    n = primitive(tuple(n))
    s = dot(n, other_ray)
    if s == 0:
        raise StructureError("degenerate facet")
    return n if s > 0 else vec_neg(n)


def triangulate(c: Cone, ray_order: Optional[Sequence[Sequence[int]]] = None):
    """Placing (incremental) triangulation of a pointed full-dimensional cone.

    Subcones use only rays of c. The default insertion order is the
    canonical lexicographic ray order; passing ray_order (a permutation of
    the primitive rays) selects a different placing order. Returns a list
    of SimplicialCone whose union is c and whose pairwise intersections are
    common faces.
    """
    if not c.is_strongly_convex():
        raise StructureError("triangulation needs a pointed cone")
    if not c.is_full_dimensional():
        raise StructureError("triangulation needs a full-dimensional cone")
    d = c.ambient_rank
    rays = list(c.primitive_rays())
    if ray_order is not None:
        order = [primitive(tuple(int(x) for x in r)) for r in ray_order]
        if sorted(order) != sorted(rays) or len(set(order)) != len(order):
            raise StructureError("ray_order must be a permutation of the rays")
        rays = order

    # initial full-dimensional simplex: greedy scan for independent rays
    chosen: list[int] = []
    for i, r in enumerate(rays):
        if _rank_of([rays[j] for j in chosen] + [r], d) > len(chosen):
            chosen.append(i)
            if len(chosen) == d:
                break
    simplices: list[tuple[int, ...]] = [tuple(chosen)]
    pending = [i for i in range(len(rays)) if i not in chosen]

    for idx in pending:
        r = rays[idx]
        # boundary facets appear in exactly one simplex of the current fan
        count: dict[frozenset, tuple[tuple[int, ...], int]] = {}
        multiplicity: dict[frozenset, int] = {}
        for simplex in simplices:
            for drop in simplex:
                key = frozenset(simplex) - {drop}
                multiplicity[key] = multiplicity.get(key, 0) + 1
                count[key] = (simplex, drop)
        new_simplices = []
        for key, (simplex, drop) in count.items():
            if multiplicity[key] != 1:
                continue
            facet = [rays[i] for i in sorted(key)]
            n = _facet_normal(facet, rays[drop])
            if dot(n, r) < 0:
                new_simplices.append(tuple(sorted(key | {idx})))
        simplices.extend(new_simplices)

    simplices.sort()
    return [SimplicialCone(tuple(rays[i] for i in s)) for s in simplices]
