"""Affine semigroups of Z^d: Hilbert bases, membership, saturation.

An AffineSemigroup is determined by finitely many integer generators whose
group span is all of Z^d (rank-deficient input is rejected). Pointed
semigroups carry a canonical grading functional, the sum of the primitive
generators of the dual cone, which is strictly positive away from the
origin and certifies termination of every bounded search below.

Canonical element order everywhere: ascending grading value, ties broken
lexicographically.
"""

from __future__ import annotations

import itertools
import math
from typing import Optional, Sequence

from . import intlin
from .cones import Cone, SimplicialCone, grading_functional, triangulate
from .errors import DimensionError, StructureError
from .intlin import Vector, dot


def canonical_sort(vectors, grading: Vector):
    return tuple(sorted(set(vectors), key=lambda v: (dot(grading, v), v)))


class AffineSemigroup:
    """Finitely generated sub-semigroup of Z^d spanning the full lattice."""

    def __init__(
        self,
        ambient_rank: int,
        generators: Sequence[Sequence[int]],
        *,
        pointed: Optional[bool] = None,
        saturated: Optional[bool] = None,
    ):
        d = int(ambient_rank)
        if d < 1:
            raise DimensionError("ambient rank must be >= 1")
        gens = []
        seen = set()
        for g in generators:
            g = tuple(int(x) for x in g)
            if len(g) != d:
                raise DimensionError(
                    f"generator of length {len(g)} in ambient rank {d}"
                )
            if intlin.is_zero_vector(g) or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        if not gens or not intlin.spans_lattice(gens, d):
            raise StructureError("generators do not span the lattice")
        self.ambient_rank = d
        self.generators = tuple(gens)
        self._pointed = pointed
        self._saturated = saturated
        self._cone: Optional[Cone] = None
        self._hilbert: Optional[tuple[Vector, ...]] = None
        self._grading: Optional[Vector] = None

    def __repr__(self):
        return (
            f"AffineSemigroup(d={self.ambient_rank}, "
            f"generators={list(self.generators)})"
        )

    def cone(self) -> Cone:
        if self._cone is None:
            self._cone = Cone(self.ambient_rank, self.generators)
        return self._cone

    def is_pointed(self) -> bool:
        if self._pointed is None:
            self._pointed = self.cone().is_strongly_convex()
        return self._pointed

    def grading(self) -> Vector:
        if self._grading is None:
            if not self.is_pointed():
                raise StructureError("no grading on a non-pointed semigroup")
            self._grading = grading_functional(self.cone())
        return self._grading

    def hilbert_basis(self) -> tuple[Vector, ...]:
        """The unique minimal generating set, canonically ordered."""
        if self._hilbert is None:
            self._hilbert = minimal_generators(self)
        return self._hilbert

    def same_semigroup(self, other: "AffineSemigroup") -> bool:
        return (
            self.ambient_rank == other.ambient_rank
            and self.hilbert_basis() == other.hilbert_basis()
        )


def _reduce_to_irreducible(candidates, grading: Vector) -> tuple[Vector, ...]:
    """Normaliz-style reduction. Candidates must generate the semigroup;
    scanning in ascending grading order makes the greedy filter exact."""
    cands = canonical_sort((c for c in candidates if not intlin.is_zero_vector(c)),
                           grading)
    kept: list[Vector] = []
    gmin = None
    for v in cands:
        if kept:
            bound = dot(grading, v) // gmin
            a = intlin.columns(kept)
            if intlin.solve_nonneg_integer(a, v, bound, grading=grading) is not None:
                continue
        kept.append(v)
        gv = dot(grading, v)
        gmin = gv if gmin is None else min(gmin, gv)
    return tuple(kept)


def parallelepiped_points(s: SimplicialCone) -> tuple[Vector, ...]:
    """The lattice points of the half-open fundamental parallelepiped
    {sum lambda_i r_i : 0 <= lambda_i < 1}; exactly s.index points,
    including the origin.

    The points are coset representatives of Z^d modulo the ray lattice;
    they are enumerated from the diagonal of the column-style Hermite
    normal form of the ray matrix.
    """
    d = len(s.rays[0])
    r_matrix = intlin.columns(s.rays)
    h_rows, _ = intlin.hermite_normal_form(intlin.transpose(r_matrix))
    h_col = intlin.transpose(h_rows)  # lower triangular, positive diagonal
    diag = [h_col[i][i] for i in range(d)]
    pts = []
    for residue in itertools.product(*(range(k) for k in diag)):
        lam = intlin.solve_rational(r_matrix, tuple(residue))
        frac = [x - math.floor(x) for x in lam]
        pt = tuple(
            residue[i]
            - sum(r_matrix[i][j] * math.floor(lam[j]) for j in range(d))
            for i in range(d)
        )
        assert all(0 <= f < 1 for f in frac)
        pts.append(pt)
    if len(set(pts)) != s.index:
        raise StructureError("parallelepiped enumeration lost points")
    return tuple(sorted(pts))


def hilbert_basis_saturated(c: Cone) -> tuple[Vector, ...]:
    """Hilbert basis of c intersected with Z^d for a pointed
    full-dimensional cone c.

    Triangulates c, collects the rays together with the lattice points of
    each fundamental parallelepiped (these generate the saturated
    semigroup), then reduces the union to its irreducible elements.
    """
    if not c.is_strongly_convex():
        raise StructureError("Hilbert basis of a non-pointed cone")
    if not c.is_full_dimensional():
        raise StructureError("Hilbert basis needs a full-dimensional cone")
    candidates = set(c.primitive_rays())
    for simplex in triangulate(c):
        candidates.update(parallelepiped_points(simplex))
    grading = grading_functional(c)
    return _reduce_to_irreducible(candidates, grading)


def member(s: AffineSemigroup, v: Sequence[int]) -> Optional[tuple[Vector, ...]]:
    """Certificate that v lies in s: a multiset of generators summing to v
    (canonically ordered), or None.

    The search bound comes from the grading: any representation of v uses
    at most grading(v) // min_g grading(g) generators.
    """
    if not s.is_pointed():
        raise StructureError("membership search needs a pointed semigroup")
    v = tuple(int(x) for x in v)
    if len(v) != s.ambient_rank:
        raise DimensionError("point has wrong length")
    if intlin.is_zero_vector(v):
        return ()
    grading = s.grading()
    gv = dot(grading, v)
    if gv <= 0:
        return None
    gens = s.generators
    gmin = min(dot(grading, g) for g in gens)
    bound = gv // gmin
    a = intlin.columns(gens)
    x = intlin.solve_nonneg_integer(a, v, bound, grading=grading)
    if x is None:
        return None
    cert = []
    for g, k in zip(gens, x):
        cert.extend([g] * k)
    return tuple(sorted(cert, key=lambda g: (dot(grading, g), g)))


def minimal_generators(s: AffineSemigroup) -> tuple[Vector, ...]:
    """The irreducible elements among the generators of a pointed
    semigroup: its Hilbert basis."""
    if not s.is_pointed():
        raise StructureError("minimal generators of a non-pointed semigroup")
    return _reduce_to_irreducible(s.generators, s.grading())


def saturate(s: AffineSemigroup) -> AffineSemigroup:
    """The semigroup Cone(s) intersected with Z^d, with its Hilbert basis
    as generators. Contains s; idempotent."""
    if not s.is_pointed():
        raise StructureError("saturation of a non-pointed semigroup")
    basis = hilbert_basis_saturated(s.cone())
    out = AffineSemigroup(s.ambient_rank, basis, pointed=True, saturated=True)
    out._hilbert = basis
    return out


def product_with_free(s: AffineSemigroup, r: int) -> AffineSemigroup:
    """The semigroup s x N^r inside Z^(d+r): old generators padded with
    zeros plus the r new unit vectors."""
    r = int(r)
    if r < 0:
        raise ValueError("free rank must be nonnegative")
    if r == 0:
        return s
    d = s.ambient_rank
    zeros = (0,) * r
    gens = [g + zeros for g in s.generators]
    for i in range(r):
        e = [0] * (d + r)
        e[d + i] = 1
        gens.append(tuple(e))
    return AffineSemigroup(
        d + r, gens, pointed=s._pointed, saturated=s._saturated
    )
