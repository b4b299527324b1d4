"""Nash blowup charts of affine toric varieties.

Charts are indexed by d-element subsets A of the Hilbert basis whose column
matrix has det != 0 in the base characteristic. Each pivot h in A
contributes the difference vectors g - h for the admissible g outside A;
together with the Hilbert basis these generate the chart semigroup. Charts
whose semigroup is not pointed are computed and flagged but excluded from
the covering set; equivalently, a chart survives iff the subset sum is a
vertex of the Nash polyhedron, which an optional exact convex-hull check
can confirm.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import intlin
from .cones import Cone
from .errors import StructureError
from .exactlp import in_shifted_hull
from .intlin import Vector, validate_characteristic
from .semigroups import AffineSemigroup, canonical_sort, saturate


def _subset_matrix(basis, indices):
    return intlin.columns([basis[i] for i in indices])


def valid_subsets(basis: Sequence[Vector], char: int) -> list[tuple[int, ...]]:
    """All d-element index subsets of the basis with det_p != 0, in
    lexicographic index order."""
    p = validate_characteristic(char)
    basis = [tuple(v) for v in basis]
    d = len(basis[0])
    if intlin.rank(intlin.matrix(basis)) != d:
        raise StructureError("basis does not span the lattice")
    out = []
    for subset in itertools.combinations(range(len(basis)), d):
        if intlin.det_p(_subset_matrix(basis, subset), p) != 0:
            out.append(subset)
    return out


def gamma_set(
    basis: Sequence[Vector],
    subset: Sequence[int],
    pivot: int,
    char: int,
) -> tuple[Vector, ...]:
    """Difference vectors g - basis[pivot] for g outside the subset such
    that replacing the pivot column by g keeps det_p nonzero."""
    p = validate_characteristic(char)
    basis = [tuple(v) for v in basis]
    subset = tuple(subset)
    if pivot not in subset:
        raise ValueError(f"pivot {pivot} is not in subset {subset}")
    pos = subset.index(pivot)
    out = []
    for g in range(len(basis)):
        if g in subset:
            continue
        cols = list(subset)
        cols[pos] = g
        if intlin.det_p(_subset_matrix(basis, cols), p) != 0:
            out.append(intlin.vec_sub(basis[g], basis[pivot]))
    return tuple(sorted(out))


@dataclass(eq=False)
class ChartSpec:
    """One Nash blowup chart: the subset A, its gamma sets, the chart
    generators, and the chart semigroup with its pointedness flag."""

    base: AffineSemigroup
    subset: tuple[int, ...]
    char: int
    gamma_sets: tuple[tuple[int, tuple[Vector, ...]], ...]
    generators: tuple[Vector, ...]
    semigroup: AffineSemigroup
    pointed: bool

    def gamma(self, pivot: int) -> tuple[Vector, ...]:
        for i, g in self.gamma_sets:
            if i == pivot:
                return g
        raise ValueError(f"pivot {pivot} is not in subset {self.subset}")

    def vertex(self) -> Vector:
        basis = self.base.hilbert_basis()
        total = [0] * self.base.ambient_rank
        for i in self.subset:
            for k, x in enumerate(basis[i]):
                total[k] += x
        return tuple(total)


def build_chart(s: AffineSemigroup, subset: Sequence[int], char: int) -> ChartSpec:
    """Chart data for one valid subset. The chart semigroup is generated by
    the Hilbert basis together with all gamma sets; pointedness is evaluated
    and stored, never silently enforced."""
    p = validate_characteristic(char)
    basis = s.hilbert_basis()
    subset = tuple(subset)
    if intlin.det_p(_subset_matrix(basis, subset), p) == 0:
        raise StructureError(f"subset {subset} has det_p = 0, no chart")
    gammas = tuple((i, gamma_set(basis, subset, i, p)) for i in subset)
    gens = set(basis)
    for _, gvecs in gammas:
        gens.update(gvecs)
    chart_sg = AffineSemigroup(s.ambient_rank, sorted(gens))
    pointed = chart_sg.is_pointed()
    ordered = (
        canonical_sort(gens, chart_sg.grading()) if pointed else tuple(sorted(gens))
    )
    chart_sg = AffineSemigroup(
        s.ambient_rank, ordered, pointed=pointed
    )
    return ChartSpec(
        base=s,
        subset=subset,
        char=p,
        gamma_sets=gammas,
        generators=ordered,
        semigroup=chart_sg,
        pointed=pointed,
    )


def _require_base(s: AffineSemigroup):
    if not s.is_pointed():
        raise StructureError("Nash charts need a pointed semigroup")


def chart_specs(s: AffineSemigroup, char: int) -> list[ChartSpec]:
    """Charts for every valid subset, pointed or not, in subset order."""
    _require_base(s)
    return [
        build_chart(s, subset, char)
        for subset in valid_subsets(s.hilbert_basis(), char)
    ]


def nash_charts(s: AffineSemigroup, char: int) -> list[ChartSpec]:
    """The covering charts of the Nash blowup: valid subsets whose chart
    semigroup is pointed."""
    return [chart for chart in chart_specs(s, char) if chart.pointed]


def normalized_nash_charts(s: AffineSemigroup, char: int) -> list[AffineSemigroup]:
    """Saturations of the pointed chart semigroups, deduplicated (distinct
    subsets may define one vertex and hence one normalized chart)."""
    out: list[AffineSemigroup] = []
    seen = set()
    for chart in nash_charts(s, char):
        sat = saturate(chart.semigroup)
        key = sat.hilbert_basis()
        if key not in seen:
            seen.add(key)
            out.append(sat)
    return out


@dataclass(eq=False)
class NashPolyhedronVertex:
    vertex: Vector
    chart: ChartSpec


def nash_polyhedron_vertices(
    s: AffineSemigroup, char: int, cross_check: bool = False
) -> list[NashPolyhedronVertex]:
    """Vertices of the Nash polyhedron, one per pointed chart sum
    (deduplicated). The polyhedron itself is never materialized: a subset
    sum is a vertex exactly when the chart semigroup is pointed. With
    cross_check=True each kept vertex is verified, by exact rational LP,
    to lie outside the convex hull of the other candidate points shifted
    by the recession cone."""
    charts = chart_specs(s, char)
    sums = [c.vertex() for c in charts]
    out: list[NashPolyhedronVertex] = []
    seen = set()
    for chart, v in zip(charts, sums):
        if not chart.pointed or v in seen:
            continue
        seen.add(v)
        out.append(NashPolyhedronVertex(vertex=v, chart=chart))
    if cross_check:
        cone_gens = s.cone().primitive_rays()
        candidates = sorted(set(sums))
        for nv in out:
            others = [w for w in candidates if w != nv.vertex]
            if in_shifted_hull(nv.vertex, others, cone_gens):
                raise StructureError(
                    f"vertex {nv.vertex} failed the convex hull cross-check"
                )
    return out


def nash_cone_of_vertex(s: AffineSemigroup, char: int, vertex: Vector) -> Cone:
    """Cone over (Nash polyhedron - vertex): generated by the shifted
    candidate points together with the recession cone generators."""
    charts = chart_specs(s, char)
    gens = [intlin.vec_sub(c.vertex(), vertex) for c in charts]
    gens.extend(s.cone().primitive_rays())
    return Cone(s.ambient_rank, gens)
