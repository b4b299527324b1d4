"""Unimodular isomorphism of pointed affine semigroups.

Two pointed full-rank semigroups are isomorphic iff some lattice
automorphism maps one Hilbert basis bijectively onto the other; for
saturated semigroups this coincides with cone isomorphism. The search
fixes d independent elements of the source basis and solves for the matrix
sending them to each ordered d-tuple of the target basis, so it is
complete at desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from . import intlin
from .errors import DimensionError
from .intlin import Matrix, Vector
from .semigroups import AffineSemigroup


@dataclass(frozen=True)
class IsoWitness:
    """A unimodular matrix mapping the source lattice onto the target
    lattice, carrying the source Hilbert basis onto the target one."""

    matrix: Matrix

    def apply_vector(self, v: Vector) -> Vector:
        return intlin.mat_vec(self.matrix, v)

    def inverse(self) -> "IsoWitness":
        adj, d = intlin.adjugate(self.matrix)
        if d not in (1, -1):
            raise ValueError("witness matrix is not unimodular")
        inv = tuple(tuple(x * d for x in row) for row in adj) if d == -1 else adj
        return IsoWitness(matrix=inv)


def verify_witness(
    w: IsoWitness, source: AffineSemigroup, target: AffineSemigroup
) -> bool:
    """True iff |det| = 1 and the matrix maps the source Hilbert basis onto
    the target Hilbert basis as sets."""
    d = source.ambient_rank
    if target.ambient_rank != d or intlin.shape(w.matrix) != (d, d):
        raise DimensionError("witness/semigroup dimensions disagree")
    if not intlin.is_unimodular(w.matrix):
        return False
    image = {w.apply_vector(h) for h in source.hilbert_basis()}
    return image == set(target.hilbert_basis())


def _det_profile(basis, d):
    """For each basis element, how many d-subsets through it have nonzero
    determinant. Invariant under lattice automorphisms."""
    basis = list(basis)
    counts = [0] * len(basis)
    for subset in itertools.combinations(range(len(basis)), d):
        m = intlin.columns([basis[i] for i in subset])
        if intlin.det(m) != 0:
            for i in subset:
                counts[i] += 1
    return sorted(counts)


def find_iso(
    source: AffineSemigroup, target: AffineSemigroup
) -> Optional[IsoWitness]:
    """First unimodular witness mapping source onto target, or None.

    Enumeration is lexicographic over ordered index tuples of the target
    basis, so the returned witness is deterministic. Cheap isomorphism
    invariants (basis cardinality, extreme ray count, nonzero-determinant
    profile) prune hopeless pairs before the tuple search.
    """
    if source.ambient_rank != target.ambient_rank:
        raise DimensionError("semigroups live in different ranks")
    d = source.ambient_rank
    hs = source.hilbert_basis()
    ht = target.hilbert_basis()
    if len(hs) != len(ht):
        return None
    if len(source.cone().primitive_rays()) != len(target.cone().primitive_rays()):
        return None
    if _det_profile(hs, d) != _det_profile(ht, d):
        return None

    src_tuple = None
    for subset in itertools.combinations(range(len(hs)), d):
        m = intlin.columns([hs[i] for i in subset])
        if intlin.det(m) != 0:
            src_tuple = subset
            break
    if src_tuple is None:
        return None

    ms = intlin.columns([hs[i] for i in src_tuple])
    adj, dm = intlin.adjugate(ms)
    source_set = list(hs)
    target_set = set(ht)
    for tup in itertools.permutations(range(len(ht)), d):
        mt = intlin.columns([ht[i] for i in tup])
        num = intlin.mat_mul(mt, adj)
        if any(x % dm for row in num for x in row):
            continue
        u = tuple(tuple(x // dm for x in row) for row in num)
        if not intlin.is_unimodular(u):
            continue
        if {intlin.mat_vec(u, h) for h in source_set} == target_set:
            return IsoWitness(matrix=u)
    return None


def apply_witness(w: IsoWitness, s: AffineSemigroup) -> AffineSemigroup:
    """The image semigroup, generated by the images of the generators.
    Pointedness and saturation are preserved by lattice automorphisms."""
    if intlin.shape(w.matrix)[1] != s.ambient_rank:
        raise DimensionError("witness/semigroup dimensions disagree")
    gens = [w.apply_vector(g) for g in s.generators]
    return AffineSemigroup(
        s.ambient_rank, gens, pointed=s._pointed, saturated=s._saturated
    )
