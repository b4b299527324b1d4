"""Bundled reference varieties, witnesses, and relations.

Three singular normal toric fourfolds whose (normalized) Nash blowup
contains a chart isomorphic to the variety itself: one for characteristic
zero (which also settles every characteristic other than 2 and 3), one for
characteristic 2, and one for characteristic 3 where the cycle closes after
two iterations. The verify module replays all of their invariants.
"""

from __future__ import annotations


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


# --- characteristic zero ---------------------------------------------------

CHAR0_CONE_RAYS = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (2, 3, -2, -1),
    (1, 3, -1, -1),
)

CHAR0_EXTRA_HILBERT = (1, 2, -1, 0)

CHAR0_HILBERT_BASIS = CHAR0_CONE_RAYS + (CHAR0_EXTRA_HILBERT,)

# the fixed chart subset {h1, h2, h3, h5} (columns 1, 2, 3, 5 of the ray matrix)
CHAR0_SUBSET = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (2, 3, -2, -1),
)

_H = CHAR0_HILBERT_BASIS
_h1, _h2, _h3, _h4, _h5, _h6, _h7 = _H

# the twelve chart determinants: (pivot, replacement, value), where the
# determinant is taken with the replacement first and the remaining subset
# columns following in subset order
CHAR0_DET_TABLE = (
    (_h1, _h4, -2), (_h1, _h6, 1), (_h1, _h7, -1),
    (_h2, _h4, 3), (_h2, _h6, 0), (_h2, _h7, 2),
    (_h3, _h4, 2), (_h3, _h6, -1), (_h3, _h7, 1),
    (_h5, _h4, -1), (_h5, _h6, 1), (_h5, _h7, 0),
)

CHAR0_GAMMA = (
    (_h1, (_sub(_h4, _h1), _sub(_h6, _h1), _sub(_h7, _h1))),
    (_h2, (_sub(_h4, _h2), _sub(_h7, _h2))),
    (_h3, (_sub(_h4, _h3), _sub(_h6, _h3), _sub(_h7, _h3))),
    (_h5, (_sub(_h4, _h5), _sub(_h6, _h5))),
)

CHAR0_CHART_MINIMAL_GENERATORS = (
    _h1,
    _sub(_h4, _h2), _sub(_h7, _h2),
    _sub(_h4, _h3), _sub(_h6, _h3),
    _sub(_h4, _h5), _sub(_h6, _h5),
)

CHAR0_WITNESS = (
    (-1, 0, -2, 1),
    (0, -1, -3, 0),
    (1, 0, 2, 0),
    (0, 1, 2, 0),
)

CHAR0_WITNESS_IMAGES = (
    (_h1, _sub(_h6, _h5)),
    (_h2, _sub(_h4, _h2)),
    (_h3, _sub(_h4, _h5)),
    (_h4, _h1),
    (_h5, _sub(_h6, _h3)),
    (_h6, _sub(_h4, _h3)),
    (_h7, _sub(_h7, _h2)),
)

# generators of the toric ideal of the embedding in 7-space, as pairs of
# monomials written multiplicatively over the Hilbert basis
TORIC_IDEAL_RELATIONS = (
    ((_h1, _h6), (_h3, _h5)),
    ((_h4, _h6), (_h2, _h7)),
    ((_h7, _h7), (_h2, _h4, _h5)),
    ((_h6, _h7), (_h2, _h2, _h5)),
    ((_h3, _h7), (_h1, _h2, _h2)),
    ((_h3, _h4, _h5), (_h1, _h2, _h7)),
)

NEGATIVE_RELATION = ((_h1, _h2), (_h3, _h4))


# --- characteristic 2 --------------------------------------------------------

CHAR2_CONE_RAYS = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (1, 1, 2, 0),
    (0, 0, 0, 1),
    (0, 2, 2, 1),
)

CHAR2_EXTRA_HILBERT = ((1, 1, 1, 0), (0, 1, 1, 1))

CHAR2_HILBERT_BASIS = CHAR2_CONE_RAYS + CHAR2_EXTRA_HILBERT

_g1, _g2, _g3, _g4, _g5, _g6, _g7 = CHAR2_HILBERT_BASIS

CHAR2_SUBSET = (_g1, _g2, _g4, _g7)

CHAR2_GAMMA = (
    (_g1, (_sub(_g3, _g1), _sub(_g6, _g1))),
    (_g2, (_sub(_g3, _g2),)),
    (_g4, (_sub(_g5, _g4), _sub(_g6, _g4))),
    (_g7, (_sub(_g6, _g7),)),
)

# generates a semigroup R with S_A <= R <= saturation(S_A); the last vector
# is the one picked up by saturating
CHAR2_SATURATED_BASIS = (
    _g2,
    _g4,
    _sub(_g3, _g2),
    _sub(_g3, _g1),
    _sub(_g6, _g1),
    _sub(_g6, _g7),
    (1, 0, 1, 0),
)

CHAR2_SATURATION_PROBE = (1, 0, 1, 0)

CHAR2_WITNESS = (
    (1, 0, 0, 0),
    (0, 0, 0, 1),
    (2, 0, -1, 2),
    (0, 1, -1, 0),
)

CHAR2_WITNESS_IMAGES = (
    (_g1, _sub(_g3, _g2)),
    (_g2, _g4),
    (_g3, _sub(_g6, _g7)),
    (_g4, _sub(_g3, _g1)),
    (_g5, _g2),
    (_g6, (1, 0, 1, 0)),
    (_g7, _sub(_g6, _g1)),
)


# --- characteristic 3 --------------------------------------------------------

CHAR3_CONE_RAYS = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (1, 2, 3, 0),
    (0, 0, 0, 1),
    (0, 3, 3, 1),
)

CHAR3_HILBERT_BASIS = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (1, 2, 3, 0),
    (0, 0, 0, 1),
    (0, 3, 3, 1),
    (0, 2, 2, 1),
    (1, 1, 1, 0),
    (1, 2, 2, 0),
    (0, 1, 1, 1),
)

CHAR3_SUBSET_STEP1 = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 0, 1),
    (0, 1, 1, 1),
)

CHAR3_STEP1_CONE_RAYS = (
    (0, 0, 0, 1),
    (0, 1, 0, 0),
    (0, 2, 3, 0),
    (1, 0, 0, -1),
    (1, 1, 3, 0),
)

CHAR3_STEP1_HILBERT_BASIS = (
    (0, 0, 0, 1),
    (0, 1, 0, 0),
    (0, 2, 3, 0),
    (1, 0, 0, -1),
    (1, 1, 3, 0),
    (0, 1, 1, 0),
    (1, 1, 2, 0),
)

CHAR3_SUBSET_STEP2 = (
    (0, 0, 0, 1),
    (0, 1, 0, 0),
    (1, 0, 0, -1),
    (0, 1, 1, 0),
)

CHAR3_STEP2_CONE_RAYS = (
    (0, 0, 0, 1),
    (0, 1, 0, 0),
    (0, 1, 3, 0),
    (1, 0, 0, -1),
    (1, 0, 3, 0),
)

CHAR3_WITNESS = (
    (1, 1, -1, 0),
    (0, 0, 0, 1),
    (3, 0, -1, 3),
    (0, -1, 1, 0),
)


def default_data() -> dict:
    """Snapshot of every constant above, keyed by name. verify_paper reads
    from such a dict so tests can replay it with perturbed values."""
    return {
        name: value
        for name, value in globals().items()
        if name.isupper() and not name.startswith("_")
    }
