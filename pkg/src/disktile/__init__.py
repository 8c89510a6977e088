"""Bicolored disk tilings, their moves, strand diagrams, and the exact
parametrisations of the positroid cells they cut out."""

from .errors import *  # noqa: F401,F403
from .tiling import (  # noqa: F401
    Angle,
    RemainderTiling,
    SubtilingSplit,
    Tiling,
    angles,
    build_tiling,
    degenerate,
    digon,
    flip,
    hourglass,
    reduce,
    split_subtiling,
)
from .strands import (  # noqa: F401
    DecoratedPermutation,
    Trip,
    decorated_permutation,
    is_postnikov,
    is_reduced,
    rank_type,
    scott,
)
from .positroid import (  # noqa: F401
    Parametrisation,
    Poly,
    boundary,
    cell_leq,
    composed_parametrisation,
    enumerate_matchings,
    evaluate,
    is_essential,
    parametrisation,
    positroid_set,
    relative_parametrisation,
    restrict_zero,
    same_cell,
)
from .plabic import (  # noqa: F401
    PerfectOrientation,
    PlabicGraph,
    apm_to_orientation,
    matching_to_apm,
    stellar,
)
from .verify import (  # noqa: F401
    brute_force_matchings,
    jacobian_rank,
    plucker_relations_ok,
)
from .render import RenderOptions, render_svg  # noqa: F401

__version__ = "0.1.0"
