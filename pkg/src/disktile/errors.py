"""Error taxonomy for bicolored disk tilings.

Every failure mode that callers are expected to branch on gets its own
class; the CLI prints the class name, so names are part of the contract.
"""


class DiskTileError(Exception):
    """Base class for all structured errors raised by this package."""


# --- dart table / map level ---

class NotInvolution(DiskTileError):
    """twin is not a fixed-point-free involution on the dart set."""


class NotPermutation(DiskTileError):
    """next_at_vertex is not a permutation compatible with dart origins."""


class EulerViolation(DiskTileError):
    """V - E + F != 2; the map does not embed in the disk/sphere."""


class BoundaryOrderViolation(DiskTileError):
    """Boundary vertices do not appear as 1..n clockwise along the outer face."""


# --- tiling construction ---

class RepeatedVertexInTile(DiskTileError):
    """A tile repeats a vertex other than a boundary vertex twice consecutively."""


class BoundarySegmentUncovered(DiskTileError):
    """No tile provides a covering curve for some boundary segment."""


class BoundarySegmentDoubleCovered(DiskTileError):
    """Two or more candidate covering curves for a segment and no rotations given."""


class AmbiguousEmbedding(DiskTileError):
    """Tile data admits more than one embedding and no rotations were given."""


class InvalidRotations(DiskTileError):
    """Rotation data is inconsistent with the tile list."""


# --- moves ---

class SiteNotApplicable(DiskTileError):
    """The requested equivalence/degeneration site does not have the required shape."""


class BothBoundary(DiskTileError):
    """Digon contraction would merge two boundary vertices."""


class NotFlippable(DiskTileError):
    """The edge is not an arc between two distinct triangular white faces."""


class NotOneGon(DiskTileError):
    """Reduction target is not a black 1-gon tile."""


class NeighborNotWhite(DiskTileError):
    """The face surrounding the 1-gon is not a white face."""


class EssentialAngle(DiskTileError):
    """Degeneration at an essential angle (appears in every matching)."""


class SameStrand(DiskTileError):
    """The two trips through the angle are not two distinct boundary strands."""


class NotLastCrossing(DiskTileError):
    """The angle is not the last crossing of its two strands along either strand."""


class NotASubdiskCycle(DiskTileError):
    """The vertex list does not bound a subdisk along existing curves."""


# --- strands / positroid ---

class NonIntegralRank(DiskTileError):
    """Decorated permutation statistics do not sum to a multiple of n."""


class InvalidMatching(DiskTileError):
    """Angle set is not a matching of the tiling."""


class TypeMismatch(DiskTileError):
    """Operands live in different Grassmannians (k, n) differ."""


class AllZeroVector(DiskTileError):
    """Evaluation produced the zero vector; not a projective point."""


class MissingAssignment(DiskTileError):
    """Evaluation point omits some angle variable."""


class TooLarge(DiskTileError):
    """Brute-force verification refused; instance exceeds the size cap."""
