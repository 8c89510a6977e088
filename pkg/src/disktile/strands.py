"""Strand diagrams of a tiling.

Each boundary vertex launches one strand. A strand walks clockwise around
the tiling, hugging the black tiles: from its current dart it turns
clockwise through the vertex rotation; black corners are interior to a
tile and get skipped, a white corner is crossed (the strand cuts through
that face corner into the next tile gap), and the outer face ends the
walk at the vertex where it sits.

Every white corner is crossed exactly twice over all strands, once
outbound and once inbound. White corners never reached by a boundary
strand lie on closed strands; an internal vertex completely surrounded by
tiles also carries a tiny closed strand around it. Closed strands mean
the tiling is degenerate in a way no boundary data can see.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .diskmap import BLACK, OUTER, WHITE
from .errors import NonIntegralRank


@dataclass
class Trip:
    """One strand. `steps` lists the crossed white corners in order as
    (dart, outbound) marks; a corner is crossed outbound by the strand
    leaving through it and inbound by the strand arriving at it. Closed
    strands have source and target None; a closed strand circling an
    all-black internal vertex has no steps and records the vertex."""

    source: object
    target: object
    steps: list = field(default_factory=list)
    cycle_vertex: object = None

    @property
    def closed(self):
        return self.source is None


def scott(t):
    """All strands of the tiling: boundary strands for 1..n in order, then
    closed strands (from their smallest white corner dart), then all-black
    internal vertices."""
    dm = t.map
    trips = []
    out_marked = set()
    in_marked = set()

    def cross(x, steps):
        steps.append((x, True))
        out_marked.add(x)
        y = dm.phi(x)
        steps.append((y, False))
        in_marked.add(y)
        return y

    for i in range(1, t.n + 1):
        steps = []
        x = dm.w_dart[i]
        while True:
            x = dm.nxt[x]
            col = dm.color(x)
            if col == BLACK:
                continue
            if col == OUTER:
                trips.append(Trip(source=i, target=dm.origin[x], steps=steps))
                break
            x = cross(x, steps)

    whites = [d for d in range(dm.dart_count) if dm.color(d) == WHITE]
    for d in sorted(whites):
        if d in out_marked:
            continue
        steps = []
        x = cross(d, steps)
        while True:
            x = dm.nxt[x]
            col = dm.color(x)
            if col == BLACK:
                continue
            if col == OUTER:
                raise AssertionError("closed strand reached the outer face")
            if x == d:
                break
            x = cross(x, steps)
        trips.append(Trip(source=None, target=None, steps=steps))

    for v in t.internal:
        if all(dm.color(d) != WHITE for d in dm.vertex_darts[v]):
            trips.append(Trip(source=None, target=None, steps=[], cycle_vertex=v))

    if out_marked != set(whites) or in_marked != set(whites):
        raise AssertionError("strands do not cross every white corner twice")
    return trips


@dataclass(frozen=True)
class DecoratedPermutation:
    n: int
    pi: tuple          # pi[i-1] = image of i
    col: tuple         # col[i-1] = +1/-1 at fixed points, 0 elsewhere

    def key(self):
        return (self.n, self.pi, self.col)

    def __str__(self):
        parts = []
        for i in range(1, self.n + 1):
            p = self.pi[i - 1]
            if p == i:
                parts.append(f"{i}{'+' if self.col[i - 1] > 0 else '-'}")
            else:
                parts.append(str(p))
        return "(" + ",".join(parts) + ")"


def _sector_angles(dm):
    """Interior angle of every corner sector, in units of pi, for a drawing
    where the darts at each vertex are spread evenly. The sector of dart d
    spans from d clockwise to the next dart, so each dart owns one sector
    and the angles at a vertex sum to a full turn."""
    return {
        d: Fraction(2, len(dm.vertex_darts[dm.origin[d]]))
        for d in range(dm.dart_count)
    }


def _edge_bends(t, ang):
    """Net bend of each curve, in units of pi, measured along its forward
    dart. The bends are pinned down by requiring every interior face
    circuit (sides plus corner turns, walked with the face on the left) to
    close up to one counterclockwise turn; any solution of that linear
    system comes from a genuine drawing, and the strand turning computed
    from it does not depend on the choice, so free curves are kept
    straight."""
    dm = t.map
    ncur = len(t.curves)
    mat = []
    for f, orb in enumerate(dm.faces):
        if f == dm.outer_face:
            continue
        row = [Fraction(0)] * (ncur + 1)
        row[ncur] = Fraction(2)
        for d in orb:
            row[ncur] -= 1 - ang[d]
            b = dm.nxt[d]
            ci = t.dart_curve[b]
            row[ci] += 1 if b == t.curves[ci][0] else -1
        mat.append(row)
    bends = [Fraction(0)] * ncur
    r = 0
    piv = []
    for c in range(ncur):
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                fac = mat[i][c]
                mat[i] = [a - fac * b for a, b in zip(mat[i], mat[r])]
        piv.append((r, c))
        r += 1
        if r == len(mat):
            break
    for i in range(r, len(mat)):
        if mat[i][ncur] != 0:
            raise AssertionError("face circuits admit no consistent bends")
    for rr, c in piv:
        bends[c] = mat[rr][ncur]
    return bends


def _strand_turning(t, i, ang, bends):
    """Total turning of the closed-up strand launched at boundary vertex i,
    in units of pi, so a plain clockwise circle gives -2. The strand is a
    chain of clockwise pivot sweeps around vertices joined by chords that
    cut across a white face alongside one of its sides; the loose ends at
    vertex i are joined across its boundary gap. Each pivot contributes its
    swept angle less a half turn for the chord ends, each chord the bend of
    the side it follows. A strand that never leaves its vertex is a bare
    clockwise circle."""
    dm = t.map
    pivots = []
    chords = []
    sweep = Fraction(0)
    x = dm.w_dart[i]
    while True:
        x = dm.nxt[x]
        sweep += ang[x]
        c = dm.color(x)
        if c == BLACK:
            continue
        if c == OUTER:
            pivots.append(sweep)
            break
        b = dm.nxt[x]
        ci = t.dart_curve[b]
        chords.append((ci, 1 if b == t.curves[ci][0] else -1))
        pivots.append(sweep)
        x = dm.phi(x)
        sweep = ang[x]
    if not chords:
        return Fraction(-2)
    tau = -(pivots[-1] + pivots[0] - 1)
    for a in pivots[1:-1]:
        tau -= a - 1
    for ci, sign in chords:
        tau += sign * bends[ci]
    return tau


def decorated_permutation(t, trips=None):
    """Boundary permutation i -> exit of strand i. A fixed point is colored
    +1 when its strand, closed up across the boundary gap at its vertex, is
    a clockwise loop (it wraps black material hanging off the vertex), and
    -1 otherwise (it pokes into white area and comes back, or degenerates).
    The orientation is read off the exact total turning of the loop."""
    if trips is None:
        trips = scott(t)
    pi = []
    col = []
    ang = None
    bends = None
    for i in range(1, t.n + 1):
        tr = trips[i - 1]
        pi.append(tr.target)
        if tr.target != i:
            col.append(0)
        else:
            if ang is None:
                ang = _sector_angles(t.map)
                bends = _edge_bends(t, ang)
            tau = _strand_turning(t, i, ang, bends)
            col.append(1 if tau <= -2 else -1)
    if sorted(pi) != list(range(1, t.n + 1)):
        raise AssertionError(f"strand exits {pi} are not a permutation")
    return DecoratedPermutation(n=t.n, pi=tuple(pi), col=tuple(col))


def rank_type(t, trips=None):
    """The type (k, n) of the tiling, with k read off the decorated
    permutation: each strand contributes its clockwise winding."""
    dp = decorated_permutation(t, trips)
    n = t.n
    total = 0
    for i in range(1, n + 1):
        p = dp.pi[i - 1]
        if p == i:
            total += n if dp.col[i - 1] > 0 else 0
        else:
            total += (p - i) % n
    if total % n != 0:
        raise NonIntegralRank(
            f"strand windings sum to {total}, not a multiple of {n}"
        )
    return total // n, n


def is_postnikov(t, trips=None):
    """Check the strand diagram is tight: no closed strands, no strand
    crossing itself, and any two strands crossing twice do so head-on
    (they traverse the two shared corners in opposite orders). Returns
    (ok, witness); the witness names the first violation found."""
    if trips is None:
        trips = scott(t)
    for tr in trips:
        if tr.closed:
            if tr.cycle_vertex is not None:
                return False, {
                    "kind": "closed_strand",
                    "vertex": tr.cycle_vertex,
                }
            return False, {
                "kind": "closed_strand",
                "corners": [d for d, _ in tr.steps],
            }
    for tr in trips:
        seen = {}
        for pos, (d, _) in enumerate(tr.steps):
            if d in seen:
                return False, {
                    "kind": "self_crossing",
                    "strand": tr.source,
                    "corner": d,
                }
            seen[d] = pos
    boundary = trips[: t.n]
    positions = []
    for tr in boundary:
        positions.append({d: pos for pos, (d, _) in enumerate(tr.steps)})
    for i in range(t.n):
        for j in range(i + 1, t.n):
            shared = sorted(
                set(positions[i]) & set(positions[j]),
                key=lambda d: positions[i][d],
            )
            for a in range(len(shared)):
                for b in range(a + 1, len(shared)):
                    d, e = shared[a], shared[b]
                    if (positions[j][d] < positions[j][e]):
                        return False, {
                            "kind": "bad_double_crossing",
                            "strands": (boundary[i].source, boundary[j].source),
                            "corners": (d, e),
                        }
    return True, None


def is_reduced(t, trips=None):
    """A tiling is reduced exactly when its strand diagram is tight."""
    ok, _ = is_postnikov(t, trips)
    return ok
