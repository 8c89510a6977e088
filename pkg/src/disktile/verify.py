"""Independent checks: a brute-force matcher, exact three-term relation
tests for evaluated coordinate vectors, and a numeric Jacobian rank that
witnesses cell dimension. Floating point is confined to this module;
everything else in the package stays exact."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy

from .errors import TooLarge


def brute_force_matchings(t):
    """Scan every angle subset of size |F| for the matching conditions.
    Deliberately naive so it can cross-check the backtracking enumerator;
    refuses tilings with more than 24 angles."""
    if t.angle_count > 24:
        raise TooLarge(f"{t.angle_count} angles is past the brute-force bound")
    out = []
    internal = set(t.internal)
    for combo in combinations(t.angles, t.face_count):
        faces = {a.face_no for a in combo}
        if len(faces) != t.face_count:
            continue
        verts = {a.vertex for a in combo}
        if len(verts) != len(combo):
            continue
        if not internal <= verts:
            continue
        out.append(combo)
    return out


def plucker_relations_ok(v, k, n):
    """Check every three-term relation over exact rationals: for each
    (k-2)-subset S and a<b<c<d outside S,
    v[Sac]*v[Sbd] == v[Sab]*v[Scd] + v[Sad]*v[Sbc]."""
    vals = {frozenset(I): Fraction(x) for I, x in v.items()}
    if k < 2 or n < 4:
        return True

    def get(S, pair):
        return vals[S | frozenset(pair)]

    ground = range(1, n + 1)
    for S in combinations(ground, k - 2):
        S = frozenset(S)
        rest = [x for x in ground if x not in S]
        for a, b, c, d in combinations(rest, 4):
            lhs = get(S, (a, c)) * get(S, (b, d))
            rhs = get(S, (a, b)) * get(S, (c, d)) + get(S, (a, d)) * get(S, (b, c))
            if lhs != rhs:
                return False
    return True


def poly_gradient(p, point, var):
    """Exact partial derivative of a multilinear polynomial at a point."""
    total = Fraction(0)
    for mono, coeff in p.monos.items():
        if var not in mono:
            continue
        term = Fraction(coeff)
        for w in mono:
            if w != var:
                term *= Fraction(point[w])
        total += term
    return total


def jacobian_matrix(p, point):
    """Jacobian of the coordinate map at a point: one row per subset in
    colex order, one column per angle variable in sorted order."""
    variables = sorted(p.variables())
    rows = []
    for I in p.subsets():
        poly = p.table[I]
        rows.append([float(poly_gradient(poly, point, x)) for x in variables])
    return numpy.array(rows, dtype=float)


def jacobian_rank(p, point, tol=1e-9):
    """Numeric rank of the Jacobian at a strictly positive point. The cell
    dimension estimate is this rank minus one, the lost direction being
    the projective rescaling (legitimate because all coordinates share
    the same degree)."""
    jac = jacobian_matrix(p, point)
    if jac.size == 0:
        return 0
    sing = numpy.linalg.svd(jac, compute_uv=False)
    if sing.size == 0 or sing[0] == 0:
        return 0
    return int(numpy.sum(sing > tol * sing[0]))
