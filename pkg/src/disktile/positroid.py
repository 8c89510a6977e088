"""Matchings of a tiling and the exact Plucker data they generate.

A matching picks one angle (white corner) per white face so that no
vertex carries two picks and every internal vertex carries exactly one.
Its boundary is the set of boundary vertices left unpicked; that set
always has the same size k, and summing a monomial per matching, graded
by boundary, fills a table of Plucker coordinates indexed by k-subsets.
The table is kept exact: integer coefficients on squarefree monomials in
the angle variables, rational arithmetic for evaluation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .errors import (
    AllZeroVector,
    InvalidMatching,
    MissingAssignment,
    TypeMismatch,
)


class Poly:
    """Multilinear polynomial: map from frozensets of angle variables to
    integer coefficients. Sums of matchings are always multilinear since a
    matching never repeats an angle."""

    __slots__ = ("monos",)

    def __init__(self, monos=None):
        self.monos = {}
        if monos:
            for mono, coeff in monos.items():
                if coeff:
                    self.monos[frozenset(mono)] = coeff

    def add_monomial(self, variables, coeff=1):
        vs = list(variables)
        mono = frozenset(vs)
        if len(mono) != len(vs):
            raise AssertionError(f"repeated variable in monomial {vs}")
        new = self.monos.get(mono, 0) + coeff
        if new:
            self.monos[mono] = new
        else:
            self.monos.pop(mono, None)

    @property
    def is_zero(self):
        return not self.monos

    def degree(self):
        degs = {len(m) for m in self.monos}
        if len(degs) > 1:
            raise AssertionError(f"inhomogeneous polynomial, degrees {degs}")
        return degs.pop() if degs else None

    def variables(self):
        out = set()
        for m in self.monos:
            out |= m
        return out

    def __add__(self, other):
        out = Poly(self.monos)
        for mono, coeff in other.monos.items():
            out.add_monomial(mono, coeff)
        return out

    def __mul__(self, other):
        out = Poly()
        for m1, c1 in self.monos.items():
            for m2, c2 in other.monos.items():
                if m1 & m2:
                    raise AssertionError(
                        f"product would square variables {sorted(m1 & m2)}"
                    )
                out.add_monomial(m1 | m2, c1 * c2)
        return out

    def restrict_zero(self, var):
        return Poly({m: c for m, c in self.monos.items() if var not in m})

    def rename(self, mapping):
        out = Poly()
        for mono, coeff in self.monos.items():
            out.add_monomial([mapping.get(v, v) for v in mono], coeff)
        return out

    def evaluate(self, assignment):
        total = Fraction(0)
        for mono, coeff in self.monos.items():
            term = Fraction(coeff)
            for var in mono:
                if var not in assignment:
                    raise MissingAssignment(f"no value for angle {var}")
                term *= Fraction(assignment[var])
            total += term
        return total

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.monos == other.monos

    def __hash__(self):
        return hash(frozenset(self.monos.items()))

    def text(self):
        if not self.monos:
            return "0"
        terms = []
        for mono in sorted(self.monos, key=lambda m: sorted(m)):
            coeff = self.monos[mono]
            body = "*".join(sorted(mono)) or "1"
            terms.append(body if coeff == 1 else f"{coeff}*{body}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Poly({self.text()})"


def monomial(variables, coeff=1):
    p = Poly()
    p.add_monomial(variables, coeff)
    return p


# ---------------------------------------------------------------------------
# matchings
# ---------------------------------------------------------------------------


def _angles_by_face(t):
    return t.face_angles()


def _match_search(face_rows, required, first_only=False, forbid=None):
    """Backtracking over faces in order, picking an angle per face with no
    vertex reused and every required vertex covered. Prunes when fewer
    faces remain than required vertices are still uncovered."""
    results = []
    chosen = []
    used = set()
    need = set(required)
    nfaces = len(face_rows)

    def rec(i):
        if len(need) > nfaces - i:
            return False
        if i == nfaces:
            results.append(tuple(chosen))
            return first_only
        for a in face_rows[i]:
            if a.vertex in used or a.id == forbid:
                continue
            used.add(a.vertex)
            chosen.append(a)
            hit = a.vertex in need
            if hit:
                need.discard(a.vertex)
            stop = rec(i + 1)
            if hit:
                need.add(a.vertex)
            chosen.pop()
            used.discard(a.vertex)
            if stop:
                return True
        return False

    rec(0)
    return results


def enumerate_matchings(t):
    """All matchings of the tiling, in the canonical order induced by face
    number and the stored angle order within each face. Each matching is a
    tuple of angles, one per white face."""
    return _match_search(_angles_by_face(t), t.internal)


def boundary(t, m):
    """Boundary of a matching: the boundary vertices it leaves unmatched.
    Checks the matching conditions and raises InvalidMatching otherwise."""
    rows = _angles_by_face(t)
    if len(m) != len(rows):
        raise InvalidMatching(
            f"matching has {len(m)} angles for {len(rows)} faces"
        )
    by_id = {a.id: a for a in t.angles}
    seen_faces = set()
    used = set()
    for item in m:
        a = by_id.get(item.id if hasattr(item, "id") else str(item))
        if a is None:
            raise InvalidMatching(f"unknown angle {item!r}")
        if a.face_no in seen_faces:
            raise InvalidMatching(f"face {a.face_no} matched twice")
        seen_faces.add(a.face_no)
        if a.vertex in used:
            raise InvalidMatching(f"vertex {a.vertex!r} matched twice")
        used.add(a.vertex)
    missing = set(t.internal) - used
    if missing:
        raise InvalidMatching(f"internal vertices unmatched: {sorted(missing, key=str)}")
    return frozenset(v for v in range(1, t.n + 1) if v not in used)


# ---------------------------------------------------------------------------
# parametrisation
# ---------------------------------------------------------------------------


class Parametrisation:
    """Exact Plucker table of a tiling: one polynomial per k-subset of the
    boundary, k = vertices minus white faces. Subsets with no matching
    carry the zero polynomial so the table is total."""

    def __init__(self, k, n, table):
        self.k = k
        self.n = n
        self.table = table

    @property
    def type(self):
        return (self.k, self.n)

    def subsets(self):
        """All k-subsets in colex order (compare largest element first)."""
        return sorted(self.table, key=lambda s: sorted(s)[::-1])

    def positroid_set(self):
        return frozenset(I for I, p in self.table.items() if not p.is_zero)

    def restrict_zero(self, var):
        return Parametrisation(
            self.k, self.n,
            {I: p.restrict_zero(var) for I, p in self.table.items()},
        )

    def evaluate(self, assignment):
        values = {I: p.evaluate(assignment) for I, p in self.table.items()}
        if all(v == 0 for v in values.values()):
            raise AllZeroVector("every coordinate evaluates to zero")
        return values

    def variables(self):
        out = set()
        for p in self.table.values():
            out |= p.variables()
        return out

    def text(self):
        lines = []
        for I in self.subsets():
            name = ",".join(str(v) for v in sorted(I))
            lines.append(f"[{name}] {self.table[I].text()}")
        return "\n".join(lines)

    def __eq__(self, other):
        if not isinstance(other, Parametrisation):
            return NotImplemented
        return (self.k, self.n, self.table) == (other.k, other.n, other.table)


def parametrisation(t):
    """Plucker table of the tiling: each matching contributes the product
    of its angle variables to the entry of its boundary."""
    n = t.n
    k = t.vertex_count - t.face_count
    matchings = enumerate_matchings(t)
    table = {}
    if 0 <= k <= n:
        for I in combinations(range(1, n + 1), k):
            table[frozenset(I)] = Poly()
    for m in matchings:
        used = {a.vertex for a in m}
        I = frozenset(v for v in range(1, n + 1) if v not in used)
        if len(I) != k:
            raise AssertionError(
                f"matching boundary {sorted(I)} has size {len(I)}, expected {k}"
            )
        table[I].add_monomial([a.id for a in m])
    return Parametrisation(k=k, n=n, table=table)


def positroid_set(p):
    """The nonvanishing k-subsets of a parametrisation."""
    return p.positroid_set()


def same_cell(t1, t2):
    """Whether two tilings land in the same positroid cell: equal types and
    equal nonvanishing sets. A type mismatch is simply a different cell."""
    p1, p2 = parametrisation(t1), parametrisation(t2)
    if p1.type != p2.type:
        return False
    return p1.positroid_set() == p2.positroid_set()


def cell_leq(t1, t2):
    """Closure order on cells of one type: the cell of t1 lies in the
    closure of the cell of t2 when every coordinate vanishing on t2 also
    vanishes on t1, i.e. nonvanishing(t1) is a subset of nonvanishing(t2)."""
    p1, p2 = parametrisation(t1), parametrisation(t2)
    if p1.type != p2.type:
        raise TypeMismatch(f"types differ: {p1.type} vs {p2.type}")
    return p1.positroid_set() <= p2.positroid_set()


def is_essential(t, angle):
    """Whether every matching uses the angle, decided by searching for one
    matching that avoids it rather than enumerating all of them."""
    aid = angle.id if hasattr(angle, "id") else str(angle)
    avoiding = _match_search(
        _angles_by_face(t), t.internal, first_only=True, forbid=aid
    )
    return not avoiding


def restrict_zero(p, angle):
    """Parametrisation with every monomial containing the angle dropped;
    this is the table of the tiling degenerated at that angle."""
    aid = angle.id if hasattr(angle, "id") else str(angle)
    return p.restrict_zero(aid)


def evaluate(p, assignment):
    """Evaluate the table at an exact nonnegative assignment, one value per
    angle variable. The result is a projective point: all-zero vectors are
    rejected."""
    return p.evaluate(assignment)


# ---------------------------------------------------------------------------
# factorisation across a subtiling split
# ---------------------------------------------------------------------------


def relative_parametrisation(split):
    """Matchings of the remainder of a split, summed as monomials and
    graded by the pair (unmatched outer-boundary vertices, matched cut
    vertices)."""
    rem = split.remainder
    table = {}
    for m in _match_search(rem.face_angles, rem.required_vertices):
        used = {a.vertex for a in m}
        d1 = frozenset(v for v in rem.outer_boundary if v not in used)
        d2 = frozenset(v for v in rem.cut_vertices if v in used)
        poly = table.setdefault((d1, d2), Poly())
        poly.add_monomial([a.id for a in m])
    return table


def composed_parametrisation(t, split):
    """Rebuild the Plucker table of the ambient tiling from the split: sum
    over remainder matchings of the inner table entry that completes them,
    with inner angles renamed back to ambient ids.

    For a remainder matching and an ambient k-subset I to combine, I must
    agree off the cut cycle with exactly the unmatched boundary vertices,
    and the matching must not use any vertex of I. The inner entry used is
    indexed by the cut vertices the inner tiling must leave unmatched: the
    ones the remainder already matched, plus the ones I keeps unmatched on
    the cycle. Cut vertices on the outer boundary may lawfully stay
    unmatched on both sides, which is why I contributes there."""
    inner_p = parametrisation(split.inner)
    to_ambient = {j: v for v, j in split.vertex_map.items()}
    inner_table = {}
    for J, poly in inner_p.table.items():
        amb = frozenset(to_ambient[j] for j in J)
        inner_table[amb] = poly.rename(split.inner_angle_map)

    rem = split.remainder
    cyc = frozenset(split.cycle)
    bound = rem.outer_boundary
    n = t.n
    k = t.vertex_count - t.face_count
    table = {}
    if 0 <= k <= n:
        for I in combinations(range(1, n + 1), k):
            table[frozenset(I)] = Poly()
    for m in _match_search(rem.face_angles, rem.required_vertices):
        used = {a.vertex for a in m}
        base = frozenset(v for v in bound - cyc if v not in used)
        free_cut = sorted(v for v in (bound & cyc) if v not in used)
        take = k - len(base)
        if take < 0 or take > len(free_cut):
            continue
        mono = [a.id for a in m]
        matched_cut = frozenset(v for v in cyc if v in used)
        for extra in combinations(free_cut, take):
            I = base | frozenset(extra)
            inner = inner_table.get(matched_cut | frozenset(extra))
            if inner is None or inner.is_zero:
                continue
            table[I] = table[I] + inner * monomial(mono)
    return Parametrisation(k=k, n=n, table=table)
