"""Deterministic SVG pictures of tilings.

Boundary vertices sit on a circle, internal vertices settle by averaging
their neighbours for a fixed number of rounds, black tiles are drawn as
filled shapes, and strand or plabic overlays can be added on top. Output
depends only on the tiling and the options."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import strands as strands_mod

RELAX_ROUNDS = 50


@dataclass
class RenderOptions:
    size: int = 600
    strands: bool = False
    plabic: bool = False
    stroke: float = 2.0

    def __post_init__(self):
        if self.size <= 0 or self.stroke <= 0:
            raise ValueError("render dimensions must be positive")


def _positions(t, size):
    cx = cy = size / 2.0
    r = size * 0.40
    pos = {}
    for i in range(1, t.n + 1):
        th = 2 * math.pi * (i - 1) / t.n - math.pi / 2
        pos[i] = (cx + r * math.cos(th), cy + r * math.sin(th))
    internal = list(t.internal)
    for j, v in enumerate(internal):
        pos[v] = (cx + 0.5 * (j + 1), cy + 0.25 * (j + 1))
    nbrs = {v: [] for v in internal}
    for _f, _b, a, b, _tile in t.curves:
        if a in nbrs and b != a:
            nbrs[a].append(b)
        if b in nbrs and a != b:
            nbrs[b].append(a)
    for _ in range(RELAX_ROUNDS):
        for v in internal:
            ns = nbrs[v]
            if ns:
                pos[v] = (sum(pos[u][0] for u in ns) / len(ns),
                          sum(pos[u][1] for u in ns) / len(ns))
    return pos, (cx, cy), r


def _fmt(x):
    return f"{x:.2f}"


def _pts(points):
    return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)


def _face_centroids(t, pos, center):
    cents = {}
    for fno, face in enumerate(t.face_angles(), start=1):
        vs = [pos[a.vertex] for a in face]
        if vs:
            cents[fno] = (sum(x for x, _ in vs) / len(vs),
                          sum(y for _, y in vs) / len(vs))
        else:
            cents[fno] = center
    return cents


def render_svg(t, opts=None):
    opts = opts or RenderOptions()
    size = opts.size
    pos, center, radius = _positions(t, size)
    cents = _face_centroids(t, pos, center)
    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">')
    out.append(
        f'<circle class="disk" cx="{_fmt(center[0])}" cy="{_fmt(center[1])}" '
        f'r="{_fmt(radius)}" fill="white" stroke="black" '
        f'stroke-width="{opts.stroke}"/>')

    def nudge(p, q, lam):
        return (p[0] + lam * (q[0] - p[0]), p[1] + lam * (q[1] - p[1]))

    for ti, seq in enumerate(t.tiles):
        kind = t.kinds[ti]
        if kind == "loop":
            v = seq[0]
            c = nudge(pos[v], center, 0.12)
            out.append(
                f'<circle class="tile loop" cx="{_fmt(c[0])}" '
                f'cy="{_fmt(c[1])}" r="{_fmt(size * 0.03)}" fill="black"/>')
        elif kind == "pocket":
            v = seq[0]
            c = nudge(pos[v], center, 0.18)
            out.append(
                f'<circle class="tile pocket" cx="{_fmt(c[0])}" '
                f'cy="{_fmt(c[1])}" r="{_fmt(size * 0.05)}" fill="black"/>')
            out.append(
                f'<circle class="tile pocket-hole" cx="{_fmt(c[0])}" '
                f'cy="{_fmt(c[1])}" r="{_fmt(size * 0.025)}" fill="white"/>')
        elif kind == "arc":
            a, b = seq
            out.append(
                f'<polyline class="tile arc" points="{_pts([pos[a], pos[b]])}" '
                f'fill="none" stroke="black" '
                f'stroke-width="{opts.stroke * 2}"/>')
        else:
            out.append(
                f'<polygon class="tile poly" '
                f'points="{_pts([pos[v] for v in seq])}" fill="black"/>')

    if opts.strands:
        for tr in strands_mod.scott(t):
            points = []
            if not tr.closed:
                points.append(pos[tr.source])
            for d, _outb in tr.steps:
                v = t.map.origin[d]
                a = t.angle_of_dart.get(d)
                if a is not None:
                    points.append(nudge(pos[v], cents[a.face_no], 0.3))
                else:
                    points.append(pos[v])
            if tr.closed:
                if not points:
                    points = [nudge(pos[tr.cycle_vertex], center, 0.08)]
                points.append(points[0])
            else:
                points.append(pos[tr.target])
            out.append(
                f'<polyline class="strand" points="{_pts(points)}" '
                f'fill="none" stroke="red" '
                f'stroke-width="{opts.stroke * 0.75}"/>')

    if opts.plabic:
        for a in t.angles:
            out.append(
                f'<polyline class="plabic-edge" '
                f'points="{_pts([pos[a.vertex], cents[a.face_no]])}" '
                f'fill="none" stroke="blue" stroke-width="{opts.stroke * 0.5}"/>')
        for i in range(1, t.n + 1):
            th = 2 * math.pi * (i - 1) / t.n - math.pi / 2
            tip = (center[0] + radius * 1.06 * math.cos(th),
                   center[1] + radius * 1.06 * math.sin(th))
            out.append(
                f'<polyline class="plabic-bd" points="{_pts([pos[i], tip])}" '
                f'fill="none" stroke="blue" stroke-width="{opts.stroke * 0.5}"/>')
        for fno, c in sorted(cents.items()):
            out.append(
                f'<circle class="plabic-black" cx="{_fmt(c[0])}" '
                f'cy="{_fmt(c[1])}" r="{_fmt(size * 0.015)}" fill="blue"/>')

    for v in t.vertices():
        x, y = pos[v]
        out.append(
            f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y)}" '
            f'r="{_fmt(size * 0.012)}" fill="white" stroke="black"/>')
        out.append(
            f'<text class="label" x="{_fmt(x + size * 0.015)}" '
            f'y="{_fmt(y - size * 0.015)}" font-size="{size // 40}">{v}</text>')
    out.append("</svg>")
    return "\n".join(out)
