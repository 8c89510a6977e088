"""Command line front end: validation, inspection, matchings, coordinate
tables, evaluation, moves, cell comparison, corpus generation, and SVG
rendering of tiling files."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import corpus as corpus_mod
from . import plabic, positroid, render, strands, verify
from .errors import DiskTileError
from .tiling import build_tiling, degenerate, digon, flip, hourglass, reduce


def _load(path):
    with open(path) as fh:
        data = json.load(fh)
    return build_tiling(data)


def _fail(err, code=1):
    print(f"{type(err).__name__}: {err}", file=sys.stderr)
    return code


def _subset_text(I):
    return ",".join(str(v) for v in sorted(I))


def _parse_subset(s):
    if "," in s:
        parts = [p for p in s.split(",") if p]
    else:
        parts = list(s)
    return frozenset(int(p) for p in parts)


def _cycle_text(dp):
    seen = set()
    parts = []
    for i in range(1, dp.n + 1):
        if i in seen:
            continue
        if dp.pi[i - 1] == i:
            sign = "+" if dp.col[i - 1] > 0 else "-"
            parts.append(f"({i}{sign})")
            seen.add(i)
            continue
        cyc = [i]
        seen.add(i)
        j = dp.pi[i - 1]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = dp.pi[j - 1]
        parts.append("(" + " ".join(str(v) for v in cyc) + ")")
    return "".join(parts)


def cmd_validate(args):
    try:
        _load(args.file)
    except DiskTileError as e:
        return _fail(e)
    print("valid")
    return 0


def cmd_info(args):
    t = _load(args.file)
    k, n = strands.rank_type(t)
    dp = strands.decorated_permutation(t)
    ok, _wit = strands.is_postnikov(t)
    print(f"type: ({k},{n})")
    print(f"permutation: {_cycle_text(dp)}")
    print(f"reduced: {'yes' if ok else 'no'}")
    print(f"vertices: {t.vertex_count}")
    print(f"edges: {t.edge_count}")
    print(f"faces: {t.face_count}")
    print(f"angles: {t.angle_count}")
    return 0


def cmd_matchings(args):
    t = _load(args.file)
    want = _parse_subset(args.boundary) if args.boundary else None
    for m in positroid.enumerate_matchings(t):
        if want is not None and positroid.boundary(t, m) != want:
            continue
        print(" ".join(a.id for a in m))
    return 0


def cmd_plucker(args):
    t = _load(args.file)
    p = positroid.parametrisation(t)
    if args.format == "json":
        doc = {
            "k": p.k,
            "n": p.n,
            "coordinates": [
                {"subset": sorted(I), "poly": p.table[I].text()}
                for I in p.subsets()
            ],
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"type: ({p.k},{p.n})")
        print(p.text())
    return 0


def _parse_assignment(spec):
    out = {}
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        key, _, val = item.rpartition("=")
        if not key:
            raise ValueError(f"bad assignment item {item!r}")
        out[key] = Fraction(val)
    return out


def cmd_eval(args):
    t = _load(args.file)
    p = positroid.parametrisation(t)
    try:
        assign = _parse_assignment(args.assign)
        vals = p.evaluate(assign)
    except (DiskTileError, ValueError, ZeroDivisionError) as e:
        return _fail(e)
    for I in p.subsets():
        print(f"[{_subset_text(I)}] {vals[I]}")
    if args.check_plucker:
        ok = verify.plucker_relations_ok(vals, p.k, p.n)
        print(f"plucker-relations: {'ok' if ok else 'VIOLATED'}")
        if not ok:
            return 1
    return 0


def _parse_hourglass_site(s):
    if "," in s:
        a, b = s.split(",")
        return (int(a), int(b))
    return int(s) if s.isdigit() else s


def _parse_digon_site(s):
    if s.startswith("f") and s[1:].isdigit():
        return ("contract", int(s[1:]))
    if ":" in s:
        v, ds = s.split(":", 1)
        a, b = ds.split(",")
        label = int(v) if v.isdigit() else v
        return ("decontract", label, int(a), int(b))
    return ("decontract", int(s) if s.isdigit() else s)


def cmd_move(args):
    try:
        t = _load(args.file)
    except DiskTileError as e:
        return _fail(e)
    try:
        if args.flip is not None:
            t2 = flip(t, args.flip)
        elif args.reduce is not None:
            t2 = reduce(t, args.reduce)
        elif args.degenerate is not None:
            t2 = degenerate(t, args.degenerate)
        elif args.hourglass is not None:
            t2 = hourglass(t, _parse_hourglass_site(args.hourglass))
        else:
            t2 = digon(t, _parse_digon_site(args.digon))
    except DiskTileError as e:
        return _fail(e, code=2)
    text = json.dumps(t2.to_data(), indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_plabic(args):
    t = _load(args.file)
    g = plabic.stellar(t)
    if args.format == "dot":
        print(g.to_dot())
    else:
        print(g.to_json())
    return 0


def cmd_same_cell(args):
    t1, t2 = _load(args.file1), _load(args.file2)
    p1 = positroid.parametrisation(t1)
    p2 = positroid.parametrisation(t2)
    if p1.type != p2.type:
        print(f"false (types differ: ({p1.k},{p1.n}) vs ({p2.k},{p2.n}))")
        return 0
    s1, s2 = p1.positroid_set(), p2.positroid_set()
    if s1 == s2:
        print("true")
        return 0
    diff = sorted(s1 ^ s2, key=lambda I: sorted(I)[::-1])[0]
    side = "first" if diff in s1 else "second"
    print(f"false (subset {_subset_text(diff)} nonvanishing only in {side})")
    return 0


def cmd_leq(args):
    t1, t2 = _load(args.file1), _load(args.file2)
    try:
        ok = positroid.cell_leq(t1, t2)
    except DiskTileError as e:
        return _fail(e, code=2)
    if ok:
        print("true")
        return 0
    p1 = positroid.parametrisation(t1)
    extra = p1.positroid_set() - positroid.parametrisation(t2).positroid_set()
    diff = sorted(extra, key=lambda I: sorted(I)[::-1])[0]
    print(f"false (subset {_subset_text(diff)} nonvanishing only in first)")
    return 0


def cmd_corpus(args):
    os.makedirs(args.out, exist_ok=True)
    ts = corpus_mod.generate(args.n, max_tiles=args.max_tiles,
                             seed=args.seed, limit=args.limit)
    for idx, t in enumerate(ts):
        name = f"n{args.n}_{idx:04d}.json"
        with open(os.path.join(args.out, name), "w") as fh:
            json.dump(t.to_data(), fh, indent=2)
            fh.write("\n")
    print(f"wrote {len(ts)} tilings to {args.out}")
    return 0


def cmd_render(args):
    t = _load(args.file)
    opts = render.RenderOptions(size=args.size, strands=args.strands,
                                plabic=args.plabic)
    doc = render.render_svg(t, opts)
    with open(args.out, "w") as fh:
        fh.write(doc + "\n")
    return 0


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="disktile",
        description="bicolored disk tilings: validation, strands, "
                    "matchings, positroid cells",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a tiling file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="type, permutation, reduced flag, counts")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("matchings", help="list matchings")
    p.add_argument("file")
    p.add_argument("--boundary", help="only matchings with this boundary, "
                   "e.g. 2,4,5,6 or 2456")
    p.set_defaults(func=cmd_matchings)

    p = sub.add_parser("plucker", help="print the coordinate table")
    p.add_argument("file")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_plucker)

    p = sub.add_parser("eval", help="evaluate the table at an assignment")
    p.add_argument("file")
    p.add_argument("--assign", required=True,
                   help="comma list angle=value, values as fractions")
    p.add_argument("--check-plucker", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("move", help="apply a move and print the result")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--flip", type=int, metavar="E")
    g.add_argument("--reduce", type=int, metavar="E")
    g.add_argument("--degenerate", metavar="ANGLE")
    g.add_argument("--hourglass", metavar="SITE",
                   help="internal vertex to unpinch, or d1,d2 to pinch")
    g.add_argument("--digon", metavar="SITE",
                   help="fN contracts white face N; a vertex decontracts; "
                   "v:d1,d2 picks the items at an internal vertex")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_move)

    p = sub.add_parser("plabic", help="export the plabic graph")
    p.add_argument("file")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_plabic)

    p = sub.add_parser("same-cell", help="compare positroid cells")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_same_cell)

    p = sub.add_parser("leq", help="closure order on cells of one type")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_leq)

    p = sub.add_parser("corpus", help="write a deterministic corpus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-tiles", type=int, default=corpus_mod.MAX_TILES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit", type=int)
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("render", help="draw the tiling as SVG")
    p.add_argument("file")
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--size", type=int, default=600)
    p.add_argument("--strands", action="store_true")
    p.add_argument("--plabic", action="store_true")
    p.set_defaults(func=cmd_render)

    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except DiskTileError as e:
        return _fail(e)
    except FileNotFoundError as e:
        return _fail(e)
    except json.JSONDecodeError as e:
        return _fail(e)


if __name__ == "__main__":
    sys.exit(main())
