"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 budget exceeded, 4 verification
mismatch, 5 demo infeasible.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import errors, gf, homopoly, prm, projgeom, separation

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4
EXIT_INFEASIBLE = 5


def _resolve_field(args):
    if args.q is not None:
        return gf.field_from_order(args.q)
    if args.p is not None and args.e is not None:
        return gf.make_field(args.p, args.e)
    raise errors.PrmError("give --q or both --p and --e")


def _add_field_args(sp):
    sp.add_argument("--q", type=int, help="field order (prime power)")
    sp.add_argument("--p", type=int, help="prime characteristic")
    sp.add_argument("--e", type=int, default=1, help="extension degree")


def cmd_params(args):
    field = _resolve_field(args)
    cp = prm.distance_formula(field.q, args.m, args.nu)
    if args.format == "json":
        print(json.dumps(cp.as_dict()))
    else:
        print(f"q={cp.q} m={cp.m} nu={cp.nu}")
        print(f"n={cp.n} k={cp.k} d={cp.d} (r={cp.r}, s={cp.s})")
    return EXIT_OK


def cmd_verify(args):
    field = _resolve_field(args)
    q, m, nu = field.q, args.m, args.nu
    cp = prm.distance_formula(q, m, nu)
    k_rank = prm.rank_gf(prm.generator_matrix(q, m, nu).entries, field)
    d_search = prm.min_weight_exhaustive(q, m, nu, args.budget)
    ok = cp.k == k_rank and cp.d == d_search
    if args.format == "json":
        print(json.dumps({"q": q, "m": m, "nu": nu,
                          "k_formula": cp.k, "k_rank": k_rank,
                          "d_formula": cp.d, "d_search": d_search,
                          "match": ok}))
    else:
        print(f"k: {cp.k} = {k_rank} {'MATCH' if cp.k == k_rank else 'MISMATCH'}")
        print(f"d: {cp.d} = {d_search} {'MATCH' if cp.d == d_search else 'MISMATCH'}")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_separate(args):
    field = _resolve_field(args)
    with open(args.points) as fh:
        text = fh.read()
    first = next(line for line in text.splitlines() if line.split("#")[0].strip())
    m = args.m if args.m is not None else len(first.split(",")) - 1
    points = projgeom.parse_points(text, m, field)
    inst = separation.SeparationInstance(points=tuple(points), field=field)
    target = args.target - 1
    h, chain = separation.separating_hyperplane(inst, target)
    form = projgeom.hyperplane_form(h)
    table = [(j + 1, projgeom.contains(h, p)) for j, p in enumerate(inst.points)]
    if args.format == "json":
        print(json.dumps({
            "target": args.target,
            "chain": [[list(r) for r in f.basis] for f in chain.flats],
            "hyperplane": [list(r) for r in h.basis],
            "form": homopoly.format_poly(form),
            "contains": [bool(c) for _, c in table],
        }))
    else:
        for f in chain.flats:
            print(f"chain dim {f.dim}: " + " | ".join(",".join(map(str, r)) for r in f.basis))
        print("hyperplane: " + " | ".join(",".join(map(str, r)) for r in h.basis))
        print(f"form: {form}")
        for j, c in table:
            mark = "IN" if c else "out"
            print(f"P{j}: {mark}")
    ok = all(c == (j - 1 == target) for j, c in table)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_gapdemo(args):
    field = _resolve_field(args)
    q, m, nu = field.q, args.m, args.nu
    if not 1 <= nu <= m * (q - 1):
        raise errors.NuOutOfRange(nu, m, q)
    rng = random.Random(args.seed)
    F = None
    for _ in range(args.retries):
        cand = homopoly.random_poly(m + 1, nu, field, rng)
        if cand.is_zero():
            continue
        t = len(homopoly.nonvanishing_set(cand, m))
        if 2 <= t <= q + 1:
            F = cand
            break
    if F is None:
        print(f"no F of degree {nu} with 2 <= t <= {q + 1} found "
              f"in {args.retries} samples", file=sys.stderr)
        return EXIT_INFEASIBLE
    nonvan = homopoly.nonvanishing_set(F, m)
    inst = separation.SeparationInstance(points=tuple(nonvan), field=field)
    H = separation.gap_product(F, inst)
    zh = homopoly.zero_set(H, m)
    bound = m * (q - 1)
    out = {
        "F": homopoly.format_poly(F),
        "t": inst.t,
        "deg_H": H.degree,
        "deg_bound": bound,
        "deg_bound_ok": H.degree <= bound,
        "zero_count_H": len(zh),
        "surviving_point": list(inst.points[-1]),
    }
    if args.format == "json":
        print(json.dumps(out))
    else:
        print(f"F ({inst.t} non-vanishing points):")
        print(homopoly.format_poly(F))
        print(f"deg H = {H.degree} (bound m(q-1) = {bound}: "
              f"{'ok' if out['deg_bound_ok'] else 'EXCEEDED'})")
        print(f"|Z(H)| = {len(zh)} of n = {projgeom.num_points(m, q)}")
        print(f"surviving point: {','.join(map(str, inst.points[-1]))}")
    return EXIT_OK


def cmd_sweep(args):
    qs = [int(x) for x in args.q_list.split(",")] if args.q_list else []
    ms = [int(x) for x in args.m_list.split(",")] if args.m_list else []
    rows = []
    for q in qs:
        field = gf.field_from_order(q)
        for m in ms:
            for nu in range(1, m * (q - 1) + 1):
                cp = prm.distance_formula(q, m, nu)
                k_rank = prm.rank_gf(prm.generator_matrix(q, m, nu).entries, field)
                try:
                    d_search = prm.min_weight_exhaustive(q, m, nu, args.budget)
                    status = "MATCH" if (cp.k == k_rank and cp.d == d_search) else "MISMATCH"
                except errors.BudgetExceeded:
                    d_search = None
                    status = "SKIPPED" if cp.k == k_rank else "MISMATCH"
                rows.append({"q": q, "m": m, "nu": nu, "n": cp.n,
                             "k_formula": cp.k, "k_rank": k_rank,
                             "d_formula": cp.d, "d_search": d_search,
                             "status": status})
    if args.format == "json":
        print(json.dumps(rows))
    else:
        cols = ["q", "m", "nu", "n", "k_formula", "k_rank", "d_formula", "d_search", "status"]
        print(",".join(cols))
        for row in rows:
            print(",".join("" if row[c] is None else str(row[c]) for c in cols))
    return EXIT_OK


def cmd_matrix(args):
    field = _resolve_field(args)
    G = prm.generator_matrix(field.q, args.m, args.nu)
    text = prm.matrix_to_json(G) if args.format == "json" else prm.matrix_to_csv(G)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_flats(args):
    field = _resolve_field(args)
    with open(args.flat) as fh:
        text = fh.read()
    first = next(line for line in text.splitlines() if line.split("#")[0].strip())
    m = args.m if args.m is not None else len(first.split(",")) - 1
    gens = projgeom.parse_points(text, m, field)
    f = projgeom.span(tuple(gens), field)
    exts = projgeom.extensions(f)
    q = field.q
    expected = (q ** (m - f.dim) - 1) // (q - 1)
    base = set(projgeom.flat_points(f))
    seen = set()
    disjoint = True
    for g in exts:
        outside = set(projgeom.flat_points(g)) - base
        if outside & seen:
            disjoint = False
        seen |= outside
    covers = len(seen) == projgeom.num_points(m, q) - len(base)
    if args.format == "json":
        print(json.dumps({"dim": f.dim, "count": len(exts), "expected": expected,
                          "partition_ok": disjoint and covers,
                          "extensions": [[list(r) for r in g.basis] for g in exts]}))
    else:
        print(f"flat dim {f.dim} in P^{m}(F_{q}): {len(exts)} extensions "
              f"(formula {expected})")
        print(f"partition of complement: {'ok' if disjoint and covers else 'FAILED'}")
        for g in exts:
            print("  " + " | ".join(",".join(map(str, r)) for r in g.basis))
    return EXIT_OK if (len(exts) == expected and disjoint and covers) else EXIT_MISMATCH


def cmd_lemma4(args):
    field = _resolve_field(args)
    ok = prm.verify_no_single_nonvanishing(field.q, args.m, args.budget)
    print(f"no single-nonvanishing polynomial up to degree {args.m * (field.q - 1)}: {ok}")
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser():
    p = argparse.ArgumentParser(prog="prm", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, field_args=True, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        if field_args:
            _add_field_args(sp)
        sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
        return sp

    sp = add("params", cmd_params, help="closed-form [n,k,d] parameters")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--nu", type=int, required=True)

    sp = add("verify", cmd_verify, help="check formulas against rank and weight oracles")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--nu", type=int, required=True)
    sp.add_argument("--budget", type=int, default=2_000_000)

    sp = add("separate", cmd_separate, help="separating hyperplane for a point set")
    sp.add_argument("--points", required=True, help="points file (one per line, comma-separated)")
    sp.add_argument("--m", type=int, help="ambient dimension (default: inferred)")
    sp.add_argument("--target", type=int, default=1, help="1-based index of the point to contain")

    sp = add("gapdemo", cmd_gapdemo, help="random gap-product demonstration")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--nu", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--retries", type=int, default=20000)

    sp = add("sweep", cmd_sweep, field_args=False,
             help="parameter table over (q, m, nu) grids")
    sp.add_argument("--q-list", default="", help="comma-separated field orders")
    sp.add_argument("--m-list", default="", help="comma-separated dimensions")
    sp.add_argument("--budget", type=int, default=2_000_000)

    sp = add("matrix", cmd_matrix, help="emit the generator matrix")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--nu", type=int, required=True)
    sp.add_argument("-o", "--output")

    sp = add("flats", cmd_flats, help="extensions of a flat vs the counting formula")
    sp.add_argument("--flat", required=True, help="file of generating points")
    sp.add_argument("--m", type=int, help="ambient dimension (default: inferred)")

    sp = add("lemma4", cmd_lemma4, help="no-single-nonvanishing-point exhaustive check")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--budget", type=int, default=2_000_000)

    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except errors.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (errors.PrmError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
