"""Command line entry point: ``superflag <command> ...``.

Exit status is 0 when every requested check passes, 1 when a check fails and
2 on bad input or a computation outside the supported range.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import daha, geomsuper, harness
from .cellsys import family_ring, process, torus_ring
from .exactalg import LaurentQTA, pretty, to_json, to_text
from .gmod import enumerate_flags, enumerate_rank_modules, enumerate_standard_modules
from .semigroup import family_semigroup, semigroup_from_generators
from .torusdim import TorusRing, torus_motivic_super


def _ints(text):
    return tuple(int(x) for x in text.split(","))


def _emit(F: LaurentQTA, fmt: str):
    if fmt == "json":
        print(to_json(F))
    elif fmt == "text":
        print(to_text(F))
    else:
        print(pretty(F))


def _ring(args):
    if getattr(args, "v", None) is not None:
        return family_ring(args.v)
    gens = _ints(args.gens)
    if len(gens) != 2:
        raise SystemExit("--gens takes two coprime generators p,q; use --v for the family")
    return torus_ring(*sorted(gens))


def _semigroup(args):
    if args.v is not None:
        return family_semigroup(args.v)
    return semigroup_from_generators(_ints(args.gens))


def cmd_semigroup_info(args):
    print(json.dumps(_semigroup(args).info(), sort_keys=True))
    return 0


def cmd_gmod_enumerate(args):
    S = _semigroup(args)
    if args.rank == 1:
        mods = enumerate_standard_modules(S)
        rows = [{"added": m.added(), "dev": m.dev} for m in mods]
    else:
        rows = [{"merged_gaps": sorted(M.merged.gaps()), "dev": M.dev}
                for M in enumerate_rank_modules(S, args.rank)]
    print(json.dumps({"count": len(rows), "modules": rows}))
    return 0


def cmd_cells_run(args):
    ring = _ring(args)
    S = ring.semigroup
    mods = enumerate_rank_modules(S, args.rank)
    status = 0
    for ell in range(args.flags_max + 1):
        for fl in enumerate_flags(S, args.rank, ell, mods):
            rec = process(fl, ring, prime=args.prime, unit_only=args.unit_only)
            ct = rec.cell_type
            if ct.tag == "UNKNOWN":
                status = 1
            if args.nonaffine_only and rec.affine:
                continue
            d0, dl = fl.key()
            print(json.dumps({"ell": ell, "kappa": fl.kappa, "D0": list(d0), "Dl": list(dl),
                              "potential_dim": ct.potential_dim, "type": ct.tag,
                              "residual_equations": len(rec.residual.equations)}))
    return status


def cmd_superpoly(args):
    if args.kind == "torus":
        p, q = sorted(_ints(args.gens))
        _emit(torus_motivic_super(TorusRing(p, q), args.rank, args.flags_max), args.format)
        return 0
    if args.kind == "motivic":
        ring = _ring(args)
        top = args.rank * (ring.p - 1)
        lmax = top if args.flags_max is None else min(args.flags_max, top)
        cells = geomsuper.classify_flags(ring, args.rank, lmax, args.prime)
        dec = geomsuper.motivic_superpolynomial(cells, strict=not args.lenient)
        _emit(dec.H, args.format)
        if dec.gaps:
            print(f"{len(dec.gaps)} unclassified cells left out", file=sys.stderr)
            return 1
        return 0
    r, s = harness.parse_newton(args.newton)
    D = args.rank * (s[0] * _prod(r[1:]) - 1)
    if args.nmax is not None and args.rank + D + 1 > args.nmax:
        print(f"needs GL_m up to m={args.rank + D + 1}, above --nmax {args.nmax}", file=sys.stderr)
        return 2
    _emit(daha.daha_superpolynomial(r, s, args.rank), args.format)
    return 0


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def cmd_oracle(args):
    ring = _ring(args)
    res = geomsuper.oracle_enumerate(ring.semigroup, ring.series(), args.rank, args.prime, args.flags,
                                     guard=not args.no_guard)
    strata = res.strata()
    print(json.dumps({"prime": args.prime, "rank": args.rank,
                      "strata": [{"ell": l, "dev": d, "count": n} for (l, d), n in sorted(strata.items())]}))
    return 0


def _report(ok, payload):
    payload["ok"] = ok
    print(json.dumps(payload, sort_keys=True))
    return 0 if ok else 1


def cmd_check(args):
    if args.what == "conjecture":
        newton = harness.parse_newton(args.newton) if args.newton else None
        rep = harness.check_conjecture(newton=newton, rk=args.rank, v=args.v, lmax=args.flags_max, mode=args.mode)
        return _report(rep.equal, {"label": rep.label, "mode": rep.mode, "difference": to_text(rep.difference)})
    if args.what == "alexander":
        ring = _ring(args)
        H = harness.geometric_superpolynomial(ring, 1)
        ok, diff = geomsuper.check_alexander(H, ring.semigroup)
        return _report(ok, {"H": to_text(H), "difference": to_text(diff)})
    if args.what == "t1":
        ring = _ring(args)
        H1 = harness.geometric_superpolynomial(ring, 1)
        top = args.rank * (ring.p - 1)
        Hr = geomsuper.t1_rule(ring, args.rank, top) if args.v is not None else harness.geometric_superpolynomial(ring, args.rank)
        ok, diff = geomsuper.check_t1_power(Hr, H1, args.rank)
        return _report(ok, {"difference": to_text(diff)})
    # khr
    ring = _ring(args)
    H = harness.geometric_superpolynomial(ring, 1)
    K = harness.khr_substitution(H)
    at0 = K.truncate_a(0)
    ok = all(c > 0 for _, c in at0.items())
    return _report(ok, {"khr": to_text(K)})


def cmd_reproduce(args):
    rep = harness.reproduce_tables(args.v, args.flags_max)
    out = rep.as_dict()
    if not args.diff:
        print(json.dumps(out))
    else:
        print(json.dumps({k: out[k] for k in ("v", "missing", "resolved_affine", "unlisted", "nonadmissible_pairs")}))
    return 0 if rep.ok else 1


def cmd_daha_selftest(args):
    res = daha.relation_suite(nmax=args.nmax, weight_size=args.weight_size, seed=args.seed)
    bad = [name for name, ok in res if not ok]
    for name, ok in res:
        if args.verbose or not ok:
            print(("PASS " if ok else "FAIL ") + name)
    print(f"{len(res) - len(bad)}/{len(res)} relations hold")
    return 0 if not bad else 1


def build_parser():
    p = argparse.ArgumentParser(prog="superflag", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def ring_opts(sp, rank=True):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--gens", help="semigroup or torus generators, e.g. 2,3")
        g.add_argument("--v", type=int, help="family member C[[z^4, z^6+z^v]]")
        if rank:
            sp.add_argument("--rank", type=int, default=1)

    sg = sub.add_parser("semigroup").add_subparsers(dest="sub", required=True)
    sp = sg.add_parser("info")
    ring_opts(sp, rank=False)
    sp.set_defaults(func=cmd_semigroup_info)

    gm = sub.add_parser("gmod").add_subparsers(dest="sub", required=True)
    sp = gm.add_parser("enumerate")
    ring_opts(sp)
    sp.set_defaults(func=cmd_gmod_enumerate)

    cs = sub.add_parser("cells").add_subparsers(dest="sub", required=True)
    sp = cs.add_parser("run")
    ring_opts(sp)
    sp.add_argument("--flags-max", type=int, default=0)
    sp.add_argument("--prime", type=int, default=3)
    sp.add_argument("--unit-only", action="store_true", help="eliminate only unit-coefficient variables")
    sp.add_argument("--nonaffine-only", action="store_true")
    sp.set_defaults(func=cmd_cells_run)

    su = sub.add_parser("superpoly")
    su.add_argument("kind", choices=("torus", "motivic", "daha"))
    su.add_argument("--gens")
    su.add_argument("--v", type=int)
    su.add_argument("--newton", help="Newton pairs r:s,r:s")
    su.add_argument("--rank", type=int, default=1)
    su.add_argument("--flags-max", type=int)
    su.add_argument("--prime", type=int, default=3)
    su.add_argument("--nmax", type=int)
    su.add_argument("--lenient", action="store_true")
    su.add_argument("--format", choices=("json", "text", "pretty"), default="json")
    su.set_defaults(func=cmd_superpoly)

    sp = sub.add_parser("oracle")
    ring_opts(sp)
    sp.add_argument("--prime", type=int, default=3)
    sp.add_argument("--flags", type=int, default=0)
    sp.add_argument("--no-guard", action="store_true")
    sp.set_defaults(func=cmd_oracle)

    ck = sub.add_parser("check")
    ck.add_argument("what", choices=("conjecture", "alexander", "t1", "khr"))
    ck.add_argument("--gens")
    ck.add_argument("--v", type=int)
    ck.add_argument("--newton")
    ck.add_argument("--rank", type=int, default=1)
    ck.add_argument("--flags-max", type=int)
    ck.add_argument("--mode", choices=("full", "truncated", "t1"), default="full")
    ck.set_defaults(func=cmd_check)

    rp = sub.add_parser("reproduce").add_subparsers(dest="sub", required=True)
    sp = rp.add_parser("tables")
    sp.add_argument("--v", type=int, required=True, choices=(7, 9, 15))
    sp.add_argument("--flags-max", type=int)
    sp.add_argument("--diff", action="store_true")
    sp.set_defaults(func=cmd_reproduce)

    dh = sub.add_parser("daha").add_subparsers(dest="sub", required=True)
    sp = dh.add_parser("selftest")
    sp.add_argument("--nmax", type=int, default=3)
    sp.add_argument("--weight-size", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--verbose", action="store_true")
    sp.set_defaults(func=cmd_daha_selftest)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "superpoly":
        if args.kind == "daha" and not args.newton:
            raise SystemExit("superpoly daha needs --newton")
        if args.kind in ("torus", "motivic") and not (args.gens or args.v is not None):
            raise SystemExit(f"superpoly {args.kind} needs --gens or --v")
        if args.kind == "torus" and args.v is not None:
            raise SystemExit("superpoly torus takes --gens p,q")
    if args.command == "check" and args.what == "conjecture":
        if bool(args.newton) == (args.v is not None):
            raise SystemExit("check conjecture needs exactly one of --newton, --v")
        if args.mode == "truncated" and args.flags_max is None:
            raise SystemExit("truncated mode needs --flags-max")
    elif args.command == "check" and not (args.gens or args.v is not None):
        raise SystemExit(f"check {args.what} needs --gens or --v")
    try:
        return args.func(args)
    except (ValueError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
