"""Command-line front end.

Exit codes: 0 when output was produced and every check passed, 1 when a
verification failed (the witness is printed), 2 for usage errors and
unsupported parameter ranges.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence

from . import checks
from .conf import ConfSpec, conf_bm_poincare
from .emit import FORMATS, degree_rank_rows, emit
from .liegroups import gl_poincare, pgl_poincare
from .schubert import cell_dimension, enumerate_symbols, grassmannian_poincare
from .stablering import (
    SPACES,
    contradiction_series,
    degenerate_contradiction,
    ring_poincare,
    ring_presentation,
    serre_einfty,
    twisted_coefficients,
)
from .vassiliev import VARIANTS, build_e1_page, diagonal_sum

DR = ("degree", "rank")


class UsageError(Exception):
    pass


def _payload(check, params, data, status="pass", window=None, **extra) -> dict[str, Any]:
    out = {"check": check, "params": params, "status": status, "data": data, "window": window}
    out.update(extra)
    return out


def _window(bound: int, ok: bool) -> dict[str, Any]:
    return {"bound": bound, "hypothesis_ok": ok}


def cmd_gr(args):
    params = {"p": args.p, "m": args.m}
    if args.symbols:
        data = []
        for s in enumerate_symbols(args.p, args.m, a1_zero=args.a1_zero):
            dim = cell_dimension(s)
            data.append({"symbol": str(s), "cell_dimension": dim, "degree": 2 * dim})
        return _payload("gr", params, data), ("symbol", "cell_dimension", "degree"), 0
    poly = grassmannian_poincare(args.p, args.m)
    return _payload("gr", params, degree_rank_rows(poly.terms())), DR, 0


def cmd_conf(args):
    spec = ConfSpec(args.j, args.n, args.punctured)
    dims = conf_bm_poincare(spec)
    params = {"j": args.j, "n": args.n, "punctured": args.punctured, "space": dims.space,
              "twist": dims.twist}
    return _payload("conf", params, degree_rank_rows(dims.ranks)), DR, 0


def cmd_poincare(args):
    fn = gl_poincare if args.group == "gl" else pgl_poincare
    poly = fn(args.m)
    params = {"group": args.group, "m": args.m}
    return _payload("poincare", params, degree_rank_rows(poly.terms()), result=str(poly)), DR, 0


def cmd_e1_page(args):
    page = build_e1_page(args.d, args.n, args.variant)
    pd = page.params
    params = {"d": args.d, "n": args.n, "variant": args.variant, "ambient_dim": page.ambient_dim,
              "N": page.truncation_column, "stability_degree": page.stability_degree}
    data = [
        {"column": e.column, "degree": e.degree, "rank": e.rank, "dual_degree": e.dual_degree,
         "conf_degree": e.conf_degree, "source": e.source.label}
        for e in page.rows()
    ]
    window = _window(page.trusted_below, pd.d >= 4 * pd.n + 1)
    cols = ("column", "degree", "rank", "dual_degree", "conf_degree", "source")
    return _payload("e1-page", params, data, window=window), cols, 0


def cmd_diagonal(args):
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    data = []
    for k in range(args.kmax + 1):
        s = diagonal_sum(args.n, k, args.variant)
        data.append({"degree": k, "lhs": s.lhs, "rhs": s.rhs, "equal": s.equal})
    failed = [r["degree"] for r in data if not r["equal"]]
    status = "fail" if failed else "pass"
    extra = {"witness": failed[0]} if failed else {}
    params = {"n": args.n, "kmax": args.kmax, "variant": args.variant}
    return _payload("diagonal", params, data, status=status, **extra), ("degree", "lhs", "rhs", "equal"), (1 if failed else 0)


def cmd_ring(args):
    pres = ring_presentation(args.space, args.d, args.n)
    poly = ring_poincare(pres, truncate=args.truncate)
    gens = [
        f"{g.name}:{g.degree}:{g.kind}" + (f":{g.nu}" if g.nu is not None else "")
        for g in pres.generators
    ]
    params = {"space": pres.space, "d": args.d, "n": args.n, "truncate": args.truncate,
              "generators": gens}
    window = _window(pres.bound, pres.hypothesis_ok)
    return _payload("ring", params, degree_rank_rows(poly.terms()), window=window,
                    result=str(poly)), DR, 0


def cmd_serre(args):
    res = serre_einfty(args.n, transgression=not args.no_transgression)
    top = max(res.e2_poincare.degree, res.target.degree)
    data = []
    for deg in range(top + 1):
        row = {"degree": deg, "e2": res.e2_poincare[deg], "einfty": res.einfty_poincare[deg],
               "target": res.target[deg]}
        if any(row[k] for k in ("e2", "einfty", "target")):
            data.append(row)
    status = "pass" if res.matches_target else "fail"
    params = {"n": args.n, "transgression": not args.no_transgression}
    extra = {"result": res.matches_target}
    if not res.matches_target:
        extra["witness"] = next(r["degree"] for r in data if r["einfty"] != r["target"])
    return (_payload("serre", params, data, status=status, **extra),
            ("degree", "e2", "einfty", "target"), 0 if res.matches_target else 1)


def cmd_contradiction(args):
    if args.bound < 1:
        raise UsageError("--bound must be positive")
    series = contradiction_series(args.n, args.bound)
    first = degenerate_contradiction(args.n, args.bound)
    data = [{"degree": k, "coefficient": series[k]} for k in range(args.bound)]
    params = {"n": args.n, "bound": args.bound}
    return _payload("contradiction", params, data, result=first), ("degree", "coefficient"), 0


def cmd_twisted(args):
    data = []
    for k in range(args.kmax + 1):
        tw = twisted_coefficients(args.d, args.n, k)
        data.append({"degree": k, "rank": tw.rank, "guaranteed": tw.guaranteed})
    window = _window((args.d - 1) // 2, args.d >= 4 * args.n + 1)
    params = {"d": args.d, "n": args.n, "kmax": args.kmax}
    return _payload("twisted", params, data, window=window), ("degree", "rank", "guaranteed"), 0


def cmd_verify_all(args):
    if args.nmax < 1 or args.dmax < 3:
        raise UsageError("verify-all needs --nmax >= 1 and --dmax >= 3")
    reports = checks.verify_all(args.nmax, args.dmax)
    failed = [r for r in reports if r.status == checks.FAIL]
    for r in failed:
        print(f"FAIL {r.check}: {r.witness}", file=sys.stderr)
    data = [r.row(timing=args.timing) for r in reports]
    cols = ["check", "status", "cases", "witness", "params"] + (["elapsed"] if args.timing else [])
    params = {"nmax": args.nmax, "dmax": args.dmax}
    status = "fail" if failed else "pass"
    return _payload("verify-all", params, data, status=status), cols, (1 if failed else 0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stablecoh",
        description="Exact rank computations and identity checks for the stable "
        "cohomology of universal smooth hypersurfaces.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default="text", help=f"one of {', '.join(FORMATS)}")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("gr", cmd_gr, "Grassmannian Poincare polynomial or Schubert symbols")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--symbols", action="store_true", help="list Schubert symbols instead")
    p.add_argument("--a1-zero", action="store_true", help="only symbols with a_1 = 0")

    p = add("conf", cmd_conf, "sign-twisted Borel-Moore ranks of UConf_j(P^n)")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--punctured", action="store_true", help="use P^n minus a point")

    p = add("poincare", cmd_poincare, "Poincare polynomial of GL_m or PGL_m")
    p.add_argument("--group", choices=("gl", "pgl"), required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("e1-page", cmd_e1_page, "E1 page of the Vassiliev spectral sequence")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=VARIANTS, default="full")

    p = add("diagonal", cmd_diagonal, "antidiagonal sums against h^k(GL)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--variant", choices=VARIANTS, default="full")

    p = add("ring", cmd_ring, "stable ring presentation and Poincare polynomial")
    p.add_argument("--space", required=True, help=f"one of {', '.join(SPACES)}")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--truncate", action="store_true", help="reduce mod t^bound")

    p = add("serre", cmd_serre, "E_infinity of the Serre spectral sequence of U* -> P^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--no-transgression", action="store_true",
                   help="suppress the transgression (the degenerate case)")

    p = add("contradiction", cmd_contradiction, "first negative coefficient of the forced cofactor")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)

    p = add("twisted", cmd_twisted, "ranks of H^k(X; H^(n-1)(Z))")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)

    p = add("verify-all", cmd_verify_all, "run every identity check")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--timing", action="store_true", help="include elapsed seconds (nondeterministic)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format not in FORMATS:
        parser.error(f"unknown format {args.format!r}; expected one of {', '.join(FORMATS)}")
    try:
        payload, columns, code = args.func(args)
        text = emit(args.format, payload, columns)
    except (UsageError, ValueError) as exc:
        print(f"stablecoh: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
