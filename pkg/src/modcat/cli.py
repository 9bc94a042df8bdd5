"""Command-line front end.

Exact-mode JSON output is canonical and byte-identical across runs: every
mapping is emitted in a fixed key order, rationals as "p/q" strings, and
weights as integer arrays.  Float mode renders the same tables as
[re, im] pairs.  Exit codes: 0 success, 1 verification failure, 2 usage or
precondition error, 3 internal consistency error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .fusion import (FusionConsistencyError, build_fusion_table,
                     fusion_coefficients, verify_fusion, verify_grothendieck)
from .lie import build_root_system
from .macdonald import (build_context, build_su_data, macdonald_polynomial,
                        verify_section5)
from .modular import ModularData, build_modular_data, verify_modular_relations
from .numeric import default_tolerance
from .weyl import enumerate_alcove, enumerate_ck
from .chardata import quantum_dim

USAGE_ERROR = 2
VERIFY_ERROR = 1
INTERNAL_ERROR = 3


class UsageError(Exception):
    pass


def _parse_algebra(text: str):
    text = text.strip()
    if len(text) < 2 or not text[0].isalpha():
        raise UsageError(f"bad algebra name {text!r}; expected e.g. A2, B2, G2")
    series, rank = text[0].upper(), text[1:]
    if not rank.isdigit():
        raise UsageError(f"bad algebra name {text!r}; expected e.g. A2, B2, G2")
    try:
        return build_root_system(series, int(rank))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_weight(text: str, rank: int):
    parts = text.replace(" ", "").split(",")
    try:
        coords = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"bad weight {text!r}; expected comma-separated "
                         "integers") from exc
    if len(coords) != rank:
        raise UsageError(f"weight {text!r} has {len(coords)} coordinates, "
                         f"expected {rank}")
    return coords


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}j"


def _cyc_out(x, mode: str):
    if mode == "float":
        z = x.to_complex()
        return [z.real, z.imag]
    return x.to_json_obj()


def _matrix_out(mat, mode: str):
    return [[_cyc_out(x, mode) for x in row] for row in mat]


def _matrix_csv(lines, label, alcove, mat):
    header = [label] + [".".join(str(c) for c in mu) for mu in alcove]
    lines.append(",".join(header))
    for lam, row in zip(alcove, mat):
        cells = [".".join(str(c) for c in lam)]
        cells += [_fmt_complex(x.to_complex()) for x in row]
        lines.append(",".join(cells))


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj) -> None:
    _emit(args, json.dumps(obj, indent=2))


# -- subcommand handlers -------------------------------------------------------

def _cmd_lie_info(args) -> int:
    rs = _parse_algebra(args.algebra)
    obj = {
        "algebra": f"{rs.series}{rs.rank}",
        "rank": rs.rank,
        "cartan_matrix": [list(row) for row in rs.cartan],
        "simple_roots": [list(w) for w in rs.simple_roots],
        "positive_roots": [list(w) for w in rs.positive_roots],
        "rho": list(rs.rho),
        "highest_root": list(rs.highest_root),
        "dual_coxeter": rs.dual_coxeter,
        "lacing": rs.lacing,
        "symmetrizers": list(rs.symmetrizers),
        "weight_to_root_index": rs.cartan_index,
        "dim_adjoint": rs.dim_adjoint,
        "gram_primed": [[str(x) for x in row] for row in rs.gram_primed],
    }
    if args.format == "pretty":
        lines = [f"{k}: {v}" for k, v in obj.items()]
        _emit(args, "\n".join(lines))
    else:
        _emit_json(args, obj)
    return 0


def _cmd_alcove(args) -> int:
    if args.algebra and args.kappa is not None:
        rs = _parse_algebra(args.algebra)
        weights = enumerate_alcove(rs, args.kappa)
        obj = {"algebra": f"{rs.series}{rs.rank}", "kappa": args.kappa,
               "weights": [list(w) for w in weights]}
    elif args.n is not None and args.level is not None:
        rs = build_root_system("A", args.n - 1)
        weights = enumerate_ck(rs, args.level)
        obj = {"n": args.n, "K": args.level,
               "weights": [list(w) for w in weights]}
    else:
        raise UsageError("alcove needs either --algebra and --kappa, "
                         "or --n and --K")
    if args.format == "pretty":
        _emit(args, "\n".join(",".join(str(c) for c in w)
                              for w in obj["weights"]))
    else:
        _emit_json(args, obj)
    return 0


def _cmd_dims(args) -> int:
    rs = _parse_algebra(args.algebra)
    weights = enumerate_alcove(rs, args.kappa)
    dims = [quantum_dim(rs, args.kappa, lam) for lam in weights]
    if args.format == "csv":
        lines = ["weight,dim"]
        for lam, d in zip(weights, dims):
            lines.append(".".join(str(c) for c in lam) + ","
                         + f"{d.to_complex().real:.12g}")
        _emit(args, "\n".join(lines))
    elif args.format == "pretty":
        lines = [f"{lam}: {_fmt_complex(d.to_complex())}"
                 for lam, d in zip(weights, dims)]
        _emit(args, "\n".join(lines))
    else:
        obj = {"algebra": f"{rs.series}{rs.rank}", "kappa": args.kappa,
               "mode": args.mode,
               "dims": [{"weight": list(lam), "dim": _cyc_out(d, args.mode)}
                        for lam, d in zip(weights, dims)]}
        _emit_json(args, obj)
    return 0


def _modular_json(md: ModularData, mode: str):
    return {
        "algebra": f"{md.rs.series}{md.rs.rank}",
        "kappa": md.kappa,
        "mode": mode,
        "alcove": [list(w) for w in md.alcove],
        "s": _matrix_out(md.smatrix, mode),
        "t": _matrix_out(md.tmatrix, mode),
        "c": [list(row) for row in md.cmatrix],
        "dims": [_cyc_out(d, mode) for d in md.dims],
        "p_plus": _cyc_out(md.p_plus, mode),
        "p_minus": _cyc_out(md.p_minus, mode),
        "d_squared": _cyc_out(md.d_squared, mode),
        "zeta": _cyc_out(md.zeta, mode),
        "central_charge": str(md.central_charge),
    }


def _cmd_modular(args) -> int:
    rs = _parse_algebra(args.algebra)
    try:
        md = build_modular_data(rs, args.kappa)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "csv":
        lines = []
        for label, mat in (("s", md.smatrix), ("t", md.tmatrix)):
            lines.append(f"# matrix {label}")
            _matrix_csv(lines, label, md.alcove, mat)
        _emit(args, "\n".join(lines))
    elif args.format == "pretty":
        lines = [f"alcove: {[list(w) for w in md.alcove]}"]
        for label, mat in (("s", md.smatrix), ("t", md.tmatrix)):
            lines.append(f"{label}:")
            for row in mat:
                lines.append("  " + "  ".join(_fmt_complex(x.to_complex())
                                              for x in row))
        lines.append(f"D^2 = {_fmt_complex(md.d_squared.to_complex())}, "
                     f"central charge = {md.central_charge}")
        _emit(args, "\n".join(lines))
    else:
        _emit_json(args, _modular_json(md, args.mode))
    return 0


def _cmd_fusion(args) -> int:
    rs = _parse_algebra(args.algebra)
    try:
        alcove = enumerate_alcove(rs, args.kappa)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if (args.lhs is None) != (args.rhs is None):
        raise UsageError("--lhs and --rhs go together")
    if args.lhs is not None:
        lam = _parse_weight(args.lhs, rs.rank)
        mu = _parse_weight(args.rhs, rs.rank)
        if lam not in alcove or mu not in alcove:
            raise UsageError(f"weights must lie in the alcove {list(alcove)}")
        prod = fusion_coefficients(rs, args.kappa, lam, mu)
        obj = {"algebra": f"{rs.series}{rs.rank}", "kappa": args.kappa,
               "lambda": list(lam), "mu": list(mu),
               "result": [{"nu": list(nu), "mult": prod[nu]}
                          for nu in sorted(prod)]}
        _emit_json(args, obj)
        return 0
    table = build_fusion_table(rs, args.kappa, alcove)
    products = []
    for lam in alcove:
        for mu in alcove:
            prod = table.product(lam, mu)
            products.append({
                "lambda": list(lam), "mu": list(mu),
                "result": [{"nu": list(nu), "mult": prod[nu]}
                           for nu in sorted(prod)]})
    obj = {"algebra": f"{rs.series}{rs.rank}", "kappa": args.kappa,
           "alcove": [list(w) for w in alcove], "products": products}
    _emit_json(args, obj)
    return 0


def _cmd_macdonald(args) -> int:
    if args.macdonald_cmd == "poly":
        ctx = build_context(args.n, args.k, args.level
                            if args.level is not None else 0)
        lam = _parse_weight(args.lam, ctx.rs.rank)
        if not all(c >= 0 for c in lam):
            raise UsageError(f"weight {lam} is not dominant")
        poly = macdonald_polynomial(ctx, lam)
        obj = {"n": args.n, "k": args.k, "lambda": list(lam),
               "terms": [{"weight": list(w), "coeff": c.to_json_obj()}
                         for w, c in poly.sorted_terms()]}
        _emit_json(args, obj)
        return 0
    if args.level is None:
        raise UsageError("macdonald su needs --K")
    ctx = build_context(args.n, args.k, args.level)
    su = build_su_data(ctx)
    obj = {
        "n": su.n, "k": su.k, "K": su.level, "kappa": su.kappa,
        "mode": args.mode,
        "alcove": [list(w) for w in su.alcove],
        "s": _matrix_out(su.smatrix, args.mode),
        "t": _matrix_out(su.tmatrix, args.mode),
        "conj_scalar": _cyc_out(su.conj_scalar, args.mode),
        "twist_u": _cyc_out(su.twist_u, args.mode),
        "norms": [_cyc_out(x, args.mode) for x in su.norms_eps],
    }
    _emit_json(args, obj)
    return 0


def _cmd_verify(args) -> int:
    tol = args.tolerance if args.tolerance is not None else default_tolerance()
    reports = []
    wants_cat = args.suite in ("modular", "fusion", "all")
    wants_mac = args.suite in ("section5", "all")
    have_cat = args.algebra is not None and args.kappa is not None
    have_mac = (args.n is not None and args.k is not None
                and args.level is not None)
    if args.suite in ("modular", "fusion") and not have_cat:
        raise UsageError(f"suite {args.suite} needs --algebra and --kappa")
    if args.suite == "section5" and not have_mac:
        raise UsageError("suite section5 needs --n, --k and --K")
    if args.suite == "all" and not (have_cat or have_mac):
        raise UsageError("suite all needs --algebra/--kappa or --n/--k/--K")

    if wants_cat and have_cat:
        rs = _parse_algebra(args.algebra)
        try:
            md = build_modular_data(rs, args.kappa)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if args.suite in ("modular", "all"):
            reports.append(verify_modular_relations(md, tol))
        if args.suite in ("fusion", "all"):
            table = build_fusion_table(rs, args.kappa, md.alcove)
            reports.append(verify_fusion(md, table))
            reports.append(verify_grothendieck(md, table))
    if wants_mac and have_mac:
        ctx = build_context(args.n, args.k, args.level)
        reports.append(verify_section5(ctx, tol))

    passed = all(r.passed for r in reports)
    if args.format == "pretty":
        lines = []
        for r in reports:
            lines.extend(r.pretty_lines())
        _emit(args, "\n".join(lines))
    else:
        _emit_json(args, {"suites": [r.to_json_obj() for r in reports],
                          "passed": passed})
    return 0 if passed else VERIFY_ERROR


# -- argument wiring -----------------------------------------------------------

def _add_common(p, fmt=("json", "csv", "pretty")):
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--format", choices=fmt, default="json")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--tolerance", type=float, default=None,
                   help="float-mode tolerance (default 1e-9 or "
                        "MODCAT_TOLERANCE)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modcat",
        description="Exact modular data of quantum-group fusion categories "
                    "and type-A Macdonald polynomials")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lie-info", help="root-system tables")
    p.add_argument("--algebra", required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_lie_info)

    p = sub.add_parser("alcove", help="list the alcove or the sub-alcove")
    p.add_argument("--algebra")
    p.add_argument("--kappa", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--K", dest="level", type=int)
    _add_common(p)
    p.set_defaults(handler=_cmd_alcove)

    p = sub.add_parser("dims", help="quantum dimensions over the alcove")
    p.add_argument("--algebra", required=True)
    p.add_argument("--kappa", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_dims)

    p = sub.add_parser("modular", help="s/t/c matrices and scalars")
    p.add_argument("--algebra", required=True)
    p.add_argument("--kappa", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_modular)

    p = sub.add_parser("fusion", help="fusion products")
    p.add_argument("--algebra", required=True)
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--lhs", help="left weight, comma-separated coordinates")
    p.add_argument("--rhs", help="right weight")
    _add_common(p)
    p.set_defaults(handler=_cmd_fusion)

    p = sub.add_parser("macdonald", help="Macdonald polynomials and matrices")
    msub = p.add_subparsers(dest="macdonald_cmd", required=True)
    pp = msub.add_parser("poly", help="one polynomial at generic q")
    pp.add_argument("--n", type=int, required=True)
    pp.add_argument("--k", type=int, required=True)
    pp.add_argument("--K", dest="level", type=int, default=None)
    pp.add_argument("--lambda", dest="lam", required=True)
    _add_common(pp)
    pp.set_defaults(handler=_cmd_macdonald)
    ps = msub.add_parser("su", help="modular matrices on intertwiners")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--k", type=int, required=True)
    ps.add_argument("--K", dest="level", type=int, required=True)
    _add_common(ps)
    ps.set_defaults(handler=_cmd_macdonald)

    p = sub.add_parser("verify", help="run an identity-verification suite")
    p.add_argument("--suite", required=True,
                   choices=("modular", "fusion", "section5", "all"))
    p.add_argument("--algebra")
    p.add_argument("--kappa", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--K", dest="level", type=int)
    _add_common(p, fmt=("json", "pretty"))
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (FusionConsistencyError, AssertionError) as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
