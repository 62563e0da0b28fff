"""Command-line front end: evaluation, convolution, character tables, and
batch identity verification with JSON/CSV reports.

Exit status of `verify` is 0 iff every non-exploratory check passed.
Human-readable progress goes to stderr; the report itself goes to stdout or
--out, so pipelines stay clean.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import funcspec, weights
from .characters import (
    box_over_characters,
    box_over_characters_closed_form,
    character_group,
    product_over_characters,
)
from .mfunc import evaluate, unitary_convolve, w_convolve
from .series import (
    ConvergenceError,
    IdentityReport,
    SeriesPoint,
    SummationConfig,
    box_characters_check,
    conj_identity_check,
    euler_complement_check,
    hardy_identity_check,
    modsq_euler_check,
    modsq_factored_check,
    modsq_factored_euler_check,
    omega_reciprocal_check,
    omega_series_check,
    product_identity_check,
    zeta_cosine_check,
)


@dataclass
class VerifyJob:
    identity: str
    grid: list[dict]
    config: SummationConfig
    tol: float | None
    out: str | None
    fmt: str
    seed: int | None


# identity name -> (one-line help, required extras)
IDENTITIES = {
    "hardy": ("zeta_N(x)^2 = zeta_N(2x) sum 2^omega/m^x", "--x"),
    "zeta-cosine": ("|zeta_N(s)|^2 = cosine-product factorization", "--x --y"),
    "modsq-direct-vs-factored": ("|L_N(s,chi)|^2 direct vs factored", "--chi --x --y"),
    "modsq-direct-vs-euler": ("|L_N(s,chi)|^2 direct vs Euler product", "--chi --x --y"),
    "modsq-factored-vs-euler": ("factored vs Euler product", "--chi --x --y"),
    "product-identity": ("D(F,s)D(G,s) = D(FG,2s)D(F box G,s)", "--f --g --x --y"),
    "conj-identity": ("D(F,s)D(G,conj s) with power twists", "--f --g --x --y"),
    "euler-complement": ("D(1_A F,s) D(1_Abar F,s) = D(F,s)", "--f --primes --x --y"),
    "omega-product": ("P_P(s) zeta_N(s) = sum omega(n)/n^s", "--x --y"),
    "omega-reciprocal": ("pair-sum reciprocal form = zeta_N(s) - 1", "--x --y"),
    "omega-reciprocal-split": ("split reciprocal form = zeta_N(s) - 1", "--x --y"),
    "ring-axioms": ("five ring axioms for a weight W", "--weight --bound"),
    "box-characters": ("box over characters vs closed form", "--k --amax"),
}


def _float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number list {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def _parse_range(text: str) -> list[int]:
    """"12" -> [12]; "3..7" -> [3, 4, 5, 6, 7]."""
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        lo, hi = int(lo_text), int(hi_text)
        if lo < 1 or hi < lo:
            raise argparse.ArgumentTypeError(f"bad range {text!r}")
        return list(range(lo, hi + 1))
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("n must be >= 1")
    return [n]


def _parse_chi(text: str):
    parts = text.split(":")
    if parts and parts[0] == "chi":
        parts = parts[1:]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"character spec is K:J (got {text!r})")
    k, j = int(parts[0]), int(parts[1])
    group = character_group(k)
    if not 0 <= j < len(group):
        raise argparse.ArgumentTypeError(f"mod {k} has {len(group)} characters; J={j} out of range")
    return group[j]


def _resolve_weight(text: str) -> weights.WeightFunction:
    if text == "coprime":
        return weights.coprime_weight()
    if text == "ones":
        return weights.ones_weight()
    return weights.load_weight_table(text)


def _fmt_complex(z: complex) -> str:
    if abs(z.imag) < 1e-12:
        return f"{z.real:.12g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.12g} {sign} {abs(z.imag):.12g}i"


def _pair(z) -> list[float] | None:
    if z is None:
        return None
    z = complex(z)
    return [z.real, z.imag]


CSV_COLUMNS = [
    "identity", "params", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
    "abs_error", "rel_error", "tol", "pass", "tail_bound", "seed", "workers",
]


def _row_to_csv(row: dict) -> list:
    lhs = row.get("lhs") or [None, None]
    rhs = row.get("rhs") or [None, None]
    return [
        row.get("identity"),
        json.dumps(row.get("params", {}), sort_keys=True),
        lhs[0], lhs[1], rhs[0], rhs[1],
        row.get("abs_error"), row.get("rel_error"), row.get("tol"),
        row.get("pass"), row.get("tail_bound"), row.get("seed"), row.get("workers"),
    ]


def _emit(rows: list[dict], fmt: str, out: str | None) -> None:
    if fmt == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(_row_to_csv(row))
        text = buf.getvalue()
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {len(rows)} row(s) to {out}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def _build_config(args) -> SummationConfig:
    return SummationConfig(
        term_count=args.N,
        prime_limit=args.P,
        mode=args.mode,
        exploratory=args.exploratory,
        workers=args.workers,
    )


# --- subcommands ----------------------------------------------------------


def cmd_eval(args) -> int:
    fn = funcspec.parse(args.spec)
    ns = args.n
    rows = [{"n": n, "value": _pair(evaluate(fn, n))} for n in ns]
    if args.out or args.format != "table":
        fmt = "json" if args.format in ("table", "json") else "csv"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf)
            writer.writerow(["n", "re", "im"])
            for row in rows:
                writer.writerow([row["n"], row["value"][0], row["value"][1]])
            text = buf.getvalue()
        else:
            text = json.dumps({"function": fn.label, "values": rows}, indent=2) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    print(f"# {fn.label}")
    for row in rows:
        print(f"{row['n']:>10}  {_fmt_complex(complex(*row['value']))}")
    return 0


def cmd_convolve(args) -> int:
    F = funcspec.parse(args.f)
    G = funcspec.parse(args.g)
    if args.weight == "coprime":
        H = unitary_convolve(F, G)
    else:
        H = w_convolve(F, G, _resolve_weight(args.weight))
    print(f"# {H.label}")
    for n in args.n:
        print(f"{n:>10}  {_fmt_complex(evaluate(H, n))}")
    return 0


def cmd_char_table(args) -> int:
    k = args.k
    group = character_group(k)
    print(f"# characters mod {k} (phi = {len(group)}), rows indexed 0..{len(group) - 1}")
    header = "chi\\n |" + "".join(f" {n:>12}" for n in range(k))
    print(header)
    print("-" * len(header))
    for chi in group:
        cells = "".join(f" {_fmt_complex(chi(n)):>12}" for n in range(k))
        print(f"{chi.index:>6} |{cells}")
    if k >= 2:
        amax = args.amax if args.amax else k + 8
        print()
        print("# a : box-over-characters, closed form, product-over-characters")
        for a in range(2, amax + 1):
            box = box_over_characters(k, a)
            closed = box_over_characters_closed_form(k, a)
            prod = product_over_characters(k, a)
            print(
                f"{a:>6} : {_fmt_complex(box):>14} {_fmt_complex(closed):>14}"
                f" {_fmt_complex(prod):>14}"
            )
    return 0


def _series_grid(args) -> list[SeriesPoint]:
    ys = args.y if args.y is not None else [0.0]
    return [SeriesPoint(x, y) for x in args.x for y in ys]


def _run_series_identity(args, cfg: SummationConfig) -> list[IdentityReport]:
    name = args.identity
    reports = []
    for point in _series_grid(args):
        if name == "hardy":
            if point.y != 0:
                raise SystemExit("hardy is a real-axis identity; drop --y")
            reports.append(hardy_identity_check(point.x, cfg, args.tol))
        elif name == "zeta-cosine":
            reports.append(zeta_cosine_check(point, cfg, args.tol))
        elif name in ("modsq-direct-vs-factored", "modsq-direct-vs-euler",
                      "modsq-factored-vs-euler"):
            if args.chi is None:
                raise SystemExit(f"{name} needs --chi K:J")
            chi = _parse_chi(args.chi)
            run = {
                "modsq-direct-vs-factored": modsq_factored_check,
                "modsq-direct-vs-euler": modsq_euler_check,
                "modsq-factored-vs-euler": modsq_factored_euler_check,
            }[name]
            reports.append(run(chi, point, cfg, args.tol))
        elif name == "product-identity":
            F = funcspec.parse(args.f or "one")
            G = funcspec.parse(args.g or "one")
            reports.append(product_identity_check(F, G, point, cfg, args.tol))
        elif name == "conj-identity":
            F = funcspec.parse(args.f or "one")
            G = funcspec.parse(args.g or "one")
            reports.append(conj_identity_check(F, G, point, cfg, args.tol))
        elif name == "euler-complement":
            F = funcspec.parse(args.f or "one")
            primes = args.primes or [2, 3, 5]
            reports.append(euler_complement_check(F, primes, point, cfg, args.tol))
        elif name == "omega-product":
            reports.append(omega_series_check(point, cfg, args.tol))
        elif name == "omega-reciprocal":
            reports.append(omega_reciprocal_check(point, cfg, args.tol, variant="pair-sum"))
        elif name == "omega-reciprocal-split":
            reports.append(omega_reciprocal_check(point, cfg, args.tol, variant="split"))
        else:
            raise SystemExit(f"unhandled identity {name}")
    return reports


def cmd_verify(args) -> int:
    name = args.identity
    if name not in IDENTITIES:
        known = "\n  ".join(f"{n:<26} {help_}" for n, (help_, _) in sorted(IDENTITIES.items()))
        print(f"unknown identity {name!r}; available:\n  {known}", file=sys.stderr)
        return 2

    rows: list[dict] = []
    ok = True

    if name == "ring-axioms":
        W = _resolve_weight(args.weight)
        report = weights.check_ring_axioms(W, args.bound)
        print(report, file=sys.stderr)
        base = {"weight": W.label, "bound": args.bound}
        for axiom in report.AXIOMS:
            chk = report.checks[axiom]
            err = abs(chk.lhs - chk.rhs) if chk.lhs is not None and chk.rhs is not None else None
            rows.append({
                "identity": f"ring-axioms/{chk.name}",
                "params": {**base, "witness": list(chk.witness) if chk.witness else None},
                "lhs": _pair(chk.lhs),
                "rhs": _pair(chk.rhs),
                "abs_error": err,
                "rel_error": None,
                "tol": 1e-12,
                "pass": bool(chk.passed),
                "tail_bound": None,
                "seed": args.seed,
                "workers": args.workers,
            })
        ok = report.all_pass
    elif name == "box-characters":
        ks = args.k_list or [3, 4, 5, 8, 12]
        for k in ks:
            rep = box_characters_check(k, args.amax, args.tol)
            rep.seed = args.seed
            print(rep.summary(), file=sys.stderr)
            rows.append(rep.to_dict())
            ok = ok and (rep.passed is not False)
    else:
        cfg = _build_config(args)
        try:
            reports = _run_series_identity(args, cfg)
        except ConvergenceError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        for rep in reports:
            rep.seed = args.seed
            print(rep.summary(), file=sys.stderr)
            rows.append(rep.to_dict())
            ok = ok and (rep.passed is not False)

    _emit(rows, args.format if args.format != "table" else "json", args.out)
    return 0 if ok else 1


def cmd_list_identities(_args) -> int:
    for name, (help_, extras) in sorted(IDENTITIES.items()):
        print(f"{name:<26} {help_}   [{extras}]")
    return 0


# --- argument wiring -------------------------------------------------------


def _add_series_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--N", type=int, default=100_000, help="series cutoff (default 100000)")
    p.add_argument("--P", type=int, default=100_000, help="prime cutoff (default 100000)")
    p.add_argument("--x", type=_float_list, default=[2.0],
                   help="real parts, comma-separated (default 2)")
    p.add_argument("--y", type=_float_list, default=None,
                   help="imaginary parts, comma-separated (default 0)")
    p.add_argument("--mode", choices=("direct", "cesaro"), default="direct")
    p.add_argument("--exploratory", action="store_true",
                   help="allow 1/2 < Re(s) <= 1; such checks report not-applicable")
    p.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitring",
        description="multiplicative functions under unitary convolution: "
                    "evaluation, character tables, identity verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a function expression")
    p_eval.add_argument("spec", help=f"expression; atoms: {', '.join(funcspec.available_names())}")
    p_eval.add_argument("n", type=_parse_range, help="single n or range lo..hi")
    p_eval.add_argument("--out", default=None)
    p_eval.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_eval.set_defaults(run=cmd_eval)

    p_conv = sub.add_parser("convolve", help="convolve two function expressions")
    p_conv.add_argument("f")
    p_conv.add_argument("g")
    p_conv.add_argument("n", type=_parse_range)
    p_conv.add_argument("--weight", default="coprime",
                        help="coprime (unitary ring product), ones, or a table file")
    p_conv.set_defaults(run=cmd_convolve)

    p_char = sub.add_parser("char-table", help="print the character group mod k")
    p_char.add_argument("k", type=int)
    p_char.add_argument("--amax", type=int, default=None,
                        help="largest a for the box/product columns (default k+8)")
    p_char.set_defaults(run=cmd_char_table)

    p_ver = sub.add_parser("verify", help="run an identity check over a parameter grid")
    p_ver.add_argument("identity", help="see list-identities")
    _add_series_flags(p_ver)
    p_ver.add_argument("--tol", type=float, default=None,
                       help="override the tail-bound tolerance")
    p_ver.add_argument("--chi", default=None, help="character K:J for the modsq checks")
    p_ver.add_argument("--f", default=None, help="function expression F")
    p_ver.add_argument("--g", default=None, help="function expression G")
    p_ver.add_argument("--primes", type=_int_list, default=None,
                       help="prime set for euler-complement, comma-separated")
    p_ver.add_argument("--weight", default="coprime",
                       help="ring-axioms weight: coprime, ones, or a table file")
    p_ver.add_argument("--bound", type=int, default=50, help="ring-axioms bound")
    p_ver.add_argument("--k", dest="k_list", type=_int_list, default=None,
                       help="box-characters moduli, comma-separated (default 3,4,5,8,12)")
    p_ver.add_argument("--amax", type=int, default=10_000,
                       help="box-characters largest a (default 10000)")
    p_ver.add_argument("--seed", type=int, default=None)
    p_ver.add_argument("--out", default=None)
    p_ver.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_ver.set_defaults(run=cmd_verify)

    p_list = sub.add_parser("list-identities", help="list verifiable identities")
    p_list.set_defaults(run=cmd_list_identities)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (funcspec.FuncSpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
