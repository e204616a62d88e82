"""Command line front end.

Exit codes: 0 success, 2 domain rejection, 1 internal error, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import partitions as P
from . import regbounds, relations, symfunc, verify
from .partitions import BiShape

EXIT_OK, EXIT_INTERNAL, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2, 64
LARGE_CAP = 10 ** 6


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _partition_arg(text: str):
    try:
        return P.parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _segment_arg(text: str):
    """``1,2;1,3;2,3`` -> [(1,2), (1,3), (2,3)]."""
    try:
        return [tuple(int(x) for x in chunk.split(",")) for chunk in text.split(";") if chunk.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad segment {text!r}; use e.g. 1,2;1,3;2,3")


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _fmt_partition(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def _cap(args):
    return LARGE_CAP if args.confirm_large else None


# --- subcommands ---------------------------------------------------------------

def cmd_decompose(args) -> str:
    """Admissible shapes of degree d with their tensor multiplicity and type."""
    rows = []
    for lam in P.admissible_partitions(args.t, args.d):
        if args.m is not None and P.part(lam, 0) > min(args.m, args.n or args.m):
            continue
        entry = {"partition": list(lam),
                 "tensor_mult": P.tensor_multiplicity(lam, args.t)}
        typ = P.is_single_type(lam, args.t, cap=_cap(args))
        entry["single_type"] = list(typ) if typ else None
        if args.m is not None:
            n = args.n if args.n is not None else args.m
            entry["dim"] = symfunc.dim_schur(lam, args.m) * symfunc.dim_schur(lam, n)
        rows.append(entry)
    if args.format == "json":
        return _dumps(rows)
    if args.format == "csv":
        head = ["partition", "tensor_mult", "single_type"] + (["dim"] if args.m is not None else [])
        return _csv([head] + [[" ".join(map(str, r["partition"])), r["tensor_mult"],
                               " ".join(map(str, r["single_type"] or []))]
                              + ([r["dim"]] if "dim" in r else []) for r in rows])
    lines = []
    for r in rows:
        typ = _fmt_partition(r["single_type"]) if r["single_type"] else "-"
        extra = f" dim={r['dim']}" if "dim" in r else ""
        lines.append(f"{_fmt_partition(r['partition'])} mult={r['tensor_mult']} type={typ}{extra}")
    return "\n".join(lines) + "\n"


def cmd_plethysm(args) -> str:
    exp = symfunc.plethysm_exterior(args.mu, args.t, cap=_cap(args))
    data = symfunc.expansion_to_json(exp)
    if args.format == "json":
        return _dumps(data)
    if args.format == "csv":
        return _csv([["partition", "mult"]] + [[" ".join(map(str, e["partition"])), e["mult"]]
                                               for e in data])
    return "".join(f"{_fmt_partition(e['partition'])} {e['mult']}\n" for e in data)


def cmd_relation(args) -> str:
    kind = args.kind
    if kind == "f":
        _need(args, "u", "v")
        p = relations.quadratic_relation(args.t, args.u, args.v)
    elif kind == "g":
        _need(args, "u")
        p = relations.even_cubic(args.t, args.u)
    elif kind == "h":
        _need(args, "u")
        p = relations.odd_cubic(args.t, args.u)
    else:
        if not args.rows or not args.cols:
            raise ValueError("kind det needs --rows and --cols")
        p = relations.determinantal_relation(args.t, args.rows, args.cols)
    if args.mirror:
        p = relations.mirror(p)
    if args.format == "json":
        return _dumps({"t": p.t, "degree": p.degree(), "terms": len(p), "text": p.to_text()})
    return p.to_text() + "\n"


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ValueError(f"--{name} is required for kind {args.kind}")


def _read_polys(args) -> list:
    if args.poly is not None:
        texts = [args.poly]
    elif args.file is not None:
        with open(args.file) as fh:
            texts = [line for line in fh if line.strip()]
    else:
        texts = [line for line in sys.stdin if line.strip()]
    return [relations.parse_polynomial(x) for x in texts]


def cmd_verify(args) -> str:
    results = []
    for p in _read_polys(args):
        entry = {"terms": len(p)}
        if args.probe:
            entry["probe"] = verify.random_probe(p, args.m, args.n, args.trials, args.seed)
        else:
            entry["is_relation"] = verify.is_relation(p, args.m, args.n)
        results.append(entry)
    if args.format == "json":
        return _dumps(results)
    key = "probe" if args.probe else "is_relation"
    return "".join(f"{str(r[key]).lower()}\n" for r in results)


def cmd_minimality(args) -> str:
    b = BiShape(args.row, args.col)
    kw = {}
    if args.confirm_large:
        kw = {"max_degree": 99, "max_td": 99, "cap": LARGE_CAP, "exhaustive_cap": LARGE_CAP}
    v = verify.minimality_check(b, args.t, budget=args.budget, m=args.m, n=args.n, **kw)
    if args.format == "json":
        return _dumps(v.to_json())
    return f"{b} {v.status} rank {v.rank_found}/{v.rank_needed} ({v.method})\n"


def cmd_regularity(args) -> str:
    r = regbounds.regularity(args.t, args.m, args.n)
    if args.format == "json":
        return r.dumps() + "\n"
    if args.format == "csv":
        return _csv([["case", "k0", "reg"], [r.case, "" if r.k0 is None else r.k0,
                                              "" if r.value is None else r.value]])
    if r.case == "excluded":
        return f"excluded: {r.reason}\n"
    extra = f", k0={r.k0}" if r.k0 is not None else ""
    return f"reg={r.value} (case {r.case}{extra}); degree bound {regbounds.degree_bound(args.t, args.m, args.n)}\n"


def cmd_hilbert(args) -> str:
    if args.d is not None:
        degrees = [args.d]
    else:
        degrees = list(range((args.dmax if args.dmax is not None else 4) + 1))
    rows = []
    for d in degrees:
        if args.brute:
            cap = LARGE_CAP if args.confirm_large else verify.BRUTE_CAP
            val = verify.brute_dim_At(args.t, args.m, args.n, d, cap=cap)
        else:
            val = regbounds.hilbert_At(args.t, args.m, args.n, d)
        rows.append((d, val))
    if args.format == "json":
        return _dumps([{"d": d, "dim": v} for d, v in rows])
    if args.format == "csv":
        return _csv([["d", "dim"]] + [list(r) for r in rows])
    return "".join(f"{d} {v}\n" for d, v in rows)


def cmd_export(args) -> str:
    fam = verify.generator_family(args.t, args.m, args.n, args.degmax)
    if args.format == "json":
        return _dumps([{"name": name, "text": p.to_text()} for name, p in fam])
    return "".join(p.to_text() + "\n" for _, p in fam)


def cmd_tshape(args) -> str:
    if args.m is not None:
        shapes = P.shape_relations_deg3(args.t, args.m, args.n if args.n is not None else args.m,
                                        cap=_cap(args))
    else:
        shapes = P.classify_tshape(args.t, args.d)
    if args.format == "json":
        return _dumps([b.to_json() for b in shapes])
    if args.format == "csv":
        return _csv([["row", "col"]] + [[" ".join(map(str, b.row)), " ".join(map(str, b.col))]
                                        for b in shapes])
    return "".join(f"{b}\n" for b in shapes)


# --- parser --------------------------------------------------------------------

def build_parser() -> Parser:
    parser = Parser(prog="minorrel", description="Relations between minors of a generic matrix.")
    sub = parser.add_subparsers(dest="command", parser_class=Parser)
    sub.required = True

    def add(name, func, help_text, formats=("json", "text", "csv"), default="json"):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--confirm-large", action="store_true",
                        help="allow computations beyond the default size caps")
        return sp

    sp = add("decompose", cmd_decompose, "admissible shapes of degree d")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)

    sp = add("plethysm", cmd_plethysm, "decompose L_mu of the t-th exterior power")
    sp.add_argument("--mu", type=_partition_arg, required=True)
    sp.add_argument("--t", type=int, required=True)

    sp = add("relation", cmd_relation, "print an explicit relation", ("text", "json"), "text")
    sp.add_argument("--kind", choices=("f", "g", "h", "det"), required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--u", type=int)
    sp.add_argument("--v", type=int)
    sp.add_argument("--rows", type=_segment_arg, help="row segment, e.g. 1,2;1,3;2,3")
    sp.add_argument("--cols", type=_segment_arg, help="column segment")
    sp.add_argument("--mirror", action="store_true")

    sp = add("verify", cmd_verify, "check that polynomials vanish", ("json", "text"), "json")
    sp.add_argument("--poly")
    sp.add_argument("--file")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--probe", action="store_true", help="random evaluation instead of expansion")
    sp.add_argument("--trials", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("minimality", cmd_minimality, "minimality verdict for a bi-shape", ("json", "text"))
    sp.add_argument("--row", type=_partition_arg, required=True)
    sp.add_argument("--col", type=_partition_arg, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--budget", type=int, default=4)

    sp = add("regularity", cmd_regularity, "regularity of the minor algebra")
    for f in ("--t", "--m", "--n"):
        sp.add_argument(f, type=int, required=True)

    sp = add("hilbert", cmd_hilbert, "Hilbert function of the minor algebra", default="csv")
    for f in ("--t", "--m", "--n"):
        sp.add_argument(f, type=int, required=True)
    sp.add_argument("--d", type=int)
    sp.add_argument("--dmax", type=int)
    sp.add_argument("--brute", action="store_true", help="rank computation instead of the formula")

    sp = add("export", cmd_export, "standard generators in plain text", ("text", "json"), "text")
    for f in ("--t", "--m", "--n"):
        sp.add_argument(f, type=int, required=True)
    sp.add_argument("--degmax", type=int, default=3)

    sp = add("tshape", cmd_tshape, "T-shape or degree-3 shape relations", default="text")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--d", type=int, default=3)
    sp.add_argument("--m", type=int, help="list degree-3 shape relations fitting m x n")
    sp.add_argument("--n", type=int)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        text = args.func(args)
    except symfunc.CapExceeded as exc:
        print(f"rejected: {exc}; pass --confirm-large to run anyway", file=err)
        return EXIT_DOMAIN
    except verify.BruteCapExceeded as exc:
        print(f"rejected: {exc}; pass --confirm-large to run anyway", file=err)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"rejected: {exc}", file=err)
        return EXIT_DOMAIN
    except Exception as exc:  # pragma: no cover - reported, not hidden
        print(f"internal error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_INTERNAL
    if text and not text.endswith("\n"):
        text += "\n"
    out.write(text)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
