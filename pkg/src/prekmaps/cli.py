"""Command line interface: ``prekmaps {map,collide,sweep,family,census,verify}``.

Exit status is 0 when everything holds, 2 when a checked property is
violated (a witness is printed), and 1 on bad input or any other error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from math import prod
from pathlib import Path

from . import __version__
from .census import CensusSummary, pre2_exact, pre2_sweep
from .collisions import SweepCache, find_collisions, sweep
from .families import (
    PQFamilyParams,
    gen_alpha_beta,
    gen_coprime_triple,
    gen_pq_family,
    gen_scaled_triple,
    validate_pair,
)
from .partitions import make_partition
from .prek import pre_k
from .schema import SCHEMA_VERSION
from .verify import DEFAULT_BOUNDS, SUITES, run_suite

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2
TABLE_MAX_PARTS = 12
CACHE_ENV = "PREK_CACHE_DIR"

log = logging.getLogger("prekmaps")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME")
    if base:
        return Path(base) / "prekmaps"
    if sys.platform == "win32" and os.environ.get("LOCALAPPDATA"):
        return Path(os.environ["LOCALAPPDATA"]) / "prekmaps" / "cache"
    if sys.platform == "darwin":
        return Path.home() / "Library" / "Caches" / "prekmaps"
    return Path.home() / ".cache" / "prekmaps"


def resolve_cache_dir(flag: str | None) -> Path:
    """--cache-dir, then $PREK_CACHE_DIR, then the platform default."""
    if flag:
        return Path(flag)
    if os.environ.get(CACHE_ENV):
        return Path(os.environ[CACHE_ENV])
    return default_cache_dir()


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def _parts(text: str):
    try:
        vals = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed part list: {text!r}") from None
    if any(v < 1 for v in vals):
        raise argparse.ArgumentTypeError("parts must be positive integers")
    return make_partition(vals)


def _length(text: str):
    return None if text == "all" else _positive(text)


# --- rendering -------------------------------------------------------------

def fmt_partition(p, truncate: bool = True) -> str:
    p = list(p)
    if not p:
        return "()"
    if truncate and len(p) > TABLE_MAX_PARTS:
        head = ",".join(map(str, p[:TABLE_MAX_PARTS]))
        return f"({head},… [{len(p)} parts])"
    return "(" + ",".join(map(str, p)) + ")"


def _plain_parts(p) -> str:
    return " ".join(map(str, p))


def _table(rows: list[list[str]], header: list[str]) -> str:
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


class Output:
    """Collects results for one command and renders them in the chosen format."""

    def __init__(self, command: str):
        self.command = command
        self.results: list[dict] = []
        self.summary: dict | None = None
        self.table_text: list[str] = []
        self.csv_header: list[str] = []
        self.csv_rows: list[list] = []

    def render(self, fmt: str) -> str:
        if fmt == "json":
            doc = {"schema_version": SCHEMA_VERSION, "command": self.command, "results": self.results}
            if self.summary is not None:
                doc["summary"] = self.summary
            return json.dumps(doc, indent=2, sort_keys=True) + "\n"
        if fmt == "csv":
            return _csv(self.csv_rows, self.csv_header)
        return "".join(self.table_text)


def _report_rows(out: Output, reports) -> None:
    out.csv_header = ["n", "k", "length_filter", "partitions_examined", "degenerate_count",
                      "injective", "class_count", "classes"]
    rows = []
    details = []
    for rep in reports:
        d = rep.to_dict()
        out.results.append(d)
        classes = ";".join(
            _plain_parts(c.image) + ":" + "|".join(_plain_parts(p) for p in c.preimages)
            for c in rep.classes
        )
        out.csv_rows.append([rep.n, rep.k, d["length_filter"], rep.partitions_examined,
                             rep.degenerate_count, str(rep.injective).lower(),
                             len(rep.classes), classes])
        rows.append([rep.n, rep.k, d["length_filter"], rep.partitions_examined,
                     rep.degenerate_count, "yes" if rep.injective else "no", len(rep.classes)])
        for c in rep.classes:
            pre = ", ".join(fmt_partition(p) for p in c.preimages[:16])
            more = f" (+{len(c.preimages) - 16} more)" if len(c.preimages) > 16 else ""
            details.append(f"  n={rep.n}: {fmt_partition(c.image)} <- {pre}{more}\n")
    out.table_text.append(_table(rows, ["n", "k", "length", "examined", "degenerate",
                                        "injective", "classes"]))
    if details:
        out.table_text.append("collision classes:\n")
        out.table_text.extend(details)


# --- commands --------------------------------------------------------------

def cmd_map(args) -> tuple[Output, int]:
    out = Output("map")
    res = pre_k(args.parts, args.k)
    img = res.image
    d = {
        "source": list(args.parts),
        "k": args.k,
        "image": list(img),
        "part_count": len(img),
        "image_weight": sum(img),
        "image_product": prod(img),
        "degenerate": res.degenerate,
    }
    out.results.append(d)
    out.csv_header = list(d)
    out.csv_rows.append([_plain_parts(args.parts), args.k, _plain_parts(img), len(img),
                         sum(img), prod(img), str(res.degenerate).lower()])
    note = f"  (degenerate: {len(args.parts)} parts < k = {args.k})" if res.degenerate else ""
    out.table_text.append(
        f"source       {fmt_partition(args.parts)}\n"
        f"k            {args.k}\n"
        f"image        {fmt_partition(img)}{note}\n"
        f"part count   {len(img)}\n"
        f"weight       {sum(img)}\n"
        f"product      {prod(img)}\n"
    )
    return out, EXIT_OK


def cmd_collide(args) -> tuple[Output, int]:
    out = Output("collide")
    rep = find_collisions(args.n, args.k, args.length)
    _report_rows(out, [rep])
    return out, EXIT_OK


def cmd_sweep(args) -> tuple[Output, int]:
    if args.n_from > args.n_to:
        raise UsageError("--from must not exceed --to")
    out = Output("sweep")
    cache = None if args.no_cache else SweepCache(resolve_cache_dir(args.cache_dir))
    if cache is not None and cache.corrupt_lines:
        log.warning("%d corrupt cache record(s) ignored; affected units are recomputed",
                    cache.corrupt_lines)
    reports = list(sweep(args.n_from, args.n_to, args.k, args.length, cache=cache, jobs=args.jobs))
    _report_rows(out, reports)
    injective = [r.n for r in reports if r.injective]
    out.summary = {"injective_n": injective, "non_injective_count": len(reports) - len(injective)}
    out.table_text.append(f"injective n: {injective}\n")
    return out, EXIT_OK


def cmd_family(args) -> tuple[Output, int]:
    out = Output("family")
    kind = args.kind
    if kind == "alpha-beta":
        pair = gen_alpha_beta(args.k if args.k is not None else 3)
    elif kind == "scaled":
        pair = gen_scaled_triple(args.m if args.m is not None else 1)
    elif kind == "coprime":
        pair = gen_coprime_triple(args.m if args.m is not None else 3)
    else:
        if args.p is None or args.q is None or args.m is None:
            raise UsageError("family pq needs --p, --q and --m")
        pair = gen_pq_family(PQFamilyParams(args.p, args.q, args.m, args.k or 3))
    verdict = validate_pair(pair)
    d = pair.to_dict()
    out.results.append(d)
    out.summary = {"valid": verdict.ok, "clause": verdict.clause}
    out.csv_header = ["family", "params", "k", "weight", "first", "second", "shared_image", "valid"]
    out.csv_rows.append([pair.family, " ".join(f"{k}={v}" for k, v in sorted(pair.params.items())),
                         pair.k, pair.weight, _plain_parts(pair.first), _plain_parts(pair.second),
                         _plain_parts(pair.shared_image), str(verdict.ok).lower()])
    params = ", ".join(f"{k}={v}" for k, v in sorted(pair.params.items()))
    out.table_text.append(
        f"family       {pair.family} ({params})\n"
        f"first        {fmt_partition(pair.first)}\n"
        f"second       {fmt_partition(pair.second)}\n"
        f"weight       {pair.weight}\n"
        f"pre_{pair.k} image  {fmt_partition(pair.shared_image)}\n"
        f"valid        {'yes' if verdict else 'NO: ' + verdict.clause}\n"
    )
    return out, EXIT_OK if verdict else EXIT_VIOLATION


def cmd_census(args) -> tuple[Output, int]:
    out = Output("census")
    summary = CensusSummary()
    if args.n is not None:
        records = [pre2_exact(args.n)]
        summary.n_max = args.n
        if records[0].exact_count == 1:
            summary.count_one.append(args.n)
        if records[0].exact_count < records[0].lower_bound:
            summary.bound_violations.append(args.n)
    else:
        records = list(pre2_sweep(args.n_max, summary, jobs=args.jobs))
    out.results = [r.to_dict() for r in records]
    out.summary = summary.to_dict()
    out.csv_header = ["n", "exact", "lower_bound", "gap"]
    out.csv_rows = [[r.n, r.exact_count, r.lower_bound, r.gap] for r in records]
    out.table_text.append(_table([list(map(str, row)) for row in out.csv_rows], out.csv_header))
    if args.n is not None:
        out.table_text.append("images: " + ", ".join(fmt_partition(p) for p in records[0].images) + "\n")
    out.table_text.append(f"n with pre_2(n) = 1: {summary.count_one}\n")
    if summary.bound_violations:
        out.table_text.append(f"LOWER BOUND VIOLATED at n = {summary.bound_violations}\n")
    return out, EXIT_OK if summary.ok else EXIT_VIOLATION


def cmd_verify(args) -> tuple[Output, int]:
    out = Output("verify")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    cache = None if args.no_cache else SweepCache(resolve_cache_dir(args.cache_dir))
    rows = []
    for name in names:
        res = run_suite(name, args.n_max, cache=cache, jobs=args.jobs)
        out.results.append(res.to_dict())
        rows.append([name, res.n_max, res.checked, "pass" if res.ok else "FAIL"])
        for f in res.failures[:10]:
            out.table_text.append(f"[{name}] violation: {json.dumps(f, sort_keys=True)}\n")
        for key, val in sorted(res.details.items()):
            out.table_text.append(f"[{name}] {key}: {val}\n")
    out.csv_header = ["suite", "n_max", "checked", "ok"]
    out.csv_rows = [[r[0], r[1], r[2], str(r[3] == "pass").lower()] for r in rows]
    out.table_text.append(_table([list(map(str, r)) for r in rows], ["suite", "n_max", "checked", "result"]))
    ok = all(r["ok"] for r in out.results)
    return out, EXIT_OK if ok else EXIT_VIOLATION


# --- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--cache-dir", help=f"sweep cache directory (default: ${CACHE_ENV} or platform cache)")
    common.add_argument("--jobs", "-j", type=_positive, default=1, help="worker processes")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the sweep cache")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="prekmaps", description="pre_k maps on integer partitions")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("map", parents=[common], help="apply pre_k to one partition")
    p.add_argument("--parts", type=_parts, required=True, help="comma separated parts, e.g. 7,4,4")
    p.add_argument("--k", type=_positive, required=True)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("collide", parents=[common], help="exhaustive collision search at one n")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--length", type=_length, default=None, help="exact part count, or 'all'")
    p.set_defaults(func=cmd_collide)

    p = sub.add_parser("sweep", parents=[common], help="collision search over a range of n (cached)")
    p.add_argument("--from", dest="n_from", type=_nonneg, required=True)
    p.add_argument("--to", dest="n_to", type=_nonneg, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--length", type=_length, default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("family", parents=[common], help="generate and validate a collision pair")
    p.add_argument("kind", choices=("alpha-beta", "scaled", "coprime", "pq"))
    p.add_argument("--k", type=_positive)
    p.add_argument("--m", type=_positive)
    p.add_argument("--p", type=_positive)
    p.add_argument("--q", type=_positive)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("census", parents=[common], help="exact count of pre_2 images of weight n")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=_positive)
    g.add_argument("--n-max", type=_positive)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--n-max", type=_positive, default=None,
                   help="suite bound; defaults: " + ", ".join(f"{k}={v}" for k, v in DEFAULT_BOUNDS.items()))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        out, code = args.func(args)
        text = out.render(args.format)
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    except (UsageError, ValueError, OSError) as exc:
        print(f"prekmaps: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return code


if __name__ == "__main__":
    sys.exit(main())
