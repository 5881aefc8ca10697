"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .cache import load_or_build, resolve_cache_dir
from .classifier import (
    CSV_COLUMNS,
    PentagramIndex,
    build_atlas,
    context_kinds,
    klein_census,
    load_table1,
    signature,
    type_index,
)
from .enumerator import Pentagram, pentagrams_on_quadric, validate_pentagram
from .errors import AtlasError, MissingType, UnknownSignature
from .polar_space import extend_to_fano, line_at_infinity, make_context
from .render import render_dot, render_svg
from .verify import format_report, run_verification, table_diff

log = logging.getLogger(__name__)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    cache_dir: Path
    output_format: str = "text"
    threads: int | None = None
    out: Path | None = None
    golden: Path | None = None
    render_target: list[str] = field(default_factory=list)
    svg: bool = False


def _write(config: RunConfig, text: str) -> None:
    if config.out is None:
        sys.stdout.write(text)
    else:
        config.out.write_text(text)


def _pentagrams(config: RunConfig) -> list[Pentagram]:
    pentagrams, rebuilt = load_or_build(config.cache_dir, config.threads)
    if rebuilt:
        log.info("cache rebuilt in %s", config.cache_dir)
    return pentagrams


def parse_pentagram(specs: list[str]) -> Pentagram:
    """Five comma-separated label quadruples, e.g. ``XII,IXI,IIX,XXX``."""
    if len(specs) == 1 and ";" in specs[0]:
        specs = specs[0].split(";")
    if len(specs) != 5:
        raise UsageError(f"expected 5 contexts, got {len(specs)}")
    contexts = [make_context(s.strip().split(",")) for s in specs]
    return validate_pentagram(contexts)


def select(config: RunConfig, pentagrams: list[Pentagram] | None = None) -> Pentagram:
    target = config.render_target
    if len(target) == 1 and target[0].lstrip("-").isdigit():
        pentagrams = pentagrams if pentagrams is not None else _pentagrams(config)
        i = int(target[0])
        if not 0 <= i < len(pentagrams):
            raise UsageError(f"selector {i} out of range 0..{len(pentagrams) - 1}")
        return pentagrams[i]
    return parse_pentagram(target)


def cmd_enumerate(config: RunConfig) -> int:
    pentagrams = _pentagrams(config)
    meta = json.loads((config.cache_dir / "pentagrams.meta.json").read_text())
    if config.output_format == "json":
        _write(config, json.dumps(meta, indent=2) + "\n")
    else:
        fam = ", ".join(f"{k} negative: {v}" for k, v in meta["families"].items())
        _write(config, f"{len(pentagrams)} pentagrams ({fam})\ncache: {config.cache_dir}\n")
    return 0


def cmd_table(config: RunConfig) -> int:
    golden = load_table1(config.golden)
    pentagrams = _pentagrams(config)
    try:
        atlas = build_atlas(pentagrams, golden)
    except (UnknownSignature, MissingType):
        for line in table_diff(golden, Counter(signature(p) for p in pentagrams)):
            print(line, file=sys.stderr)
        return 1
    if config.output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS + ["N"])
        writer.writerows(row.csv_row() for row in atlas)
        _write(config, buf.getvalue())
    elif config.output_format == "json":
        _write(config, json.dumps([row.to_json() for row in atlas], indent=1) + "\n")
    else:
        lines = ["  ".join(f"{c:>4}" for c in CSV_COLUMNS + ["N"])]
        lines += ["  ".join(f"{v:>4}" for v in row.csv_row()) for row in atlas]
        _write(config, "\n".join(lines) + "\n")
    expected = {row.t: row.k for row in golden}
    bad = [row for row in atlas if row.k != expected[row.t]]
    for row in bad:
        print(f"K mismatch T={row.t}: table {expected[row.t]}, computed {row.k}", file=sys.stderr)
    return 1 if bad else 0


def cmd_classify(config: RunConfig) -> int:
    p = parse_pentagram(config.render_target)
    sig = signature(p)
    t = type_index(load_table1(config.golden)).get(sig)
    if config.output_format == "json":
        rec = {
            "type": t,
            "signature": list(sig),
            "contexts": [
                {**c.to_json(), "plane": extend_to_fano(c).to_json(),
                 "infinity": list(line_at_infinity(c).labels)}
                for c in p.contexts
            ],
        }
        _write(config, json.dumps(rec, indent=1) + "\n")
    else:
        lines = [f"type {t if t is not None else '?'}", "signature " + " ".join(map(str, sig))]
        for c, ck in zip(p.contexts, context_kinds(p)):
            sign = "+" if ck.sign > 0 else "-"
            inf = " ".join(line_at_infinity(c).labels)
            lines.append(f"  {' '.join(c.labels)}  {sign}  plane {ck.plane_class.value:<3}  infinity {inf}")
        _write(config, "\n".join(lines) + "\n")
    return 0 if t is not None else 1


def cmd_klein(config: RunConfig) -> int:
    golden = load_table1(config.golden)
    pentagrams = _pentagrams(config)
    atlas = build_atlas(pentagrams, golden)
    census = klein_census(atlas, pentagrams_on_quadric(pentagrams), golden)
    rows = [(t, census.expected[t], k) for t, k in sorted(census.counts.items())]
    if config.output_format == "json":
        doc = {"total": census.total, "realized": len(census.realized_types),
               "missing": sorted(census.missing_types),
               "rows": [{"T": t, "K_table": e, "K": k} for t, e, k in rows]}
        _write(config, json.dumps(doc, indent=1) + "\n")
    elif config.output_format == "csv":
        _write(config, "T,K_table,K\n" + "".join(f"{t},{e},{k}\n" for t, e, k in rows))
    else:
        lines = [f"{census.total} pentagrams on the Klein quadric, {len(census.realized_types)} types",
                 f"missing types: {sorted(census.missing_types)}"]
        lines += [f"T={t:>2}  K_table={e:>2}  K={k:>2}" + ("  MISMATCH" if e != k else "") for t, e, k in rows]
        _write(config, "\n".join(lines) + "\n")
    return 1 if census.mismatches else 0


def cmd_neighbors(config: RunConfig) -> int:
    pentagrams = _pentagrams(config)
    p = select(config, pentagrams)
    types = type_index(load_table1(config.golden))
    found = PentagramIndex(pentagrams).neighbors(p)
    if config.output_format == "json":
        _write(config, json.dumps([{**q.to_json(), "type": types.get(signature(q))} for q in found], indent=1) + "\n")
    else:
        lines = [f"{len(found)} two-edge neighbors"]
        lines += [f"type {types.get(signature(q))}: " + " | ".join(" ".join(c.labels) for c in q.contexts) for q in found]
        _write(config, "\n".join(lines) + "\n")
    return 0


def cmd_render(config: RunConfig) -> int:
    p = select(config)
    t = type_index(load_table1(config.golden)).get(signature(p))
    _write(config, render_svg(p) if config.svg else render_dot(p, title=f"type {t}"))
    return 0


def cmd_verify(config: RunConfig) -> int:
    checks = run_verification(config.cache_dir, config.threads, config.golden)
    _write(config, format_report(checks))
    return 0 if all(c.passed for c in checks) else 1


HANDLERS = {
    "enumerate": cmd_enumerate,
    "table": cmd_table,
    "classify": cmd_classify,
    "klein": cmd_klein,
    "neighbors": cmd_neighbors,
    "render": cmd_render,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", type=Path, default=None,
                        help="cache directory (default: $PENTAGRAM_ATLAS_CACHE or ./cache)")
    common.add_argument("--format", dest="output_format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--threads", type=int, default=None, help="enumeration workers (default: all cores)")
    common.add_argument("--out", type=Path, default=None, help="write output to FILE")
    common.add_argument("--golden", type=Path, default=None, help="alternative type-table CSV")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="pentagram-atlas", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("enumerate", parents=[common], help="enumerate pentagrams into the cache")
    sub.add_parser("table", parents=[common], help="the 45-type atlas")
    p = sub.add_parser("classify", parents=[common], help="classify one pentagram")
    p.add_argument("contexts", nargs="+", metavar="CONTEXT", help="e.g. XII,IXI,IIX,XXX (five of them)")
    sub.add_parser("klein", parents=[common], help="census of pentagrams on the Klein quadric")
    for name in ("neighbors", "render"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("selector", nargs="+", help="index into the enumeration, or five contexts")
        if name == "render":
            p.add_argument("--svg", action="store_true", help="emit SVG instead of DOT")
    sub.add_parser("verify", parents=[common], help="run every check and print a report")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.threads is not None and args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    config = RunConfig(
        command=args.command,
        cache_dir=resolve_cache_dir(args.cache_dir),
        output_format=args.output_format,
        threads=args.threads,
        out=args.out,
        golden=args.golden,
        render_target=getattr(args, "contexts", None) or getattr(args, "selector", None) or [],
        svg=getattr(args, "svg", False),
    )
    try:
        return HANDLERS[config.command](config)
    except (UsageError, AtlasError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
