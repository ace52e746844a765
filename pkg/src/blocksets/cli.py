"""Command-line surface: evaluate colourings, enumerate placements, run searches.

Reports are emitted as JSON (schema-stable), CSV (one found-entry per row) or
text (human-oriented).  Exit codes: 0 completed, 1 usage error, 2 node budget
exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import blocks, colourings, lattice, search
from .words import encode_word


class UsageError(ValueError):
    """Invalid flags or flag combinations; aggregated before reporting."""


class _Parser(argparse.ArgumentParser):
    """argparse variant that raises instead of exiting with status 2."""

    def error(self, message: str):
        raise UsageError(message)


@dataclass
class RunConfig:
    """Validated inputs of one CLI invocation."""

    command: str
    subcommand: str
    colouring_spec: Optional[str] = None
    template: Optional[blocks.Template] = None
    n: int = 0
    sizemode: Optional[blocks.SizeMode] = None
    pattern: Optional[str] = None
    workers: int = 1
    budget: int = 1_000_000
    out_format: str = "json"
    output: Optional[str] = None
    seed: int = 0
    stable: bool = False
    extra: dict = field(default_factory=dict)


def _default_workers() -> int:
    return min(os.cpu_count() or 1, 8)


# ---------------------------------------------------------------------------
# colouring spec strings


def parse_word_colouring(spec: str, seed: int = 0, n: int = 0, m: int = 3) -> colourings.Colouring:
    """Parse specs like "contribution:m=2,l=2", "table:@file.json",
    "induced:base=<spec>,k=2", "random:k=4", "constant:c=0,k=1",
    "countmod:s=1,k=2"."""
    kind, _, rest = spec.partition(":")
    if kind == "contribution":
        opts = _parse_opts(rest, {"m", "l"})
        return colourings.ContributionColouring(int(opts["m"]), int(opts["l"]))
    if kind == "table":
        if not rest.startswith("@"):
            raise UsageError(f"table spec needs a file: table:@file.json, got {spec!r}")
        return _load_table(rest[1:])
    if kind == "induced":
        if not rest.startswith("base="):
            raise UsageError(f"induced spec needs base=<spec>,k=<int>, got {spec!r}")
        body = rest[len("base="):]
        cut = body.rfind(",k=")
        if cut < 0:
            raise UsageError(f"induced spec needs a trailing ,k=<int>, got {spec!r}")
        base = parse_word_colouring(body[:cut], seed, n, m)
        return colourings.InducedColouring(base, int(body[cut + 3:]))
    if kind == "random":
        opts = _parse_opts(rest, {"k"})
        if n <= 0:
            raise UsageError("random colouring needs a word length from --n")
        return colourings.random_table_colouring(n, m, int(opts["k"]), seed)
    if kind == "constant":
        opts = _parse_opts(rest, {"c", "k"}, optional=True)
        return colourings.ConstantColouring(int(opts.get("c", 0)), int(opts.get("k", 1)))
    if kind == "countmod":
        opts = _parse_opts(rest, {"s", "k"})
        return colourings.ModularCountColouring(int(opts["s"]), int(opts["k"]))
    raise UsageError(f"unknown colouring spec {spec!r}")


def parse_lattice_colouring(spec: str, box: lattice.Box, seed: int = 0) -> lattice.LatticeColouring:
    """Parse "coordsum:d=2", "constant:c=0,k=1" or "random:k=4" over a box."""
    kind, _, rest = spec.partition(":")
    if kind == "coordsum":
        opts = _parse_opts(rest, {"d"})
        return lattice.CoordinateSumColouring(int(opts["d"]))
    if kind == "constant":
        opts = _parse_opts(rest, {"c", "k"}, optional=True)
        return lattice.ConstantLatticeColouring(int(opts.get("c", 0)), int(opts.get("k", 1)))
    if kind == "random":
        opts = _parse_opts(rest, {"k"})
        return lattice.random_lattice_colouring(box, int(opts["k"]), seed)
    raise UsageError(f"unknown lattice colouring spec {spec!r}")


def _parse_opts(rest: str, keys: set[str], optional: bool = False) -> dict[str, str]:
    opts: dict[str, str] = {}
    if rest:
        for part in rest.split(","):
            key, eq, value = part.partition("=")
            if not eq or key not in keys:
                raise UsageError(f"bad colouring option {part!r} (expected one of {sorted(keys)})")
            opts[key] = value
    if not optional:
        missing = keys - opts.keys()
        if missing:
            raise UsageError(f"colouring spec missing options: {sorted(missing)}")
    return opts


def _load_table(path: str) -> colourings.TableColouring:
    with open(path) as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict) or not raw:
        raise UsageError(f"table file {path} must be a non-empty JSON object")
    m = max(2, max(int(ch) for word in raw for ch in word))
    entries = {encode_word(word, m): int(cid) for word, cid in raw.items()}
    return colourings.TableColouring(entries, label=f"table:@{path}")


# ---------------------------------------------------------------------------
# report output


def emit_report(report: dict, out_format: str, stream, stable: bool = False) -> None:
    """Serialize a report dict.  JSON is schema-stable; CSV flattens the found
    list one entry per row; text is human-oriented."""
    if stable and "elapsed_ms" in report:
        report = dict(report, elapsed_ms=0.0)
    if out_format == "json":
        json.dump(report, stream, sort_keys=True, indent=2)
        stream.write("\n")
    elif out_format == "csv":
        _emit_csv(report, stream)
    elif out_format == "text":
        _emit_text(report, stream)
    else:
        raise UsageError(f"unknown format {out_format!r}")


def _emit_csv(report: dict, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    found = report.get("found")
    if found is None:
        keys = sorted(report)
        writer.writerow(keys)
        writer.writerow([_cell(report[k]) for k in keys])
        return
    keys = sorted({k for entry in found for k in entry}) or ["colour", "placement"]
    writer.writerow(keys)
    for entry in found:
        writer.writerow([_cell(entry.get(k)) for k in keys])


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (str, int, float)):
        return str(value)
    return json.dumps(value, sort_keys=True)


def _emit_text(report: dict, stream) -> None:
    for key in sorted(report):
        value = report[key]
        if key in ("vector", "tuple") and isinstance(value, list):
            stream.write(f"{key}: ({', '.join(str(v) for v in value)})\n")
        elif key == "found" and isinstance(value, list):
            stream.write(f"found: {len(value)}\n")
            for entry in value:
                stream.write(f"  {json.dumps(entry, sort_keys=True)}\n")
        elif key == "points" and isinstance(value, list):
            stream.write(f"points: {len(value)}\n")
            for word in value:
                stream.write(f"  {word}\n")
        else:
            stream.write(f"{key}: {_cell(value)}\n")


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> _Parser:
    parser = _Parser(prog="blocksets", description=__doc__)
    top = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, workers: bool = True) -> None:
        p.add_argument("--format", choices=["json", "csv", "text"], default=None)
        p.add_argument("--output", default=None, help="write the report to this path")
        p.add_argument("--stable", action="store_true", help="zero timing fields")
        p.add_argument("--seed", type=int, default=0)
        if workers:
            p.add_argument("--workers", type=int, default=None)

    colour = top.add_parser("colour").add_subparsers(dest="subcommand", required=True)
    p = colour.add_parser("eval", help="evaluate a colouring on one word")
    p.add_argument("--colouring", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--m", type=int, default=3)
    common(p, workers=False)

    blockset = top.add_parser("blockset").add_subparsers(dest="subcommand", required=True)
    p = blockset.add_parser("points", help="list the words a placement generates")
    p.add_argument("--template", required=True)
    p.add_argument("--blocks", required=True, help='e.g. "1,6;2,5;3,4"')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reference", default="", help="symbols for the non-block coordinates, in order")
    common(p, workers=False)
    p = blockset.add_parser("enum", help="enumerate placements")
    p.add_argument("--template", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--size-mode", required=True)
    p.add_argument("--pattern", default=None)
    p.add_argument("--reference-domain", default=None, help='symbols, e.g. "12"')
    p.add_argument("--limit", type=int, default=None)
    common(p, workers=False)

    searchp = top.add_parser("search").add_subparsers(dest="subcommand", required=True)
    p = searchp.add_parser("mono", help="find the first monochromatic placement")
    p.add_argument("--colouring", required=True)
    p.add_argument("--template", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--size-mode", required=True)
    p.add_argument("--pattern", default=None)
    p.add_argument("--reference-domain", default=None)
    common(p)
    p = searchp.add_parser("witness", help="search for a colouring with no monochromatic placement")
    p.add_argument("--template", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--size-mode", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=1_000_000)
    common(p, workers=False)

    verify = top.add_parser("verify").add_subparsers(dest="subcommand", required=True)
    p = verify.add_parser("thm2", help="exhaustive absence check for the layered colouring at degree d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pq", default=None, help="override template as 1 2^p 3^q, e.g. --pq 1,2")
    p.add_argument("--equal-size", action="store_true", help="equal-size blocks instead of sizes <= d")
    p.add_argument("--max-size", type=int, default=None,
                   help="verify blocks of size <= this instead of <= d (e.g. d-1)")
    common(p)

    extract = top.add_parser("extract").add_subparsers(dest="subcommand", required=True)
    p = extract.add_parser("thm3", help="extract a monochromatic ABCCBA copy of 123")
    p.add_argument("--colouring", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", default=None, help="comma-separated homogeneous set (found by search if omitted)")
    common(p, workers=False)

    latticep = top.add_parser("lattice").add_subparsers(dest="subcommand", required=True)
    p = latticep.add_parser("ap", help="monochromatic x-v, x, x+v search")
    p.add_argument("--colouring", required=True)
    p.add_argument("--box", required=True, help='e.g. "0..3^2"')
    p.add_argument("--d", type=int, required=True)
    common(p)
    p = latticep.add_parser("ball", help="monochromatic generated-ball search")
    p.add_argument("--colouring", required=True)
    p.add_argument("--box", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    common(p)

    return parser


def _parse_blocks(text: str) -> list[list[int]]:
    try:
        return [[int(c) for c in chunk.split(",")] for chunk in text.split(";")]
    except ValueError:
        raise UsageError(f"bad blocks spec {text!r} (expected e.g. 1,6;2,5;3,4)") from None


def _collect_config(args: argparse.Namespace) -> RunConfig:
    """Validate parsed flags, aggregating every problem into one message."""
    problems: list[str] = []
    cfg = RunConfig(command=args.command, subcommand=args.subcommand)
    cfg.out_format = getattr(args, "format", None) or _default_format(args)
    cfg.output = getattr(args, "output", None)
    cfg.stable = getattr(args, "stable", False)
    cfg.seed = getattr(args, "seed", 0)
    workers = getattr(args, "workers", None)
    cfg.workers = workers if workers is not None else _default_workers()
    if cfg.workers < 1:
        problems.append(f"--workers must be >= 1, got {cfg.workers}")
    cfg.budget = getattr(args, "budget", 1_000_000)
    if cfg.budget < 1:
        problems.append(f"--budget must be >= 1, got {cfg.budget}")

    if hasattr(args, "template"):
        try:
            cfg.template = blocks.template_from_word(args.template)
        except ValueError as exc:
            problems.append(str(exc))
    if hasattr(args, "n"):
        cfg.n = args.n
        if args.n < 0:
            problems.append(f"--n must be >= 0, got {args.n}")
    if getattr(args, "size_mode", None):
        try:
            cfg.sizemode = blocks.parse_sizemode(args.size_mode)
        except ValueError as exc:
            problems.append(str(exc))
    cfg.pattern = getattr(args, "pattern", None)

    for name in ("colouring", "word", "m", "blocks", "reference", "reference_domain",
                 "limit", "d", "pq", "equal_size", "max_size", "k", "set", "box", "r", "t"):
        if hasattr(args, name):
            cfg.extra[name] = getattr(args, name)

    if problems:
        raise UsageError("; ".join(problems))
    return cfg


def _default_format(args: argparse.Namespace) -> str:
    if (args.command, args.subcommand) in {("colour", "eval"), ("blockset", "points")}:
        return "text"
    return "json"


# ---------------------------------------------------------------------------
# dispatch


def _run_colour_eval(cfg: RunConfig) -> dict:
    m = cfg.extra.get("m", 3)
    word = encode_word(cfg.extra["word"], m)
    colouring = parse_word_colouring(cfg.extra["colouring"], cfg.seed, word.n, m)
    report = {
        "op": "colour_eval",
        "word": str(word),
        "colouring": colouring.name,
        "id": colouring.colour_id(word),
    }
    if isinstance(colouring, colourings.ContributionColouring):
        report["vector"] = list(colouring.vector(word))
    if isinstance(colouring, colourings.InducedColouring):
        report["tuple"] = list(colouring.colour_tuple(word))
    return report


def _run_blockset_points(cfg: RunConfig) -> dict:
    t = cfg.template
    assert t is not None
    raw_blocks = _parse_blocks(cfg.extra["blocks"])
    in_blocks = sorted(c for b in raw_blocks for c in b)
    complement = [c for c in range(1, cfg.n + 1) if c not in in_blocks]
    ref_text = cfg.extra.get("reference", "")
    if len(ref_text) != len(complement):
        raise UsageError(
            f"reference has {len(ref_text)} symbols for {len(complement)} non-block coordinates"
        )
    reference = {c: int(ch) for c, ch in zip(complement, ref_text)}
    sizes = {len(b) for b in raw_blocks}
    sizemode = blocks.EqualSize(sizes.pop()) if len(sizes) == 1 else blocks.MixedSize(max(sizes))
    placement = blocks.make_placement(cfg.n, raw_blocks, reference, sizemode)
    points = sorted(blocks.blockset_points(placement, t), key=lambda w: w.symbols)
    return {
        "op": "blockset_points",
        "template": str(t),
        "placement": placement.to_json_dict(),
        "points": [str(w) for w in points],
        "count": len(points),
    }


def _run_blockset_enum(cfg: RunConfig) -> dict:
    t = cfg.template
    assert t is not None and cfg.sizemode is not None
    domain = _reference_domain(cfg)
    out = []
    truncated = False
    limit = cfg.extra.get("limit")
    for placement in blocks.enumerate_placements(cfg.n, t, cfg.sizemode, cfg.pattern, domain):
        if limit is not None and len(out) >= limit:
            truncated = True
            break
        out.append(placement.to_json_dict())
    return {
        "op": "blockset_enum",
        "params": {
            "template": str(t),
            "n": cfg.n,
            "sizemode": str(cfg.sizemode),
            "pattern": cfg.pattern,
        },
        "placements": out,
        "count": len(out),
        "truncated": truncated,
    }


def _reference_domain(cfg: RunConfig) -> Optional[list[int]]:
    text = cfg.extra.get("reference_domain")
    if not text:
        return None
    return [int(ch) for ch in text]


def _found_entries(found, colouring) -> list[dict]:
    """Found-placement entries; vector-valued colourings report both forms."""
    entries = []
    for placement, colour in found:
        entry = {"placement": placement.to_json_dict(), "colour": colour}
        if isinstance(colouring, colourings.ContributionColouring):
            entry["vector"] = list(
                colourings.id_to_vector(colour, colouring.modulus, colouring.length)
            )
        entries.append(entry)
    return entries


def _run_search_mono(cfg: RunConfig) -> dict:
    t = cfg.template
    assert t is not None and cfg.sizemode is not None
    colouring = parse_word_colouring(cfg.extra["colouring"], cfg.seed, cfg.n, t.m)
    domain = _reference_domain(cfg)
    t0 = time.perf_counter()
    hit = search.find_monochromatic(
        colouring, cfg.n, t, cfg.sizemode, cfg.pattern, domain, cfg.workers
    )
    elapsed = (time.perf_counter() - t0) * 1000.0
    found = _found_entries([] if hit is None else [hit], colouring)
    examined = search.placements_examined_until(cfg.n, t, cfg.sizemode, cfg.pattern, domain, hit)
    return {
        "params": {
            "op": "find_monochromatic",
            "colouring": colouring.name,
            "n": cfg.n,
            "template": str(t),
            "sizemode": str(cfg.sizemode),
            "pattern": cfg.pattern,
        },
        "examined": examined,
        "found": found,
        "elapsed_ms": round(elapsed, 3),
        "workers": cfg.workers,
        "budget_exhausted": False,
    }


def _run_search_witness(cfg: RunConfig) -> tuple[dict, int]:
    t = cfg.template
    assert t is not None and cfg.sizemode is not None
    params = {
        "op": "witness_search",
        "n": cfg.n,
        "template": str(t),
        "sizemode": str(cfg.sizemode),
        "k": cfg.extra["k"],
        "budget": cfg.budget,
    }
    t0 = time.perf_counter()
    try:
        witness = search.witness_search(cfg.n, t, cfg.sizemode, cfg.extra["k"], cfg.budget)
    except search.BudgetExceeded as exc:
        elapsed = (time.perf_counter() - t0) * 1000.0
        return (
            {
                "params": params,
                "status": "budget_exceeded",
                "nodes": exc.nodes,
                "colouring": None,
                "elapsed_ms": round(elapsed, 3),
                "budget_exhausted": True,
            },
            2,
        )
    elapsed = (time.perf_counter() - t0) * 1000.0
    if witness is None:
        body = None
        status = "none"
    else:
        body = {str(w): c for w, c in sorted(witness.entries.items(), key=lambda x: x[0].symbols)}
        status = "witness"
    return (
        {
            "params": params,
            "status": status,
            "colouring": body,
            "elapsed_ms": round(elapsed, 3),
            "budget_exhausted": False,
        },
        0,
    )


def degree_setup(d: int, pq: Optional[tuple[int, int]] = None) -> tuple[blocks.Template, colourings.ContributionColouring]:
    """Template and colouring for the degree-d absence run.

    Default template is one 1, d 2s and d^3 3s with colour parameters
    (d+1, d^2+1); the p,q override uses one 1, p 2s, q 3s with vector length
    p*d+1.
    """
    if pq is None:
        counts = (1, d, d**3)
        length = d * d + 1
    else:
        p, q = pq
        counts = (1, p, q)
        length = p * d + 1
    return blocks.template_from_counts(3, counts), colourings.ContributionColouring(d + 1, length)


def _run_verify_thm2(cfg: RunConfig) -> dict:
    d = cfg.extra["d"]
    if d < 1:
        raise UsageError(f"--d must be >= 1, got {d}")
    pq = None
    if cfg.extra.get("pq"):
        try:
            p_s, q_s = cfg.extra["pq"].split(",")
            pq = (int(p_s), int(q_s))
        except ValueError:
            raise UsageError(f"bad --pq {cfg.extra['pq']!r} (expected p,q)") from None
    t, colouring = degree_setup(d, pq)
    size = cfg.extra.get("max_size") or d
    if size < 1:
        raise UsageError(f"--max-size must be >= 1, got {size}")
    sizemode = blocks.EqualSize(size) if cfg.extra.get("equal_size") else blocks.MixedSize(size)
    report = search.verify_absence(colouring, cfg.n, t, sizemode, workers=cfg.workers)
    body = report.to_json_dict(stable=cfg.stable)
    body["found"] = _found_entries(report.found, colouring)
    return body


def _run_extract_thm3(cfg: RunConfig) -> dict:
    k = cfg.extra["k"]
    base = parse_word_colouring(cfg.extra["colouring"], cfg.seed, cfg.n, 3)
    params = {"op": "extract_abccba", "colouring": base.name, "k": k, "n": cfg.n}
    if cfg.extra.get("set"):
        members = tuple(sorted(int(c) for c in cfg.extra["set"].split(",")))
        theta = search.induced_subset_colouring(base, k, cfg.n)
        colour = theta.colour(members[: 2 * k + 2])
        homog = search.HomogeneousSet(cfg.n, 2 * k + 2, members, colour)
    else:
        theta = search.induced_subset_colouring(base, k, cfg.n)
        homog = search.homogeneous_subset_search(theta, 2 * k + 4)
        if homog is None:
            return {"params": params, "status": "no_homogeneous_set", "found": []}
    placement, colour_id = search.extract_abccba(base, k, homog)
    return {
        "params": params,
        "status": "found",
        "set": list(homog.members),
        "found": [{"placement": placement.to_json_dict(), "colour": colour_id}],
    }


def _run_lattice_ap(cfg: RunConfig) -> dict:
    box = lattice.parse_box(cfg.extra["box"])
    colouring = parse_lattice_colouring(cfg.extra["colouring"], box, cfg.seed)
    t0 = time.perf_counter()
    hit = lattice.search_l1_ap(colouring, box, cfg.extra["d"], cfg.workers)
    elapsed = (time.perf_counter() - t0) * 1000.0
    found = [] if hit is None else [{"x": list(hit[0]), "v": list(hit[1])}]
    return {
        "params": {
            "op": "search_l1_ap",
            "colouring": colouring.name,
            "box": str(box),
            "d": cfg.extra["d"],
        },
        "found": found,
        "elapsed_ms": round(elapsed, 3),
        "workers": cfg.workers,
        "budget_exhausted": False,
    }


def _run_lattice_ball(cfg: RunConfig) -> dict:
    box = lattice.parse_box(cfg.extra["box"])
    colouring = parse_lattice_colouring(cfg.extra["colouring"], box, cfg.seed)
    t0 = time.perf_counter()
    hit = lattice.search_generated_ball(
        colouring, box, cfg.extra["r"], cfg.extra["t"], cfg.extra["d"], cfg.workers
    )
    elapsed = (time.perf_counter() - t0) * 1000.0
    found = (
        []
        if hit is None
        else [{"centre": list(hit[0]), "generators": [list(u) for u in hit[1].vectors]}]
    )
    return {
        "params": {
            "op": "search_generated_ball",
            "colouring": colouring.name,
            "box": str(box),
            "r": cfg.extra["r"],
            "t": cfg.extra["t"],
            "d": cfg.extra["d"],
        },
        "found": found,
        "elapsed_ms": round(elapsed, 3),
        "workers": cfg.workers,
        "budget_exhausted": False,
    }


_HANDLERS = {
    ("colour", "eval"): _run_colour_eval,
    ("blockset", "points"): _run_blockset_points,
    ("blockset", "enum"): _run_blockset_enum,
    ("search", "mono"): _run_search_mono,
    ("verify", "thm2"): _run_verify_thm2,
    ("extract", "thm3"): _run_extract_thm3,
    ("lattice", "ap"): _run_lattice_ap,
    ("lattice", "ball"): _run_lattice_ball,
}


def parse_and_dispatch(argv: Sequence[str], stdout=None, stderr=None) -> int:
    """Parse flags, run the matching operation, emit one report.

    Usage errors produce a single aggregated message on stderr and exit code
    1, never a partial report.
    """
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        cfg = _collect_config(args)
        if (cfg.command, cfg.subcommand) == ("search", "witness"):
            report, code = _run_search_witness(cfg)
        else:
            report = _HANDLERS[(cfg.command, cfg.subcommand)](cfg)
            code = 0
    except (UsageError, ValueError, KeyError, OSError) as exc:
        stderr.write(f"blocksets: error: {exc}\n")
        return 1
    try:
        if cfg.output:
            with open(cfg.output, "w") as fh:
                emit_report(report, cfg.out_format, fh, cfg.stable)
        else:
            emit_report(report, cfg.out_format, stdout, cfg.stable)
    except OSError as exc:
        stderr.write(f"blocksets: error: cannot write report: {exc}\n")
        return 1
    return code


def main() -> None:
    sys.exit(parse_and_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
