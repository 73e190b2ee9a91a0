"""Command-line pipeline over line-aligned text files.

Subcommands: encode, decode, build-corpus, spectra, decay, bleu,
validate. Data flows through files (or stdout); all reports - per-line
errors and end-of-run summaries - go to standard error as JSON lines.

Exit codes: 0 success, 1 validation failure in the data, 2 I/O or
configuration error (argparse usage errors also exit 2).

Per-line work is embarrassingly parallel; --workers shards the input
into fixed-size chunks processed by a process pool, and results are
merged back in input order, so output bytes do not depend on the worker
count.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from .core import parse_depths_line, validate_sentence
from .decay import decay_curve
from .exceptions import (
    DepthsFileError,
    MalformedSequence,
    SenTreeError,
    UnescapableToken,
)
from .heuristic import (
    FrequencyTable,
    assign_depths,
    build_frequency_table,
    load_frequency_table,
    save_frequency_table,
)
from .metrics import corpus_bleu
from .spectra import layer_spectra, spectrum_rows
from .treebuild import build_tree, iter_levels, linearize
from .treeseq import ITN, VAC, deserialize, deserialize_prefix, parse, render, serialize

CHUNK_SIZE = 256

SPECTRA_COLUMNS = (
    "layer",
    "in_order_rank",
    "token",
    "range_low",
    "range_high",
    "final_position",
)


class _Fail(Exception):
    """Abort the command with an exit code and one JSON report."""

    def __init__(self, code: int, **record):
        self.code = code
        self.record = record
        super().__init__(record.get("message", ""))


def _report(**fields) -> None:
    print(json.dumps(fields, ensure_ascii=False), file=sys.stderr)


def _read_lines(path, flag: str) -> list[str]:
    if not path:
        raise _Fail(2, event="error", kind="config", message=f"{flag} is required")
    try:
        with open(path, encoding="utf-8") as handle:
            return [line.rstrip("\n") for line in handle]
    except OSError as exc:
        raise _Fail(2, event="error", kind="io", message=f"{path}: {exc.strerror}")


def _write_lines(path, lines) -> None:
    if path:
        try:
            with open(path, "w", encoding="utf-8", newline="\n") as handle:
                for line in lines:
                    handle.write(line)
                    handle.write("\n")
        except OSError as exc:
            raise _Fail(2, event="error", kind="io", message=f"{path}: {exc.strerror}")
    else:
        for line in lines:
            print(line)


def _map_chunks(items: list, chunk_fn, workers: int) -> list:
    """Apply a chunk worker over fixed-size shards, preserving input order."""
    chunks = [
        (start + 1, items[start : start + CHUNK_SIZE])
        for start in range(0, len(items), CHUNK_SIZE)
    ]
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            mapped = list(pool.map(chunk_fn, chunks))
    else:
        mapped = [chunk_fn(chunk) for chunk in chunks]
    return [result for chunk_results in mapped for result in chunk_results]


# ---------------------------------------------------------------------------
# per-line workers (top level so they pickle into worker processes)


def _validation_record(line_no: int, codes, message: str) -> dict:
    return {
        "event": "error",
        "kind": "validation",
        "line": line_no,
        "codes": list(codes),
        "message": message,
    }


def _encode_one(line: str, line_no: int, table):
    """One input line -> ("ok", rendered, stats) or ("err", record)."""
    try:
        if table is None:
            sentence = parse_depths_line(line, line_no)
        else:
            sentence = assign_depths(line.split(), table)
            result = validate_sentence(sentence)
            if not result.ok:
                return (
                    "err",
                    _validation_record(
                        line_no,
                        result.codes(),
                        "; ".join(v.message for v in result.violations),
                    ),
                )
        tree = build_tree(sentence)
        entries = serialize(tree)
        rendered = render(entries)
    except DepthsFileError as exc:
        codes = [v.code for v in exc.violations] or ["ParseError"]
        return ("err", _validation_record(line_no, codes, str(exc)))
    except UnescapableToken as exc:
        return ("err", _validation_record(line_no, ["UnescapableToken"], str(exc)))
    stats = (
        tree.node_count,
        sum(1 for e in entries if e is ITN),
        sum(1 for e in entries if e is VAC),
        sum(1 for _ in iter_levels(tree)),
    )
    return ("ok", rendered, stats)


def _encode_chunk(chunk, counts=None):
    start, lines = chunk
    table = FrequencyTable(counts) if counts is not None else None
    return [_encode_one(line, start + i, table) for i, line in enumerate(lines)]


def _decode_one(line: str, line_no: int, lenient: bool):
    entries = parse(line)
    if lenient:
        tree, error = deserialize_prefix(entries)
        text = " ".join(linearize(tree))
        if error is None:
            return ("ok", text)
        record = _validation_record(line_no, [error.reason], str(error))
        record["position"] = error.position
        return ("recovered", text, record)
    try:
        tree = deserialize(entries)
    except MalformedSequence as exc:
        record = _validation_record(line_no, [exc.reason], str(exc))
        record["position"] = exc.position
        return ("err", record)
    return ("ok", " ".join(linearize(tree)))


def _decode_chunk(chunk, lenient=False):
    start, lines = chunk
    return [_decode_one(line, start + i, lenient) for i, line in enumerate(lines)]


def _pair_chunk(chunk, counts=None):
    start, pairs = chunk
    table = FrequencyTable(counts) if counts is not None else None
    results = []
    for i, (source, target) in enumerate(pairs):
        result = _encode_one(target, start + i, table)
        if result[0] == "ok":
            source_text = " ".join(source.split())
            results.append(("ok", source_text + "\t" + result[1], result[2]))
        else:
            results.append(result)
    return results


# ---------------------------------------------------------------------------
# commands


def _heuristic_counts(args, corpus_lines) -> dict | None:
    """Resolve the token counts for the heuristic route, or None for the
    depths-file route."""
    if not args.heuristic:
        if args.freq_table:
            raise _Fail(
                2, event="error", kind="config",
                message="--freq-table requires --heuristic",
            )
        return None
    if args.freq_table:
        try:
            table = load_frequency_table(args.freq_table)
        except OSError as exc:
            raise _Fail(
                2, event="error", kind="io",
                message=f"{args.freq_table}: {exc.strerror}",
            )
        except (ValueError, TypeError) as exc:
            raise _Fail(2, event="error", kind="config", message=str(exc))
    else:
        table = build_frequency_table(line.split() for line in corpus_lines)
    if getattr(args, "write_freq_table", None):
        save_frequency_table(table, args.write_freq_table)
    return dict(table.counts)


def _drain(results, skip_bad: bool):
    """Split worker results into output lines, error records, and stats.

    Fail-fast (exit 1) on the first error record unless --skip-bad.
    Recovered results (lenient decode) keep their output line and are
    never fatal.
    """
    lines: list[str] = []
    stats: list[tuple] = []
    errors: list[dict] = []
    recovered = 0
    for result in results:
        tag = result[0]
        if tag == "ok":
            lines.append(result[1])
            if len(result) > 2:
                stats.append(result[2])
        elif tag == "recovered":
            lines.append(result[1])
            errors.append(result[2])
            recovered += 1
        else:
            errors.append(result[1])
            if not skip_bad:
                for record in errors:
                    _report(**record)
                raise _Fail(1, event="error", kind="aborted",
                            message="validation failed; rerun with --skip-bad to continue past bad lines")
    for record in errors:
        _report(**record)
    return lines, stats, len(errors) - recovered, recovered


def cmd_encode(args) -> int:
    lines = _read_lines(args.input, "--input")
    counts = _heuristic_counts(args, lines)
    results = _map_chunks(lines, partial(_encode_chunk, counts=counts), args.workers)
    out, _, skipped, _ = _drain(results, args.skip_bad)
    _write_lines(args.output, out)
    _report(event="summary", command="encode", lines=len(lines),
            written=len(out), skipped=skipped)
    return 0


def cmd_decode(args) -> int:
    lines = _read_lines(args.input, "--input")
    results = _map_chunks(
        lines, partial(_decode_chunk, lenient=args.lenient), args.workers
    )
    out, _, skipped, recovered = _drain(results, args.skip_bad)
    _write_lines(args.output, out)
    _report(event="summary", command="decode", lines=len(lines),
            written=len(out), skipped=skipped, recovered=recovered)
    return 0


def cmd_build_corpus(args) -> int:
    sources = _read_lines(args.source, "--source")
    targets = _read_lines(args.target, "--target")
    if len(sources) != len(targets):
        raise _Fail(
            1, event="error", kind="validation", codes=["LineCountMismatch"],
            message=f"{args.source} has {len(sources)} lines but"
            f" {args.target} has {len(targets)}",
        )
    counts = _heuristic_counts(args, targets)
    pairs = list(zip(sources, targets))
    results = _map_chunks(pairs, partial(_pair_chunk, counts=counts), args.workers)
    out, stats, skipped, _ = _drain(results, args.skip_bad)
    _write_lines(args.output, out)
    _report(
        event="summary",
        command="build-corpus",
        sentences=len(out),
        tokens=sum(s[0] for s in stats),
        itn=sum(s[1] for s in stats),
        vac=sum(s[2] for s in stats),
        max_layer_depth=max((s[3] - 1 for s in stats), default=0),
        skipped=skipped,
    )
    return 0


def cmd_spectra(args) -> int:
    lines = _read_lines(args.input, "--input")
    rows = ["\t".join(SPECTRA_COLUMNS)]
    sentences = empty = skipped = 0
    errors: list[dict] = []
    for line_no, line in enumerate(lines, start=1):
        try:
            sentence = parse_depths_line(line, line_no)
        except DepthsFileError as exc:
            codes = [v.code for v in exc.violations] or ["ParseError"]
            errors.append(_validation_record(line_no, codes, str(exc)))
            if not args.skip_bad:
                for record in errors:
                    _report(**record)
                raise _Fail(1, event="error", kind="aborted",
                            message="validation failed; rerun with --skip-bad to continue past bad lines")
            skipped += 1
            continue
        if len(sentence) == 0:
            empty += 1
            continue
        sentences += 1
        for row in spectrum_rows(layer_spectra(build_tree(sentence))):
            rows.append("\t".join(str(field) for field in row))
    for record in errors:
        _report(**record)
    _write_lines(args.output, rows)
    _report(event="summary", command="spectra", sentences=sentences,
            rows=len(rows) - 1, empty=empty, skipped=skipped)
    return 0


def cmd_decay(args) -> int:
    try:
        curve = decay_curve(args.dim, args.max_dist, args.base)
    except (SenTreeError, ValueError) as exc:
        raise _Fail(2, event="error", kind="config", message=str(exc))
    rows = ["m\tc"]
    rows.extend(f"{m}\t{value!r}" for m, value in enumerate(curve.values))
    _write_lines(args.output, rows)
    _report(event="summary", command="decay", dim=curve.dim, base=curve.base,
            max_dist=curve.max_dist)
    return 0


def cmd_bleu(args) -> int:
    candidates = [l.split() for l in _read_lines(args.candidates, "--candidates")]
    if not args.references:
        raise _Fail(2, event="error", kind="config",
                    message="--references is required")
    reference_files = [
        [l.split() for l in _read_lines(path, "--references")]
        for path in args.references
    ]
    for path, refs in zip(args.references, reference_files):
        if len(refs) != len(candidates):
            raise _Fail(
                1, event="error", kind="validation", codes=["LineCountMismatch"],
                message=f"{path} has {len(refs)} lines but"
                f" {args.candidates} has {len(candidates)}",
            )
    references = [list(refs) for refs in zip(*reference_files)] if candidates else []
    try:
        report = corpus_bleu(candidates, references, max_order=args.max_order)
    except SenTreeError as exc:
        raise _Fail(1, event="error", kind="validation",
                    codes=[type(exc).__name__], message=str(exc))
    payload = {
        "score": report.score,
        "bleu": 100.0 * report.score,
        "precisions": [list(p) for p in report.precisions],
        "brevity_penalty": report.brevity_penalty,
        "candidate_length": report.candidate_length,
        "reference_length": report.reference_length,
        "max_order": report.max_order,
    }
    print(json.dumps(payload, ensure_ascii=False))
    print(f"BLEU = {100.0 * report.score:.2f}")
    _report(event="summary", command="bleu", sentences=len(candidates))
    return 0


def cmd_validate(args) -> int:
    lines = _read_lines(args.input, "--input")
    invalid = 0
    for line_no, line in enumerate(lines, start=1):
        try:
            parse_depths_line(line, line_no)
        except DepthsFileError as exc:
            invalid += 1
            codes = [v.code for v in exc.violations] or ["ParseError"]
            _report(**_validation_record(line_no, codes, str(exc)))
    _report(event="summary", command="validate", lines=len(lines), invalid=invalid)
    return 0 if invalid == 0 else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="input file")
    common.add_argument("--output", help="output file (default: stdout)")
    common.add_argument("--workers", type=int, default=1,
                        help="parallel worker processes (default 1)")
    common.add_argument("--skip-bad", action="store_true",
                        help="skip bad lines (counted in the summary) instead of"
                        " failing fast")
    common.add_argument("--lenient", action="store_true",
                        help="decode: recover the longest grammatical prefix of"
                        " malformed lines")

    parser = argparse.ArgumentParser(
        prog="sentree",
        description="Depth-ordered binary trees over sentences: encode"
        " sentences as layer-order tree sequences, decode them back, build"
        " aligned corpora, and analyze.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", parents=[common],
                       help="depths file (or text with --heuristic) ->"
                       " tree-sequence lines")
    p.add_argument("--heuristic", action="store_true",
                   help="input is plain tokenized text; depths come from"
                   " log-frequency counts")
    p.add_argument("--freq-table", help="JSON {token: count} file for"
                   " --heuristic (default: counts built from the input itself)")
    p.add_argument("--write-freq-table", help="persist the counts used")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common],
                       help="tree-sequence lines -> plain sentences")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("build-corpus", parents=[common],
                       help="aligned source/target -> 'source<TAB>tree' lines")
    p.add_argument("--source", help="source sentences, one per line")
    p.add_argument("--target", help="target depths file (or text with"
                   " --heuristic)")
    p.add_argument("--heuristic", action="store_true")
    p.add_argument("--freq-table")
    p.add_argument("--write-freq-table")
    p.set_defaults(func=cmd_build_corpus)

    p = sub.add_parser("spectra", parents=[common],
                       help="depths file -> per-layer position-range TSV")
    p.set_defaults(func=cmd_spectra)

    p = sub.add_parser("decay", parents=[common],
                       help="position-embedding decay curve as TSV")
    p.add_argument("--dim", type=int, default=512)
    p.add_argument("--max-dist", type=int, default=256)
    p.add_argument("--base", type=float, default=10000.0)
    p.set_defaults(func=cmd_decay)

    p = sub.add_parser("bleu", parents=[common],
                       help="corpus BLEU of candidates against references")
    p.add_argument("--candidates", help="candidate sentences, one per line")
    p.add_argument("--references", nargs="+", default=[],
                   help="one or more reference files, line-aligned")
    p.add_argument("--max-order", type=int, default=4)
    p.set_defaults(func=cmd_bleu)

    p = sub.add_parser("validate", parents=[common],
                       help="check a depths file; exit 1 if any line is invalid")
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as fail:
        _report(**fail.record)
        return fail.code
    except SenTreeError as exc:
        _report(event="error", kind="validation", codes=[type(exc).__name__],
                message=str(exc))
        return 1
    except OSError as exc:
        _report(event="error", kind="io", message=str(exc))
        return 2


def entrypoint() -> None:
    sys.exit(main())
