"""Command line: extract probe depths from text into a depths file.

    probe-extract extract --model <id-or-dir> --probe <B.npz> --layer <k>
                          --input <text> --output <depths.jsonl>

Input is plain text, one whitespace-tokenized sentence per line. Output
is one JSON object per line, readable by the sentree CLI. Per-line
alignment failures are skipped and reported as JSON lines on stderr;
the summary line is always last.

Exit codes: 0 success (skipped lines included), 2 model/probe/I-O or
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .exceptions import ModelLoadError, ProbeParamsError, TokenizationMismatch
from .params import load_probe_params


def _report(**fields) -> None:
    print(json.dumps(fields, ensure_ascii=False), file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="probe-extract",
        description="Score per-word tree depths with a structural probe"
        " over a pretrained encoder.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("extract", help="text file -> depths file")
    p.add_argument("--model", required=True,
                   help="encoder id or local directory")
    p.add_argument("--probe", required=True,
                   help="probe matrix: .npy array or .npz with array 'B'")
    p.add_argument("--layer", required=True, type=int,
                   help="encoder hidden-state index to probe (0 ="
                   " embeddings)")
    p.add_argument("--input", required=True, help="sentences, one per line")
    p.add_argument("--output", help="depths file (default: stdout)")
    p.add_argument("--pooling", choices=("mean", "first"), default="mean",
                   help="subword-to-word pooling (default mean)")
    p.add_argument("--batch-size", type=int, default=32)
    p.add_argument("--allow-download", action="store_true",
                   help="permit fetching the model over the network")
    p.set_defaults(func=cmd_extract)
    return parser


def cmd_extract(args) -> int:
    # Model loading is slow to import; keep it off the --help path.
    from .extract import extract_depths, load_encoder

    try:
        params = load_probe_params(args.probe, args.layer, args.model)
        tokenizer, model = load_encoder(
            args.model, local_files_only=not args.allow_download
        )
        with open(args.input, encoding="utf-8") as handle:
            lines = [line.rstrip("\n") for line in handle]
    except (ProbeParamsError, ModelLoadError) as exc:
        _report(event="error", kind="config", message=str(exc))
        return 2
    except OSError as exc:
        _report(event="error", kind="io", message=f"{args.input}: {exc.strerror}")
        return 2

    out_lines: list[str] = []
    skipped = 0
    try:
        for line_no, result in extract_depths(
            lines, tokenizer, model, params,
            pooling=args.pooling, batch_size=args.batch_size,
        ):
            if isinstance(result, TokenizationMismatch):
                skipped += 1
                _report(event="error", kind="alignment", line=line_no,
                        reason="TokenizationMismatch", message=str(result))
            else:
                out_lines.append(result)
    except (ProbeParamsError, ValueError) as exc:
        _report(event="error", kind="config", message=str(exc))
        return 2

    try:
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="\n") as handle:
                for line in out_lines:
                    handle.write(line)
                    handle.write("\n")
        else:
            for line in out_lines:
                print(line)
    except OSError as exc:
        _report(event="error", kind="io", message=f"{args.output}: {exc.strerror}")
        return 2

    _report(event="summary", command="extract", lines=len(lines),
            written=len(out_lines), skipped=skipped, layer=params.layer,
            pooling=args.pooling)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())
