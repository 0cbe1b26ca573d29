"""Command-line front end: ``rotcode encode|decode|analyze|gen-codebook``.

Exit codes: 0 success, 2 input or usage error, 3 corrupt encoded data.
Summaries go to stdout as JSON; ``--verbose`` adds human-readable notes on
stderr.
"""

import argparse
import json
import os
import sys

from rotcode.analyzer import analyze, write_csv_sidecars
from rotcode.codebook import build_huffman_goldman, read_codebook, read_frequencies, write_codebook
from rotcode.entropy_stream import decode_stream, encode_stream
from rotcode.errors import DecodeError, FormatError, RotcodeError
from rotcode.header import ImageHeader, StreamHeader, decode_header, encode_header
from rotcode.image_codec import decode_image, encode_image, nt_per_pixel, read_pgm, write_pgm
from rotcode.oligo_io import DEFAULT_OLIGO_LENGTH, read_fasta, reassemble, segment, write_fasta
from rotcode.rotation import MASK64, Mode, Scheduler, generate_codes, rotate_codebook

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CORRUPT = 3


class CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _quality(text):
    v = int(text)
    if not 1 <= v <= 100:
        raise argparse.ArgumentTypeError(f"quality must be in 1..100, got {v}")
    return v


def _seed(text):
    v = int(text, 0)
    if not 0 <= v <= MASK64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _mode(text):
    try:
        return Mode.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rotation(text):
    v = int(text)
    if v not in range(4):
        raise argparse.ArgumentTypeError(f"rotation must be in 0..3, got {v}")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", required=True, help="input file")
    common.add_argument("--output", "-o", help="output file")
    common.add_argument("--verbose", "-v", action="store_true", help="human-readable notes on stderr")

    parser = argparse.ArgumentParser(
        prog="rotcode",
        description="Rotating-codebook quaternary coding for DNA data storage.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", parents=[common], help="encode a PGM image or a symbol file to a FASTA oligo pool")
    enc.add_argument("--quality", type=_quality, default=50)
    enc.add_argument("--mode", type=_mode, default=Mode.NONE, help="none | roundrobin | random")
    enc.add_argument("--seed", type=_seed, default=0)
    enc.add_argument("--oligo-length", type=_positive, default=DEFAULT_OLIGO_LENGTH)
    enc.add_argument("--fragment-length", type=_positive, default=6,
                     help="symbols per code in stream mode")
    enc.add_argument("--codebook", help="codebook file (required for symbol-stream input)")

    dec = sub.add_parser("decode", parents=[common], help="decode a FASTA oligo pool")
    dec.add_argument("--codebook", help="codebook file (required for symbol streams)")

    ana = sub.add_parser("analyze", parents=[common], help="oligo quality report")
    ana.add_argument("--csv-dir", help="directory for gc_histogram.csv and homopolymer_per_oligo.csv")

    gen = sub.add_parser("gen-codebook", parents=[common],
                         help="Huffman/Goldman codebook from a frequency file, optionally rotated")
    gen.add_argument("--rotated", type=_rotation, default=0, help="letter rotation 0..3")
    gen.add_argument("--codebook", help="rotate this existing codebook instead of building one from --input")
    return parser


def _note(args, message):
    if args.verbose:
        print(message, file=sys.stderr)


def _emit(summary):
    print(json.dumps(summary, sort_keys=True))


def _require_output(args):
    if not args.output:
        raise CliError(f"{args.command}: --output is required")
    return args.output


def _is_pgm(path):
    with open(path, "rb") as fh:
        return fh.read(2) == b"P5"


def read_symbols(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None


def write_symbols(symbols, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("".join(f"{s}\n" for s in symbols))


def cmd_encode(args):
    out = _require_output(args)
    if _is_pgm(args.input):
        img = read_pgm(args.input)
        enc = encode_image(img, args.quality, args.mode, args.seed)
        header = enc.header
        payload = enc.payload
        summary = {
            "kind": "image",
            "width": header.width,
            "height": header.height,
            "quality": header.quality,
            "nt_per_pixel": nt_per_pixel(len(payload), img.shape),
        }
    else:
        if not args.codebook:
            raise CliError("symbol-stream input needs --codebook (or give a P5 PGM image)")
        symbols = read_symbols(args.input)
        rs = generate_codes(read_codebook(args.codebook))
        payload = encode_stream(symbols, rs, Scheduler(args.mode, args.seed), args.fragment_length)
        header = StreamHeader(args.mode, args.seed, args.fragment_length, len(symbols), len(payload))
        summary = {"kind": "stream", "n_symbols": len(symbols), "fragment_length": args.fragment_length}
    header_ns = encode_header(header)
    pool = segment(payload, args.oligo_length, header=header_ns)
    write_fasta(pool, out)
    summary.update(
        mode=args.mode.cli_name,
        seed=args.seed,
        nucleotides=len(payload),
        header_nucleotides=len(header_ns),
        oligos=len(pool),
        oligo_length=args.oligo_length,
        output=out,
    )
    _note(args, f"wrote {len(pool)} oligos ({len(payload)} nt payload) to {out}")
    _emit(summary)


def cmd_decode(args):
    out = _require_output(args)
    try:
        pool = read_fasta(args.input)
    except FormatError as exc:
        raise CliError(f"corrupt oligo pool: {exc}", EXIT_CORRUPT) from None
    if pool.header is None:
        raise CliError("oligo pool has no header record", EXIT_CORRUPT)
    try:
        header = decode_header(pool.header)
    except FormatError as exc:
        raise CliError(f"corrupt header: {exc}", EXIT_CORRUPT) from None
    payload = reassemble(pool)
    if isinstance(header, ImageHeader):
        img = decode_image(payload, header)
        write_pgm(img, out)
        summary = {"kind": "image", "width": header.width, "height": header.height}
    else:
        if not args.codebook:
            raise CliError("symbol-stream pool needs --codebook")
        rs = generate_codes(read_codebook(args.codebook))
        if len(payload) != header.payload_len:
            raise DecodeError(
                f"payload has {len(payload)} nucleotides, header says {header.payload_len}",
                offset=min(len(payload), header.payload_len),
            )
        symbols = decode_stream(payload, rs, Scheduler(header.mode, header.seed),
                                header.fragment_len, header.n_symbols)
        write_symbols(symbols, out)
        summary = {"kind": "stream", "n_symbols": len(symbols)}
    summary.update(mode=header.mode.cli_name, seed=header.seed, nucleotides=len(payload), output=out)
    _note(args, f"decoded {len(payload)} nt to {out}")
    _emit(summary)


def cmd_analyze(args):
    pool = read_fasta(args.input)
    report = analyze(pool)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(report.to_json())
    else:
        sys.stdout.write(report.to_json())
    if args.csv_dir:
        paths = write_csv_sidecars(report, args.csv_dir)
        _note(args, "wrote " + ", ".join(paths))
    _note(args, f"{report.n_oligos} oligos, {report.n_homopolymers} homopolymers "
                f"(max {report.max_homopolymer_len}), "
                f"{100 * report.gc_problematic_fraction:.1f}% oligos with problematic GC")


def cmd_gen_codebook(args):
    out = _require_output(args)
    if args.codebook:
        base = read_codebook(args.codebook)
    else:
        base = build_huffman_goldman(read_frequencies(args.input))
    book = rotate_codebook(base, args.rotated) if args.rotated else base
    write_codebook(book, out)
    _note(args, f"wrote {len(book)} codewords (rotation {args.rotated}) to {out}")
    _emit({"symbols": len(book), "rotated": args.rotated, "max_length": book.max_length, "output": out})


COMMANDS = {
    "encode": cmd_encode,
    "decode": cmd_decode,
    "analyze": cmd_analyze,
    "gen-codebook": cmd_gen_codebook,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    paths = [args.input] + ([args.codebook] if getattr(args, "codebook", None) else [])
    for path in paths:
        if not os.path.isfile(path):
            print(f"rotcode: error: no such file: {path}", file=sys.stderr)
            return EXIT_USAGE
    try:
        COMMANDS[args.command](args)
    except CliError as exc:
        print(f"rotcode: error: {exc}", file=sys.stderr)
        return exc.code
    except DecodeError as exc:
        print(f"rotcode: corrupt stream: {exc}", file=sys.stderr)
        return EXIT_CORRUPT
    except (RotcodeError, ValueError, OSError) as exc:
        print(f"rotcode: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
