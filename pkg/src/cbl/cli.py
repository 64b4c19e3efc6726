"""Command-line front end: dictionary building, encode/decode, benchmarking.

Exit codes: 0 success, 2 user error (bad arguments, unknown terms,
collisions), 3 format or corruption error in an input file.
"""

import argparse
import csv
import os
import sys
from pathlib import Path

from .errors import CblError, JsonParseError, TermCollisionError, UnknownKeyTermError, WireError
from .model import parse_json, serialize_json, structural_equal
from .pipeline import (
    ALL_VARIANT_OPTIONS,
    EncodeOptions,
    Variant,
    cbl_decode,
    cbl_encode,
    compress_deflate,
    measure,
)
from .static_dict import (
    RESERVED_TERMS,
    VocabSpec,
    build_static_dictionary,
    load_dictionary,
    save_dictionary,
)

USER_ERROR = 2
FORMAT_ERROR = 3


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UnknownKeyTermError, TermCollisionError, JsonParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USER_ERROR
    except WireError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FORMAT_ERROR
    except CblError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USER_ERROR


def _build_parser():
    parser = argparse.ArgumentParser(prog="cbl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_dict = sub.add_parser("dict", help="static dictionary commands")
    dict_sub = p_dict.add_subparsers(dest="dict_command", required=True)
    p_build = dict_sub.add_parser("build", help="build a dictionary from vocab files")
    p_build.add_argument("vocab", nargs="*", type=Path,
                         help="term files (one term per line); section name = file stem")
    p_build.add_argument("--custom", type=Path, help="application custom terms, one per line")
    p_build.add_argument("-o", "--out", type=Path, required=True, help="dictionary file to write")
    p_build.set_defaults(func=cmd_dict_build)

    p_enc = sub.add_parser("encode", help="encode a JSON-LD file")
    p_enc.add_argument("input", type=Path)
    _add_dict_arg(p_enc)
    p_enc.add_argument("-o", "--out", type=Path, required=True)
    _add_variant_args(p_enc)
    p_enc.add_argument("--epoch-dates", action="store_true",
                       help="encode ISO datetimes with explicit offsets as epoch seconds")
    p_enc.add_argument("--framed", action="store_true",
                       help="prepend version, flags and dictionary fingerprint")
    p_enc.set_defaults(func=cmd_encode)

    p_dec = sub.add_parser("decode", help="decode a CBL file back to JSON-LD")
    p_dec.add_argument("input", type=Path)
    _add_dict_arg(p_dec)
    p_dec.add_argument("-o", "--out", type=Path, required=True)
    _add_variant_args(p_dec)
    p_dec.set_defaults(func=cmd_decode)

    p_bench = sub.add_parser("bench", help="size benchmark over a corpus directory")
    p_bench.add_argument("corpus", type=Path, help="directory of .jsonld files")
    _add_dict_arg(p_bench)
    p_bench.add_argument("--variants", choices=["default", "all"], default="default")
    p_bench.add_argument("--csv", type=Path, default=Path("cbl-bench.csv"),
                         help="CSV output path (default: cbl-bench.csv)")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def _add_dict_arg(p):
    p.add_argument("-d", "--dict", dest="dict_path", type=Path,
                   default=os.environ.get("CBL_DICT"),
                   help="dictionary file (default: $CBL_DICT)")


def _add_variant_args(p):
    p.add_argument("--no-delta", action="store_true", help="disable delta encoding")
    p.add_argument("--variant", choices=["standard", "cbor-map", "gzip-after"],
                   default="standard")


def _load_dict(args):
    if not args.dict_path:
        raise CblError("no dictionary given (use --dict or set CBL_DICT)")
    return load_dictionary(Path(args.dict_path).read_bytes())


def _options(args) -> EncodeOptions:
    return EncodeOptions(
        delta_encoding=not args.no_delta,
        variant=Variant(args.variant),
        epoch_dates=getattr(args, "epoch_dates", False),
        framed=getattr(args, "framed", False),
    )


def cmd_dict_build(args) -> int:
    ontologies = []
    for path in args.vocab:
        ontologies.append((path.stem, _read_terms(path)))
    custom = _read_terms(args.custom) if args.custom else []
    dictionary = build_static_dictionary(VocabSpec(ontologies=ontologies, custom=custom))
    args.out.write_bytes(save_dictionary(dictionary))
    for i, term in enumerate(RESERVED_TERMS):
        print(f"{term}={i}")
    print(f"{len(dictionary)} terms, fingerprint {dictionary.fingerprint.hex()}")
    return 0


def _read_terms(path: Path):
    terms = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            terms.append(line)
    return terms


def cmd_encode(args) -> int:
    dictionary = _load_dict(args)
    raw = args.input.read_bytes()
    doc = parse_json(raw)
    opts = _options(args)
    encoded = cbl_encode(doc, dictionary, opts)
    args.out.write_bytes(encoded)
    report = measure(doc, dictionary, opts, original_bytes=len(raw))
    print(
        f"{args.input.name}: {report.original_bytes} -> {report.encoded_bytes} bytes "
        f"({report.savings_percent:.1f}% savings)",
        file=sys.stderr,
    )
    for name, size in report.section_bytes.items():
        print(f"  {name}: {size:g} bytes", file=sys.stderr)
    return 0


def cmd_decode(args) -> int:
    dictionary = _load_dict(args)
    doc = cbl_decode(args.input.read_bytes(), dictionary, _options(args))
    args.out.write_text(serialize_json(doc, indent=2) + "\n", encoding="utf-8")
    return 0


def cmd_bench(args) -> int:
    dictionary = _load_dict(args)
    all_variants = args.variants == "all"
    files = sorted(args.corpus.glob("*.jsonld"))

    columns = ["example", "original_bytes", "gzip_bytes", "cbl_bytes", "savings_percent"]
    if all_variants:
        columns += ["cbl_gzip_bytes", "cbor_map_bytes", "no_delta_bytes"]

    rows = []
    failures = 0
    for path in files:
        raw = path.read_bytes()
        doc = parse_json(raw)
        row = {"example": path.stem, "original_bytes": len(raw),
               "gzip_bytes": len(compress_deflate(raw))}
        sizes = {}
        for name, opts in ALL_VARIANT_OPTIONS.items():
            if not all_variants and name != "default":
                continue
            encoded = cbl_encode(doc, dictionary, opts)
            if not structural_equal(doc, cbl_decode(encoded, dictionary, opts)):
                print(f"error: {path.name} does not round-trip under {name}", file=sys.stderr)
                failures += 1
                sizes[name] = None
            else:
                sizes[name] = len(encoded)
        if sizes.get("default") is None:
            continue
        row["cbl_bytes"] = sizes["default"]
        row["savings_percent"] = round(100.0 * (len(raw) - sizes["default"]) / len(raw), 1)
        if all_variants:
            row["cbl_gzip_bytes"] = sizes["gzip-after"]
            row["cbor_map_bytes"] = sizes["cbor-map"]
            row["no_delta_bytes"] = sizes["no-delta"]
        rows.append(row)

    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) if rows else len(c) for c in columns}
    print("  ".join(c.ljust(widths[c]) for c in columns))
    for row in rows:
        print("  ".join(str(row[c]).ljust(widths[c]) for c in columns))

    with open(args.csv, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns)
        writer.writeheader()
        writer.writerows(rows)

    return FORMAT_ERROR if failures else 0


if __name__ == "__main__":
    sys.exit(main())
