#!/usr/bin/env python3
"""Tuning report: measure every SSN fixture against its acceptance bars."""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from cbl import cbl_decode, cbl_encode, compress_deflate, measure, parse_json, structural_equal
from cbl.pipeline import ALL_VARIANT_OPTIONS
from cbl.static_dict import VocabSpec, build_static_dictionary

# savings bar = reference value - 4 percentage points
BARS = {
    "ssn-example-1": (904, 86.7),
    "ssn-example-10": (5322, 89.9),
    "ssn-example-12": (3748, 87.7),
    "ssn-example-14": (3503, 85.6),
    "ssn-example-17": (2817, 91.1),
    "ssn-example-19": (2414, 89.8),
}


def fixture_dictionary():
    vocab_dir = ROOT / "fixtures" / "vocab"
    ontologies = [
        (name, (vocab_dir / f"{name}.txt").read_text().split("\n"))
        for name in ("sosa", "ssn", "xsd", "qudt", "unit")
    ]
    ontologies = [(n, [t for t in terms if t]) for n, terms in ontologies]
    custom = [t for t in (vocab_dir / "custom-terms.txt").read_text().split("\n") if t]
    return build_static_dictionary(VocabSpec(ontologies=ontologies, custom=custom))


def main():
    d = fixture_dictionary()
    print(f"dictionary: {len(d)} terms")
    for path in sorted((ROOT / "fixtures" / "ssn").glob("*.jsonld")):
        raw = path.read_bytes()
        doc = parse_json(raw)
        sizes = {}
        for name, opts in ALL_VARIANT_OPTIONS.items():
            enc = cbl_encode(doc, d, opts)
            assert structural_equal(doc, cbl_decode(enc, d, opts)), f"{path.name} {name}"
            sizes[name] = len(enc)
        r = measure(doc, d, original_bytes=len(raw))
        ref_orig, bar = BARS.get(path.stem, (0, 0))
        ordering_ok = sizes["default"] <= sizes["cbor-map"] and sizes["default"] <= sizes["no-delta"]
        print(
            f"{path.stem}: orig={len(raw)} (ref {ref_orig})  cbl={sizes['default']}  "
            f"savings={r.savings_percent:.2f}% (bar {bar})  "
            f"gz={len(compress_deflate(raw))}  +gz={sizes['gzip-after']}  "
            f"cbor-map={sizes['cbor-map']}  no-delta={sizes['no-delta']}  "
            f"{'OK' if r.savings_percent >= bar and ordering_ok else '** FAIL **'}"
        )


if __name__ == "__main__":
    main()
