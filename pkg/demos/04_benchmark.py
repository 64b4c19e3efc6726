"""Size benchmark over the bundled sensor-network corpus.

Builds the size comparison table: original size, plain gzip, CBL, and the
ablation variants (gzip applied after CBL, the CBOR-map body, and CBL
without delta coding). Every size is only reported after verifying a
lossless round trip.
"""

from _common import SSN_DIR, fixture_dictionary

from cbl import cbl_decode, cbl_encode, compress_deflate, parse_json, structural_equal
from cbl.pipeline import ALL_VARIANT_OPTIONS

d = fixture_dictionary()

header = f"{'example':<18}{'json':>6}{'gzip':>6}{'cbl':>6}{'cbl+gz':>8}{'cbor-map':>10}{'no-delta':>10}{'savings':>9}"
print(header)
print("-" * len(header))

for path in sorted(SSN_DIR.glob("*.jsonld")):
    raw = path.read_bytes()
    doc = parse_json(raw)
    sizes = {}
    for name, opts in ALL_VARIANT_OPTIONS.items():
        wire = cbl_encode(doc, d, opts)
        assert structural_equal(cbl_decode(wire, d, opts), doc), (path.name, name)
        sizes[name] = len(wire)
    savings = 100.0 * (len(raw) - sizes["default"]) / len(raw)
    print(
        f"{path.stem:<18}{len(raw):>6}{len(compress_deflate(raw)):>6}"
        f"{sizes['default']:>6}{sizes['gzip-after']:>8}{sizes['cbor-map']:>10}"
        f"{sizes['no-delta']:>10}{savings:>8.1f}%"
    )

print(
    "\ngzip after CBL only pays off once messages grow; on the smallest"
    "\nexample it costs more than it saves, so constrained nodes can skip it."
)
