"""Encode a JSON-LD sensor document to CBL and decode it back.

The encoder needs a static dictionary that both sides agreed on offline;
the message itself carries only a small per-message dictionary, a structure
bitmap and a packed index list.
"""

from _common import SSN_DIR, fixture_dictionary

from cbl import cbl_decode, cbl_encode, measure, parse_json, serialize_json, structural_equal

d = fixture_dictionary()
print(f"static dictionary: {len(d)} terms, fingerprint {d.fingerprint.hex()[:16]}…")

raw = (SSN_DIR / "ssn-example-1.jsonld").read_bytes()
doc = parse_json(raw)

wire = cbl_encode(doc, d)
print(f"\n{len(raw)} bytes of JSON-LD -> {len(wire)} bytes of CBL")
print(f"wire: {wire.hex()}")

report = measure(doc, d, original_bytes=len(raw))
print(f"\nsavings: {report.savings_percent:.1f}%")
for section, size in report.section_bytes.items():
    print(f"  {section:<8} {size:>7.3f} bytes")

back = cbl_decode(wire, d)
assert structural_equal(back, doc)
print("\ndecoded document is structurally identical to the input:")
print(serialize_json(back, indent=2)[:320] + " …")
