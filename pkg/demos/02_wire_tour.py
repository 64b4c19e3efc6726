"""Walk the three wire sections of a CBL message byte by byte.

Layout: CBOR re-indexation dictionary, CBOR bitmap length (in bits), then
one contiguous bit stream holding the structure bitmap and the fixed-width
key/value index list, zero-padded to a byte boundary.
"""

from _common import SSN_DIR, fixture_dictionary

from cbl import cbor, encode_message, parse_json
from cbl.reindex import extract_terms

d = fixture_dictionary()
doc = parse_json((SSN_DIR / "ssn-example-1.jsonld").read_bytes())
msg = encode_message(doc, d)

print("section 1: re-indexation dictionary")
print(f"  {len(msg.dict_bytes)} bytes: {msg.dict_bytes.hex()}")
keys_wire, values_wire = cbor.decode_single(msg.dict_bytes)
print(f"  keys   (delta coded): {keys_wire}")
print(f"  values (delta coded): {values_wire}")

rd, maps = extract_terms(doc, d)
print(f"  -> keys decode to static IDs {list(rd.keys)}, i.e. "
      f"{[d.lookup_term(k) for k in rd.keys]}")

length_head = cbor.encode_item(msg.bitmap_len_bits)
print(f"\nsection 2: bitmap length indicator")
print(f"  {length_head.hex()} = {msg.bitmap_len_bits} bits of structure")

print(f"\nsection 3: bitmap + index list ({len(msg.body)} bytes)")
bits = "".join(f"{byte:08b}" for byte in msg.body)
print(f"  structure bitmap : {bits[:msg.bitmap_len_bits]}")
print(f"    (0 = pair/element, 10 = map start + first pair, 110 = map end,")
print(f"     1110/1111 = array start/end)")
print(f"  index list       : {bits[msg.bitmap_len_bits:msg.bitmap_len_bits + 40]}… "
      f"at {msg.key_bits}-bit keys / {msg.value_bits}-bit values")
print(f"  padding          : {msg.padding_bits} zero bits")
total = len(msg.dict_bytes) + len(length_head) + len(msg.body)
print(f"\ntotal: {total} bytes")
