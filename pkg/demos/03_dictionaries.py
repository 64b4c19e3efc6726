"""How the two dictionary layers work.

The static dictionary maps every known term to an integer and is never
transmitted. The per-message re-indexation dictionary renumbers just the
terms a message uses into small dense indices, and compresses its own
payload with delta coding for sorted integers and suffix ops for strings.
"""

from _common import fixture_dictionary

from cbl import parse_json
from cbl.reindex import delta_encode_ints, extract_terms, resolve_string_op, string_op_for

d = fixture_dictionary()

print("static dictionary sections:")
for name, (lo, hi) in d.sections:
    print(f"  {name:<16} ids {lo:>5}..{hi - 1}")

print("\nfixed wire IDs for the most frequent keywords:")
for i in range(6):
    print(f"  {d.lookup_term(i):<10} = {i}")

print("\nexample lookups:")
for term in ("sosa:Observation", "sosa:hasFeatureOfInterest", "qudt-1-1:unit", "apartment/134"):
    print(f"  {term:<28} -> {d.lookup_id(term)}")

doc = parse_json(
    '{"@graph":[{"@id":"Observation/234534","@type":"sosa:Observation",'
    '"sosa:hasResult":{"@id":"_:g462280"}},'
    '{"@id":"Observation/83985","@type":"sosa:Observation",'
    '"sosa:hasResult":{"@id":"_:g462380"}}]}'
)
rd, maps = extract_terms(doc, d)

print("\nper-message keys array (sorted static IDs, reserved 0..5 implied):")
print(f"  raw  : {list(rd.keys)}")
print(f"  delta: {delta_encode_ints(list(rd.keys))}")

print("\nvalues array entries:")
for i, entry in enumerate(rd.values):
    print(f"  [{i}] {entry}")

print("\nstring suffix ops rewrite a neighbor instead of repeating the prefix:")
op = string_op_for("Observation/234534", "Observation/83985")
print(f"  'Observation/234534' -> 'Observation/83985' is {op}")
print(f"  resolve: {resolve_string_op('Observation/234534', *op)!r}")
