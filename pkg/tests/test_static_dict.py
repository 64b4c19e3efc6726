import pytest
from hypothesis import given
from hypothesis import strategies as st

from cbl.errors import FingerprintMismatchError, FormatError, TermCollisionError
from cbl.static_dict import (
    RESERVED_TERMS,
    STANDARD_KEYWORDS,
    VocabSpec,
    build_static_dictionary,
    load_dictionary,
    save_dictionary,
)

FIXED_WIRE_IDS = {
    "@id": 0,
    "@graph": 1,
    "@type": 2,
    "@value": 3,
    "@context": 4,
    "@language": 5,
}


def test_reserved_ids_are_fixed():
    d = build_static_dictionary(VocabSpec())
    for term, i in FIXED_WIRE_IDS.items():
        assert d.lookup_id(term) == i
        assert d.lookup_term(i) == term


def test_keyword_block_is_6_to_20():
    d = build_static_dictionary(VocabSpec())
    assert len(d) == 21
    assert d.lookup_id("@base") == 6
    assert d.lookup_id("@vocab") == 20
    assert list(STANDARD_KEYWORDS) == sorted(STANDARD_KEYWORDS)


def test_ontology_terms_sorted_after_keywords():
    d = build_static_dictionary(VocabSpec(ontologies=[("o", ["b", "a"])]))
    assert d.lookup_id("a") == 21
    assert d.lookup_id("b") == 22


def test_ontology_order_is_source_order():
    d = build_static_dictionary(VocabSpec(ontologies=[("x", ["zz"]), ("y", ["aa"])]))
    assert d.lookup_id("zz") == 21
    assert d.lookup_id("aa") == 22


def test_custom_terms_keep_given_order():
    d = build_static_dictionary(VocabSpec(custom=["zeta", "alpha"]))
    assert d.lookup_id("zeta") == 21
    assert d.lookup_id("alpha") == 22


def test_lookup_unknown():
    d = build_static_dictionary(VocabSpec())
    assert d.lookup_id("unknownTerm") is None
    assert d.lookup_term(999) is None


def test_fixture_dictionary_pins_worked_example_ids(fixture_dict):
    assert fixture_dict.lookup_id("sosa:Observation") == 25
    assert fixture_dict.lookup_id("sosa:hasFeatureOfInterest") == 34
    assert fixture_dict.lookup_id("sosa:hasResult") == 35
    assert fixture_dict.lookup_id("xsd:double") == 106
    assert fixture_dict.lookup_id("qudt-1-1:QuantityValue") == 212
    assert fixture_dict.lookup_id("qudt-1-1:numericValue") == 241
    assert fixture_dict.lookup_id("qudt-1-1:unit") == 380
    assert fixture_dict.lookup_id("qudt-unit-1-1:DegreeCelsius") == 762
    assert fixture_dict.lookup_id("apartment/134") == 3100


def test_term_collision():
    with pytest.raises(TermCollisionError) as info:
        build_static_dictionary(VocabSpec(ontologies=[("o", ["@type"])]))
    assert info.value.existing_id == 2
    with pytest.raises(TermCollisionError):
        build_static_dictionary(VocabSpec(ontologies=[("a", ["t"]), ("b", ["t"])]))
    with pytest.raises(TermCollisionError):
        build_static_dictionary(VocabSpec(custom=["c", "c"]))


def test_rebuild_same_spec_same_fingerprint():
    spec = VocabSpec(ontologies=[("o", ["x", "y"])], custom=["c"])
    assert build_static_dictionary(spec).fingerprint == build_static_dictionary(spec).fingerprint


def test_save_load_round_trip(fixture_dict):
    blob = save_dictionary(fixture_dict)
    loaded = load_dictionary(blob)
    assert loaded == fixture_dict
    assert loaded.fingerprint == fixture_dict.fingerprint
    assert loaded.sections == fixture_dict.sections


def test_tampered_file_rejected(fixture_dict):
    blob = bytearray(save_dictionary(fixture_dict))
    blob[40] ^= 1
    with pytest.raises(FingerprintMismatchError):
        load_dictionary(bytes(blob))


def test_bad_version_and_short_file():
    d = build_static_dictionary(VocabSpec())
    blob = save_dictionary(d)
    with pytest.raises(FormatError):
        load_dictionary(b"\x02" + blob[1:])
    with pytest.raises(FormatError):
        load_dictionary(blob[:10])


def test_empty_custom_section_persists():
    d = build_static_dictionary(VocabSpec(ontologies=[("o", ["x"])]))
    loaded = load_dictionary(save_dictionary(d))
    assert loaded.sections[-1] == ("custom", (22, 22))


def test_bijective(fixture_dict):
    for i in range(len(fixture_dict)):
        term = fixture_dict.lookup_term(i)
        assert fixture_dict.lookup_id(term) == i


@given(st.permutations(["m", "q", "a", "zz", "k", "b2"]))
def test_build_invariant_under_input_shuffle(terms):
    base = build_static_dictionary(VocabSpec(ontologies=[("o", sorted(terms))]))
    shuffled = build_static_dictionary(VocabSpec(ontologies=[("o", list(terms))]))
    assert shuffled.fingerprint == base.fingerprint
    assert shuffled == base
