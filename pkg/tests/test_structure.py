import pytest

from cbl.bits import BitReader, BitWriter
from cbl.errors import EmptyMapError, InvalidCodeError, UnbalancedStructureError
from cbl.model import parse_json
from cbl.structure import (
    CODE_TABLE,
    SkeletonArray,
    SkeletonMap,
    count_holes,
    emit_structure,
    parse_structure,
)

from docgen import DocGen


def bits_of(writer: BitWriter) -> str:
    data = writer.getvalue()
    return "".join(str((data[i // 8] >> (7 - i % 8)) & 1) for i in range(writer.bit_length))


def emit_bits(text: str) -> str:
    return bits_of(emit_structure(parse_json(text)))


def reader_for(bit_string: str) -> BitReader:
    w = BitWriter()
    for b in bit_string:
        w.write_bits(int(b), 1)
    return BitReader(w.getvalue())


def test_code_table_is_prefix_free():
    codes = [format(v, f"0{n}b") for v, n in CODE_TABLE.values()]
    for a in codes:
        for b in codes:
            if a != b:
                assert not b.startswith(a)


def test_nested_map_worked_example():
    # {380: {2: 106, 3: "2.24E1"}} shape: one pair whose value is a two-pair map
    assert emit_bits('{"qudt-1-1:unit":{"@type":"xsd:double","@value":"2.24E1"}}') == (
        "10" + "10" + "0" + "110" + "110"
    )


def test_scalar_only_array_at_top_level():
    assert emit_bits('["a","b"]') == "1110" + "0" + "0" + "1111"


def test_map_with_array_value():
    assert emit_bits('{"k":["v"]}') == "10" + "1110" + "0" + "1111" + "110"


def test_subsequent_pair_with_composite_value_keeps_its_pair_code():
    # the pair marker disambiguates {"a":1,"b":{"x":1}} from {"a":{"x":1}}
    flat_then_nested = emit_bits('{"@id":1,"@type":{"@value":1}}')
    nested_first = emit_bits('{"@id":{"@value":1}}')
    assert flat_then_nested == "10" + "0" + "10" + "110" + "110"
    assert nested_first == "10" + "10" + "110" + "110"
    assert flat_then_nested != nested_first


def test_graph_style_nesting():
    assert emit_bits('{"@graph":[{"@id":"a"}]}') == "10" + "1110" + "10" + "110" + "1111" + "110"


def test_scalar_root_is_single_element_code():
    assert emit_bits('"just a string"') == "0"
    assert emit_bits("42") == "0"


def test_empty_map_rejected():
    with pytest.raises(EmptyMapError):
        emit_structure(parse_json('{"a":{}}'))


def test_parse_nested_map_example():
    skel = parse_structure(reader_for("1010011011" + "0"))
    assert skel == SkeletonMap([SkeletonMap([None, None])])
    assert count_holes(skel) == (3, 0)


def test_parse_empty_array():
    skel = parse_structure(reader_for("11101111"))
    assert skel == SkeletonArray([])
    assert count_holes(skel) == (0, 0)


def test_parse_minimal_map():
    assert parse_structure(reader_for("10110")) == SkeletonMap([None])


def test_parse_errors():
    with pytest.raises(InvalidCodeError):
        parse_structure(BitReader(b""))  # no codes at all
    with pytest.raises(UnbalancedStructureError):
        parse_structure(reader_for("110110"))  # starts with a close code
    with pytest.raises(UnbalancedStructureError):
        parse_structure(reader_for("1110" + "110" + "1111"))  # map end inside array
    with pytest.raises(InvalidCodeError):
        parse_structure(reader_for("10"))  # map never closed, runs off the end


def test_count_holes_mixed():
    skel = parse_structure(reader_for(emit_bits('{"k":["v","w"]}')))
    assert count_holes(skel) == (1, 2)
    assert count_holes(None) == (0, 1)  # scalar root


def test_emit_parse_round_trip_fuzz(fixture_dict):
    gen = DocGen(fixture_dict, seed=7)
    for _ in range(300):
        doc = gen.document()
        writer = emit_structure(doc)
        reader = BitReader(writer.getvalue())
        skel = parse_structure(reader)
        assert reader.bits_read == writer.bit_length
        assert skel == _shape_of(doc)


def test_bit_cost_formula_fuzz(fixture_dict):
    # independent size oracle: 5 bits per map, 8 per array, 1 per pair after
    # the first, 1 per scalar element, 1 for a scalar root
    gen = DocGen(fixture_dict, seed=8)
    for _ in range(300):
        doc = gen.document()
        assert emit_structure(doc).bit_length == _expected_bits(doc)


def _shape_of(value):
    from cbl.model import JsonMap

    if isinstance(value, JsonMap):
        return SkeletonMap([_shape_of(v) if isinstance(v, (JsonMap, list)) else None
                            for _, v in value.entries])
    if isinstance(value, list):
        return SkeletonArray([_shape_of(v) if isinstance(v, (JsonMap, list)) else None
                              for v in value])
    return None


def _expected_bits(value, at_root=True):
    from cbl.model import JsonMap

    if isinstance(value, JsonMap):
        bits = 5 + (len(value.entries) - 1)
        for _, child in value.entries:
            if isinstance(child, (JsonMap, list)):
                bits += _expected_bits(child, at_root=False)
        return bits
    if isinstance(value, list):
        bits = 8
        for child in value:
            bits += _expected_bits(child, at_root=False) if isinstance(child, (JsonMap, list)) else 1
        return bits
    return 1 if at_root else 0
