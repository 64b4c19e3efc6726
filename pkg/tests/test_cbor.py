import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cbl.cbor import CborTag, decode_item, decode_single, encode_item
from cbl.errors import MalformedError, NonCanonicalError, TruncatedError, UnsupportedItemError

# RFC 8949 Appendix A vectors restricted to the supported subset
# (integers, text, arrays, tags, floats).
APPENDIX_A = [
    (0, "00"),
    (1, "01"),
    (10, "0a"),
    (23, "17"),
    (24, "1818"),
    (25, "1819"),
    (100, "1864"),
    (1000, "1903e8"),
    (1000000, "1a000f4240"),
    (1000000000000, "1b000000e8d4a51000"),
    (18446744073709551615, "1bffffffffffffffff"),
    (-18446744073709551616, "3bffffffffffffffff"),
    (-1, "20"),
    (-10, "29"),
    (-100, "3863"),
    (-1000, "3903e7"),
    (0.0, "f90000"),
    (-0.0, "f98000"),
    (1.0, "f93c00"),
    (1.1, "fb3ff199999999999a"),
    (1.5, "f93e00"),
    (65504.0, "f97bff"),
    (100000.0, "fa47c35000"),
    (3.4028234663852886e38, "fa7f7fffff"),
    (1.0e300, "fb7e37e43c8800759c"),
    (5.960464477539063e-8, "f90001"),
    (0.00006103515625, "f90400"),
    (-4.0, "f9c400"),
    (-4.1, "fbc010666666666666"),
    (float("inf"), "f97c00"),
    (float("nan"), "f97e00"),
    (float("-inf"), "f9fc00"),
    ("", "60"),
    ("a", "6161"),
    ("IETF", "6449455446"),
    ('"\\', "62225c"),
    ("ü", "62c3bc"),
    ("水", "63e6b0b4"),
    ("\U00010151", "64f0908591"),
    ([], "80"),
    ([1, 2, 3], "83010203"),
    ([1, [2, 3], [4, 5]], "8301820203820405"),
    (list(range(1, 26)), "98190102030405060708090a0b0c0d0e0f101112131415161718181819"),
    (CborTag(0, "2013-03-21T20:04:00Z"), "c074323031332d30332d32315432303a30343a30305a"),
    (CborTag(1, 1363896240), "c11a514b67b0"),
    (CborTag(1, 1363896240.5), "c1fb41d452d9ec200000"),
]


def _same(a, b):
    if isinstance(a, float) and isinstance(b, float):
        return (math.isnan(a) and math.isnan(b)) or (
            a == b and math.copysign(1, a) == math.copysign(1, b)
        )
    if isinstance(a, list) and isinstance(b, list):
        return len(a) == len(b) and all(_same(x, y) for x, y in zip(a, b))
    if isinstance(a, CborTag) and isinstance(b, CborTag):
        return a.tag == b.tag and _same(a.value, b.value)
    return type(a) is type(b) and a == b


@pytest.mark.parametrize("item,hexbytes", APPENDIX_A, ids=lambda v: repr(v)[:40])
def test_appendix_a_encode(item, hexbytes):
    assert encode_item(item).hex() == hexbytes


@pytest.mark.parametrize("item,hexbytes", APPENDIX_A, ids=lambda v: repr(v)[:40])
def test_appendix_a_decode(item, hexbytes):
    decoded = decode_single(bytes.fromhex(hexbytes))
    assert _same(decoded, item)


def test_decode_returns_next_offset():
    assert decode_item(bytes.fromhex("1819"), 0) == (25, 2)
    assert decode_item(bytes.fromhex("820102"), 0) == ([1, 2], 3)


def test_reserved_additional_info_is_malformed():
    with pytest.raises(MalformedError):
        decode_item(b"\x1c")


def test_indefinite_length_rejected():
    with pytest.raises(MalformedError):
        decode_item(b"\x9f\x01\xff")


def test_truncated():
    with pytest.raises(TruncatedError):
        decode_item(b"\x18")
    with pytest.raises(TruncatedError):
        decode_item(b"\x62\xc3")
    with pytest.raises(TruncatedError):
        decode_item(b"\x82\x01")


def test_non_shortest_heads_rejected_in_strict_mode():
    for bad in ("1805", "190019", "1a00000100", "1b0000000000000001", "7800"):
        with pytest.raises(NonCanonicalError):
            decode_item(bytes.fromhex(bad))
        item, _ = decode_item(bytes.fromhex(bad), strict=False)  # lenient mode accepts
    assert decode_item(bytes.fromhex("1805"), strict=False)[0] == 5


def test_non_preferred_float_widths_rejected_in_strict_mode():
    double_one = bytes.fromhex("fb3ff0000000000000")
    with pytest.raises(NonCanonicalError):
        decode_item(double_one)
    assert decode_item(double_one, strict=False)[0] == 1.0


def test_outside_subset_rejected():
    for item in (b"bytes", {"a": 1}, True, False, None, object()):
        with pytest.raises(UnsupportedItemError):
            encode_item(item)
    for wire in ("f4", "f5", "f6", "f7", "f820", "40", "a0"):  # simples, bytes, map
        with pytest.raises(MalformedError):
            decode_item(bytes.fromhex(wire))


def test_integer_out_of_range():
    with pytest.raises(UnsupportedItemError):
        encode_item(1 << 64)
    with pytest.raises(UnsupportedItemError):
        encode_item(-(1 << 64) - 1)


def test_invalid_utf8_text_is_malformed():
    with pytest.raises(MalformedError):
        decode_item(b"\x62\xff\xfe")


cbor_items = st.recursive(
    st.one_of(
        st.integers(min_value=-(1 << 64), max_value=(1 << 64) - 1),
        st.text(max_size=8),
        st.floats(width=64),
    ),
    lambda children: st.one_of(
        st.lists(children, max_size=4),
        st.builds(CborTag, st.integers(min_value=0, max_value=1 << 32), children),
    ),
    max_leaves=10,
)


@given(cbor_items)
def test_round_trip(item):
    wire = encode_item(item)
    assert _same(decode_single(wire), item)


@given(cbor_items)
def test_canonical_reencode(item):
    wire = encode_item(item)
    assert encode_item(decode_single(wire)) == wire
