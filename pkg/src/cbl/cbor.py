"""Minimal deterministic CBOR (RFC 8949 subset) encoder/decoder.

Supported items: unsigned and negative integers, text strings, arrays, tags,
and floats. Items are plain Python values (``int``, ``str``, ``list``,
``float``) plus :class:`CborTag`. Encoding is always shortest-form
(preferred serialization); decoding is strict by default and rejects
non-shortest-form heads and non-preferred float widths.

Byte strings, maps, booleans/null/simple values, bignums and
indefinite-length items are deliberately out: the CBL wire format never
emits them.
"""

import math
import struct
from dataclasses import dataclass

from .errors import MalformedError, NonCanonicalError, TruncatedError, UnsupportedItemError

_MAJOR_UINT = 0
_MAJOR_NINT = 1
_MAJOR_TEXT = 3
_MAJOR_ARRAY = 4
_MAJOR_TAG = 6
_MAJOR_SIMPLE = 7

_CANONICAL_NAN = b"\xf9\x7e\x00"


@dataclass(frozen=True)
class CborTag:
    tag: int
    value: object

    def __post_init__(self):
        if not isinstance(self.tag, int) or self.tag < 0 or self.tag > 0xFFFFFFFFFFFFFFFF:
            raise UnsupportedItemError(f"bad tag number {self.tag!r}")


def encode_head(major: int, arg: int) -> bytes:
    """Shortest-form head for *major* with argument *arg*."""
    if arg < 24:
        return bytes([(major << 5) | arg])
    if arg < 0x100:
        return bytes([(major << 5) | 24, arg])
    if arg < 0x10000:
        return struct.pack(">BH", (major << 5) | 25, arg)
    if arg < 0x100000000:
        return struct.pack(">BI", (major << 5) | 26, arg)
    if arg < 0x10000000000000000:
        return struct.pack(">BQ", (major << 5) | 27, arg)
    raise UnsupportedItemError(f"argument {arg} exceeds 64 bits")


def _encode_float(value: float) -> bytes:
    if math.isnan(value):
        return _CANONICAL_NAN
    # Preferred serialization: the shortest width that preserves the value,
    # including the sign of zero.
    as_double = struct.pack(">d", value)
    for fmt, head in ((">e", 0xF9), (">f", 0xFA)):
        try:
            packed = struct.pack(fmt, value)
        except (OverflowError, ValueError):
            continue
        if struct.pack(">d", struct.unpack(fmt, packed)[0]) == as_double:
            return bytes([head]) + packed
    return b"\xfb" + as_double


def encode_item(item) -> bytes:
    """Encode one supported item to canonical CBOR bytes."""
    if isinstance(item, bool):
        raise UnsupportedItemError("booleans are outside the supported subset")
    if isinstance(item, int):
        if item >= 0:
            return encode_head(_MAJOR_UINT, item)
        return encode_head(_MAJOR_NINT, -1 - item)
    if isinstance(item, str):
        data = item.encode("utf-8")
        return encode_head(_MAJOR_TEXT, len(data)) + data
    if isinstance(item, list):
        return encode_head(_MAJOR_ARRAY, len(item)) + b"".join(encode_item(x) for x in item)
    if isinstance(item, CborTag):
        return encode_head(_MAJOR_TAG, item.tag) + encode_item(item.value)
    if isinstance(item, float):
        return _encode_float(item)
    raise UnsupportedItemError(f"unsupported item type {type(item).__name__}")


def _read(buf: bytes, offset: int, n: int) -> bytes:
    end = offset + n
    if end > len(buf):
        raise TruncatedError(f"need {n} bytes at offset {offset}, have {len(buf) - offset}")
    return buf[offset:end]


def decode_head(buf: bytes, offset: int, strict: bool = True):
    """Return (major, arg, next_offset) for majors 0..6."""
    initial = _read(buf, offset, 1)[0]
    major = initial >> 5
    ai = initial & 0x1F
    offset += 1
    if ai < 24:
        return major, ai, offset
    if ai == 24:
        arg = _read(buf, offset, 1)[0]
        if strict and arg < 24:
            raise NonCanonicalError(f"argument {arg} in 2-byte head at offset {offset - 1}")
        return major, arg, offset + 1
    if ai in (25, 26, 27):
        size = 1 << (ai - 24)
        arg = int.from_bytes(_read(buf, offset, size), "big")
        if strict and arg < (1 << (4 * size)):
            raise NonCanonicalError(f"oversized head for argument {arg} at offset {offset - 1}")
        return major, arg, offset + size
    if ai in (28, 29, 30):
        raise MalformedError(f"reserved additional-info value {ai} at offset {offset - 1}")
    raise MalformedError(f"indefinite-length item at offset {offset - 1}")


def decode_item(buf: bytes, offset: int = 0, strict: bool = True):
    """Decode one item starting at *offset*; return (item, next_offset)."""
    initial = _read(buf, offset, 1)[0]
    if initial >> 5 == _MAJOR_SIMPLE:
        # Floats dispatch on the raw additional info; simple values (including
        # booleans and null) are outside the subset.
        return _decode_float(buf, initial & 0x1F, offset + 1, strict)
    major, arg, offset = decode_head(buf, offset, strict)
    if major == _MAJOR_UINT:
        return arg, offset
    if major == _MAJOR_NINT:
        return -1 - arg, offset
    if major == _MAJOR_TEXT:
        raw = _read(buf, offset, arg)
        try:
            return raw.decode("utf-8"), offset + arg
        except UnicodeDecodeError as exc:
            raise MalformedError(f"invalid UTF-8 in text string at offset {offset}") from exc
    if major == _MAJOR_ARRAY:
        items = []
        for _ in range(arg):
            item, offset = decode_item(buf, offset, strict)
            items.append(item)
        return items, offset
    if major == _MAJOR_TAG:
        inner, offset = decode_item(buf, offset, strict)
        return CborTag(arg, inner), offset
    raise MalformedError(f"unsupported major type {major}")


def _decode_float(buf: bytes, ai: int, offset: int, strict: bool):
    if ai == 25:
        value = struct.unpack(">e", _read(buf, offset, 2))[0]
        return value, offset + 2
    if ai == 26:
        value = struct.unpack(">f", _read(buf, offset, 4))[0]
        width = 4
    elif ai == 27:
        value = struct.unpack(">d", _read(buf, offset, 8))[0]
        width = 8
    else:
        raise MalformedError(f"simple value {ai} is outside the supported subset")
    if strict and len(_encode_float(value)) - 1 < width:
        raise NonCanonicalError(f"float at offset {offset - 1} has a shorter preferred form")
    return value, offset + width


def decode_single(buf: bytes, strict: bool = True):
    """Decode exactly one item; reject trailing bytes."""
    item, end = decode_item(buf, 0, strict)
    if end != len(buf):
        raise MalformedError(f"{len(buf) - end} trailing bytes after item")
    return item
