"""Full message encode/decode, wire layout, variants, and size accounting.

Default wire layout (no header, sizes directly comparable):

    dictionary bytes        CBOR [keys, values] (see reindex)
    bitmap length           CBOR unsigned integer, counted in BITS
    body                    structure bitmap then packed index list, one
                            contiguous bit stream, zero-padded to a byte

Framed mode prepends ``version byte, flags byte, 32-byte dictionary
fingerprint`` so a message is self-describing and the dictionary can be
checked before decoding.

Variants: ``cbor-map`` replaces the bitmap+indices with a CBOR map/array
body of re-indexed integers; ``gzip-after`` gzips the standard output.
``delta_encoding=False`` turns off both the integer and the string delta
passes in the dictionary section.
"""

import gzip
import zlib
from dataclasses import dataclass, field
from enum import Enum

from . import cbor
from .bits import BitReader, BitWriter
from .errors import (
    CorruptStreamError,
    DuplicateKeyError,
    EmptyMapError,
    FingerprintMismatchError,
    IndexOutOfRangeError,
    MalformedError,
    TruncatedError,
)
from .indices import IndexList, bit_width, pack_indices, unpack_indices
from .model import JsonMap, serialize_json
from .reindex import (
    ReindexDictionary,
    deserialize_reindex,
    entry_to_value,
    extract_terms,
    scalar_key,
    serialize_reindex,
)
from .static_dict import RESERVED_TERMS, StaticDictionary
from .structure import SkeletonArray, SkeletonMap, emit_structure, parse_structure

FRAME_VERSION = 0x01
_FLAG_NO_DELTA = 0x01
_FLAG_CBOR_MAP = 0x02
_FLAG_GZIP = 0x04
_FLAG_EPOCH_DATES = 0x08

_GZIP_MAGIC = b"\x1f\x8b"


class Variant(Enum):
    STANDARD = "standard"
    CBOR_MAP = "cbor-map"
    GZIP_AFTER = "gzip-after"


@dataclass(frozen=True)
class EncodeOptions:
    delta_encoding: bool = True
    variant: Variant = Variant.STANDARD
    epoch_dates: bool = False
    framed: bool = False


@dataclass
class CblMessage:
    """The wire sections of one standard-variant message."""

    dict_bytes: bytes
    bitmap_len_bits: int
    index_len_bits: int
    body: bytes  # bitmap ++ indices, zero-padded
    key_bits: int
    value_bits: int

    @property
    def padding_bits(self) -> int:
        return len(self.body) * 8 - self.bitmap_len_bits - self.index_len_bits


@dataclass
class SizeReport:
    original_bytes: int
    encoded_bytes: int
    section_bytes: dict
    savings_percent: float
    options: EncodeOptions = field(default_factory=EncodeOptions)


def compress_deflate(data: bytes) -> bytes:
    """Deterministic gzip container (fixed mtime, level 9)."""
    return gzip.compress(data, compresslevel=9, mtime=0)


def decompress_deflate(data: bytes) -> bytes:
    try:
        return gzip.decompress(data)
    except (OSError, EOFError, zlib.error) as exc:
        raise CorruptStreamError(f"bad gzip stream: {exc}") from exc


def encode_message(doc, d: StaticDictionary, opts: EncodeOptions = EncodeOptions()) -> CblMessage:
    """Build the standard-variant wire sections for *doc*."""
    _check_no_empty_maps(doc)
    rd, maps = extract_terms(doc, d, epoch_dates=opts.epoch_dates)
    dict_bytes = serialize_reindex(rd, delta=opts.delta_encoding)
    key_bits = bit_width(5 + len(rd.keys))
    value_bits = bit_width(max(len(rd.values) - 1, 0))

    writer = BitWriter()
    emit_structure(doc, writer)
    bitmap_bits = writer.bit_length
    entries = _collect_entries(doc, maps, d, opts.epoch_dates)
    pack_indices(IndexList(entries, key_bits, value_bits), writer)
    index_bits = writer.bit_length - bitmap_bits
    return CblMessage(dict_bytes, bitmap_bits, index_bits, writer.getvalue(), key_bits, value_bits)


def cbl_encode(doc, d: StaticDictionary, opts: EncodeOptions = EncodeOptions()) -> bytes:
    """Encode *doc* against static dictionary *d*."""
    if opts.variant is Variant.CBOR_MAP:
        _check_no_empty_maps(doc)
        rd, maps = extract_terms(doc, d, epoch_dates=opts.epoch_dates)
        payload = serialize_reindex(rd, delta=opts.delta_encoding) + _encode_map_body(
            doc, maps, d, opts.epoch_dates
        )
    else:
        msg = encode_message(doc, d, opts)
        payload = msg.dict_bytes + cbor.encode_item(msg.bitmap_len_bits) + msg.body
        if opts.variant is Variant.GZIP_AFTER:
            payload = compress_deflate(payload)
    if opts.framed:
        payload = _frame_header(d, opts) + payload
    return payload


def _frame_header(d: StaticDictionary, opts: EncodeOptions) -> bytes:
    flags = 0
    if not opts.delta_encoding:
        flags |= _FLAG_NO_DELTA
    if opts.variant is Variant.CBOR_MAP:
        flags |= _FLAG_CBOR_MAP
    elif opts.variant is Variant.GZIP_AFTER:
        flags |= _FLAG_GZIP
    if opts.epoch_dates:
        flags |= _FLAG_EPOCH_DATES
    return bytes([FRAME_VERSION, flags]) + d.fingerprint


def cbl_decode(data: bytes, d: StaticDictionary, opts: EncodeOptions | None = None):
    """Decode a message produced with the same dictionary and options.

    Framed messages carry their options; the gzip and cbor-map variants are
    recognized from the bytes. Only ``delta_encoding=False`` cannot be
    detected and must be passed in *opts* for unframed messages.
    """
    if opts is None:
        opts = EncodeOptions()
    if not data:
        raise TruncatedError("empty message")

    # An unframed message always begins with the dictionary's 0x82 array head
    # (or the gzip magic), so the version byte is unambiguous.
    if data[0] == FRAME_VERSION:
        if len(data) < 2 + 32:
            raise TruncatedError("framed message shorter than its header")
        flags = data[1]
        if flags >> 4:
            raise MalformedError(f"unknown frame flags 0x{flags:02x}")
        if data[2:34] != d.fingerprint:
            raise FingerprintMismatchError("message was encoded with a different dictionary")
        opts = EncodeOptions(
            delta_encoding=not flags & _FLAG_NO_DELTA,
            variant=Variant.CBOR_MAP
            if flags & _FLAG_CBOR_MAP
            else (Variant.GZIP_AFTER if flags & _FLAG_GZIP else Variant.STANDARD),
            epoch_dates=bool(flags & _FLAG_EPOCH_DATES),
            framed=True,
        )
        data = data[34:]

    if data[:2] == _GZIP_MAGIC:
        data = decompress_deflate(data)

    rd, offset = deserialize_reindex(data, d, delta=opts.delta_encoding)
    if offset >= len(data):
        raise TruncatedError("message ends after the dictionary section")
    # A map-rooted cbor-map body announces itself (major type 5); a scalar or
    # array root does not, so the caller's options decide there.
    if opts.variant is Variant.CBOR_MAP or data[offset] >> 5 == 5:
        doc, end = _decode_map_body(data, offset, rd, d)
        if end != len(data):
            raise MalformedError(f"{len(data) - end} trailing bytes after the body")
        return doc
    return _decode_standard_body(data, offset, rd, d)


def _decode_standard_body(data, offset, rd: ReindexDictionary, d):
    length_item, offset = cbor.decode_item(data, offset)
    if isinstance(length_item, bool) or not isinstance(length_item, int) or length_item < 0:
        raise MalformedError(f"bad bitmap length indicator {length_item!r}")
    reader = BitReader(data, offset_bytes=offset)
    skeleton = parse_structure(reader)
    bitmap_bits = reader.bits_read - offset * 8
    if bitmap_bits != length_item:
        raise MalformedError(
            f"bitmap length indicator says {length_item} bits, structure used {bitmap_bits}"
        )
    key_bits = bit_width(5 + len(rd.keys))
    value_bits = bit_width(max(len(rd.values) - 1, 0))
    index_list = unpack_indices(reader, skeleton, key_bits, value_bits)
    padding = reader.bits_remaining
    if padding >= 8:
        raise MalformedError(f"{padding // 8} trailing bytes after the index list")
    if padding and reader.read_bits(padding) != 0:
        raise MalformedError("nonzero padding bits")
    return _rebuild(skeleton, index_list.entries, rd, d)


def _collect_entries(value, maps, d, epoch_dates):
    entries = []

    def value_index(scalar):
        return maps.value_index[scalar_key(scalar, d, epoch_dates)]

    def walk(node):
        if isinstance(node, JsonMap):
            for key, child in node.entries:
                ki = maps.key_index[key]
                if isinstance(child, (JsonMap, list)):
                    entries.append(("key", ki))
                    walk(child)
                else:
                    entries.append(("pair", ki, value_index(child)))
        elif isinstance(node, list):
            for child in node:
                if isinstance(child, (JsonMap, list)):
                    walk(child)
                else:
                    entries.append(("elem", value_index(child)))
        else:
            entries.append(("elem", value_index(node)))

    walk(value)
    return entries


def _rebuild(skeleton, entries, rd: ReindexDictionary, d):
    it = iter(entries)

    def key_term(ki):
        if ki < 6:
            return RESERVED_TERMS[ki]
        pos = ki - 6
        if pos >= len(rd.keys):
            raise IndexOutOfRangeError(f"key index {ki} exceeds the keys array")
        return d.lookup_term(rd.keys[pos])

    def value_for(vi):
        if vi >= len(rd.values):
            raise IndexOutOfRangeError(f"value index {vi} exceeds the values array")
        return entry_to_value(rd.values[vi], d)

    def walk(node):
        if isinstance(node, SkeletonMap):
            pairs = []
            for child in node.pair_values:
                entry = next(it)
                if child is None:
                    pairs.append((key_term(entry[1]), value_for(entry[2])))
                else:
                    pairs.append((key_term(entry[1]), walk(child)))
            try:
                return JsonMap(pairs)
            except DuplicateKeyError as exc:
                raise MalformedError(str(exc)) from exc
        if isinstance(node, SkeletonArray):
            return [value_for(next(it)[1]) if c is None else walk(c) for c in node.elements]
        return value_for(next(it)[1])  # scalar root

    return walk(skeleton)


# ---------------------------------------------------------------------------
# cbor-map variant body (real CBOR maps; kept out of the cbor-core subset)


def _encode_map_body(value, maps, d, epoch_dates) -> bytes:
    out = bytearray()

    def walk(node):
        if isinstance(node, JsonMap):
            out.extend(cbor.encode_head(5, len(node.entries)))
            for key, child in node.entries:
                out.extend(cbor.encode_item(maps.key_index[key]))
                walk(child)
        elif isinstance(node, list):
            out.extend(cbor.encode_head(4, len(node)))
            for child in node:
                walk(child)
        else:
            out.extend(cbor.encode_item(maps.value_index[scalar_key(node, d, epoch_dates)]))

    walk(value)
    return bytes(out)


def _decode_map_body(data, offset, rd: ReindexDictionary, d):
    def key_term(ki):
        if ki < 6:
            return RESERVED_TERMS[ki]
        if ki - 6 >= len(rd.keys):
            raise IndexOutOfRangeError(f"key index {ki} exceeds the keys array")
        return d.lookup_term(rd.keys[ki - 6])

    def value_for(vi):
        if vi >= len(rd.values):
            raise IndexOutOfRangeError(f"value index {vi} exceeds the values array")
        return entry_to_value(rd.values[vi], d)

    def walk(offset):
        major, arg, offset = cbor.decode_head(data, offset)
        if major == 0:
            return value_for(arg), offset
        if major == 4:
            items = []
            for _ in range(arg):
                item, offset = walk(offset)
                items.append(item)
            return items, offset
        if major == 5:
            pairs = []
            for _ in range(arg):
                kmajor, ki, offset = cbor.decode_head(data, offset)
                if kmajor != 0:
                    raise MalformedError("map keys must be unsigned key indices")
                child, offset = walk(offset)
                pairs.append((key_term(ki), child))
            try:
                return JsonMap(pairs), offset
            except DuplicateKeyError as exc:
                raise MalformedError(str(exc)) from exc
        raise MalformedError(f"unexpected major type {major} in cbor-map body")

    return walk(offset)


# ---------------------------------------------------------------------------
# size accounting


def measure(
    doc,
    d: StaticDictionary,
    opts: EncodeOptions = EncodeOptions(),
    original_bytes: int | None = None,
) -> SizeReport:
    """Encode and account for every output byte.

    *original_bytes* should be the source file size when known; otherwise
    the compact serialization length is used.
    """
    encoded = cbl_encode(doc, d, opts)
    if original_bytes is None:
        original_bytes = len(serialize_json(doc).encode("utf-8"))

    sections = {}
    if opts.framed:
        sections["frame"] = 2 + 32
    if opts.variant is Variant.GZIP_AFTER:
        sections["gzip_stream"] = len(encoded) - sections.get("frame", 0)
    elif opts.variant is Variant.CBOR_MAP:
        rd, maps = extract_terms(doc, d, epoch_dates=opts.epoch_dates)
        dict_bytes = serialize_reindex(rd, delta=opts.delta_encoding)
        sections["dict"] = len(dict_bytes)
        sections["cbor_body"] = len(_encode_map_body(doc, maps, d, opts.epoch_dates))
    else:
        msg = encode_message(doc, d, opts)
        sections["dict"] = len(msg.dict_bytes)
        sections["bitmap"] = len(cbor.encode_item(msg.bitmap_len_bits)) + msg.bitmap_len_bits / 8
        sections["indices"] = msg.index_len_bits / 8
        sections["padding"] = msg.padding_bits / 8

    savings = 100.0 * (original_bytes - len(encoded)) / original_bytes
    return SizeReport(original_bytes, len(encoded), sections, savings, opts)


def _check_no_empty_maps(value):
    if isinstance(value, JsonMap):
        if not value.entries:
            raise EmptyMapError("document contains an empty map")
        for _, child in value.entries:
            _check_no_empty_maps(child)
    elif isinstance(value, list):
        for child in value:
            _check_no_empty_maps(child)


ALL_VARIANT_OPTIONS = {
    "default": EncodeOptions(),
    "no-delta": EncodeOptions(delta_encoding=False),
    "cbor-map": EncodeOptions(variant=Variant.CBOR_MAP),
    "gzip-after": EncodeOptions(variant=Variant.GZIP_AFTER),
}

__all__ = [
    "ALL_VARIANT_OPTIONS",
    "CblMessage",
    "EncodeOptions",
    "SizeReport",
    "Variant",
    "cbl_decode",
    "cbl_encode",
    "compress_deflate",
    "decompress_deflate",
    "encode_message",
    "measure",
]
