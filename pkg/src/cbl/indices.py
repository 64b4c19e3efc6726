"""Fixed-width packing of the key/value index list.

Entries follow document order. A pair whose value is a scalar contributes
its key index then its value index; a pair whose value is a map/array
contributes only its key index (the bitmap already announces the composite);
a scalar array element contributes only a value index. Widths are derived
from the re-indexation dictionary on both sides and never transmitted.

Entry forms: ("pair", key, value), ("key", key), ("elem", value).
"""

from dataclasses import dataclass

from .bits import BitReader, BitWriter
from .errors import IndexOutOfRangeError, TruncatedError
from .structure import SkeletonArray, SkeletonMap


def bit_width(max_index: int) -> int:
    """Smallest width (>= 1) whose range covers indices 0..max_index."""
    return max(1, int(max_index).bit_length())


@dataclass
class IndexList:
    entries: list
    key_bits: int
    value_bits: int


def pack_indices(index_list: IndexList, writer: BitWriter | None = None) -> BitWriter:
    if writer is None:
        writer = BitWriter()
    kb, vb = index_list.key_bits, index_list.value_bits
    for entry in index_list.entries:
        kind = entry[0]
        if kind == "pair":
            _write_field(writer, entry[1], kb, "key")
            _write_field(writer, entry[2], vb, "value")
        elif kind == "key":
            _write_field(writer, entry[1], kb, "key")
        elif kind == "elem":
            _write_field(writer, entry[1], vb, "value")
        else:
            raise ValueError(f"bad index entry {entry!r}")
    return writer


def _write_field(writer, index, width, what):
    if index < 0 or index >> width:
        raise IndexOutOfRangeError(f"{what} index {index} does not fit in {width} bits")
    writer.write_bits(index, width)


def unpack_indices(reader: BitReader, skeleton, key_bits: int, value_bits: int) -> IndexList:
    """Exact inverse of pack_indices given the same skeleton."""
    entries = []

    def read(width):
        try:
            return reader.read_bits(width)
        except TruncatedError as exc:
            raise TruncatedError("index list ends early") from exc

    def walk(node, in_array=False):
        if node is None:
            if in_array:
                entries.append(("elem", read(value_bits)))
            return
        if isinstance(node, SkeletonMap):
            for child in node.pair_values:
                if child is None:
                    entries.append(("pair", read(key_bits), read(value_bits)))
                else:
                    entries.append(("key", read(key_bits)))
                    walk(child)
        elif isinstance(node, SkeletonArray):
            for child in node.elements:
                walk(child, in_array=True)

    if skeleton is None:
        entries.append(("elem", read(value_bits)))
    else:
        walk(skeleton)
    return IndexList(entries, key_bits, value_bits)
