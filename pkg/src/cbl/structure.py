"""Structure bitmap: prefix codes describing map/array shape.

Code table (MSB-first):

    0     subsequent map pair, or scalar array element
    10    map start, covering the map's first pair
    110   map end
    1110  array start
    1111  array end

The map-start code absorbs the first pair, so that pair's value codes (if
composite) follow it directly. Every later pair emits ``0`` first; a
composite value's start codes then follow the ``0``. Scalar array elements
emit ``0``; composite elements emit their start code alone. A document that
is itself a scalar is the single code ``0``.

Empty maps are not representable and are rejected at emit time; empty
arrays are fine (``1110 1111``).
"""

from dataclasses import dataclass

from .bits import BitReader, BitWriter
from .errors import EmptyMapError, InvalidCodeError, TruncatedError, UnbalancedStructureError
from .model import JsonMap

PAIR = (0b0, 1)
MAP_START = (0b10, 2)
MAP_END = (0b110, 3)
ARRAY_START = (0b1110, 4)
ARRAY_END = (0b1111, 4)

CODE_TABLE = {
    "pair": PAIR,
    "map_start": MAP_START,
    "map_end": MAP_END,
    "array_start": ARRAY_START,
    "array_end": ARRAY_END,
}


@dataclass
class SkeletonMap:
    """One slot per pair; None means the pair's value is a scalar hole."""

    pair_values: list


@dataclass
class SkeletonArray:
    """One slot per element; None means a scalar element hole."""

    elements: list


# A skeleton is SkeletonMap | SkeletonArray | None (None = scalar root).


def emit_structure(doc, writer: BitWriter | None = None) -> BitWriter:
    """Append the document's structure codes to *writer* (depth-first)."""
    if writer is None:
        writer = BitWriter()
    _emit(doc, writer, at_root=True)
    return writer


def _emit(value, writer, at_root=False):
    if isinstance(value, JsonMap):
        if not value.entries:
            raise EmptyMapError("empty maps have no structure code")
        writer.write_bits(*MAP_START)
        for i, (_, child) in enumerate(value.entries):
            if i:
                writer.write_bits(*PAIR)
            if isinstance(child, (JsonMap, list)):
                _emit(child, writer)
        writer.write_bits(*MAP_END)
    elif isinstance(value, list):
        writer.write_bits(*ARRAY_START)
        for child in value:
            if isinstance(child, (JsonMap, list)):
                _emit(child, writer)
            else:
                writer.write_bits(*PAIR)
        writer.write_bits(*ARRAY_END)
    elif at_root:
        # A bare scalar document is a single element slot.
        writer.write_bits(*PAIR)


_SYM_PAIR, _SYM_MAP_START, _SYM_MAP_END, _SYM_ARRAY_START, _SYM_ARRAY_END = range(5)


def _read_symbol(reader: BitReader) -> int:
    try:
        if not reader.read_bit():
            return _SYM_PAIR
        if not reader.read_bit():
            return _SYM_MAP_START
        if not reader.read_bit():
            return _SYM_MAP_END
        if not reader.read_bit():
            return _SYM_ARRAY_START
        return _SYM_ARRAY_END
    except TruncatedError as exc:
        raise InvalidCodeError("structure codes end mid-symbol") from exc


def parse_structure(reader: BitReader):
    """Read exactly one root value's codes; return its skeleton."""
    sym = _read_symbol(reader)
    if sym == _SYM_PAIR:
        return None
    if sym == _SYM_MAP_START:
        return _parse_map(reader)
    if sym == _SYM_ARRAY_START:
        return _parse_array(reader)
    raise UnbalancedStructureError("structure starts with a close code")


def _parse_map(reader):
    pair_values = []
    # First pair is implied by the start code; its value may be composite.
    sym = _read_symbol(reader)
    if sym == _SYM_MAP_START:
        pair_values.append(_parse_map(reader))
        sym = _read_symbol(reader)
    elif sym == _SYM_ARRAY_START:
        pair_values.append(_parse_array(reader))
        sym = _read_symbol(reader)
    else:
        pair_values.append(None)
    while True:
        if sym == _SYM_MAP_END:
            return SkeletonMap(pair_values)
        if sym != _SYM_PAIR:
            raise UnbalancedStructureError("expected a pair or map end")
        sym = _read_symbol(reader)
        if sym == _SYM_MAP_START:
            pair_values.append(_parse_map(reader))
            sym = _read_symbol(reader)
        elif sym == _SYM_ARRAY_START:
            pair_values.append(_parse_array(reader))
            sym = _read_symbol(reader)
        else:
            pair_values.append(None)
            # sym is already the next symbol after this scalar pair


def _parse_array(reader):
    elements = []
    while True:
        sym = _read_symbol(reader)
        if sym == _SYM_ARRAY_END:
            return SkeletonArray(elements)
        if sym == _SYM_PAIR:
            elements.append(None)
        elif sym == _SYM_MAP_START:
            elements.append(_parse_map(reader))
        elif sym == _SYM_ARRAY_START:
            elements.append(_parse_array(reader))
        else:
            raise UnbalancedStructureError("map end inside an array")


def count_holes(skeleton):
    """(map pairs, scalar array elements): the index-consuming slots."""
    pairs = 0
    elements = 0

    def walk(node, in_array=False):
        nonlocal pairs, elements
        if node is None:
            if in_array:
                elements += 1
            return
        if isinstance(node, SkeletonMap):
            pairs += len(node.pair_values)
            for child in node.pair_values:
                if child is not None:
                    walk(child)
        else:
            for child in node.elements:
                walk(child, in_array=True)

    if skeleton is None:
        return 0, 1  # scalar root occupies one element slot
    walk(skeleton)
    return pairs, elements
