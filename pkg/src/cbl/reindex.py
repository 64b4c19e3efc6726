"""Per-message re-indexation dictionary.

A message carries two arrays: the sorted static IDs of the non-reserved map
keys, and the distinct value terms. Both are delta-friendly: sorted integers
become first-value-plus-gaps, and a string whose difference from its
predecessor is a trailing decimal number becomes a two-element op
``[-drop, append]`` ("drop the last *drop* characters, append the decimal
rendering of *append*").

Wire order of the values array: literal arrays, then static IDs (strictly
increasing), then the scalar region: null/false/true markers, optional
epoch-encoded datetimes, and finally numbers and strings sorted byte-wise by
their resolved text. The order makes the flat array unambiguous to scan:
leading arrays are literal data, arrays after the integer block are string
ops.
"""

import re
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone

from . import cbor
from .errors import (
    DropTooLongError,
    IndexOutOfRangeError,
    MalformedError,
    NotSortedError,
    RegionOrderViolationError,
    UnknownKeyTermError,
)
from .model import JsonMap, JsonNumber
from .static_dict import RESERVED_TERMS, StaticDictionary

TAG_LITERAL_NUMBER = 1040
TAG_EPOCH_DATETIME = 1041
TAG_BOOLEAN = 1042
TAG_NULL = 1043
TAG_RESERVED_STRINGREF = 25  # acknowledged, never emitted

_INT_LEXICAL = re.compile(r"-?(0|[1-9][0-9]*)\Z")
_NUMBER_LEXICAL = re.compile(r"-?(0|[1-9][0-9]*)(\.[0-9]+)?([eE][+-]?[0-9]+)?\Z")
_DATETIME = re.compile(
    r"(\d{4})-(\d{2})-(\d{2})T(\d{2}):(\d{2}):(\d{2})([+-])(\d{2}):(\d{2})\Z"
)


@dataclass(frozen=True)
class StaticId:
    id: int


@dataclass(frozen=True)
class LiteralArray:
    items: tuple  # cbor scalars: int | float | str


@dataclass(frozen=True)
class NullValue:
    pass


@dataclass(frozen=True)
class BoolValue:
    value: bool


@dataclass(frozen=True)
class EpochDate:
    epoch: int
    offset_minutes: int
    text: str


@dataclass(frozen=True)
class LiteralNumber:
    lexical: str


@dataclass(frozen=True)
class LiteralString:
    text: str


@dataclass(frozen=True)
class StringOp:
    drop: int
    append: int
    resolved: str


@dataclass(frozen=True)
class ReindexDictionary:
    keys: tuple    # strictly increasing static IDs, all >= 6
    values: tuple  # value entries in wire order


@dataclass(frozen=True)
class TermIndexMaps:
    key_index: dict    # key term -> wire key index
    value_index: dict  # scalar identity (see scalar_key) -> wire value index


def resolved_string(entry):
    """The text an entry stands for in the scalar region, else None."""
    if isinstance(entry, LiteralString):
        return entry.text
    if isinstance(entry, StringOp):
        return entry.resolved
    if isinstance(entry, LiteralNumber):
        return entry.lexical
    if isinstance(entry, EpochDate):
        return entry.text
    if isinstance(entry, BoolValue):
        return "true" if entry.value else "false"
    if isinstance(entry, NullValue):
        return "null"
    return None


# ---------------------------------------------------------------------------
# delta coding


def delta_encode_ints(xs):
    """[x0, x1, ...] strictly increasing -> [x0, x1-x0, ...]."""
    out = []
    prev = None
    for x in xs:
        if prev is None:
            out.append(x)
        else:
            if x <= prev:
                raise NotSortedError(f"{x} after {prev} is not strictly increasing")
            out.append(x - prev)
        prev = x
    return out


def delta_decode_ints(ds):
    out = []
    total = 0
    for i, d in enumerate(ds):
        if i == 0:
            total = d
        else:
            if d < 1:
                raise NotSortedError(f"delta {d} < 1 at position {i}")
            total += d
        out.append(total)
    return out


# ---------------------------------------------------------------------------
# string suffix ops


def string_op_for(prev: str, text: str):
    """Smallest valid (drop, append) turning *prev* into *text*, or None.

    Valid means: drop >= 1, the kept prefix of *prev* is a prefix of *text*,
    and the remainder of *text* is a decimal number without a leading zero
    (so the decimal rendering reproduces it exactly).
    """
    for drop in range(1, len(prev) + 1):
        keep = len(prev) - drop
        if len(text) <= keep or prev[:keep] != text[:keep]:
            continue
        suffix = text[keep:]
        if not (suffix.isascii() and suffix.isdigit()):
            continue
        if suffix != "0" and suffix[0] == "0":
            continue
        append = int(suffix)
        if append >= 1 << 64:
            continue
        return drop, append
    return None


def resolve_string_op(prev: str, drop: int, append: int) -> str:
    if drop < 1:
        raise DropTooLongError(f"drop must be >= 1, got {drop}")
    if drop > len(prev):
        raise DropTooLongError(f"cannot drop {drop} characters from {len(prev)}")
    return prev[: len(prev) - drop] + str(append)


def _op_entry(prev, text):
    """StringOp for *text* if one exists and beats the literal on the wire."""
    if prev is None:
        return None
    op = string_op_for(prev, text)
    if op is None:
        return None
    if len(cbor.encode_item([-op[0], op[1]])) >= len(cbor.encode_item(text)):
        return None
    return StringOp(op[0], op[1], text)


def encode_string_region(strings):
    """Turn a strictly increasing string list into literal/op entries."""
    entries = []
    prev = None
    for text in strings:
        if prev is not None and text <= prev:
            raise NotSortedError(f"{text!r} after {prev!r}")
        entries.append(_op_entry(prev, text) or LiteralString(text))
        prev = text
    return entries


# ---------------------------------------------------------------------------
# datetime option


def _datetime_parts(text: str):
    m = _DATETIME.match(text)
    if not m:
        return None
    y, mo, day, h, mi, s = (int(m.group(i)) for i in range(1, 7))
    sign = -1 if m.group(7) == "-" else 1
    off_h, off_m = int(m.group(8)), int(m.group(9))
    offset = sign * (off_h * 60 + off_m)
    try:
        dt = datetime(y, mo, day, h, mi, s, tzinfo=timezone(timedelta(minutes=offset)))
    except ValueError:
        return None
    epoch = int(dt.timestamp())
    # "-00:00" and similar forms must survive exactly; re-render to check.
    if _render_datetime(epoch, offset) != text:
        return None
    return epoch, offset


def _render_datetime(epoch: int, offset_minutes: int) -> str:
    tz = timezone(timedelta(minutes=offset_minutes))
    dt = datetime.fromtimestamp(epoch, tz=tz)
    sign = "-" if offset_minutes < 0 else "+"
    off = abs(offset_minutes)
    return f"{dt.strftime('%Y-%m-%dT%H:%M:%S')}{sign}{off // 60:02d}:{off % 60:02d}"


def epoch_date_for(text: str):
    parts = _datetime_parts(text)
    if parts is None:
        return None
    return EpochDate(parts[0], parts[1], text)


# ---------------------------------------------------------------------------
# extraction


def scalar_key(value, d: StaticDictionary, epoch_dates: bool = False):
    """Identity of a scalar document value in the values dictionary."""
    if isinstance(value, str):
        sid = d.lookup_id(value)
        if sid is not None:
            return ("id", sid)
        if epoch_dates and _datetime_parts(value) is not None:
            return ("dt", value)
        return ("s", value)
    if isinstance(value, JsonNumber):
        return ("n", value.lexical)
    if isinstance(value, bool):
        return ("b", value)
    if value is None:
        return ("null",)
    raise TypeError(f"not a scalar document value: {type(value).__name__}")


def extract_terms(doc, d: StaticDictionary, epoch_dates: bool = False):
    """Collect every key and value term of *doc* into a ReindexDictionary.

    Returns (dictionary, maps) where maps give the wire index of every key
    term and every distinct scalar value. Unknown map keys raise
    UnknownKeyTermError; unknown value strings become literals.
    """
    key_ids = set()
    scalars = set()

    def walk(value):
        if isinstance(value, JsonMap):
            for key, child in value.entries:
                if key not in RESERVED_TERMS:
                    sid = d.lookup_id(key)
                    if sid is None:
                        raise UnknownKeyTermError(key)
                    key_ids.add(sid)
                walk(child)
        elif isinstance(value, list):
            for child in value:
                walk(child)
        else:
            scalars.add(scalar_key(value, d, epoch_dates))

    walk(doc)

    keys = tuple(sorted(key_ids))
    values = list(_layout_values(scalars))

    key_index = {term: i for i, term in enumerate(RESERVED_TERMS)}
    for i, sid in enumerate(keys):
        key_index[d.lookup_term(sid)] = 6 + i
    value_index = {_entry_key(entry): i for i, entry in enumerate(values)}
    return ReindexDictionary(keys, tuple(values)), TermIndexMaps(key_index, value_index)


def _layout_values(scalars):
    static_ids = sorted(k[1] for k in scalars if k[0] == "id")
    for sid in static_ids:
        yield StaticId(sid)
    if ("null",) in scalars:
        yield NullValue()
    if ("b", False) in scalars:
        yield BoolValue(False)
    if ("b", True) in scalars:
        yield BoolValue(True)
    for text in sorted(k[1] for k in scalars if k[0] == "dt"):
        yield epoch_date_for(text)
    region = sorted(
        [(k[1], 0) for k in scalars if k[0] == "n"] + [(k[1], 1) for k in scalars if k[0] == "s"]
    )
    prev = None
    for text, kind in region:
        if kind == 0:
            entry = LiteralNumber(text)
        else:
            entry = _op_entry(prev, text) or LiteralString(text)
        yield entry
        prev = resolved_string(entry)


def _entry_key(entry):
    if isinstance(entry, StaticId):
        return ("id", entry.id)
    if isinstance(entry, (LiteralString, StringOp)):
        return ("s", resolved_string(entry))
    if isinstance(entry, LiteralNumber):
        return ("n", entry.lexical)
    if isinstance(entry, BoolValue):
        return ("b", entry.value)
    if isinstance(entry, NullValue):
        return ("null",)
    if isinstance(entry, EpochDate):
        return ("dt", entry.text)
    raise TypeError(f"no scalar identity for {type(entry).__name__}")


def entry_to_value(entry, d: StaticDictionary):
    """Decode-side mapping from a dictionary entry to a document value."""
    if isinstance(entry, StaticId):
        term = d.lookup_term(entry.id)
        if term is None:
            raise IndexOutOfRangeError(f"static id {entry.id} is outside the dictionary")
        return term
    if isinstance(entry, (LiteralString, StringOp, EpochDate)):
        return resolved_string(entry)
    if isinstance(entry, LiteralNumber):
        return JsonNumber(entry.lexical)
    if isinstance(entry, BoolValue):
        return entry.value
    if isinstance(entry, NullValue):
        return None
    if isinstance(entry, LiteralArray):
        out = []
        for item in entry.items:
            if isinstance(item, str):
                out.append(item)
            elif isinstance(item, int):
                out.append(JsonNumber(str(item)))
            elif isinstance(item, float):
                out.append(JsonNumber(repr(item)))
            else:
                raise MalformedError(f"bad literal array item {item!r}")
        return out
    raise TypeError(f"cannot decode {type(entry).__name__}")


# ---------------------------------------------------------------------------
# wire form


def serialize_reindex(rd: ReindexDictionary, delta: bool = True) -> bytes:
    """CBOR array [keys, values]; see the module docstring for the layout."""
    keys = list(rd.keys)
    keys_wire = delta_encode_ints(keys) if delta else keys

    arrays_wire = []
    region_wire = []
    static_run = []
    for entry in rd.values:
        if isinstance(entry, StaticId):
            static_run.append(entry.id)
        elif isinstance(entry, LiteralArray):
            arrays_wire.append(list(entry.items))
        else:
            region_wire.append(_entry_to_item(entry, delta))
    ints = delta_encode_ints(static_run) if delta else list(static_run)
    return cbor.encode_item([keys_wire, arrays_wire + ints + region_wire])


def _entry_to_item(entry, delta: bool):
    if isinstance(entry, NullValue):
        return cbor.CborTag(TAG_NULL, 0)
    if isinstance(entry, BoolValue):
        return cbor.CborTag(TAG_BOOLEAN, int(entry.value))
    if isinstance(entry, EpochDate):
        return cbor.CborTag(TAG_EPOCH_DATETIME, [entry.epoch, entry.offset_minutes])
    if isinstance(entry, LiteralNumber):
        lex = entry.lexical
        if _INT_LEXICAL.match(lex):
            n = int(lex)
            if str(n) == lex and -(1 << 64) <= n < (1 << 64):
                return cbor.CborTag(TAG_LITERAL_NUMBER, n)
        return cbor.CborTag(TAG_LITERAL_NUMBER, lex)
    if isinstance(entry, StringOp) and delta:
        return [-entry.drop, entry.append]
    if isinstance(entry, (StringOp, LiteralString)):
        text = resolved_string(entry)
        return text
    raise TypeError(f"cannot serialize {type(entry).__name__}")


def deserialize_reindex(data: bytes, d: StaticDictionary, delta: bool = True, offset: int = 0):
    """Inverse of serialize_reindex; returns (dictionary, next_offset)."""
    item, end = cbor.decode_item(data, offset)
    if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, list) for x in item)):
        raise MalformedError("re-indexation dictionary must be a CBOR array of two arrays")
    keys_wire, values_wire = item

    if not all(isinstance(k, int) and k >= 0 for k in keys_wire):
        raise MalformedError("keys array must contain unsigned integers")
    keys = delta_decode_ints(keys_wire) if delta else _check_sorted(keys_wire)
    for k in keys:
        if k < 6:
            raise MalformedError(f"reserved id {k} in keys array")
        if d.lookup_term(k) is None:
            raise MalformedError(f"key id {k} is outside the static dictionary")

    values = _scan_values(values_wire, d, delta)
    return ReindexDictionary(tuple(keys), tuple(values)), end


def _check_sorted(xs):
    for a, b in zip(xs, xs[1:]):
        if b <= a:
            raise NotSortedError(f"{b} after {a} is not strictly increasing")
    return list(xs)


def _scan_values(values_wire, d, delta):
    PHASE_ARRAYS, PHASE_INTS, PHASE_REGION = 0, 1, 2
    phase = PHASE_ARRAYS
    entries = []
    ints = []
    prev_text = None

    def flush_ints():
        ids = delta_decode_ints(ints) if delta else _check_sorted(ints)
        for sid in ids:
            if d.lookup_term(sid) is None:
                raise MalformedError(f"value id {sid} is outside the static dictionary")
            entries.append(StaticId(sid))

    for item in values_wire:
        if isinstance(item, bool):
            raise MalformedError("bare boolean in values array")
        if isinstance(item, int):
            if item < 0:
                raise MalformedError("bare negative integer in values array")
            if phase == PHASE_REGION:
                raise RegionOrderViolationError("integer after the string region")
            phase = PHASE_INTS
            ints.append(item)
            continue
        if isinstance(item, list):
            if phase == PHASE_ARRAYS:
                entries.append(_literal_array(item))
                continue
            if phase == PHASE_INTS:
                flush_ints()
                ints = []
            phase = PHASE_REGION
            entry = _string_op_entry(item, prev_text, delta)
            prev_text = entry.resolved
            entries.append(entry)
            continue
        # text or tag: enter the region
        if phase != PHASE_REGION:
            if phase == PHASE_INTS:
                flush_ints()
                ints = []
            phase = PHASE_REGION
        entry = _region_entry(item)
        prev_text = resolved_string(entry)
        entries.append(entry)

    if phase != PHASE_REGION and ints:
        flush_ints()
    return entries


def _literal_array(item):
    for x in item:
        if isinstance(x, bool) or not isinstance(x, (int, float, str)):
            raise MalformedError(f"literal array may only hold scalars, got {x!r}")
    return LiteralArray(tuple(item))


def _string_op_entry(item, prev_text, delta):
    if not delta:
        raise MalformedError("string op in a non-delta message")
    if not (
        len(item) == 2
        and isinstance(item[0], int)
        and not isinstance(item[0], bool)
        and item[0] < 0
        and isinstance(item[1], int)
        and not isinstance(item[1], bool)
        and item[1] >= 0
    ):
        raise MalformedError(f"bad string op {item!r}")
    if prev_text is None:
        raise MalformedError("string op with no preceding string")
    drop = -item[0]
    try:
        resolved = resolve_string_op(prev_text, drop, item[1])
    except DropTooLongError as exc:
        raise MalformedError(str(exc)) from exc
    return StringOp(drop, item[1], resolved)


def _region_entry(item):
    if isinstance(item, str):
        return LiteralString(item)
    if isinstance(item, cbor.CborTag):
        if item.tag == TAG_LITERAL_NUMBER:
            return _literal_number(item.value)
        if item.tag == TAG_EPOCH_DATETIME:
            return _epoch_entry(item.value)
        if item.tag == TAG_BOOLEAN:
            if item.value not in (0, 1) or isinstance(item.value, bool):
                raise MalformedError(f"bad boolean payload {item.value!r}")
            return BoolValue(bool(item.value))
        if item.tag == TAG_NULL:
            if item.value != 0:
                raise MalformedError(f"bad null payload {item.value!r}")
            return NullValue()
        if item.tag == TAG_RESERVED_STRINGREF:
            raise MalformedError("string-reference tag 25 is reserved and not in use")
        raise MalformedError(f"unknown tag {item.tag} in values array")
    raise MalformedError(f"unexpected item {item!r} in values array")


def _literal_number(payload):
    if isinstance(payload, bool):
        raise MalformedError("bad literal number payload")
    if isinstance(payload, int):
        return LiteralNumber(str(payload))
    if isinstance(payload, str):
        if not _NUMBER_LEXICAL.match(payload):
            raise MalformedError(f"literal number payload {payload!r} is not a JSON number")
        return LiteralNumber(payload)
    raise MalformedError(f"bad literal number payload {payload!r}")


def _epoch_entry(payload):
    if not (
        isinstance(payload, list)
        and len(payload) == 2
        and all(isinstance(x, int) and not isinstance(x, bool) for x in payload)
    ):
        raise MalformedError(f"bad datetime payload {payload!r}")
    epoch, offset = payload
    if not -1440 < offset < 1440:
        raise MalformedError(f"datetime offset {offset} out of range")
    try:
        text = _render_datetime(epoch, offset)
    except (OverflowError, OSError, ValueError) as exc:
        raise MalformedError(f"datetime out of range: {exc}") from exc
    return EpochDate(epoch, offset, text)
