"""Ordered, lexical-form-preserving document model for JSON-LD payloads.

A document value is one of: :class:`JsonMap` (order-preserving map),
``list``, ``str``, :class:`JsonNumber` (number with its source text),
``bool``, or ``None``. Maps are entry lists, not hash maps, because the
codec's bitmap and index list depend on a stable iteration order. Numbers
keep their lexical text; no arithmetic is ever performed on them.

Values are immutable by convention after construction and safe to share.
"""

import json

from .errors import DuplicateKeyError, InvalidDocumentError, JsonParseError


class JsonNumber:
    """A JSON number as its source text, e.g. ``"2.24E1"``."""

    __slots__ = ("lexical",)

    def __init__(self, lexical: str):
        self.lexical = lexical

    def __repr__(self):
        return f"JsonNumber({self.lexical!r})"

    def __eq__(self, other):
        return isinstance(other, JsonNumber) and self.lexical == other.lexical

    def __hash__(self):
        return hash(("JsonNumber", self.lexical))


class JsonMap:
    """An insertion-ordered JSON object with unique keys.

    Equality is order-sensitive: two maps with the same pairs in a
    different order are not equal.
    """

    __slots__ = ("entries",)

    def __init__(self, entries=()):
        entries = tuple(entries)
        seen = set()
        for key, _ in entries:
            if not isinstance(key, str):
                raise InvalidDocumentError(f"map key must be a string, got {type(key).__name__}")
            if key in seen:
                raise DuplicateKeyError(f"duplicate map key {key!r}")
            seen.add(key)
        self.entries = entries

    def keys(self):
        return [k for k, _ in self.entries]

    def get(self, key, default=None):
        for k, v in self.entries:
            if k == key:
                return v
        return default

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        inner = ", ".join(f"{k!r}: {v!r}" for k, v in self.entries)
        return f"JsonMap({{{inner}}})"

    def __eq__(self, other):
        return isinstance(other, JsonMap) and self.entries == other.entries


def parse_json(text) -> "JsonValue":
    """Parse UTF-8 JSON text into the document model.

    Map order and number lexical forms are preserved; duplicate keys and
    non-RFC-8259 constants (NaN, Infinity) are rejected.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise JsonParseError(f"input is not UTF-8: {exc}", byte_offset=exc.start) from exc

    def reject_constant(name):
        raise JsonParseError(f"non-standard JSON constant {name!r}")

    try:
        return json.loads(
            text,
            object_pairs_hook=JsonMap,
            parse_float=JsonNumber,
            parse_int=JsonNumber,
            parse_constant=reject_constant,
        )
    except json.JSONDecodeError as exc:
        byte_offset = len(text[: exc.pos].encode("utf-8"))
        raise JsonParseError(f"{exc.msg} at byte {byte_offset}", byte_offset=byte_offset) from exc


def serialize_json(value, indent: int | None = None) -> str:
    """Serialize a document back to JSON text.

    Map order and number lexical forms survive unchanged, so
    ``serialize_json(parse_json(t))`` differs from ``t`` only in whitespace.
    """
    out = []
    _write(value, out, indent, 0)
    return "".join(out)


def _write(value, out, indent, depth):
    if isinstance(value, JsonMap):
        if not value.entries:
            out.append("{}")
            return
        out.append("{")
        for i, (key, child) in enumerate(value.entries):
            if i:
                out.append(",")
            _newline(out, indent, depth + 1)
            out.append(json.dumps(key))
            out.append(": " if indent else ":")
            _write(child, out, indent, depth + 1)
        _newline(out, indent, depth)
        out.append("}")
    elif isinstance(value, list):
        if not value:
            out.append("[]")
            return
        out.append("[")
        for i, child in enumerate(value):
            if i:
                out.append(",")
            _newline(out, indent, depth + 1)
            _write(child, out, indent, depth + 1)
        _newline(out, indent, depth)
        out.append("]")
    elif isinstance(value, str):
        out.append(json.dumps(value))
    elif isinstance(value, JsonNumber):
        out.append(value.lexical)
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif value is None:
        out.append("null")
    else:
        raise InvalidDocumentError(f"not a document value: {type(value).__name__}")


def _newline(out, indent, depth):
    if indent:
        out.append("\n" + " " * (indent * depth))


def structural_equal(a, b) -> bool:
    """True iff the two trees are identical, including map entry order."""
    if isinstance(a, JsonMap):
        return (
            isinstance(b, JsonMap)
            and len(a) == len(b)
            and all(
                ka == kb and structural_equal(va, vb)
                for (ka, va), (kb, vb) in zip(a.entries, b.entries)
            )
        )
    if isinstance(a, list):
        return (
            isinstance(b, list)
            and len(a) == len(b)
            and all(structural_equal(x, y) for x, y in zip(a, b))
        )
    if isinstance(a, JsonNumber):
        return isinstance(b, JsonNumber) and a.lexical == b.lexical
    if isinstance(a, bool) or isinstance(b, bool):
        return a is b
    if isinstance(a, str):
        return isinstance(b, str) and a == b
    return a is None and b is None


JsonValue = JsonMap | list | str | JsonNumber | bool | None
