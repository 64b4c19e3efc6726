"""Offline term <-> integer table shared by encoder and decoder.

The table is never transmitted. Both sides build it from the same vocabulary
specification (or load the same dictionary file) and compare fingerprints.

ID layout, in order:

* 0..5   the six most frequent JSON-LD keywords, at fixed positions
           (@id, @graph, @type, @value, @context, @language);
* 6..20  the remaining standard JSON-LD keywords, alphabetical;
* then each ontology's terms, deduplicated and sorted byte-wise, numbered
  sequentially in source order;
* then application custom terms, in the order given.

Assignment is a pure function of the spec: rebuilding from the same inputs
yields the same table and the same fingerprint.
"""

import hashlib
from dataclasses import dataclass, field

from . import cbor
from .errors import FingerprintMismatchError, FormatError, TermCollisionError

RESERVED_TERMS = ("@id", "@graph", "@type", "@value", "@context", "@language")

STANDARD_KEYWORDS = (
    "@base", "@container", "@direction", "@index", "@json",
    "@list", "@nest", "@none", "@prefix", "@propagate",
    "@protected", "@reverse", "@set", "@version", "@vocab",
)

_FORMAT_VERSION = 1
_RESERVED_SECTION = "reserved"
_KEYWORD_SECTION = "keywords"
_ONTOLOGY_PREFIX = "ontology:"
_CUSTOM_SECTION = "custom"


@dataclass
class VocabSpec:
    """Vocabulary sources, in significant order.

    The reserved keywords and the standard-keyword block are implicit and
    always come first. ``ontologies`` is a list of (name, terms) pairs;
    term lists are deduplicated and sorted during the build. ``custom``
    terms keep their given order.
    """

    ontologies: list = field(default_factory=list)
    custom: list = field(default_factory=list)


class StaticDictionary:
    """Immutable bidirectional term <-> id table. Safe to share."""

    def __init__(self, terms, sections, fingerprint):
        self._id_to_term = tuple(terms)
        self._term_to_id = {t: i for i, t in enumerate(self._id_to_term)}
        self.sections = tuple(sections)  # (name, (first_id, last_id_exclusive))
        self.fingerprint = fingerprint

    def lookup_id(self, term: str):
        return self._term_to_id.get(term)

    def lookup_term(self, term_id: int):
        if 0 <= term_id < len(self._id_to_term):
            return self._id_to_term[term_id]
        return None

    def __len__(self):
        return len(self._id_to_term)

    def __contains__(self, term):
        return term in self._term_to_id

    def __eq__(self, other):
        return isinstance(other, StaticDictionary) and self._id_to_term == other._id_to_term

    def __repr__(self):
        return f"<StaticDictionary {len(self)} terms {self.fingerprint.hex()[:12]}>"


def _section_items(spec: VocabSpec):
    yield _RESERVED_SECTION, list(RESERVED_TERMS)
    yield _KEYWORD_SECTION, list(STANDARD_KEYWORDS)
    for name, terms in spec.ontologies:
        yield _ONTOLOGY_PREFIX + name, sorted(set(terms))
    yield _CUSTOM_SECTION, list(spec.custom)


def build_static_dictionary(spec: VocabSpec) -> StaticDictionary:
    """Build the table; raises TermCollisionError if any term repeats."""
    terms = []
    sections = []
    assigned = {}
    payload = []
    for name, section_terms in _section_items(spec):
        start = len(terms)
        for term in section_terms:
            if term in assigned:
                raise TermCollisionError(term, assigned[term])
            assigned[term] = len(terms)
            terms.append(term)
        sections.append((name, (start, len(terms))))
        payload.append([name, section_terms])
    canonical = cbor.encode_item(payload)
    fingerprint = hashlib.sha256(canonical).digest()
    return StaticDictionary(terms, sections, fingerprint)


def save_dictionary(d: StaticDictionary) -> bytes:
    """Versioned dictionary file: format byte, CBOR sections, fingerprint."""
    payload = []
    for name, (start, end) in d.sections:
        payload.append([name, [d.lookup_term(i) for i in range(start, end)]])
    body = cbor.encode_item(payload)
    return bytes([_FORMAT_VERSION]) + body + hashlib.sha256(body).digest()


def load_dictionary(data: bytes) -> StaticDictionary:
    if len(data) < 1 + 32:
        raise FormatError("dictionary file too short")
    if data[0] != _FORMAT_VERSION:
        raise FormatError(f"unsupported dictionary format version {data[0]}")
    body, digest = data[1:-32], data[-32:]
    if hashlib.sha256(body).digest() != digest:
        raise FingerprintMismatchError("dictionary file fingerprint does not match contents")
    try:
        payload = cbor.decode_single(body)
    except Exception as exc:
        raise FormatError(f"bad dictionary payload: {exc}") from exc
    spec = _spec_from_sections(payload)
    built = build_static_dictionary(spec)
    if built.fingerprint != digest:
        raise FormatError("dictionary payload is not in canonical build order")
    return built


def _spec_from_sections(payload) -> VocabSpec:
    if not isinstance(payload, list) or len(payload) < 3:
        raise FormatError("dictionary payload is not a section list")
    sections = []
    for entry in payload:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not isinstance(entry[0], str)
            or not isinstance(entry[1], list)
            or not all(isinstance(t, str) for t in entry[1])
        ):
            raise FormatError("bad dictionary section entry")
        sections.append((entry[0], entry[1]))
    if sections[0] != (_RESERVED_SECTION, list(RESERVED_TERMS)):
        raise FormatError("reserved section is missing or altered")
    if sections[1] != (_KEYWORD_SECTION, list(STANDARD_KEYWORDS)):
        raise FormatError("keyword section is missing or altered")
    if sections[-1][0] != _CUSTOM_SECTION:
        raise FormatError("custom section must come last")
    spec = VocabSpec(custom=sections[-1][1])
    for name, terms in sections[2:-1]:
        if not name.startswith(_ONTOLOGY_PREFIX):
            raise FormatError(f"unexpected section {name!r}")
        spec.ontologies.append((name[len(_ONTOLOGY_PREFIX):], terms))
    return spec
