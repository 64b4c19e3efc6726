"""Exception hierarchy for the cbl package.

Everything raised on purpose derives from CblError so callers can catch one
type at the API boundary. Decode-side errors additionally derive from
WireError, which the CLI maps to its "corrupt input" exit code.
"""


class CblError(Exception):
    pass


class JsonParseError(CblError):
    """Malformed JSON text. ``byte_offset`` points at the offending byte."""

    def __init__(self, message, byte_offset=None):
        super().__init__(message)
        self.byte_offset = byte_offset


class DuplicateKeyError(JsonParseError):
    pass


class InvalidDocumentError(CblError):
    pass


class EmptyMapError(InvalidDocumentError):
    pass


class UnknownKeyTermError(CblError):
    def __init__(self, term):
        super().__init__(f"map key {term!r} is not in the static dictionary")
        self.term = term


class TermCollisionError(CblError):
    def __init__(self, term, existing_id):
        super().__init__(f"term {term!r} already assigned id {existing_id}")
        self.term = term
        self.existing_id = existing_id


class NotSortedError(CblError):
    pass


class DropTooLongError(CblError):
    pass


class UnsupportedItemError(CblError):
    pass


class WireError(CblError):
    """Base for errors while reading wire bytes."""


class TruncatedError(WireError):
    pass


class MalformedError(WireError):
    pass


class NonCanonicalError(MalformedError):
    """Strict CBOR decoding rejected a non-shortest-form encoding."""


class RegionOrderViolationError(MalformedError):
    pass


class InvalidCodeError(WireError):
    pass


class UnbalancedStructureError(WireError):
    pass


class IndexOutOfRangeError(WireError):
    pass


class FormatError(WireError):
    pass


class FingerprintMismatchError(WireError):
    pass


class CorruptStreamError(WireError):
    pass
