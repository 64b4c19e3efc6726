"""CBL: compact binary encoding of JSON-LD documents.

A message is three sections: a CBOR re-indexation dictionary of the terms
actually used, a prefix-coded structure bitmap, and a packed list of
key/value indices. Term-to-integer mapping comes from a static dictionary
negotiated offline and never transmitted.
"""

from .errors import CblError
from .model import JsonMap, JsonNumber, JsonValue, parse_json, serialize_json, structural_equal
from .pipeline import (
    EncodeOptions,
    SizeReport,
    Variant,
    cbl_decode,
    cbl_encode,
    compress_deflate,
    decompress_deflate,
    encode_message,
    measure,
)
from .reindex import extract_terms
from .static_dict import (
    StaticDictionary,
    VocabSpec,
    build_static_dictionary,
    load_dictionary,
    save_dictionary,
)

__version__ = "0.1.0"

__all__ = [
    "CblError",
    "EncodeOptions",
    "JsonMap",
    "JsonNumber",
    "JsonValue",
    "SizeReport",
    "StaticDictionary",
    "Variant",
    "VocabSpec",
    "build_static_dictionary",
    "cbl_decode",
    "cbl_encode",
    "compress_deflate",
    "decompress_deflate",
    "encode_message",
    "extract_terms",
    "load_dictionary",
    "measure",
    "parse_json",
    "save_dictionary",
    "serialize_json",
    "structural_equal",
    "__version__",
]
