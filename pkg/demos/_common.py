"""Shared helpers for the demo scripts: locate fixtures, build the dictionary."""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from cbl.static_dict import VocabSpec, build_static_dictionary  # noqa: E402

VOCAB_DIR = ROOT / "fixtures" / "vocab"
SSN_DIR = ROOT / "fixtures" / "ssn"


def read_terms(path):
    return [line for line in path.read_text(encoding="utf-8").splitlines() if line.strip()]


def fixture_dictionary():
    return build_static_dictionary(
        VocabSpec(
            ontologies=[
                (name, read_terms(VOCAB_DIR / f"{name}.txt"))
                for name in ("sosa", "ssn", "xsd", "qudt", "unit")
            ],
            custom=read_terms(VOCAB_DIR / "custom-terms.txt"),
        )
    )
