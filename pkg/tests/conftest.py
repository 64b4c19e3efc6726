from pathlib import Path

import pytest

from cbl.static_dict import VocabSpec, build_static_dictionary

ROOT = Path(__file__).resolve().parents[1]
VOCAB_DIR = ROOT / "fixtures" / "vocab"
SSN_DIR = ROOT / "fixtures" / "ssn"

# Reference corpus figures the fixtures are tuned against; the savings
# floor asserted in acceptance is the reference value minus 4 points.
REFERENCE = {
    # name: (original, gzip, cbl, cbl+gzip, cbl-cbor, cbl-no-delta, savings %)
    "ssn-example-1": (904, 301, 84, 114, 106, 94, 90.7),
    "ssn-example-10": (5322, 830, 323, 352, 418, 393, 93.9),
    "ssn-example-12": (3748, 573, 312, 335, 398, 413, 91.7),
    "ssn-example-14": (3503, 773, 363, 395, 430, 418, 89.6),
    "ssn-example-17": (2817, 476, 138, 165, 183, 164, 95.1),
    "ssn-example-19": (2414, 535, 149, 183, 186, 179, 93.8),
}


def read_terms(path):
    return [line for line in path.read_text(encoding="utf-8").splitlines() if line.strip()]


def build_fixture_spec():
    return VocabSpec(
        ontologies=[
            (name, read_terms(VOCAB_DIR / f"{name}.txt"))
            for name in ("sosa", "ssn", "xsd", "qudt", "unit")
        ],
        custom=read_terms(VOCAB_DIR / "custom-terms.txt"),
    )


@pytest.fixture(scope="session")
def fixture_dict():
    return build_static_dictionary(build_fixture_spec())


@pytest.fixture(scope="session")
def ssn_corpus():
    """name -> (file bytes, parsed document) for the six bundled examples."""
    from cbl.model import parse_json

    corpus = {}
    for path in sorted(SSN_DIR.glob("*.jsonld")):
        raw = path.read_bytes()
        corpus[path.stem] = (raw, parse_json(raw))
    return corpus


ACCEPTANCE_RESULTS = []


def check_criterion(number, description, fn):
    """Run one acceptance criterion and record a pass/fail line."""
    try:
        fn()
    except BaseException:
        ACCEPTANCE_RESULTS.append(f"FAIL  criterion {number}: {description}")
        raise
    ACCEPTANCE_RESULTS.append(f"pass  criterion {number}: {description}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_RESULTS):
            terminalreporter.write_line(line)
