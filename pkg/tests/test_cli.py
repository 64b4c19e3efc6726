import csv

import pytest

from cbl.cli import main
from cbl.model import parse_json, structural_equal

from conftest import SSN_DIR, VOCAB_DIR


@pytest.fixture()
def dict_file(tmp_path):
    vocabs = [str(VOCAB_DIR / f"{n}.txt") for n in ("sosa", "ssn", "xsd", "qudt", "unit")]
    out = tmp_path / "fixture.dict"
    rc = main(["dict", "build", *vocabs,
               "--custom", str(VOCAB_DIR / "custom-terms.txt"), "-o", str(out)])
    assert rc == 0
    return out


def test_dict_build_is_deterministic(tmp_path, capsys):
    out1, out2 = tmp_path / "a.dict", tmp_path / "b.dict"
    for out in (out1, out2):
        assert main(["dict", "build", str(VOCAB_DIR / "sosa.txt"), "-o", str(out)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_dict_build_prints_reserved_table(tmp_path, capsys):
    out = tmp_path / "d.dict"
    assert main(["dict", "build", "-o", str(out)]) == 0
    printed = capsys.readouterr().out
    assert "@id=0" in printed
    assert "fingerprint" in printed


def test_dict_build_collision_exits_2(tmp_path):
    vocab = tmp_path / "v.txt"
    vocab.write_text("@type\n")
    assert main(["dict", "build", str(vocab), "-o", str(tmp_path / "d.dict")]) == 2


def test_encode_decode_round_trip(tmp_path, dict_file, capsys):
    src = SSN_DIR / "ssn-example-1.jsonld"
    encoded = tmp_path / "out.cbl"
    decoded = tmp_path / "back.jsonld"
    assert main(["encode", str(src), "-d", str(dict_file), "-o", str(encoded)]) == 0
    err = capsys.readouterr().err
    assert "savings" in err
    assert encoded.stat().st_size <= 110
    assert main(["decode", str(encoded), "-d", str(dict_file), "-o", str(decoded)]) == 0
    assert structural_equal(parse_json(decoded.read_bytes()), parse_json(src.read_bytes()))


def test_encode_variant_flags(tmp_path, dict_file):
    src = SSN_DIR / "ssn-example-1.jsonld"
    default = tmp_path / "a.cbl"
    no_delta = tmp_path / "b.cbl"
    assert main(["encode", str(src), "-d", str(dict_file), "-o", str(default)]) == 0
    assert main(["encode", str(src), "-d", str(dict_file), "-o", str(no_delta),
                 "--no-delta"]) == 0
    assert no_delta.stat().st_size > default.stat().st_size
    back = tmp_path / "back.jsonld"
    assert main(["decode", str(no_delta), "-d", str(dict_file), "-o", str(back),
                 "--no-delta"]) == 0
    assert structural_equal(parse_json(back.read_bytes()), parse_json(src.read_bytes()))


def test_encode_unknown_key_exits_2(tmp_path, dict_file):
    bad = tmp_path / "bad.jsonld"
    bad.write_text('{"no:such":1}')
    assert main(["encode", str(bad), "-d", str(dict_file), "-o", str(tmp_path / "x.cbl")]) == 2


def test_decode_truncated_exits_3(tmp_path, dict_file):
    src = SSN_DIR / "ssn-example-1.jsonld"
    encoded = tmp_path / "out.cbl"
    assert main(["encode", str(src), "-d", str(dict_file), "-o", str(encoded)]) == 0
    encoded.write_bytes(encoded.read_bytes()[:20])
    assert main(["decode", str(encoded), "-d", str(dict_file),
                 "-o", str(tmp_path / "y.jsonld")]) == 3


def test_decode_with_wrong_dictionary_errors(tmp_path, dict_file):
    src = SSN_DIR / "ssn-example-1.jsonld"
    encoded = tmp_path / "out.cbl"
    assert main(["encode", str(src), "-d", str(dict_file), "-o", str(encoded)]) == 0
    small = tmp_path / "small.dict"
    assert main(["dict", "build", "-o", str(small)]) == 0
    assert main(["decode", str(encoded), "-d", str(small),
                 "-o", str(tmp_path / "y.jsonld")]) == 3


def test_bench_corpus(tmp_path, dict_file, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    csv_path = tmp_path / "bench.csv"
    assert main(["bench", str(SSN_DIR), "-d", str(dict_file),
                 "--variants", "all", "--csv", str(csv_path)]) == 0
    table = capsys.readouterr().out
    with open(csv_path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 6
    for row in rows:
        # text table and CSV carry identical numbers
        assert row["example"] in table
        for col in ("original_bytes", "gzip_bytes", "cbl_bytes", "savings_percent",
                    "cbl_gzip_bytes", "cbor_map_bytes", "no_delta_bytes"):
            assert str(row[col]) in table
        recomputed = 100.0 * (int(row["original_bytes"]) - int(row["cbl_bytes"])) / int(
            row["original_bytes"]
        )
        assert abs(float(row["savings_percent"]) - recomputed) <= 0.05


def test_bench_empty_corpus(tmp_path, dict_file, monkeypatch):
    monkeypatch.chdir(tmp_path)
    empty = tmp_path / "empty"
    empty.mkdir()
    assert main(["bench", str(empty), "-d", str(dict_file)]) == 0


def test_dict_env_var(tmp_path, dict_file, monkeypatch):
    monkeypatch.setenv("CBL_DICT", str(dict_file))
    src = SSN_DIR / "ssn-example-1.jsonld"
    assert main(["encode", str(src), "-o", str(tmp_path / "out.cbl")]) == 0


def test_missing_dict_is_user_error(tmp_path, monkeypatch):
    monkeypatch.delenv("CBL_DICT", raising=False)
    assert main(["encode", str(SSN_DIR / "ssn-example-1.jsonld"),
                 "-o", str(tmp_path / "x.cbl")]) == 2
