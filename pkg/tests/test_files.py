import pytest

from sidon.files import TermFileError, read_pins, read_terms, write_terms


def test_roundtrip(tmp_path):
    path = tmp_path / "t.txt"
    write_terms(path, [1, 2, 4, 8])
    assert read_terms(path) == [1, 2, 4, 8]
    assert path.read_bytes() == b"1\n2\n4\n8\n"


def test_empty_file(tmp_path):
    path = tmp_path / "t.txt"
    path.write_bytes(b"")
    with pytest.raises(TermFileError):
        read_terms(path)


@pytest.mark.parametrize("payload,line", [
    (b"1\n\n2\n", 2),          # blank line
    (b"1\nx\n", 2),            # not a number
    (b"1\n2", 2),              # missing trailing newline
    (b"1\r\n2\n", 1),          # CRLF
    (b"3\n2\n", 2),            # not increasing
    (b"1\n1\n", 2),            # duplicate
    (b"0\n1\n", 1),            # nonpositive
    (b"1\n# hi\n2\n", 2),      # comment
    (b"+5\n", 1),              # sign prefix
])
def test_malformed_reports_line(tmp_path, payload, line):
    path = tmp_path / "t.txt"
    path.write_bytes(payload)
    with pytest.raises(TermFileError) as exc:
        read_terms(path)
    assert exc.value.line == line


def test_pins_roundtrip(tmp_path):
    path = tmp_path / "p.txt"
    path.write_bytes(b"1 1\n15 229\n27 962\n")
    assert read_pins(path) == {1: 1, 15: 229, 27: 962}


@pytest.mark.parametrize("payload", [b"", b"1\n", b"1 2 3\n", b"a 1\n", b"1 1\n1 2\n", b"0 5\n"])
def test_bad_pins(tmp_path, payload):
    path = tmp_path / "p.txt"
    path.write_bytes(payload)
    with pytest.raises(TermFileError):
        read_pins(path)
