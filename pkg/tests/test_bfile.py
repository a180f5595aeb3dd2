from __future__ import annotations

import pytest

from flick.bfile import format_bfile, parse_bfile


def test_format_basic():
    assert format_bfile([1, 5, 14], offset=1) == "1 1\n2 5\n3 14\n"
    assert format_bfile([7], offset=0) == "0 7\n"


def test_round_trip():
    cases = [
        ([1, -3, 10, -38], 0),
        ([10**50, 2, 3], 1),
        ([0], 5),
    ]
    for values, offset in cases:
        assert parse_bfile(format_bfile(values, offset)) == (offset, values)


def test_parse_tolerates_comments_and_blanks():
    text = "# header comment\n\n1 10\n2 20\n\n# trailing\n"
    assert parse_bfile(text) == (1, [10, 20])


def test_parse_rejects_malformed_line():
    with pytest.raises(ValueError):
        parse_bfile("1 2 3\n")
    with pytest.raises(ValueError):
        parse_bfile("foo\n")


def test_parse_rejects_gaps():
    with pytest.raises(ValueError):
        parse_bfile("1 10\n3 30\n")


def test_parse_rejects_empty():
    with pytest.raises(ValueError):
        parse_bfile("# nothing here\n")
