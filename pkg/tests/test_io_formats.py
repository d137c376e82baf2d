"""Bit-exact text round trips for polynomials, series, and certificates."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from harmonic_ratios import Polynomial, TruncatedSeries, bound_certificate
from harmonic_ratios.io_formats import (
    FormatError,
    format_certificate,
    format_polynomial,
    format_series,
    parse_certificate,
    parse_polynomial,
    parse_series,
)


def rationals():
    return st.fractions(min_value=-100, max_value=100, max_denominator=97)


def poly_strategy(dim=3, max_degree=5):
    index = st.tuples(*[st.integers(0, max_degree)] * dim).filter(
        lambda a: sum(a) <= max_degree
    )
    return st.dictionaries(index, rationals(), max_size=8).map(
        lambda t: Polynomial(dim, t)
    )


class TestPolynomialFormat:
    @given(poly_strategy())
    def test_round_trip(self, p):
        assert parse_polynomial(format_polynomial(p)) == p

    def test_comments_and_blank_lines_ignored(self):
        text = "# header\n\ndim 2\n# term\n1/2 : 1 0\n"
        p = parse_polynomial(text)
        assert p.coefficient((1, 0)) == Fraction(1, 2)

    def test_sorted_output(self):
        p = Polynomial(2, {(0, 2): 1, (1, 0): 1, (2, 0): 1})
        lines = format_polynomial(p).strip().splitlines()
        assert lines[1].endswith("1 0")       # degree 1 first
        assert lines[2].endswith("2 0")       # then degree 2 in prec order
        assert lines[3].endswith("0 2")

    @pytest.mark.parametrize("bad", [
        "",
        "1/2 : 1 0",
        "dim 2\n1/2 1 0",
        "dim 2\n1/2 : 1",
        "dim 2\n1/0 : 1 0",
        "dim 2\nx : 1 0",
        "dim 2\n1/2 : 1 -1",
        "dim 2\n1 : 1 0\n2 : 1 0",
    ])
    def test_rejects_malformed(self, bad):
        with pytest.raises(FormatError):
            parse_polynomial(bad)


class TestSeriesFormat:
    @given(poly_strategy(dim=2, max_degree=4))
    def test_round_trip(self, p):
        s = TruncatedSeries.from_polynomial(p, 4, (Fraction(1, 3), Fraction(-2, 7)))
        assert parse_series(format_series(s)) == s

    def test_headers_required(self):
        with pytest.raises(FormatError):
            parse_series("dim 2\nmaxdeg 3\n1 : 0 0")
        with pytest.raises(FormatError):
            parse_series("dim 2\ncenter 0/1\nmaxdeg 3")

    def test_byte_identical_reserialization(self):
        s = TruncatedSeries(2, (0, Fraction(1, 2)), 3, {(1, 2): Fraction(-3, 4)})
        text = format_series(s)
        assert format_series(parse_series(text)) == text


class TestCertificateFormat:
    def test_round_trip(self):
        cert = bound_certificate(10, Fraction(1, 2), 2, 3, 4)
        parsed = parse_certificate(format_certificate(cert))
        assert parsed == cert

    def test_missing_field(self):
        with pytest.raises(FormatError):
            parse_certificate("a0 = 1/1\nr = 1/1\nk = 0\nn = 2\nA = 2/1")

    def test_missing_equals(self):
        with pytest.raises(FormatError):
            parse_certificate("a0 1/1")
