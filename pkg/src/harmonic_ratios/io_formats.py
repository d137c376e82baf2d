"""Text formats for polynomials, series, and certificates.

Polynomial files: a `dim n` header, then one term per line in the form
`<num>/<den> : e1 e2 ... en`, sorted in the graded-then-prec order.  Lines
starting with `#` and blank lines are ignored.  Writing then parsing
reproduces the object bit-exactly.

Series files add `center x1 ... xn` and `maxdeg N` header lines.
Certificates are flat `key = value` blocks with exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Tuple

from .certificates import BoundCertificate
from .multiindex import MultiIndex
from .polynomial import Polynomial
from .series import TruncatedSeries


class FormatError(ValueError):
    pass


def _format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {text!r}") from exc


def _meaningful_lines(text: str) -> List[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def _parse_term(line: str, dim: int) -> Tuple[MultiIndex, Fraction]:
    if ":" not in line:
        raise FormatError(f"term line missing ':': {line!r}")
    coeff_text, exp_text = line.split(":", 1)
    coeff = _parse_fraction(coeff_text.strip())
    parts = exp_text.split()
    if len(parts) != dim:
        raise FormatError(f"expected {dim} exponents in {line!r}")
    try:
        alpha = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise FormatError(f"bad exponent in {line!r}") from exc
    if any(e < 0 for e in alpha):
        raise FormatError(f"negative exponent in {line!r}")
    return alpha, coeff


def format_polynomial(p: Polynomial, comment: str = "") -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"dim {p.dim}")
    for alpha, coeff in p.sorted_terms():
        lines.append(f"{_format_fraction(coeff)} : " + " ".join(map(str, alpha)))
    return "\n".join(lines) + "\n"


def parse_polynomial(text: str) -> Polynomial:
    lines = _meaningful_lines(text)
    if not lines or not lines[0].startswith("dim "):
        raise FormatError("polynomial file must start with a 'dim n' header")
    try:
        dim = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise FormatError(f"bad dim header {lines[0]!r}") from exc
    terms: Dict[MultiIndex, Fraction] = {}
    for line in lines[1:]:
        alpha, coeff = _parse_term(line, dim)
        if alpha in terms:
            raise FormatError(f"duplicate term {alpha}")
        terms[alpha] = coeff
    return Polynomial(dim, terms)


def format_series(s: TruncatedSeries, comment: str = "") -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"dim {s.dim}")
    lines.append("center " + " ".join(_format_fraction(c) for c in s.center))
    lines.append(f"maxdeg {s.max_degree}")
    for alpha, coeff in s.sorted_coefficients():
        lines.append(f"{_format_fraction(coeff)} : " + " ".join(map(str, alpha)))
    return "\n".join(lines) + "\n"


def parse_series(text: str) -> TruncatedSeries:
    lines = _meaningful_lines(text)
    if len(lines) < 3:
        raise FormatError("series file needs dim, center, and maxdeg headers")
    if not lines[0].startswith("dim "):
        raise FormatError("series file must start with a 'dim n' header")
    dim = int(lines[0].split()[1])
    if not lines[1].startswith("center"):
        raise FormatError("second header must be 'center ...'")
    center = tuple(_parse_fraction(t) for t in lines[1].split()[1:])
    if len(center) != dim:
        raise FormatError("center length does not match dim")
    if not lines[2].startswith("maxdeg"):
        raise FormatError("third header must be 'maxdeg N'")
    max_degree = int(lines[2].split()[1])
    coeffs: Dict[MultiIndex, Fraction] = {}
    for line in lines[3:]:
        alpha, coeff = _parse_term(line, dim)
        if alpha in coeffs:
            raise FormatError(f"duplicate coefficient {alpha}")
        coeffs[alpha] = coeff
    return TruncatedSeries(dim, center, max_degree, coeffs)


def format_certificate(cert: BoundCertificate) -> str:
    lines = [
        f"a0 = {_format_fraction(cert.a0)}",
        f"r = {_format_fraction(cert.r)}",
        f"k = {cert.k}",
        f"n = {cert.n}",
        f"A = {_format_fraction(cert.A)}",
        "R = " + " ".join(_format_fraction(ri) for ri in cert.R),
        "polydisc = " + " ".join(_format_fraction(p) for p in cert.polydisc),
    ]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> BoundCertificate:
    fields: Dict[str, str] = {}
    for line in _meaningful_lines(text):
        if "=" not in line:
            raise FormatError(f"certificate line missing '=': {line!r}")
        key, value = line.split("=", 1)
        fields[key.strip()] = value.strip()
    try:
        cert = BoundCertificate(
            a0=_parse_fraction(fields["a0"]),
            r=_parse_fraction(fields["r"]),
            k=int(fields["k"]),
            n=int(fields["n"]),
            A=_parse_fraction(fields["A"]),
            R=tuple(_parse_fraction(t) for t in fields["R"].split()),
        )
    except KeyError as exc:
        raise FormatError(f"certificate missing field {exc}") from exc
    return cert
