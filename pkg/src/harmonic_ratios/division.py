"""Exact division by homogeneous harmonic polynomials and series ratios.

Two division routines live here.

``divide_by_harmonic`` divides a polynomial by a homogeneous harmonic divisor
with leading-term reduction under the graded-then-prec monomial order.  For a
single divisor this is decisive: if the dividend lies in the ideal, every
intermediate leading monomial is divisible by the divisor's, so one failed
leading-monomial division certifies non-divisibility.

``series_ratio`` computes the Taylor coefficients of the ratio u/v of two
series sharing a center.  After a rational rotation puts a nonzero divisor
coefficient at (k, 0, ..., 0), each ratio coefficient is solved for from one
shifted convolution equation; the remaining equations are genuine checks and
are verified afterwards as an exact residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from . import multiindex as mi
from .multiindex import MultiIndex
from .polynomial import Polynomial, rotate
from .rotation import (
    DEFAULT_CAYLEY_GRID,
    RationalOrthogonalMatrix,
    search_candidates,
)
from .series import TruncatedSeries


class DivisionError(Exception):
    """Base class for division failures."""


class NotHomogeneous(DivisionError):
    pass


class NotHarmonic(DivisionError):
    pass


class NotDivisible(DivisionError):
    """Reduction hit a leading monomial the divisor does not divide, or the
    dividend's leading degree is too low.  Signals that the divisor's zero
    set is not contained in the dividend's."""

    def __init__(self, message: str, divisor_index: Optional[int] = None):
        super().__init__(message)
        self.divisor_index = divisor_index


class ResidualNonzero(DivisionError):
    """The computed quotient does not multiply back to the dividend; the
    inputs do not divide as series."""

    def __init__(self, message: str, divisor_index: Optional[int] = None):
        super().__init__(message)
        self.divisor_index = divisor_index


class InsufficientDegree(DivisionError):
    pass


class ZeroInput(DivisionError):
    pass


class SearchExhausted(DivisionError):
    def __init__(self, candidates_tried: int):
        super().__init__(
            f"rotation search exhausted after {candidates_tried} candidates"
        )
        self.candidates_tried = candidates_tried


@dataclass
class DivisionOutcome:
    quotient: Union[Polynomial, TruncatedSeries]
    residual_verified: bool
    certificate: Optional[object] = None
    rotation: Optional[RationalOrthogonalMatrix] = None
    rotated_quotient: Optional[TruncatedSeries] = None
    rotated_numerator: Optional[TruncatedSeries] = None
    rotated_denominator: Optional[TruncatedSeries] = None


def divide_by_harmonic(p: Polynomial, q: Polynomial) -> DivisionOutcome:
    """Divide P by a homogeneous harmonic Q, exactly or not at all."""
    if p.dim != q.dim:
        raise ValueError("dimension mismatch")
    if q.is_zero():
        raise ZeroInput("divisor is the zero polynomial")
    if not q.is_homogeneous():
        raise NotHomogeneous("divisor must be homogeneous")
    if not q.laplacian().is_zero():
        raise NotHarmonic("divisor must be harmonic")

    lt_q, c_q = q.leading_term()
    remainder = p
    quotient = Polynomial.zero(p.dim)
    while not remainder.is_zero():
        lt_r, c_r = remainder.leading_term()
        if not mi.divides(lt_q, lt_r):
            raise NotDivisible(
                f"leading monomial {lt_r} is not a multiple of {lt_q}"
            )
        t = Polynomial.monomial(p.dim, mi.sub(lt_r, lt_q), c_r / c_q)
        quotient = quotient + t
        remainder = remainder - t * q
    # remainder reached zero, so Q * quotient == P identically
    assert (q * quotient) == p
    return DivisionOutcome(quotient=quotient, residual_verified=True)


def normalize_rotation(
    v: Union[Polynomial, TruncatedSeries],
    grid: Sequence[Fraction] = DEFAULT_CAYLEY_GRID,
    max_candidates: int = 200_000,
) -> Tuple[RationalOrthogonalMatrix, int]:
    """Find an exact rotation O with (v o O) having a nonzero coefficient at
    (k, 0, ..., 0), where k is the leading degree of v.

    For homogeneous leading part L, the coefficient of x1^k after rotation is
    L evaluated at the first column of O, so the search only evaluates L on
    candidate unit vectors.  The candidate stream is identity, axis
    permutations, then Cayley matrices over a grid of small rational skew
    parameters; L is a nonzero polynomial, so small grids succeed except in
    contrived cases, which are reported via SearchExhausted.
    """
    if isinstance(v, TruncatedSeries):
        if v.is_zero():
            raise ZeroInput("zero series has no leading part")
        k = v.leading_degree()
        leading = v.homogeneous_part(k)
    else:
        if v.is_zero():
            raise ZeroInput("zero polynomial has no leading part")
        k, leading = v.leading_part()
    dim = leading.dim
    tried = 0
    for cand in search_candidates(dim, grid):
        tried += 1
        if tried > max_candidates:
            break
        if leading.evaluate(cand.column(0)) != 0:
            return cand, k
    raise SearchExhausted(tried)


def series_ratio(
    u: TruncatedSeries,
    v: TruncatedSeries,
    n_out: int,
    strict: bool = True,
) -> DivisionOutcome:
    """Taylor coefficients of u/v up to total degree ``n_out``.

    Both inputs must share center and dimension and be truncated at degree at
    least ``n_out + k`` where k is the leading degree of v.  On success the
    quotient series f satisfies u = v * f exactly through degree n_out + k;
    this is checked coefficient-by-coefficient.  With ``strict`` a failed
    check raises ResidualNonzero, otherwise the outcome carries
    ``residual_verified=False``.
    """
    u._check_compatible(v)
    if v.is_zero():
        raise ZeroInput("division by a zero series")
    k = v.leading_degree()
    if u.max_degree < n_out + k or v.max_degree < n_out + k:
        raise InsufficientDegree(
            f"inputs must be truncated at degree >= {n_out + k} "
            f"(got {u.max_degree} and {v.max_degree})"
        )
    if u.is_zero():
        # the zero function is divisible by anything; the residual is trivially zero
        f = TruncatedSeries(u.dim, u.center, n_out, {})
        return DivisionOutcome(quotient=f, residual_verified=True)
    if u.leading_degree() < k:
        raise NotDivisible(
            f"numerator leading degree {u.leading_degree()} is below the "
            f"denominator leading degree {k}"
        )

    k_tilde = (k,) + (0,) * (u.dim - 1)
    if v.coefficient(k_tilde) != 0:
        rot = None
        u_r, v_r = u, v
    else:
        rot, _ = normalize_rotation(v)
        u_r, v_r = u.rotate(rot), v.rotate(rot)

    v_coeffs = v_r.coefficients
    u_coeffs = u_r.coefficients
    c = v_coeffs[k_tilde]

    f_coeffs: dict[MultiIndex, Fraction] = {}
    # prec order over all |beta| <= n_out: every gamma the recursion reads
    # satisfies gamma prec beta, so it is already solved for
    betas = sorted(mi.iter_up_to_degree(u.dim, n_out), key=mi.prec_key)
    for beta in betas:
        deg_beta = sum(beta)
        rhs = u_coeffs.get(mi.add(beta, k_tilde), Fraction(0))
        for gamma, f_gamma in f_coeffs.items():
            if sum(gamma) > deg_beta:
                continue
            if not mi.leq_componentwise(gamma, mi.add(beta, k_tilde)):
                continue
            assert mi.prec(gamma, beta)  # well-foundedness of the recursion
            vc = v_coeffs.get(mi.sub(mi.add(beta, k_tilde), gamma))
            if vc is not None:
                rhs -= f_gamma * vc
        if rhs:
            f_coeffs[beta] = rhs / c

    f_rot = TruncatedSeries(u.dim, u.center, n_out, f_coeffs)
    f = f_rot if rot is None else f_rot.rotate(rot.transpose())

    # full residual validation in the original frame, through degree n_out + k
    product = v.mul_truncated(f, n_out + k)
    residual = u.truncate(n_out + k) - product
    if residual.is_zero():
        return DivisionOutcome(
            quotient=f,
            residual_verified=True,
            rotation=rot,
            rotated_quotient=f_rot,
            rotated_numerator=u_r,
            rotated_denominator=v_r,
        )
    if strict:
        bad = min(residual.coefficients, key=mi.graded_key)
        raise ResidualNonzero(
            f"residual coefficient at {bad} is {residual.coefficients[bad]}; "
            "the inputs do not divide as series"
        )
    return DivisionOutcome(
        quotient=f,
        residual_verified=False,
        rotation=rot,
        rotated_quotient=f_rot,
        rotated_numerator=u_r,
        rotated_denominator=v_r,
    )


def multi_divide(
    u: TruncatedSeries,
    divisors: Sequence[TruncatedSeries],
    n_out: int,
) -> DivisionOutcome:
    """Divide u by several series in sequence: u = f * prod(divisors).

    Failures from any stage are re-raised annotated with the 1-based index of
    the divisor that failed.  The final quotient is validated against the
    full product of the divisors.
    """
    if not divisors:
        raise ValueError("need at least one divisor")
    ks = []
    for i, d in enumerate(divisors, start=1):
        if d.is_zero():
            raise ZeroInput(f"divisor {i} is the zero series")
        ks.append(d.leading_degree())
    total_k = sum(ks)
    if u.max_degree < n_out + total_k:
        raise InsufficientDegree(
            f"numerator must be truncated at degree >= {n_out + total_k}"
        )

    current = u
    for i, d in enumerate(divisors, start=1):
        target = n_out + sum(ks[i:])
        if d.max_degree < target + ks[i - 1]:
            raise InsufficientDegree(
                f"divisor {i} must be truncated at degree >= {target + ks[i - 1]}"
            )
        try:
            current = series_ratio(current, d, target).quotient
        except (NotDivisible, ResidualNonzero) as exc:
            exc.divisor_index = i
            raise

    f = current
    product = divisors[0].truncate(n_out + total_k)
    for d in divisors[1:]:
        product = product.mul_truncated(d, n_out + total_k)
    residual = u.truncate(n_out + total_k) - product.mul_truncated(f, n_out + total_k)
    if not residual.is_zero():
        raise ResidualNonzero(
            "final residual against the product of divisors is nonzero",
            divisor_index=len(divisors),
        )
    return DivisionOutcome(quotient=f, residual_verified=True)
