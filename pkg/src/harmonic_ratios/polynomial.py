"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a dimension plus a map from multi-index to ``Fraction``.
Zero coefficients are never stored, so structural equality of the term maps
is polynomial identity.  All arithmetic is exact; floating-point evaluation
is a separate code path (`evaluate_float`, `evaluate_array`) used only by
the numeric verification layer.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import numpy as np

from . import multiindex as mi
from .multiindex import MultiIndex

Rational = Fraction
Terms = Dict[MultiIndex, Fraction]


class Polynomial:
    """Immutable-by-convention sparse polynomial over the rationals."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[MultiIndex, object] | None = None):
        if dim < 1:
            raise ValueError("dimension must be >= 1")
        self.dim = int(dim)
        clean: Terms = {}
        if terms:
            for alpha, c in terms.items():
                alpha = mi.validate(alpha, dim)
                c = Fraction(c)
                if c != 0:
                    clean[alpha] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(dim: int) -> "Polynomial":
        return Polynomial(dim, {})

    @staticmethod
    def constant(dim: int, c) -> "Polynomial":
        return Polynomial(dim, {(0,) * dim: Fraction(c)})

    @staticmethod
    def variable(dim: int, idx: int) -> "Polynomial":
        if not 0 <= idx < dim:
            raise ValueError(f"variable index {idx} out of range for dim {dim}")
        e = [0] * dim
        e[idx] = 1
        return Polynomial(dim, {tuple(e): Fraction(1)})

    @staticmethod
    def monomial(dim: int, alpha: Sequence[int], coeff=1) -> "Polynomial":
        return Polynomial(dim, {mi.validate(alpha, dim): Fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(a) for a in self.terms)

    def leading_degree(self) -> int:
        """Smallest total degree with a nonzero term; -1 for zero."""
        if not self.terms:
            return -1
        return min(sum(a) for a in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(a) for a in self.terms}
        return len(degs) <= 1

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        return self.terms.get(mi.validate(alpha, self.dim), Fraction(0))

    def sorted_terms(self) -> List[Tuple[MultiIndex, Fraction]]:
        """Terms in graded-then-prec order (the canonical iteration order)."""
        return sorted(self.terms.items(), key=lambda t: mi.graded_key(t[0]))

    def leading_term(self) -> Tuple[MultiIndex, Fraction]:
        """Largest term under the graded-then-prec monomial order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        alpha = max(self.terms, key=mi.graded_key)
        return alpha, self.terms[alpha]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.dim == other.dim
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"Polynomial({self.dim}, 0)"
        parts = [f"{c}*x^{a}" for a, c in self.sorted_terms()]
        return "Polynomial(" + " + ".join(parts) + ")"

    # -- arithmetic --------------------------------------------------------

    def _check_dim(self, other: "Polynomial") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_dim(other)
        out = dict(self.terms)
        for a, c in other.terms.items():
            s = out.get(a, Fraction(0)) + c
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        p = Polynomial.__new__(Polynomial)
        p.dim, p.terms = self.dim, out
        return p

    def __neg__(self) -> "Polynomial":
        p = Polynomial.__new__(Polynomial)
        p.dim = self.dim
        p.terms = {a: -c for a, c in self.terms.items()}
        return p

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        p = Polynomial.__new__(Polynomial)
        p.dim = self.dim
        p.terms = {} if c == 0 else {a: c * v for a, v in self.terms.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_dim(other)
        out: Terms = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                key = mi.add(a, b)
                s = out.get(key, Fraction(0)) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        p = Polynomial.__new__(Polynomial)
        p.dim, p.terms = self.dim, out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.dim, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus ----------------------------------------------------------

    def partial(self, idx: int) -> "Polynomial":
        """Exact partial derivative with respect to variable idx."""
        out: Terms = {}
        for a, c in self.terms.items():
            if a[idx] == 0:
                continue
            b = list(a)
            b[idx] -= 1
            out[tuple(b)] = c * a[idx]
        p = Polynomial.__new__(Polynomial)
        p.dim, p.terms = self.dim, out
        return p

    def gradient(self) -> List["Polynomial"]:
        return [self.partial(i) for i in range(self.dim)]

    def laplacian(self) -> "Polynomial":
        out = Polynomial.zero(self.dim)
        for i in range(self.dim):
            out = out + self.partial(i).partial(i)
        return out

    def is_harmonic(self) -> bool:
        return self.laplacian().is_zero()

    # -- structure ---------------------------------------------------------

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return Polynomial(
            self.dim, {a: c for a, c in self.terms.items() if sum(a) == degree}
        )

    def homogeneous_parts(self) -> List[Tuple[int, "Polynomial"]]:
        """Decompose into homogeneous pieces, degrees strictly increasing.

        Raises on the zero polynomial (it has no leading part).
        """
        if not self.terms:
            raise ValueError("zero polynomial has no homogeneous decomposition")
        buckets: Dict[int, Terms] = {}
        for a, c in self.terms.items():
            buckets.setdefault(sum(a), {})[a] = c
        return [
            (d, Polynomial(self.dim, buckets[d])) for d in sorted(buckets)
        ]

    def leading_part(self) -> Tuple[int, "Polynomial"]:
        """The nonzero homogeneous part of least degree."""
        return self.homogeneous_parts()[0]

    # -- evaluation --------------------------------------------------------

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact evaluation at a point with rational (or int) coordinates."""
        if len(point) != self.dim:
            raise ValueError("point dimension mismatch")
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for a, c in self.terms.items():
            m = c
            for x, e in zip(pt, a):
                if e:
                    m *= x**e
            total += m
        return total

    def evaluate_and_gradient(self, point: Sequence):
        """Value and gradient vector at a point, exact for rational input."""
        val = self.evaluate(point)
        grad = [g.evaluate(point) for g in self.gradient()]
        return val, grad

    def evaluate_float(self, point: Sequence[float]) -> float:
        if len(point) != self.dim:
            raise ValueError("point dimension mismatch")
        total = 0.0
        for a, c in self.terms.items():
            m = float(c)
            for x, e in zip(point, a):
                if e:
                    m *= float(x) ** e
            total += m
        return total

    def evaluate_array(self, coords: Sequence[np.ndarray]) -> np.ndarray:
        """Vectorized float evaluation; coords is one array per variable."""
        if len(coords) != self.dim:
            raise ValueError("coordinate array count mismatch")
        coords = [np.asarray(c, dtype=np.float64) for c in coords]
        out = np.zeros(np.broadcast(*coords).shape if self.dim > 1 else coords[0].shape)
        for a, c in self.terms.items():
            term = np.full_like(out, float(c))
            for x, e in zip(coords, a):
                if e:
                    term = term * x**e
            out = out + term
        return out

    # -- substitution ------------------------------------------------------

    def compose_linear(self, columns: Sequence[Sequence]) -> "Polynomial":
        """Substitute x_i <- sum_j M[i][j] * x_j for a rational matrix M.

        ``columns`` is the matrix as rows M[i][j]; the result is P(Mx).
        """
        rows = [[Fraction(v) for v in row] for row in columns]
        if len(rows) != self.dim or any(len(r) != self.dim for r in rows):
            raise ValueError("matrix shape mismatch")
        linear_forms = [
            Polynomial(self.dim, {tuple(int(j == t) for t in range(self.dim)): rows[i][j]
                                  for j in range(self.dim) if rows[i][j] != 0})
            for i in range(self.dim)
        ]
        cache: Dict[Tuple[int, int], Polynomial] = {}

        def form_pow(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in cache:
                cache[key] = linear_forms[i] ** e
            return cache[key]

        out = Polynomial.zero(self.dim)
        for a, c in self.terms.items():
            term = Polynomial.constant(self.dim, c)
            for i, e in enumerate(a):
                if e:
                    term = term * form_pow(i, e)
            out = out + term
        return out

    def shift(self, center: Sequence) -> "Polynomial":
        """Taylor shift: return Q with Q(x) = P(x + center), exact."""
        c = [Fraction(v) for v in center]
        if len(c) != self.dim:
            raise ValueError("center dimension mismatch")
        shifted_vars = [
            Polynomial.variable(self.dim, i) + Polynomial.constant(self.dim, c[i])
            for i in range(self.dim)
        ]
        cache: Dict[Tuple[int, int], Polynomial] = {}

        def var_pow(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in cache:
                cache[key] = shifted_vars[i] ** e
            return cache[key]

        out = Polynomial.zero(self.dim)
        for a, coeff in self.terms.items():
            term = Polynomial.constant(self.dim, coeff)
            for i, e in enumerate(a):
                if e:
                    term = term * var_pow(i, e)
            out = out + term
        return out

    def substitute(self, idx: int, value) -> "Polynomial":
        """Fix variable idx to a rational constant, dropping that variable."""
        if self.dim < 2:
            raise ValueError("cannot drop the only variable")
        v = Fraction(value)
        out: Terms = {}
        for a, c in self.terms.items():
            coeff = c * v ** a[idx]
            key = a[:idx] + a[idx + 1 :]
            if coeff:
                s = out.get(key, Fraction(0)) + coeff
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Polynomial(self.dim - 1, out)


def harmonic_basis(dim: int, degree: int) -> List[Polynomial]:
    """Exact rational basis of homogeneous harmonic polynomials.

    Solves the linear system "Laplacian of a general degree-d form vanishes"
    over the rationals by Gaussian elimination, so every returned polynomial
    is exactly harmonic.
    """
    monos = list(mi.iter_degree(dim, degree))
    target = list(mi.iter_degree(dim, degree - 2)) if degree >= 2 else []
    if not target:
        return [Polynomial.monomial(dim, m) for m in monos]
    row_of = {m: i for i, m in enumerate(target)}
    # matrix of the Laplacian: rows = degree-(d-2) monomials, cols = degree-d ones
    nrows, ncols = len(target), len(monos)
    mat = [[Fraction(0)] * ncols for _ in range(nrows)]
    for j, m in enumerate(monos):
        for i in range(dim):
            if m[i] >= 2:
                b = list(m)
                b[i] -= 2
                mat[row_of[tuple(b)]][j] += m[i] * (m[i] - 1)
    # rational row reduction
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [vi - f * vr for vi, vr in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        coeffs = {monos[fc]: Fraction(1)}
        for ri, pc in enumerate(pivots):
            v = -mat[ri][fc]
            if v:
                coeffs[monos[pc]] = v
        basis.append(Polynomial(dim, coeffs))
    return basis


def rotate(p: Polynomial, matrix) -> Polynomial:
    """Orthogonal change of variables: return P(Ox).

    The matrix must be a RationalOrthogonalMatrix (exact orthogonality is
    enforced by its constructor), so total degree and harmonicity are
    preserved exactly.
    """
    from .rotation import RationalOrthogonalMatrix

    if not isinstance(matrix, RationalOrthogonalMatrix):
        raise TypeError("rotate requires a RationalOrthogonalMatrix")
    if matrix.dim != p.dim:
        raise ValueError("matrix dimension mismatch")
    return p.compose_linear(matrix.rows)
