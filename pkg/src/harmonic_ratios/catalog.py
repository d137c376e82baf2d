"""Curated harmonic functions and pairs sharing a nodal set.

Polynomial entries carry their exact ``Polynomial`` body.  Transcendental
entries carry a coefficient generator that produces exact rational Taylor
coefficients; exactness is only possible where the function's derivative
values are rational, so the transcendental generators are anchored at the
origin (requesting another center raises).

Built-in names:

* ``saddle2d``   x^2 - y^2
* ``imz2``       Im(x+iy)^2 = 2xy
* ``rezk:k``     Re(x+iy)^k, any k >= 1
* ``imzk:k``     Im(x+iy)^k, any k >= 1
* ``paperH``     x^2 - y^2 + z^3 - 3x^2 z  (two nodal domains, non-Lipschitz)
* ``expsin``     e^y sin x
* ``coshsin``    cosh y sin x

``expsin`` and ``coshsin`` share the nodal set {sin x = 0}; their ratio is
e^y / cosh y = 1 + tanh y.  The pair is a standard textbook example of
distinct harmonic functions with a common zero set; it is registered with
that provenance note in the manifest.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .io_formats import format_polynomial
from .polynomial import Polynomial
from .regions import Region
from .series import TruncatedSeries


class UnknownEntry(KeyError):
    pass


class ZeroAtAnchor(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    dimension: int
    kind: str  # "polynomial" | "transcendental"
    zero_set: str
    provenance: str
    polynomial: Optional[Polynomial] = None
    series_at_origin: Optional[Callable[[int], Dict[tuple, Fraction]]] = None
    eval_arrays: Optional[Callable[..., np.ndarray]] = None
    scale: float = 1.0

    def taylor(self, center: Sequence, max_degree: int) -> TruncatedSeries:
        """Exact Taylor truncation about a rational center."""
        if max_degree < 0:
            raise ValueError("degree must be non-negative")
        if self.kind == "polynomial":
            s = TruncatedSeries.from_polynomial(self.polynomial, max_degree, center)
        else:
            if any(Fraction(c) != 0 for c in center):
                raise ValueError(
                    f"entry {self.name} has exact coefficients at the origin only"
                )
            coeffs = self.series_at_origin(max_degree)
            s = TruncatedSeries(
                self.dimension, (Fraction(0),) * self.dimension, max_degree, coeffs
            )
        if self.scale != 1.0:
            # float rescales come from normalize_at and are for numeric use only
            raise ValueError("exact Taylor data is unavailable on a rescaled entry")
        return s

    def __call__(self, *coords: np.ndarray) -> np.ndarray:
        """Vectorized float evaluation."""
        if self.kind == "polynomial":
            out = self.polynomial.evaluate_array(list(coords))
        else:
            out = self.eval_arrays(*coords)
        return out * self.scale if self.scale != 1.0 else out

    def rescaled(self, factor: float) -> "CatalogEntry":
        return CatalogEntry(
            name=self.name,
            dimension=self.dimension,
            kind=self.kind,
            zero_set=self.zero_set,
            provenance=self.provenance,
            polynomial=self.polynomial,
            series_at_origin=self.series_at_origin,
            eval_arrays=self.eval_arrays,
            scale=self.scale * factor,
        )


@dataclass(frozen=True)
class SharedZeroPair:
    u: CatalogEntry
    v: CatalogEntry
    common_zero: str
    region: Region


# -- polynomial bodies -------------------------------------------------------


def _re_im_zk(k: int) -> Tuple[Polynomial, Polynomial]:
    """Re and Im of (x+iy)^k as exact 2D polynomials."""
    if k < 1:
        raise ValueError("k must be >= 1")
    re_terms: Dict[tuple, Fraction] = {}
    im_terms: Dict[tuple, Fraction] = {}
    for j in range(k + 1):
        c = Fraction(comb(k, j))
        # i^j cycles 1, i, -1, -i
        if j % 4 == 0:
            re_terms[(k - j, j)] = c
        elif j % 4 == 1:
            im_terms[(k - j, j)] = c
        elif j % 4 == 2:
            re_terms[(k - j, j)] = -c
        else:
            im_terms[(k - j, j)] = -c
    return Polynomial(2, re_terms), Polynomial(2, im_terms)


_PAPER_H = Polynomial(
    3,
    {
        (2, 0, 0): Fraction(1),
        (0, 2, 0): Fraction(-1),
        (0, 0, 3): Fraction(1),
        (2, 0, 1): Fraction(-3),
    },
)


# -- transcendental coefficient generators -----------------------------------


def _sin_coeffs(n: int) -> List[Fraction]:
    out = [Fraction(0)] * (n + 1)
    fact = 1
    for i in range(1, n + 1):
        fact *= i
        if i % 2 == 1:
            out[i] = Fraction((-1) ** ((i - 1) // 2), fact)
    return out


def _exp_coeffs(n: int) -> List[Fraction]:
    out = [Fraction(1)]
    fact = 1
    for j in range(1, n + 1):
        fact *= j
        out.append(Fraction(1, fact))
    return out


def _cosh_coeffs(n: int) -> List[Fraction]:
    out = [Fraction(0)] * (n + 1)
    fact = 1
    out[0] = Fraction(1)
    for j in range(1, n + 1):
        fact *= j
        if j % 2 == 0:
            out[j] = Fraction(1, fact)
    return out


def _product_series(fx: List[Fraction], gy: List[Fraction], n: int):
    coeffs: Dict[tuple, Fraction] = {}
    for i, a in enumerate(fx):
        if a == 0:
            continue
        for j, b in enumerate(gy):
            if i + j > n:
                break
            if b:
                coeffs[(i, j)] = a * b
    return coeffs


def _expsin_series(n: int):
    return _product_series(_sin_coeffs(n), _exp_coeffs(n), n)


def _coshsin_series(n: int):
    return _product_series(_sin_coeffs(n), _cosh_coeffs(n), n)


# -- registry -----------------------------------------------------------------


def _static_entries() -> Dict[str, CatalogEntry]:
    re2, im2 = _re_im_zk(2)
    saddle = CatalogEntry(
        name="saddle2d",
        dimension=2,
        kind="polynomial",
        zero_set="the two lines y = x and y = -x; four nodal sectors",
        provenance="classical degree-2 harmonic saddle",
        polynomial=Polynomial(2, {(2, 0): 1, (0, 2): -1}),
    )
    imz2 = CatalogEntry(
        name="imz2",
        dimension=2,
        kind="polynomial",
        zero_set="the coordinate axes x = 0 and y = 0",
        provenance="imaginary part of (x+iy)^2",
        polynomial=im2,
    )
    paper_h = CatalogEntry(
        name="paperH",
        dimension=3,
        kind="polynomial",
        zero_set=(
            "slice z=0: two orthogonal lines x = +-y; slices z != 0: two "
            "hyperbola-like branches; exactly two nodal domains near 0"
        ),
        provenance="cubic harmonic with non-Lipschitz nodal domains",
        polynomial=_PAPER_H,
    )
    expsin = CatalogEntry(
        name="expsin",
        dimension=2,
        kind="transcendental",
        zero_set="the vertical lines x = m*pi, m integer",
        provenance=(
            "e^y sin x; shares its zero set with cosh y sin x (standard "
            "example of distinct harmonic functions with one nodal set; "
            "not taken from the reference examples)"
        ),
        series_at_origin=_expsin_series,
        eval_arrays=lambda x, y: np.exp(y) * np.sin(x),
    )
    coshsin = CatalogEntry(
        name="coshsin",
        dimension=2,
        kind="transcendental",
        zero_set="the vertical lines x = m*pi, m integer",
        provenance="cosh y sin x; pairs with expsin",
        series_at_origin=_coshsin_series,
        eval_arrays=lambda x, y: np.cosh(y) * np.sin(x),
    )
    return {
        e.name: e for e in (saddle, imz2, paper_h, expsin, coshsin)
    }


_REGISTRY = _static_entries()


def catalog_get(name: str) -> CatalogEntry:
    """Look up an entry; ``rezk:k`` and ``imzk:k`` are parametric."""
    if name in _REGISTRY:
        return _REGISTRY[name]
    for prefix, pick in (("rezk:", 0), ("imzk:", 1)):
        if name.startswith(prefix):
            try:
                k = int(name[len(prefix):])
            except ValueError as exc:
                raise UnknownEntry(name) from exc
            if k < 1:
                raise UnknownEntry(name)
            body = _re_im_zk(k)[pick]
            part = "real" if pick == 0 else "imaginary"
            return CatalogEntry(
                name=name,
                dimension=2,
                kind="polynomial",
                zero_set=f"{2 * k} equally spaced rays through the origin",
                provenance=f"{part} part of (x+iy)^{k}",
                polynomial=body,
            )
    raise UnknownEntry(name)


def catalog_names() -> List[str]:
    return sorted(_REGISTRY) + ["rezk:k", "imzk:k"]


def taylor_coeffs(entry: CatalogEntry, center: Sequence, max_degree: int) -> TruncatedSeries:
    return entry.taylor(center, max_degree)


def shared_pair(u_name: str, v_name: str) -> SharedZeroPair:
    u, v = catalog_get(u_name), catalog_get(v_name)
    if u.dimension != v.dimension:
        raise ValueError("pair members must share a dimension")
    if (u_name, v_name) in (("expsin", "coshsin"), ("coshsin", "expsin")):
        return SharedZeroPair(
            u=u,
            v=v,
            common_zero="the vertical lines x = m*pi",
            region=Region.box((-2.0, -2.0), (2.0, 2.0)),
        )
    if u_name == v_name:
        return SharedZeroPair(
            u=u,
            v=v,
            common_zero=u.zero_set,
            region=Region.box((-1.0,) * u.dimension, (1.0,) * u.dimension),
        )
    raise UnknownEntry(f"no registered shared-zero pair ({u_name}, {v_name})")


def normalize_at(pair: SharedZeroPair, x0: Sequence[float]) -> SharedZeroPair:
    """Rescale both members so they take value 1 at the anchor point."""
    pt = [np.asarray([float(c)]) for c in x0]
    u0 = float(pair.u(*pt)[0])
    v0 = float(pair.v(*pt)[0])
    if u0 == 0.0 or v0 == 0.0:
        raise ZeroAtAnchor(f"pair member vanishes at anchor {tuple(x0)}")
    return SharedZeroPair(
        u=pair.u.rescaled(1.0 / u0),
        v=pair.v.rescaled(1.0 / v0),
        common_zero=pair.common_zero,
        region=pair.region,
    )


def manifest(max_degree: int = 6) -> List[Dict[str, object]]:
    """JSON-ready description of every static entry."""
    out = []
    for name in sorted(_REGISTRY):
        e = _REGISTRY[name]
        item: Dict[str, object] = {
            "name": e.name,
            "dimension": e.dimension,
            "kind": e.kind,
            "zero_set": e.zero_set,
            "provenance": e.provenance,
        }
        if e.kind == "polynomial":
            item["body"] = format_polynomial(e.polynomial)
        else:
            item["taylor_at_origin"] = format_polynomial(
                e.taylor((0,) * e.dimension, max_degree).as_polynomial()
            )
        out.append(item)
    return out


def manifest_json() -> str:
    return json.dumps(manifest(), indent=2, sort_keys=True)
