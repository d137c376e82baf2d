"""The built-in catalog of harmonic functions and shared-zero pairs."""

import json
from fractions import Fraction

import numpy as np
import pytest

from harmonic_ratios.catalog import (
    UnknownEntry,
    ZeroAtAnchor,
    catalog_get,
    catalog_names,
    manifest,
    manifest_json,
    normalize_at,
    shared_pair,
)


class TestLookup:
    def test_static_names_resolve(self):
        for name in ("saddle2d", "imz2", "paperH", "expsin", "coshsin"):
            assert catalog_get(name).name == name

    def test_parametric_names(self):
        assert catalog_get("rezk:5").polynomial.total_degree() == 5
        assert catalog_get("imzk:3").polynomial.total_degree() == 3

    def test_unknown_raises(self):
        with pytest.raises(UnknownEntry):
            catalog_get("nope")
        with pytest.raises(UnknownEntry):
            catalog_get("rezk:0")
        with pytest.raises(UnknownEntry):
            catalog_get("rezk:x")

    def test_names_listing(self):
        names = catalog_names()
        assert "paperH" in names and "rezk:k" in names


class TestHarmonicity:
    @pytest.mark.parametrize("name", ["saddle2d", "imz2", "paperH", "rezk:4", "imzk:5"])
    def test_polynomial_entries(self, name):
        assert catalog_get(name).polynomial.laplacian().is_zero()

    @pytest.mark.parametrize("name", ["expsin", "coshsin"])
    def test_transcendental_truncations(self, name):
        # the Laplacian of a degree-N truncation of a harmonic function
        # vanishes through degree N-2
        s = catalog_get(name).taylor((0, 0), 10)
        lap = s.as_polynomial().laplacian()
        for alpha, c in lap.terms.items():
            assert sum(alpha) > 8, (alpha, c)


class TestTaylorData:
    def test_expsin_coefficients(self):
        s = catalog_get("expsin").taylor((0, 0), 4)
        assert s.coefficient((1, 0)) == 1          # sin x ~ x
        assert s.coefficient((1, 1)) == 1          # x * y
        assert s.coefficient((3, 0)) == Fraction(-1, 6)
        assert s.coefficient((1, 2)) == Fraction(1, 2)
        assert s.coefficient((2, 0)) == 0

    def test_polynomial_entry_any_rational_center(self):
        s = catalog_get("paperH").taylor((Fraction(1, 3), 0, Fraction(1, 3)), 3)
        # value at the center is the constant coefficient
        assert s.coefficient((0, 0, 0)) == catalog_get("paperH").polynomial.evaluate(
            (Fraction(1, 3), 0, Fraction(1, 3))
        )

    def test_transcendental_off_origin_rejected(self):
        with pytest.raises(ValueError):
            catalog_get("expsin").taylor((1, 0), 4)

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            catalog_get("saddle2d").taylor((0, 0), -1)


class TestEvaluation:
    def test_vectorized_call(self):
        e = catalog_get("expsin")
        x = np.array([0.3, -1.1])
        y = np.array([0.5, 0.2])
        assert np.allclose(e(x, y), np.exp(y) * np.sin(x))

    def test_rezk_sign_changes_on_circle(self):
        for k in (2, 3, 4):
            e = catalog_get(f"rezk:{k}")
            theta = np.linspace(0, 2 * np.pi, 4096, endpoint=False)
            vals = e(np.cos(theta), np.sin(theta))
            flips = int(np.sum(np.sign(vals) != np.sign(np.roll(vals, 1))))
            assert flips == 2 * k


class TestPairs:
    def test_shared_pair_registered(self):
        pair = shared_pair("expsin", "coshsin")
        assert pair.common_zero.startswith("the vertical lines")
        assert pair.region.kind == "box"

    def test_same_name_pair(self):
        pair = shared_pair("saddle2d", "saddle2d")
        assert pair.u.name == pair.v.name

    def test_unregistered_pair(self):
        with pytest.raises(UnknownEntry):
            shared_pair("saddle2d", "imz2")

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            shared_pair("paperH", "saddle2d")

    def test_normalize_at(self):
        pair = normalize_at(shared_pair("expsin", "coshsin"), (0.5, 0.5))
        pt = (np.array([0.5]), np.array([0.5]))
        assert float(pair.u(*pt)[0]) == pytest.approx(1.0, abs=1e-14)
        assert float(pair.v(*pt)[0]) == pytest.approx(1.0, abs=1e-14)

    def test_normalize_at_zero_anchor(self):
        with pytest.raises(ZeroAtAnchor):
            normalize_at(shared_pair("expsin", "coshsin"), (0.0, 0.7))

    def test_rescaled_entry_refuses_exact_taylor(self):
        pair = normalize_at(shared_pair("expsin", "coshsin"), (0.5, 0.5))
        with pytest.raises(ValueError):
            pair.u.taylor((0, 0), 4)


class TestManifest:
    def test_every_static_entry_listed(self):
        entries = manifest()
        names = {e["name"] for e in entries}
        assert names == {"saddle2d", "imz2", "paperH", "expsin", "coshsin"}
        for e in entries:
            assert e["zero_set"] and e["provenance"]

    def test_json_round_trips(self):
        assert json.loads(manifest_json()) == manifest()
