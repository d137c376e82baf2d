"""Exact rational orthogonal matrices."""

from fractions import Fraction

import numpy as np
import pytest

from harmonic_ratios.rotation import (
    DEFAULT_CAYLEY_GRID,
    RationalOrthogonalMatrix,
    cayley,
    cayley_from_params,
    identity,
    permutation_matrix,
    random_rotation,
    search_candidates,
)


def test_constructor_rejects_non_orthogonal():
    with pytest.raises(ValueError):
        RationalOrthogonalMatrix(((Fraction(1), Fraction(1)), (Fraction(0), Fraction(1))))


def test_constructor_rejects_non_square():
    with pytest.raises(ValueError):
        RationalOrthogonalMatrix(((Fraction(1),), (Fraction(0), Fraction(1))))


def test_cayley_half_2d():
    rot = cayley_from_params(2, [Fraction(1, 2)])
    assert rot.rows == (
        (Fraction(3, 5), Fraction(-4, 5)),
        (Fraction(4, 5), Fraction(3, 5)),
    )


def test_cayley_3d_orthogonal():
    rot = cayley_from_params(3, [Fraction(1, 2), Fraction(-1, 3), Fraction(2, 5)])
    # the dataclass validator ran; double-check determinant is +1 (a rotation)
    det = float(np.linalg.det(np.array(rot.rows, dtype=float)))
    assert det == pytest.approx(1.0, abs=1e-12)


def test_transpose_is_inverse():
    rot = cayley_from_params(2, [Fraction(1, 3)])
    assert (rot @ rot.transpose()).rows == identity(2).rows
    assert rot.inverse().rows == rot.transpose().rows


def test_apply_exact():
    rot = cayley_from_params(2, [Fraction(1, 2)])
    img = rot.apply((Fraction(1), Fraction(0)))
    assert img == (Fraction(3, 5), Fraction(4, 5))
    # exact isometry
    assert sum(v * v for v in img) == 1


def test_permutation_matrix():
    pm = permutation_matrix((1, 0))
    assert pm.apply((Fraction(2), Fraction(5))) == (Fraction(5), Fraction(2))


def test_column():
    rot = cayley_from_params(2, [Fraction(1, 2)])
    assert rot.column(0) == (Fraction(3, 5), Fraction(4, 5))


def test_search_candidates_starts_with_identity():
    stream = search_candidates(2)
    assert next(stream).rows == identity(2).rows
    seen = [next(stream) for _ in range(10)]
    assert all(isinstance(m, RationalOrthogonalMatrix) for m in seen)


def test_search_candidates_distinct_first_columns():
    cols = set()
    for i, cand in enumerate(search_candidates(2, DEFAULT_CAYLEY_GRID)):
        cols.add(cand.column(0))
        if i > 12:
            break
    assert len(cols) > 4  # the stream explores genuinely different directions


def test_random_rotation_is_exact():
    rng = np.random.default_rng(7)
    for _ in range(5):
        rot = random_rotation(3, rng)
        assert (rot @ rot.transpose()).rows == identity(3).rows


def test_cayley_accepts_full_square_input():
    rot_a = cayley([[0, Fraction(1, 2)], [0, 0]])
    rot_b = cayley_from_params(2, [Fraction(1, 2)])
    assert rot_a.rows == rot_b.rows
