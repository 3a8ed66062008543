from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from cosetcodes.golden import (
    ALPHA,
    ALPHA_BAR,
    FLOOR_BY_CLASS,
    GaussianInt,
    GoldenCodeword,
    GoldenInt,
    ProjectionClass,
    abs_det_sq,
    classify_projection,
    det_complex,
    det_numerator,
    det_sq_times5,
    floor_table_mod_1pi,
    floor_table_mod_2,
    golden_norm,
    golden_pair_mul,
    equal_norms_floor_table_mod_2,
    min_abs_det_sq,
    mod2_det_class,
    mod2_norm_pair,
    project_mod_1pi,
    project_pair_mod_1pi,
    project_pair_mod_2,
    reduce_mod_1pi,
    reduce_mod_2,
    scan_det_floors,
)
from cosetcodes.matrices import RingMatrix
from cosetcodes.rings import F2, F2I, F4

ints = st.integers(min_value=-50, max_value=50)
gaussians = st.builds(GaussianInt, ints, ints)
goldens = st.builds(GoldenInt, gaussians, gaussians)
coords8 = st.tuples(*[st.integers(min_value=-3, max_value=3)] * 8)


@given(x=gaussians, y=gaussians, z=gaussians)
def test_gaussian_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x - y) + y == x


@given(x=gaussians, y=gaussians)
def test_gaussian_conj_and_abs_sq(x, y):
    assert (x * y).conj() == x.conj() * y.conj()
    assert x * x.conj() == GaussianInt(x.abs_sq(), 0)
    assert x.abs_sq() >= 0


@given(x=goldens, y=goldens, z=goldens)
def test_golden_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


@given(x=goldens, y=goldens)
def test_golden_conjugations_are_ring_maps(x, y):
    assert (x * y).galois_conj() == x.galois_conj() * y.galois_conj()
    assert (x * y).complex_conj() == x.complex_conj() * y.complex_conj()
    # galois conjugation is an involution
    assert x.galois_conj().galois_conj() == x


@given(x=goldens, y=goldens)
def test_golden_norm_multiplicative(x, y):
    assert golden_norm(x * y) == golden_norm(x) * golden_norm(y)
    assert golden_norm(x) == (x * x.galois_conj()).u


def test_alpha_times_conjugate():
    assert ALPHA.galois_conj() == ALPHA_BAR
    assert ALPHA * ALPHA_BAR == GoldenInt(GaussianInt(2, 1), GaussianInt(0, 0))
    assert golden_norm(ALPHA) == GaussianInt(2, 1)  # 2 + i, norm 5 in Z


@given(coords=coords8)
def test_det_integer_paths_agree(coords):
    cw = GoldenCodeword.from_ints(coords)
    num = det_numerator(cw)
    assert num.abs_sq() == 5 * det_sq_times5(coords)
    assert abs_det_sq(cw) == Fraction(det_sq_times5(coords), 5)


@given(coords=coords8)
@settings(max_examples=60)
def test_det_float_oracle(coords):
    cw = GoldenCodeword.from_ints(coords)
    approx = abs(det_complex(cw)) ** 2
    assert approx == pytest.approx(float(abs_det_sq(cw)), abs=1e-9)


@given(coords=coords8)
def test_nonzero_codewords_have_nonzero_det(coords):
    """Division algebra: the determinant vanishes only at zero."""
    cw = GoldenCodeword.from_ints(coords)
    if cw.is_zero:
        assert det_sq_times5(coords) == 0
    else:
        assert det_sq_times5(coords) > 0


def test_matrix_det_is_the_det_numerator():
    for coords in [(1, 0, 0, 0, 0, 0, 0, 0), (2, -1, 0, 1, 1, 1, -2, 0)]:
        cw = GoldenCodeword.from_ints(coords)
        (m00, m01), (m10, m11) = cw.matrix_times_sqrt5()
        det = m00 * m11 - m01 * m10
        assert det == GoldenInt(det_numerator(cw), GaussianInt(0, 0))


def test_golden_pair_mul_e_squared_is_i():
    zero = GoldenInt(GaussianInt(0, 0), GaussianInt(0, 0))
    one = GoldenInt(GaussianInt(1, 0), GaussianInt(0, 0))
    e_sq = golden_pair_mul((zero, one), (zero, one))
    assert e_sq == (GoldenInt(GaussianInt(0, 1), GaussianInt(0, 0)), zero)


@given(coords8, coords8, coords8)
@settings(max_examples=40)
def test_golden_pair_mul_associative(t1, t2, t3):
    def pair(t):
        cw = GoldenCodeword.from_ints(t)
        return (cw.x0(), cw.x1())

    x, y, z = pair(t1), pair(t2), pair(t3)
    assert golden_pair_mul(golden_pair_mul(x, y), z) == golden_pair_mul(
        x, golden_pair_mul(y, z)
    )


def test_reductions():
    assert reduce_mod_1pi(GaussianInt(1, 1)).is_zero
    assert reduce_mod_1pi(GaussianInt(2, -1)) == F2.one
    assert reduce_mod_2(GaussianInt(2, 2)).is_zero
    assert reduce_mod_2(GaussianInt(1, 0)) == F2I.one
    assert reduce_mod_2(GaussianInt(0, 1)) == F2I.gen_i
    assert reduce_mod_2(GaussianInt(-1, 3)) == F2I.one + F2I.gen_i


@given(s=coords8, t=coords8)
@settings(max_examples=60)
def test_projection_additive(s, t):
    summed = GoldenCodeword.from_ints([a + b for a, b in zip(s, t)])
    for project in (project_pair_mod_1pi, project_pair_mod_2):
        ps, pt = project(GoldenCodeword.from_ints(s)), project(
            GoldenCodeword.from_ints(t)
        )
        assert project(summed) == (ps[0] + pt[0], ps[1] + pt[1])


def test_classify_projection():
    assert classify_projection(RingMatrix.zeros(F4, 2)) is ProjectionClass.ZERO
    assert classify_projection(RingMatrix.identity(F4, 2)) is ProjectionClass.UNIT
    ones = RingMatrix.parse(F4, "[[1,1],[1,1]]")
    assert classify_projection(ones) is ProjectionClass.NON_UNIT


def test_mod2_class_of_the_equal_norms_counterexample():
    """Norm pair (1,1) but |det|^2 = 2/5: the naive equal-norms rule would
    put this codeword on the 4/5 floor, the det class correctly says 2/5."""
    coords = (1, 0, 0, 0, 1, 0, 0, 0)
    cw = GoldenCodeword.from_ints(coords)
    assert mod2_norm_pair(cw) == (F2I.one, F2I.one)
    assert mod2_det_class(cw) is ProjectionClass.NON_UNIT
    assert det_sq_times5(coords) == 2


def test_floor_tables():
    t1 = floor_table_mod_1pi()
    t2 = floor_table_mod_2()
    lit = equal_norms_floor_table_mod_2()
    assert len(t1) == 16 and len(t2) == 256
    assert t1[0] == 4 and t2[0] == 4  # the zero coset keeps the 4/5 floor
    assert set(t1) == {4, 2, 1} and set(t2) == {4, 2, 1}
    assert FLOOR_BY_CLASS[ProjectionClass.ZERO] == 4
    assert FLOOR_BY_CLASS[ProjectionClass.NON_UNIT] == 2
    assert FLOOR_BY_CLASS[ProjectionClass.UNIT] == 1
    # the literal (equal-norms) grouping disagrees exactly where the
    # counterexample lives: parity key of (1,0,0,0,1,0,0,0) is 1 + 16
    assert lit[17] == 4 and t2[17] == 2


def test_min_abs_det_sq_box1():
    value, wit = min_abs_det_sq(1)
    assert value == Fraction(1, 5)
    assert abs_det_sq(wit) == Fraction(1, 5)
    assert min_abs_det_sq(1, jobs=2) == (value, wit)


def test_min_abs_det_sq_coset_restricted():
    eye = RingMatrix.identity(F2, 2)
    value, wit = min_abs_det_sq(1, coset=eye, ideal="1pi")
    assert value == Fraction(1, 5)
    assert project_mod_1pi(wit) == eye
    with pytest.raises(ValueError):
        min_abs_det_sq(1, coset=eye)  # --coset needs an ideal


def test_scan_det_floors_box1():
    for ideal in ("1pi", "2"):
        checked, violations, counts = scan_det_floors(ideal, box=1)
        assert checked == 3 ** 8 - 1
        assert violations == []
        assert sum(counts) == checked
        assert all(c > 0 for c in counts)
    with pytest.raises(ValueError):
        scan_det_floors("3")
