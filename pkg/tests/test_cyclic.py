from __future__ import annotations

import random

import pytest

from cosetcodes.cyclic import (
    CyclicElement,
    F16_E_IMAGE,
    F16_W_IMAGE,
    algebra_elements,
    from_f_basis,
    iso_f8_to_m3,
    iso_f16_to_m4,
    matrix_to_pair,
    multiplication_matrix,
    pair_to_matrix,
    regular_representation,
    to_f_basis,
    twisted_pair_mul,
)
from cosetcodes.matrices import RingMatrix
from cosetcodes.rings import F2, F4, F4I, F8, F16_ALT, quadratic_norm


def elt(ring, text):
    return CyclicElement.parse(ring, text)


def test_construction_guards():
    with pytest.raises(ValueError):
        CyclicElement(F8, [F8.zero])
    with pytest.raises(ValueError):
        CyclicElement(F8, [F4.zero, F8.zero, F8.zero])
    with pytest.raises(ValueError):
        CyclicElement.parse(F4, "0; 0; 0")


def test_parse_pads_and_round_trips():
    x = elt(F8, "w")
    assert x == CyclicElement(F8, [F8.gen_w, F8.zero, F8.zero])
    for coeffs in [(1, 2, 3), (7, 0, 5), (0, 0, 0)]:
        y = CyclicElement(F8, [F8.element(m) for m in coeffs])
        assert CyclicElement.parse(F8, str(y)) == y


def test_e_cubes_to_one_in_degree_3():
    e = elt(F8, "0; 1; 0")
    e2 = e * e
    assert e2 == elt(F8, "0; 0; 1")
    assert e2 * e == elt(F8, "1; 0; 0")


def test_twist_relation_l_e_equals_e_sigma_l():
    """l*e = e*l^2: moving a coefficient past e applies the Frobenius."""
    e = elt(F8, "0; 1; 0")
    for l in F8:
        left = CyclicElement(F8, [l, F8.zero, F8.zero]) * e
        assert left == CyclicElement(F8, [F8.zero, l * l, F8.zero])


def test_one_plus_e_is_nilpotent_in_degree_4():
    # e^4 = 1 and characteristic 2 give (1 + e)^4 = 1 + e^4 = 0
    f = elt(F16_ALT, "1; 1; 0; 0")
    f2 = f * f
    assert not f2.is_zero
    assert (f2 * f2).is_zero


def test_regular_representation_first_column_is_the_coefficients():
    rng = random.Random(7)
    for _ in range(25):
        coeffs = [F8.element(rng.randrange(8)) for _ in range(3)]
        x = CyclicElement(F8, coeffs)
        rep = regular_representation(x)
        for r in range(3):
            assert rep[r, 0] == coeffs[r]


def test_regular_representation_is_a_ring_map():
    rng = random.Random(11)
    sample = [
        CyclicElement(F8, [F8.element(rng.randrange(8)) for _ in range(3)])
        for _ in range(12)
    ]
    for x in sample:
        for y in sample:
            assert regular_representation(x * y) == regular_representation(
                x
            ) * regular_representation(y)
            assert regular_representation(x + y) == regular_representation(
                x
            ) + regular_representation(y)


def test_iso_f8m3_structure():
    one = elt(F8, "1")
    assert iso_f8_to_m3(one) == RingMatrix.identity(F2, 3)
    E = iso_f8_to_m3(elt(F8, "0; 1; 0"))
    assert E * E * E == RingMatrix.identity(F2, 3)
    rng = random.Random(3)
    sample = [
        CyclicElement(F8, [F8.element(rng.randrange(8)) for _ in range(3)])
        for _ in range(10)
    ]
    for x in sample:
        for y in sample:
            assert iso_f8_to_m3(x * y) == iso_f8_to_m3(x) * iso_f8_to_m3(y)


def test_f16_generator_relations():
    """The tabulated degree-4 images: e^4 = 1 and the twist hold, but the
    tabulated W is a root of w^4 + w + 1, NOT of the reducible
    w^4 + w^2 + 1 that names the coefficient ring."""
    E, W = F16_E_IMAGE, F16_W_IMAGE
    eye = RingMatrix.identity(E.ring, 4)
    assert E ** 4 == eye
    assert W * E == E * (W * W)
    assert W ** 4 + W + eye == RingMatrix.zeros(E.ring, 4)
    assert W ** 4 + W * W + eye != RingMatrix.zeros(E.ring, 4)


def test_iso_f16m4_is_injective_on_a_sample():
    rng = random.Random(5)
    seen = {}
    for _ in range(60):
        coeffs = [F16_ALT.element(rng.randrange(16)) for _ in range(4)]
        x = CyclicElement(F16_ALT, coeffs)
        img = iso_f16_to_m4(x)
        key = tuple(e.mask for e in img.entries)
        assert seen.setdefault(key, x) == x
    assert len(seen) > 50


@pytest.mark.parametrize("ring", [F4, F4I], ids=lambda r: r.name)
def test_pair_matrix_bijection(ring):
    seen = set()
    for x in ring:
        for y in ring:
            m = pair_to_matrix(x, y)
            assert matrix_to_pair(m, ring) == (x, y)
            seen.add(tuple(e.mask for e in m.entries))
    assert len(seen) == len(ring) ** 2


def test_pair_to_matrix_multiplicative_f4():
    pairs = [(x, y) for x in F4 for y in F4]
    for p in pairs:
        for q in pairs:
            prod = twisted_pair_mul(p, q)
            assert pair_to_matrix(*prod) == pair_to_matrix(*p) * pair_to_matrix(*q)


def test_twisted_mul_j_squared_is_one():
    zero, one = F4I.zero, F4I.one
    i = F4I.parse("i")
    assert twisted_pair_mul((zero, one), (zero, one)) == (one, zero)
    # the twist must fix i: j * (i j) = sigma(i) j^2 = i, not 1
    assert twisted_pair_mul((zero, one), (zero, i)) == (i, zero)
    assert twisted_pair_mul((zero, i), (zero, one)) == (F4I.parse("i"), zero)


def test_twisted_mul_f4i_matches_matrix_product_sampled():
    rng = random.Random(17)
    els = list(F4I)
    for _ in range(400):
        p = (els[rng.randrange(16)], els[rng.randrange(16)])
        q = (els[rng.randrange(16)], els[rng.randrange(16)])
        prod = twisted_pair_mul(p, q)
        assert pair_to_matrix(*prod) == pair_to_matrix(*p) * pair_to_matrix(*q)


@pytest.mark.parametrize("ring", [F4, F4I], ids=lambda r: r.name)
def test_multiplication_matrix(ring):
    for x in ring:
        mx = multiplication_matrix(x)
        assert mx.det() == quadratic_norm(x)
        for y in ring:
            assert multiplication_matrix(x * y) == mx * multiplication_matrix(y)


def test_f_basis_round_trip_and_e_image():
    e = elt(F16_ALT, "0; 1; 0; 0")
    assert to_f_basis(e) == (
        F16_ALT.one,
        F16_ALT.one,
        F16_ALT.zero,
        F16_ALT.zero,
    )
    rng = random.Random(23)
    for _ in range(50):
        x = CyclicElement(
            F16_ALT, [F16_ALT.element(rng.randrange(16)) for _ in range(4)]
        )
        assert from_f_basis(F16_ALT, to_f_basis(x)) == x


def test_algebra_elements_counts():
    assert len(set(algebra_elements(F4))) == 16
    assert len(set(algebra_elements(F8))) == 512
