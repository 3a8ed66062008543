from __future__ import annotations

from fractions import Fraction

import pytest

from cosetcodes import verify
from cosetcodes.outer_codes import MatrixSpace, repetition_code
from cosetcodes.rings import F2

ALL_CLAIMS = list(verify.CLAIMS)


@pytest.mark.parametrize("name", ALL_CLAIMS)
def test_every_claim_passes(claim_result, name):
    rep = claim_result(name)
    assert rep.passed, f"{name} failed: {rep.witness}; details={rep.details}"
    assert rep.claim == name
    assert rep.elapsed > 0


def test_report_tsv_shape(claim_result):
    for name in ("counts", "norm_f4i"):
        line = claim_result(name).tsv_line()
        fields = line.split("\t")
        assert len(fields) == 3
        assert fields[1] == "pass"


def test_counts_details(claim_result):
    details = "\n".join(claim_result("counts").details)
    assert "96 invertible of 256" in details


def test_f16m4_relation_report(claim_result):
    """The degree-4 table claim must carry the reducible-modulus anomaly:
    the tabulated W satisfies w^4+w+1, not the namesake w^4+w^2+1."""
    details = "\n".join(claim_result("iso_f16m4").details)
    assert "w^4 + w^2 + 1 = 0: FAIL" in details
    assert "w^4 + w + 1 = 0: pass" in details
    assert "bijection" in details


def test_inner_pair_lee_spectrum_detail(claim_result):
    details = "\n".join(claim_result("inner_pair_lee").details)
    assert "0:16, 2:24, 4:24" in details
    assert "15 non-unit members" in details


def test_det_floor_class_sizes_are_stable(claim_result):
    """Class sizes over the +/-2 box, frozen after the first exhaustive run;
    any arithmetic regression in reduction or classification moves them."""
    d1 = "\n".join(claim_result("det_floors_1pi").details)
    d2 = "\n".join(claim_result("det_floors_2").details)
    assert "28560/207936/154128" in d1
    assert "125328/111168/154128" in d2
    assert "(1, 0, 1, 0)" in d2  # the equal-norms counterexample


def test_projection_compat_details(claim_result):
    details = "\n".join(claim_result("projection_compat").details)
    assert "43008 of 65536" in details  # plain labeling fails mod (1+i)
    assert "36864 of 65536" in details  # conjugated labeling fails mod 2
    assert "both second slots" in details


def test_golden_mindet_has_a_witness(claim_result):
    rep = claim_result("golden_mindet")
    assert rep.witness != "-"


def test_delta_min_rep2_details(claim_result):
    details = "\n".join(claim_result("delta_min_rep2").details)
    assert "4/5" in details


def test_run_claim_rejects_unknown_names():
    with pytest.raises(ValueError):
        verify.run_claim("nosuch")


def test_brute_delta_min_guards():
    code = repetition_code(2, MatrixSpace(F2, 2))
    with pytest.raises(ValueError):
        verify.brute_delta_min(code, "7")
    with pytest.raises(ValueError):
        verify.brute_delta_min(code, "1pi", limit=10)


def test_brute_delta_min_value(claim_result):
    """L=2 repetition over M2(F2), coordinates in {0,1,i,1+i}: the minimum
    Gram determinant is exactly the stacked bound 16/20 = 4/5."""
    value, witness, eq2_ok = verify.brute_delta_min(
        repetition_code(2, MatrixSpace(F2, 2)), "1pi"
    )
    assert value == Fraction(4, 5)
    assert eq2_ok
    assert len(witness) == 2
