"""Acceptance suite: the nine headline checks, one test and one printed
pass/fail line each.

Two lines are known-red and fail honestly rather than being patched around:
criterion 6 (a uniform Lee-weight floor of 2 is false on 15 members whose
components are zero divisors) and the last clause of criterion 7 (the rate
summands add to 57/64, which no rate definition reconciles with the target
47/64).  The assert messages carry the diagnosis; everything else passes.
"""

from __future__ import annotations

import time
from fractions import Fraction

from cosetcodes.bounds import (
    hamming_bound,
    multilevel_bound_m4,
    multilevel_rate_m4,
    normalized_redundancy,
)
from cosetcodes.cyclic import pair_to_matrix
from cosetcodes.golden import min_abs_det_sq, scan_det_floors
from cosetcodes.matrices import count_invertible
from cosetcodes.outer_codes import (
    MatrixSpace,
    WeightKind,
    bachoc_weight,
    dual_repetition_code,
    hexacode,
    inner_parity_pair_code,
    lee_word_weight,
    lift_code,
    min_distance,
    pushforward_pairs,
    repetition_code,
)
from cosetcodes.rings import F2, F2I, F4, F4I
from cosetcodes.verify import brute_delta_min


def report(n: int, label: str, ok: bool) -> str:
    line = f"[criterion {n}] {label}: {'PASS' if ok else 'FAIL'}"
    print(line)
    return line


def test_criterion_1_golden_minimum_determinant():
    start = time.perf_counter()
    value, witness = min_abs_det_sq(2)
    elapsed = time.perf_counter() - start
    ok = value == Fraction(1, 5)
    report(1, "golden-code minimum determinant over the +/-2 box = 1/5", ok)
    assert ok, f"got {value}"
    assert not witness.is_zero
    assert elapsed < 30


def test_criterion_2_invertible_counts():
    start = time.perf_counter()
    gl2_f2 = count_invertible(F2, 2)
    gl2_f2i = count_invertible(F2I, 2)
    non_units = sum(1 for x in F4I if not x.is_unit)
    elapsed = time.perf_counter() - start
    ok = (gl2_f2, gl2_f2i, non_units) == (6, 96, 4)
    report(2, "counts: |GL2(F2)|=6, |GL2(F2[i])|=96, F4[i] non-units=4", ok)
    assert ok, (gl2_f2, gl2_f2i, non_units)
    assert elapsed < 1


def test_criterion_3_isometry():
    start = time.perf_counter()
    ok = all(
        bachoc_weight(pair_to_matrix(x, y))
        == (0 if x.is_zero else 1) + (0 if y.is_zero else 1)
        for x in F4
        for y in F4
    )
    elapsed = time.perf_counter() - start
    report(3, "matrix weight of phi = Hamming weight on all 16 pairs", ok)
    assert ok
    assert elapsed < 1


def test_criterion_4_determinant_floors():
    start = time.perf_counter()
    checked_1, violations_1, _ = scan_det_floors("1pi", box=2)
    checked_2, violations_2, _ = scan_det_floors("2", box=2)
    elapsed = time.perf_counter() - start
    ok = (
        checked_1 == checked_2 == 5 ** 8 - 1
        and violations_1 == []
        and violations_2 == []
    )
    report(4, "classified determinant floors hold on all 390624 codewords", ok)
    assert ok, (violations_1[:3], violations_2[:3])
    assert elapsed < 120


def test_criterion_5_named_code_distances():
    start = time.perf_counter()
    dualrep = dual_repetition_code()
    hexa = hexacode()
    pairs = pushforward_pairs(dualrep)
    results = (
        min_distance(hexa),
        min_distance(dualrep),
        min_distance(lift_code(hexa)),
        min_distance(lift_code(dualrep)),
        min_distance(pairs, WeightKind.BACHOC),
        min_distance(pairs, WeightKind.HAMMING),
    )
    elapsed = time.perf_counter() - start
    ok = results == (4, 2, 4, 2, 2, 1)
    report(5, "hexacode 4 / dual-rep 2 / lifts preserve / pairs 2-vs-1", ok)
    assert ok, results
    assert elapsed < 5


def test_criterion_6_inner_parity_lee_floor():
    start = time.perf_counter()
    members = set(inner_parity_pair_code().codewords())
    nonzero = [w for w in members if any(not x.is_zero for x in w)]
    floor = min(lee_word_weight(w) for w in nonzero)
    elapsed = time.perf_counter() - start
    ok = len(nonzero) == 63 and floor >= 2
    report(6, "all 63 nonzero inner-parity pairs have Lee weight >= 2", ok)
    assert elapsed < 1
    assert ok, (
        f"floor is {floor}, not >= 2: 15 nonzero members built from the "
        f"zero divisor 1+i have both relative norms 0, e.g. (0, 1+i); "
        f"the true spectrum is 0:16, 2:24, 4:24 and no member has weight 1"
    )


def test_criterion_7_bound_formula_regression():
    clause_hamming = hamming_bound(2, 2, Fraction(1, 5), 2) == Fraction(4, 5)
    clause_multilevel = multilevel_bound_m4(
        4, 3, 2, 2, Fraction(1, 1125)
    ) == Fraction(16, 1125)
    clause_redundancy = normalized_redundancy(28, 16, 4) == Fraction(7, 16)
    rate = multilevel_rate_m4((13, 14, 15, 15), 16)
    clause_rate = rate == Fraction(47, 64)
    ok = clause_hamming and clause_multilevel and clause_redundancy and clause_rate
    report(7, "bound formulas: 4/5, 16/1125, 7/16, rate 47/64", ok)
    assert clause_hamming and clause_multilevel and clause_redundancy
    assert clause_rate, (
        f"(13+14+15+15)/64 = {rate}, not 47/64; the four summands and the "
        f"target rate are mutually inconsistent and no rate definition "
        f"reconciles them"
    )


def test_criterion_8_isomorphism_certification(claim_result):
    start = time.perf_counter()
    f8 = claim_result("iso_f8m3")
    pair = claim_result("iso_m2f2_f4j")
    f16 = claim_result("iso_f16m4")
    elapsed = time.perf_counter() - start
    relation_report = "\n".join(f16.details)
    ok = (
        f8.passed
        and pair.passed
        and "w^4 + w^2 + 1 = 0: FAIL" in relation_report
        and "e^4 = 1: pass" in relation_report
    )
    report(8, "f8m3 and m2f2_f4j certified; f16m4 per-relation report", ok)
    assert ok
    assert elapsed + f8.elapsed + pair.elapsed + f16.elapsed < 120


def test_criterion_9_coset_bound_property():
    start = time.perf_counter()
    code = repetition_code(2, MatrixSpace(F2, 2))
    value, witness, eq2_ok = brute_delta_min(code, "1pi")
    bound = hamming_bound(2, 2, Fraction(1, 5), 2)
    elapsed = time.perf_counter() - start
    ok = value >= bound and value == Fraction(4, 5) and eq2_ok
    report(9, "L=2 repetition coset code: brute delta_min >= 4/5 = bound", ok)
    assert ok, f"delta_min={value}, bound={bound}, eq2={eq2_ok}"
    assert len(witness) == 2
    assert elapsed < 300
