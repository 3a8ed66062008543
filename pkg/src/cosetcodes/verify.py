"""Brute-force certification oracles for every countable claim in the package.

Each oracle exhausts a finite search space (or a stated box of an infinite
one), re-deriving the claimed fact through two independent routes wherever
one exists — e.g. "multiply in the algebra, then map" against "map, then
multiply matrices", or integer determinant scans against ring-table
classifications.  Results come back as :class:`OracleReport` records; the
report never hides a failure inside an average, and informational findings
(documented anomalies that are part of the certified behavior) are carried
in ``details`` with explicit witnesses.

The TSV surface is one line per claim:  ``claim<TAB>pass|fail<TAB>witness``.

Heavy scans (the +/-2 coordinate box: 390,624 nonzero codewords) accept a
``jobs`` argument; results are identical at any worker count.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import bounds, golden, outer_codes
from .bounds import SqrtVal
from .cyclic import (
    CyclicElement,
    F16_E_IMAGE,
    F16_W_IMAGE,
    iso_f16_to_m4,
    iso_f8_to_m3,
    from_f_basis,
    matrix_to_pair,
    pair_to_matrix,
    regular_representation,
    to_f_basis,
    twisted_pair_mul,
)
from .golden import (
    GaussianInt,
    GoldenCodeword,
    GoldenInt,
    abs_det_sq,
    det_sq_times5,
    golden_pair_mul,
    min_abs_det_sq,
    scan_det_floors,
)
from .matrices import RingMatrix, all_matrices, count_invertible, matrix_space_size
from .outer_codes import (
    MappedCode,
    LinearCode,
    WeightKind,
    dual_repetition_code,
    hexacode,
    inner_parity_pair_code,
    lee_weight,
    lift_code,
    matrix_parity_code,
    min_distance,
    pushforward_pairs,
    reed_solomon_code,
    rs_distance_certificate,
)
from .rings import F2, F2I, F4, F4I, F8, F16_ALT, quadratic_conj, quadratic_norm


@dataclass
class OracleReport:
    """Outcome of one exhaustive certification."""

    claim: str
    space: str
    passed: bool
    witness: str = "-"
    details: tuple[str, ...] = field(default=())
    elapsed: float = 0.0

    def tsv_line(self) -> str:
        return f"{self.claim}\t{'pass' if self.passed else 'fail'}\t{self.witness}"


def _report(
    claim: str,
    space: str,
    failures: list[str],
    *,
    witness_ok: str = "-",
    details: Iterable[str] = (),
    started: float,
) -> OracleReport:
    passed = not failures
    witness = witness_ok if passed else failures[0]
    return OracleReport(
        claim=claim,
        space=space,
        passed=passed,
        witness=witness,
        details=tuple(details) + tuple(f"FAILURE: {f}" for f in failures[1:]),
        elapsed=time.perf_counter() - started,
    )


# ----------------------------------------------------------------------
# packed binary-matrix helpers (oracle-local, independent of RingMatrix)

def _rows_packed(m: RingMatrix) -> tuple[int, ...]:
    n = m.n
    out = []
    for r in range(n):
        mask = 0
        for c in range(n):
            if not m[r, c].is_zero:
                mask |= 1 << c
        out.append(mask)
    return tuple(out)


def _bmatmul(a_rows: Sequence[int], b_rows: Sequence[int]) -> tuple[int, ...]:
    """Binary matrix product: row r of C is the XOR of the rows of B picked
    out by the bits of row r of A."""
    out = []
    for ra in a_rows:
        acc = 0
        k = 0
        while ra:
            if ra & 1:
                acc ^= b_rows[k]
            ra >>= 1
            k += 1
        out.append(acc)
    return tuple(out)


def _cyclic_mul_masks(
    x: Sequence[int],
    y: Sequence[int],
    sig: Sequence[Sequence[int]],
    mul: Sequence[Sequence[int]],
) -> tuple[int, ...]:
    """Oracle-local cyclic-algebra product on coefficient masks (gamma = 1);
    written independently of CyclicElement.__mul__ on purpose."""
    n = len(x)
    out = [0] * n
    for j in range(n):
        xj = x[j]
        if not xj:
            continue
        for k in range(n):
            yk = y[k]
            if yk:
                out[(j + k) % n] ^= mul[sig[k][xj]][yk]
    return tuple(out)


def _sigma_tables(ring, n: int) -> list[list[int]]:
    """sig[k][mask] = mask of sigma^k(element), sigma = squaring."""
    mul = ring._mul
    sq = [mul[m][m] for m in range(ring.size)]
    sig = [list(range(ring.size))]
    for _ in range(1, n):
        sig.append([sq[m] for m in sig[-1]])
    return sig


# ----------------------------------------------------------------------
# claims

def certify_counts() -> OracleReport:
    """Cardinalities and unit counts of the quotient alphabets."""
    started = time.perf_counter()
    failures: list[str] = []
    details: list[str] = []

    expected_sizes = {(F2, 2): 2**4, (F4, 3): 4**9, (F2, 4): 2**16}
    for (ring, n), want in expected_sizes.items():
        got = matrix_space_size(ring, n)
        if got != want:
            failures.append(f"|M{n}({ring.name})| = {got}, expected {want}")
    # enumerate the two spaces that are small enough to stream
    if sum(1 for _ in all_matrices(F2, 2)) != 16:
        failures.append("enumeration of M2(f2) missed elements")
    if count_invertible(F2, 2) != 6:
        failures.append("M2(f2) invertible count != 6")
    inv_m2f2i = count_invertible(F2I, 2)
    if inv_m2f2i != 96:
        failures.append(f"M2(f2i) invertible count = {inv_m2f2i}, expected 96")
    details.append("M2(f2i): 96 invertible of 256")

    non_units = [x for x in F4I if not x.is_unit]
    if len(non_units) != 4:
        failures.append(f"f4i has {len(non_units)} non-units, expected 4")
    one_plus_i = F4I.parse("1+i")
    if set(non_units) != {a * one_plus_i for a in F4I}:
        failures.append("f4i non-units are not exactly the multiples of (1+i)")
    details.append("f4i non-units: " + ", ".join(sorted(str(x) for x in non_units)))

    return _report(
        "counts",
        "matrix spaces up to 2^16 elements; f4i",
        failures,
        details=details,
        started=started,
    )


def certify_regular_rep() -> OracleReport:
    """rep(x*y) = rep(x)*rep(y) and injectivity, exhausted for the degree-2
    algebra over F4 (256^ pairs) and the degree-3 algebra over F8 (512^2)."""
    started = time.perf_counter()
    failures: list[str] = []

    for ring, n in ((F4, 2), (F8, 3)):
        mul = ring._mul
        sig = _sigma_tables(ring, n)
        elems = list(itertools.product(range(ring.size), repeat=n))

        def rep_masks(x: tuple[int, ...]) -> tuple[int, ...]:
            return tuple(
                sig[c][x[(r - c) % n]] for r in range(n) for c in range(n)
            )

        reps = {x: rep_masks(x) for x in elems}
        if len(set(reps.values())) != len(elems):
            failures.append(f"regular rep over {ring.name} is not injective")

        # spot-check the mask-level rep against the object-level one
        for x in elems[:: max(1, len(elems) // 16)]:
            obj = regular_representation(
                CyclicElement(ring, [ring.elements[m] for m in x])
            )
            if tuple(e.mask for e in obj.entries) != reps[x]:
                failures.append(f"mask/object rep mismatch at {x} over {ring.name}")
                break

        def matmul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
            out = []
            for r in range(n):
                for c in range(n):
                    acc = 0
                    for k in range(n):
                        acc ^= mul[a[r * n + k]][b[k * n + c]]
                    out.append(acc)
            return tuple(out)

        bad = None
        for x in elems:
            rx = reps[x]
            for y in elems:
                z = _cyclic_mul_masks(x, y, sig, mul)
                if reps[z] != matmul(rx, reps[y]):
                    bad = (x, y)
                    break
            if bad:
                break
        if bad:
            failures.append(f"rep(x*y) != rep(x)rep(y) at {bad} over {ring.name}")

    return _report(
        "regular_rep",
        "all 256^2 (n=2/f4) and 512^2 (n=3/f8) products",
        failures,
        started=started,
    )


def certify_iso_f8m3() -> OracleReport:
    """The degree-3 map into M3(F2): bijective onto its image, additive and
    multiplicative on all 512 x 512 pairs, identity preserved."""
    started = time.perf_counter()
    failures: list[str] = []
    mul = F8._mul
    sig = _sigma_tables(F8, 3)
    elems = list(itertools.product(range(8), repeat=3))
    images: dict[tuple[int, int, int], tuple[int, ...]] = {}
    for x in elems:
        obj = iso_f8_to_m3(CyclicElement(F8, [F8.elements[m] for m in x]))
        images[x] = _rows_packed(obj)

    if len(set(images.values())) != 512:
        failures.append("f8m3 images are not distinct (not injective)")
    if images[(1, 0, 0)] != (0b001, 0b010, 0b100):
        failures.append("f8m3 does not send 1 to the identity")

    # additivity: the map is linear over F2, so XOR of packed images must
    # match the image of the coefficient-wise XOR
    for x in elems:
        ix = images[x]
        for y in elems:
            s = (x[0] ^ y[0], x[1] ^ y[1], x[2] ^ y[2])
            iy = images[y]
            if images[s] != (ix[0] ^ iy[0], ix[1] ^ iy[1], ix[2] ^ iy[2]):
                failures.append(f"additivity fails at {x}, {y}")
                break
        if failures:
            break

    if not failures:
        for x in elems:
            ix = images[x]
            for y in elems:
                z = _cyclic_mul_masks(x, y, sig, mul)
                if images[z] != _bmatmul(ix, images[y]):
                    failures.append(f"multiplicativity fails at {x}, {y}")
                    break
            if failures:
                break

    return _report(
        "iso_f8m3",
        "512 images; 512x512 additivity and multiplicativity",
        failures,
        details=("generator relation e^3 = 1 and twist verified implicitly",),
        started=started,
    )


def certify_iso_f16m4() -> OracleReport:
    """Per-relation certificate for the degree-4 tables.

    Structural relations (these must hold): E^4 = identity, the twist
    W*E = E*W^2, additive bijectivity of the extended map on all 2^16
    elements.  The defining-polynomial relation W^4 + W^2 + 1 = 0 of the
    coefficient ring F16_ALT does NOT hold for the tabulated generator image
    (W satisfies x^4 + x + 1 instead); both statuses are reported."""
    started = time.perf_counter()
    failures: list[str] = []
    details: list[str] = []

    ident = RingMatrix.identity(F2, 4)
    e4 = F16_E_IMAGE**4
    if e4 == ident:
        details.append("relation e^4 = 1: pass")
    else:
        failures.append(f"E^4 = {e4}, expected identity")

    twist_l = F16_W_IMAGE * F16_E_IMAGE
    twist_r = F16_E_IMAGE * (F16_W_IMAGE**2)
    if twist_l == twist_r:
        details.append("relation w*e = e*w^2: pass")
    else:
        failures.append("twist W*E != E*W^2")

    w4 = F16_W_IMAGE**4
    poly_alt = w4 + F16_W_IMAGE**2 + ident
    details.append(
        "relation w^4 + w^2 + 1 = 0: "
        + ("pass" if poly_alt.is_zero else f"FAIL (residue {poly_alt})")
    )
    poly_true = w4 + F16_W_IMAGE + ident
    details.append(
        "observed minimal relation w^4 + w + 1 = 0: "
        + ("pass" if poly_true.is_zero else "fail")
    )

    # additive bijectivity via the 16 basis images (linearity of the map)
    basis_imgs: list[tuple[int, ...]] = []
    for j in range(4):
        for k in range(4):
            x = CyclicElement(
                F16_ALT,
                [
                    F16_ALT.elements[1 << k] if jj == j else F16_ALT.zero
                    for jj in range(4)
                ],
            )
            basis_imgs.append(_rows_packed(iso_f16_to_m4(x)))

    seen = set()
    for mask in range(1 << 16):
        rows = [0, 0, 0, 0]
        m = mask
        idx = 0
        while m:
            if m & 1:
                b = basis_imgs[idx]
                rows[0] ^= b[0]
                rows[1] ^= b[1]
                rows[2] ^= b[2]
                rows[3] ^= b[3]
            m >>= 1
            idx += 1
        seen.add(tuple(rows))
    if len(seen) != 1 << 16:
        failures.append(f"extended map hits only {len(seen)} of 65536 matrices")
    else:
        details.append("additive extension is a bijection onto M4(F2)")

    # the linear reconstruction must agree with the object-path map
    sample = [(m * 2654435761) % (1 << 16) for m in range(64)]
    for mask in sample:
        coeffs = [F16_ALT.elements[(mask >> (4 * j)) & 15] for j in range(4)]
        obj = _rows_packed(iso_f16_to_m4(CyclicElement(F16_ALT, coeffs)))
        rows = [0, 0, 0, 0]
        m = mask
        idx = 0
        while m:
            if m & 1:
                b = basis_imgs[idx]
                for r in range(4):
                    rows[r] ^= b[r]
            m >>= 1
            idx += 1
        if tuple(rows) != obj:
            failures.append(f"linearity reconstruction differs at mask {mask}")
            break

    return _report(
        "iso_f16m4",
        "4x4 generator relations; 2^16 images",
        failures,
        details=details,
        started=started,
    )


def certify_iso_m2f2_f4j() -> OracleReport:
    """The F4-pair model phi: bijection onto M2(F2), identity, additivity,
    and multiplicativity against the twisted product, all 16^2 pairs."""
    started = time.perf_counter()
    failures: list[str] = []
    pairs = [(x, y) for x in F4 for y in F4]
    images = {p: pair_to_matrix(*p) for p in pairs}

    if len(set(images.values())) != 16:
        failures.append("phi is not a bijection onto M2(f2)")
    if images[(F4.one, F4.zero)] != RingMatrix.identity(F2, 2):
        failures.append("phi(1, 0) is not the identity matrix")
    for p, m in images.items():
        if matrix_to_pair(m, F4) != p:
            failures.append(f"phi inverse fails at {p}")
            break

    for p in pairs:
        for q in pairs:
            s = (p[0] + q[0], p[1] + q[1])
            if images[s] != images[p] + images[q]:
                failures.append(f"additivity fails at {p}, {q}")
                break
            prod = twisted_pair_mul(p, q)
            if images[prod] != images[p] * images[q]:
                failures.append(f"multiplicativity fails at {p}, {q}")
                break
        if failures:
            break

    return _report(
        "iso_m2f2_f4j",
        "16 images; 256 pair products",
        failures,
        started=started,
    )


def certify_iso_m2f2i_f4ij() -> OracleReport:
    """The F4[i]-pair model psi: bijection onto M2(F2[i]), identity,
    additivity and multiplicativity on all 256^2 pairs of pairs."""
    started = time.perf_counter()
    failures: list[str] = []
    pairs = [(x, y) for x in F4I for y in F4I]
    images = {p: pair_to_matrix(*p) for p in pairs}

    if len(set(images.values())) != 256:
        failures.append("psi is not a bijection onto M2(f2i)")
    if images[(F4I.one, F4I.zero)] != RingMatrix.identity(F2I, 2):
        failures.append("psi(1, 0) is not the identity matrix")
    for p, m in images.items():
        if matrix_to_pair(m, F4I) != p:
            failures.append(f"psi inverse fails at {p}")
            break

    for p in pairs:
        ip = images[p]
        for q in pairs:
            s = (p[0] + q[0], p[1] + q[1])
            if images[s] != ip + images[q]:
                failures.append(f"additivity fails at {p}, {q}")
                break
            prod = twisted_pair_mul(p, q)
            if images[prod] != ip * images[q]:
                failures.append(f"multiplicativity fails at {p}, {q}")
                break
        if failures:
            break

    return _report(
        "iso_m2f2i_f4ij",
        "256 images; 65536 pair products",
        failures,
        started=started,
    )


def certify_f_basis() -> OracleReport:
    """The nilpotent basis f = 1 + e of the degree-4 algebra:
    (image of f)^4 = 0, the coefficient transform is an involution on all
    16^4 elements, e rewrites to (1, 1, 0, 0), and every element with
    leading f-coefficient 0 has a singular image."""
    started = time.perf_counter()
    failures: list[str] = []
    details: list[str] = []

    f_img = RingMatrix.identity(F2, 4) + F16_E_IMAGE
    if not (f_img**4).is_zero:
        failures.append("(I + E)^4 != 0")
    else:
        details.append("(I + E)^4 = 0: the f generator is nilpotent of index <= 4")

    e_elem = CyclicElement(
        F16_ALT, [F16_ALT.zero, F16_ALT.one, F16_ALT.zero, F16_ALT.zero]
    )
    if to_f_basis(e_elem) != (F16_ALT.one, F16_ALT.one, F16_ALT.zero, F16_ALT.zero):
        failures.append("e does not rewrite to 1 + f")

    for coeffs in itertools.product(F16_ALT.elements, repeat=4):
        x = CyclicElement(F16_ALT, coeffs)
        y = to_f_basis(x)
        if from_f_basis(F16_ALT, y) != x:
            failures.append(f"f-basis round trip fails at ({x})")
            break
        if to_f_basis(CyclicElement(F16_ALT, y)) != coeffs:
            failures.append(f"f-basis transform is not an involution at ({x})")
            break

    if not failures:
        singular = 0
        for tail in itertools.product(F16_ALT.elements, repeat=3):
            y = (F16_ALT.zero,) + tail
            img = iso_f16_to_m4(from_f_basis(F16_ALT, y))
            if img.det().is_zero:
                singular += 1
            else:
                failures.append(
                    f"element with zero leading f-coefficient has invertible image: {tail}"
                )
                break
        if not failures:
            details.append(f"all {singular} elements with y0 = 0 map to singular matrices")

    return _report(
        "f_basis",
        "65536 round trips; 4096 singular checks",
        failures,
        details=details,
        started=started,
    )


def certify_norm_f4i() -> OracleReport:
    """The relative norm on F4[i]: multiplicative on all 256 pairs, zero
    exactly on the four non-units, and its range is {0, 1, i} — the
    non-unit 1+i is never a norm."""
    started = time.perf_counter()
    failures: list[str] = []
    norms = {x: quadratic_norm(x) for x in F4I}

    values = set(n.mask for n in norms.values())
    if values != {0, 1, 2}:  # masks of 0, 1, i in F2I
        failures.append(
            "norm range is {%s}" % ", ".join(sorted(str(F2I.elements[v]) for v in values))
        )
    for x, n in norms.items():
        if n.is_zero != (not x.is_unit):
            failures.append(f"norm-zero locus mismatch at {x}")
            break
        # dual route: the norm is x times its conjugate, inside F4[i]
        if x * quadratic_conj(x) != F4I.from_w_components(n, F2I.zero):
            failures.append(f"norm differs from x*conj(x) at {x}")
            break
    for x in F4I:
        for y in F4I:
            if norms[x * y] != norms[x] * norms[y]:
                failures.append(f"norm not multiplicative at {x}, {y}")
                break
        if failures:
            break

    return _report(
        "norm_f4i",
        "256 norms; 65536 products",
        failures,
        details=("range is {0, 1, i}; 1+i is not a norm",),
        started=started,
    )


def certify_isometry_weights() -> OracleReport:
    """Weight bridges: the 2x2 matrix weight of phi equals the F4 Hamming
    weight on all 16 pairs; psi sends exactly the one-unit pairs to
    invertible matrices (96 of 256); the Lee table on norm pairs."""
    started = time.perf_counter()
    failures: list[str] = []
    details: list[str] = []

    for x in F4:
        for y in F4:
            wb = outer_codes.bachoc_weight(pair_to_matrix(x, y))
            wh = (0 if x.is_zero else 1) + (0 if y.is_zero else 1)
            if wb != wh:
                failures.append(f"isometry fails at ({x}, {y}): {wb} != {wh}")

    invertible_pairs = 0
    for x in F4I:
        for y in F4I:
            m = pair_to_matrix(x, y)
            one_unit = x.is_unit != y.is_unit
            if m.is_invertible != one_unit:
                failures.append(
                    f"psi invertibility mismatch at ({x}, {y}): "
                    f"matrix {'unit' if m.is_invertible else 'non-unit'}"
                )
            if m.is_invertible:
                invertible_pairs += 1
            # determinant identity det(psi) = N(x) + N(y)
            if m.det() != quadratic_norm(x) + quadratic_norm(y):
                failures.append(f"det(psi) != N+N at ({x}, {y})")
    if invertible_pairs != 96:
        failures.append(f"{invertible_pairs} invertible psi images, expected 96")
    else:
        details.append("96 of 256 psi images invertible (one-unit pairs)")

    lee_table = {
        ("1", "1"): 4,
        ("1", "i"): 2,
        ("0", "1"): 1,
        ("0", "i"): 1,
        ("0", "0"): 0,
    }
    for (nx, ny), want in lee_table.items():
        # realize the norm pair with concrete elements: norm(1)=1,
        # norm(1+iw)=i, norm(0)=0
        realize = {"0": F4I.zero, "1": F4I.one, "i": F4I.parse("1+iw")}
        got = lee_weight(realize[nx], realize[ny])
        if got != want:
            failures.append(f"lee weight on norm pair ({nx},{ny}) = {got}, want {want}")

    return _report(
        "isometry_weights",
        "16 phi pairs; 256 psi pairs; lee table",
        failures,
        details=details,
        started=started,
    )


def certify_inner_pair_lee() -> OracleReport:
    """Lee-weight spectrum of the 64-member inner parity pair-code.

    Certified facts: no member has weight 1 (the code removes exactly the
    one-unit pairs, which is its design goal); every member with invertible
    components has weight 2 or 4; the remaining members — both components
    multiples of (1+i) — have weight 0 and are exactly the 16 such pairs.
    The historical floor "every nonzero member has weight >= 2" is false and
    its counterexample is reported here, not suppressed."""
    started = time.perf_counter()
    failures: list[str] = []
    details: list[str] = []
    code = inner_parity_pair_code()

    members = set(code.codewords())
    if len(members) != 64:
        failures.append(f"{len(members)} distinct members, expected 64")

    weight_count: dict[int, int] = {}
    zero_weight_nonzero: list[str] = []
    for x, y in sorted(members, key=lambda p: (p[0].mask, p[1].mask)):
        if not code.check_parity((x, y)):
            failures.append(f"member ({x}, {y}) fails the (1+i) parity")
        w = lee_weight(x, y)
        weight_count[w] = weight_count.get(w, 0) + 1
        nonzero = not (x.is_zero and y.is_zero)
        if w == 1:
            failures.append(f"member ({x}, {y}) has lee weight 1")
        if nonzero and w == 0:
            zero_weight_nonzero.append(f"({x}, {y})")
        if x.is_unit and y.is_unit and w < 2:
            failures.append(f"unit-component member ({x}, {y}) has weight {w} < 2")
        if x.is_unit != y.is_unit:
            failures.append(f"member ({x}, {y}) mixes a unit with a non-unit")

    spectrum = ", ".join(f"{w}:{c}" for w, c in sorted(weight_count.items()))
    details.append(f"weight spectrum (weight:count) = {spectrum}")
    if zero_weight_nonzero:
        details.append(
            f"a uniform floor of 2 fails for {len(zero_weight_nonzero)} "
            f"non-unit members, first {zero_weight_nonzero[0]}; these project "
            "to the 4*delta determinant class, so the two-level bound stands"
        )

    return _report(
        "inner_pair_lee",
        "64 members of the inner parity pair-code",
        failures,
        details=details,
        started=started,
    )


def certify_code_distances() -> OracleReport:
    """Distances of the named codes and their matrix-alphabet images, all by
    exhaustive search except Reed-Solomon (certified by minors)."""
    started = time.perf_counter()
    failures: list[str] = []
    details: list[str] = []

    def expect(label: str, got: int, want: int) -> None:
        if got != want:
            failures.append(f"{label} = {got}, expected {want}")

    dual = dual_repetition_code()
    hexa = hexacode()
    expect("d_H(dualrep)", min_distance(dual), 2)
    expect("d_H(hexacode)", min_distance(hexa), 4)
    expect("d_H(lift dualrep)", min_distance(lift_code(dual)), 2)
    expect("d_H(lift hexacode)", min_distance(lift_code(hexa)), 4)
    pf_dual = pushforward_pairs(dual)
    pf_hexa = pushforward_pairs(hexa)
    expect("d_B(pairs dualrep)", min_distance(pf_dual, WeightKind.BACHOC), 2)
    expect("d_H(pairs dualrep)", min_distance(pf_dual), 1)
    expect("d_B(pairs hexacode)", min_distance(pf_hexa, WeightKind.BACHOC), 4)
    expect("d_H(pairs hexacode)", min_distance(pf_hexa), 2)

    # image of the weight-2 dual-repetition codeword (0,0,1,1): (zero, all-ones)
    zero2 = RingMatrix.zeros(F2, 2)
    ones2 = RingMatrix.from_masks(F2, [[1, 1], [1, 1]])
    word = (F4.zero, F4.zero, F4.one, F4.one)
    if not dual.contains(word):
        failures.append("(0,0,1,1) is not a dual-repetition codeword")
    img = (pair_to_matrix(word[0], word[1]), pair_to_matrix(word[2], word[3]))
    if img[0] != zero2 or img[1] != ones2:
        failures.append("image of (0,0,1,1) is not (zero, all-ones)")
    else:
        details.append("(0,0,1,1) -> (zero matrix, all-ones): hamming 1, matrix weight 2")

    # hexacode words with y1 = y2 = 0: (0,0,y,wy,wy,y) and its matrix triple
    for y_mask in (1, 2, 3):
        y = F4.elements[y_mask]
        cw = hexa.encode((F4.zero, F4.zero, y))
        w = F4.gen_w
        if cw != (F4.zero, F4.zero, y, w * y, w * y, y):
            failures.append(f"hexacode single-message word has unexpected form at y={y}")
            continue
        y1, y2 = F4.w_components(y)
        m2 = pair_to_matrix(cw[2], cw[3])
        m3 = pair_to_matrix(cw[4], cw[5])
        want2 = RingMatrix(F2, [[y2, F2.zero], [y1 + y2, F2.zero]])
        want3 = RingMatrix(F2, [[F2.zero, y2], [F2.zero, y1 + y2]])
        if m2 != want2 or m3 != want3:
            failures.append(f"matrix triple mismatch for y={y}")
        elif outer_codes.bachoc_word_weight(
            (pair_to_matrix(cw[0], cw[1]), m2, m3)
        ) != 4:
            failures.append(f"matrix triple weight != 4 for y={y}")

    # the six one-sided unit pairs cover GL2(F2) exactly
    gl2 = {m for m in all_matrices(F2, 2) if m.is_invertible}
    sided = {pair_to_matrix(a, F4.zero) for a in F4 if not a.is_zero}
    sided |= {pair_to_matrix(F4.zero, b) for b in F4 if not b.is_zero}
    if sided != gl2:
        failures.append("one-sided unit pairs do not cover GL2(F2)")
    else:
        details.append("six one-sided unit pairs = GL2(F2)")

    for k, want_d in ((13, 4), (14, 3)):
        rs = reed_solomon_code(k)
        try:
            got = rs_distance_certificate(rs)
        except ArithmeticError as exc:
            failures.append(str(exc))
        else:
            expect(f"certified d(rs[16,{k}])", got, want_d)
    details.append("rs distances certified via Vandermonde minors (560 + 120)")

    # matrix parity at L=2 is the repetition code over M2(F2)
    mp = matrix_parity_code(2)
    words = set(mp.codewords())
    if words != {(m, m) for m in all_matrices(F2, 2)}:
        failures.append("matrix parity at L=2 is not the repetition code")

    return _report(
        "code_distances",
        "exhaustive distances; RS minors",
        failures,
        details=details,
        started=started,
    )


def certify_projection_compat() -> OracleReport:
    """Compatibility of the coordinate projections with the ring structure.

    Additivity and ideal-membership hold for both ideals.  The algebra
    writes x = x0 + e*x1 (e left), the pair model keeps j right, so the
    plain coordinate pair is NOT multiplicative even mod (1+i) — reported
    with a witness, never silently patched.  Conjugating the second slot
    (x0 + e*x1 = x0 + conj(x1)*e) repairs it exactly mod (1+i); mod 2 even
    the conjugated labeling fails, precisely when both second slots are
    units (e^2 = i in the algebra, j^2 = 1 in the model, i != 1 mod 2).
    The claim asserts exactly this three-way split."""
    started = time.perf_counter()
    failures: list[str] = []
    details: list[str] = []

    # single-coordinate additivity + membership over a +/-2 window
    window = [GaussianInt(r, i) for r in range(-2, 3) for i in range(-2, 3)]
    for g in window:
        # g divisible by (1+i) iff g*(1-i)/2 is integral; by 2 iff both parts even
        div_1pi = (g.re + g.im) % 2 == 0
        if golden.reduce_mod_1pi(g).is_zero != div_1pi:
            failures.append(f"mod-(1+i) membership mismatch at {g}")
        div_2 = g.re % 2 == 0 and g.im % 2 == 0
        if golden.reduce_mod_2(g).is_zero != div_2:
            failures.append(f"mod-2 membership mismatch at {g}")
        for h in window:
            s = g + h
            if golden.reduce_mod_1pi(s) != golden.reduce_mod_1pi(g) + golden.reduce_mod_1pi(h):
                failures.append(f"mod-(1+i) additivity fails at {g}, {h}")
                break
            if golden.reduce_mod_2(s) != golden.reduce_mod_2(g) + golden.reduce_mod_2(h):
                failures.append(f"mod-2 additivity fails at {g}, {h}")
                break
        if failures:
            break

    # pair-level multiplicativity: project(x *_golden y) vs twisted product
    def pairs_from_bits(bits: tuple[int, ...]) -> tuple[GoldenInt, GoldenInt]:
        vals = [GaussianInt(bits[2 * k], bits[2 * k + 1]) for k in range(4)]
        return (GoldenInt(vals[0], vals[1]), GoldenInt(vals[2], vals[3]))

    def project_1pi(p: tuple[GoldenInt, GoldenInt]):
        cw = GoldenCodeword(p[0].u, p[0].v, p[1].u, p[1].v)
        return golden.project_pair_mod_1pi(cw)

    def project_2(p: tuple[GoldenInt, GoldenInt]):
        cw = GoldenCodeword(p[0].u, p[0].v, p[1].u, p[1].v)
        return golden.project_pair_mod_2(cw)

    conj4 = {e: quadratic_conj(e) for e in F4}
    conj4i = {e: quadratic_conj(e) for e in F4I}

    elements = [pairs_from_bits(b) for b in itertools.product(range(2), repeat=8)]
    raw1 = [project_1pi(p) for p in elements]
    hom1 = [(p0, conj4[p1]) for p0, p1 in raw1]
    hom2 = [(p0, conj4i[p1]) for p0, p1 in (project_2(p) for p in elements)]
    raw_mismatch: str | None = None
    raw_mismatches = 0
    mod2_mismatch: str | None = None
    mod2_mismatches = 0
    for ix, x in enumerate(elements):
        x1_unit = hom2[ix][1].is_unit
        for iy, y in enumerate(elements):
            z = golden_pair_mul(x, y)
            rz1 = project_1pi(z)
            if (rz1[0], conj4[rz1[1]]) != twisted_pair_mul(hom1[ix], hom1[iy]):
                failures.append(
                    f"conjugated mod-(1+i) multiplicativity fails at "
                    f"x=({x[0]},{x[1]}), y=({y[0]},{y[1]})"
                )
                break
            if rz1 != twisted_pair_mul(raw1[ix], raw1[iy]):
                raw_mismatches += 1
                if raw_mismatch is None:
                    raw_mismatch = f"x=({x[0]}, {x[1]}), y=({y[0]}, {y[1]})"
            rz2 = project_2(z)
            differs = (rz2[0], conj4i[rz2[1]]) != twisted_pair_mul(hom2[ix], hom2[iy])
            if differs != (x1_unit and hom2[iy][1].is_unit):
                failures.append(
                    f"mod-2 failure locus breaks the both-units rule at "
                    f"x=({x[0]},{x[1]}), y=({y[0]},{y[1]})"
                )
                break
            if differs:
                mod2_mismatches += 1
                if mod2_mismatch is None:
                    mod2_mismatch = f"x=({x[0]}, {x[1]}), y=({y[0]}, {y[1]})"
        if failures:
            break

    if raw_mismatch is None:
        failures.append(
            "plain-pair labeling unexpectedly multiplicative mod (1+i) — "
            "the left/right twist should break it"
        )
    else:
        details.append(
            f"plain pair (x0bar, x1bar) is not multiplicative mod (1+i) "
            f"(expected, e sits left of x1): {raw_mismatches} of 65536 "
            f"products differ, first at {raw_mismatch}; conjugating the "
            f"second slot repairs all 65536"
        )
    if mod2_mismatch is None:
        failures.append(
            "mod-2 multiplicativity unexpectedly holds — the e^2 = i twist "
            "should break it"
        )
    else:
        details.append(
            f"mod-2 multiplicativity fails exactly when both second slots "
            f"are units (expected, e^2 = i vs j^2 = 1): {mod2_mismatches} "
            f"of 65536 products differ, first at {mod2_mismatch}"
        )

    return _report(
        "projection_compat",
        "625 coordinate pairs; 65536 golden-pair products",
        failures,
        details=details,
        started=started,
    )


def certify_golden_mindet(jobs: int = 1) -> OracleReport:
    """Minimum |det|^2 over the +/-2 coordinate box is exactly 1/5, and the
    reported witness really attains it (integer route vs symbolic route)."""
    started = time.perf_counter()
    failures: list[str] = []
    value, witness = min_abs_det_sq(2, jobs=jobs)
    if value != Fraction(1, 5):
        failures.append(f"min |det|^2 over box 2 is {value}, expected 1/5")
    if abs_det_sq(witness) != value:
        failures.append(f"witness {witness} does not attain the minimum")
    return _report(
        "golden_mindet",
        "5^8 - 1 nonzero codewords",
        failures,
        witness_ok=str(witness),
        started=started,
    )


def certify_det_floors_1pi(jobs: int = 1) -> OracleReport:
    """Determinant floors for the ideal (1+i) over the +/-2 box: projection
    zero -> 4/5, nonzero non-unit -> 2/5, unit -> 1/5."""
    started = time.perf_counter()
    checked, violations, counts = scan_det_floors("1pi", 2, jobs=jobs)
    failures = [f"floor violated at {v}" for v in violations]
    details = (
        f"checked {checked} codewords; class sizes (floor 4/2/1) = "
        f"{counts[0]}/{counts[1]}/{counts[2]}",
    )
    return _report(
        "det_floors_1pi",
        f"{checked} nonzero codewords in the +/-2 box",
        failures,
        details=details,
        started=started,
    )


def certify_det_floors_2(jobs: int = 1) -> OracleReport:
    """Determinant floors for the ideal (2) over the +/-2 box, classified by
    the unit class of u = N(x0) + i*N(x1); also reports the counterexample
    that rules out the naive equal-norms grouping."""
    started = time.perf_counter()
    checked, violations, counts = scan_det_floors("2", 2, jobs=jobs)
    failures = [f"floor violated at {v}" for v in violations]
    details = [
        f"checked {checked} codewords; class sizes (floor 4/2/1) = "
        f"{counts[0]}/{counts[1]}/{counts[2]}",
    ]

    # defect of the naive grouping, exhibited on a tiny codeword
    naive = golden.equal_norms_floor_table_mod_2()
    cw = (1, 0, 0, 0, 1, 0, 0, 0)  # (a,b,c,d) = (1,0,1,0); norm pair (1,1)
    m = det_sq_times5(cw)
    floor = naive[golden._key_mod_2(cw)]
    if m < floor:
        details.append(
            f"equal-norms grouping fails: codeword (1, 0, 1, 0) has "
            f"|det|^2 = {Fraction(m, 5)} < {Fraction(floor, 5)}"
        )
    else:
        failures.append("expected counterexample to the equal-norms grouping vanished")

    return _report(
        "det_floors_2",
        f"{checked} nonzero codewords in the +/-2 box",
        failures,
        details=details,
        started=started,
    )


# ----------------------------------------------------------------------
# tuple-level brute force for coset codes

def _hermitian_sum_det(words: Sequence[GoldenCodeword]) -> SqrtVal:
    """det(sum X_i X_i^dagger) exactly, as p + q*sqrt5 (the 1/sqrt5 scale of
    each factor contributes 1/25 overall)."""
    zero = GoldenInt(GaussianInt(0, 0), GaussianInt(0, 0))
    s = [[zero, zero], [zero, zero]]
    for cw in words:
        m = cw.matrix_times_sqrt5()
        adj = [
            [m[0][0].complex_conj(), m[1][0].complex_conj()],
            [m[0][1].complex_conj(), m[1][1].complex_conj()],
        ]
        for r in range(2):
            for c in range(2):
                acc = s[r][c]
                for k in range(2):
                    acc = acc + m[r][k] * adj[k][c]
                s[r][c] = acc
    det = s[0][0] * s[1][1] - s[0][1] * s[1][0]
    if det.u.im != 0 or det.v.im != 0:
        raise ArithmeticError("hermitian determinant came out non-real")
    # det = u + v*theta with theta = (1+sqrt5)/2
    p = Fraction(det.u.re, 25) + Fraction(det.v.re, 50)
    q = Fraction(det.v.re, 50)
    return SqrtVal(p, q, 5)


def _eq2_holds(delta: SqrtVal, ms: Sequence[int]) -> bool:
    """delta >= (sum_i |det X_i|)^2 with |det X_i|^2 = m_i / 5, exactly.

    Implemented for L <= 2 via the squaring trick on nonnegative reals."""
    if len(ms) == 1:
        return delta == SqrtVal(Fraction(ms[0], 5), 0, 5)
    if len(ms) == 2:
        m1, m2 = ms
        t = delta - Fraction(m1 + m2, 5)
        if t.sign() < 0:
            return False
        return t * t >= Fraction(4 * m1 * m2, 25)
    raise ValueError("the exact cross-check is implemented for L <= 2")


DEFAULT_REPRESENTATIVES = (
    GaussianInt(0, 0),
    GaussianInt(1, 0),
    GaussianInt(0, 1),
    GaussianInt(1, 1),
)


def brute_delta_min(
    code: LinearCode | MappedCode,
    ideal: str,
    coord_set: Sequence[GaussianInt] = DEFAULT_REPRESENTATIVES,
    limit: int = 2_000_000,
) -> tuple[SqrtVal, tuple[GoldenCodeword, ...], bool]:
    """Exact minimum of det(sum X_i X_i^dagger) over nonzero tuples whose
    blockwise projections form a codeword of ``code``.

    ``code`` lives over 2x2 matrices (M2(F2) for ideal "1pi", M2(F2[i]) for
    ideal "2"); inner coordinates range over ``coord_set`` per Gaussian
    coordinate.  Returns (minimum, first witness tuple in enumeration order,
    and whether the per-tuple superadditivity cross-check held everywhere).
    """
    if ideal == "1pi":
        keyfn = golden._key_mod_1pi
        pair_ring = F4
    elif ideal == "2":
        keyfn = golden._key_mod_2
        pair_ring = F4I
    else:
        raise ValueError("ideal must be '1pi' or '2'")

    by_key: dict[int, list[GoldenCodeword]] = {}
    coords = list(coord_set)
    for tup in itertools.product(coords, repeat=4):
        cw = GoldenCodeword(*tup)
        ints = []
        for g in tup:
            ints.extend((g.re, g.im))
        by_key.setdefault(keyfn(ints), []).append(cw)

    def matrix_key(m: RingMatrix) -> int:
        x0, x1 = matrix_to_pair(m, pair_ring)
        parts = []
        for elem in (x0, x1):
            a, b = pair_ring.w_components(elem)
            parts.extend((a, b))
        if ideal == "1pi":
            key = 0
            for pos, p in enumerate(parts):
                key |= p.mask << pos
            return key
        key = 0
        for pos, p in enumerate(parts):
            key |= (p.mask & 1) << (2 * pos)
            key |= ((p.mask >> 1) & 1) << (2 * pos + 1)
        return key

    best: SqrtVal | None = None
    best_witness: tuple[GoldenCodeword, ...] | None = None
    eq2_all = True
    examined = 0
    for outer in code.codewords():
        candidate_lists = []
        for m in outer:
            lst = by_key.get(matrix_key(m))
            if not lst:
                candidate_lists = []
                break
            candidate_lists.append(lst)
        if not candidate_lists:
            continue
        for tup in itertools.product(*candidate_lists):
            if all(cw.is_zero for cw in tup):
                continue
            examined += 1
            if examined > limit:
                raise ValueError(f"brute force exceeded {limit} tuples")
            delta = _hermitian_sum_det(tup)
            if len(tup) <= 2:
                ms = [det_sq_times5([g for c in cw.coords() for g in (c.re, c.im)]) for cw in tup]
                if not _eq2_holds(delta, ms):
                    eq2_all = False
            if best is None or delta < best:
                best = delta
                best_witness = tup
    if best is None or best_witness is None:
        raise ValueError("no nonzero tuple projects into the code")
    return best, best_witness, eq2_all


def certify_delta_min_rep2() -> OracleReport:
    """The L = 2 repetition coset code mod (1+i) over the small representative
    box {0, 1, i, 1+i}: brute-force minimum of det(X1 X1* + X2 X2*) is exactly
    4/5 = min(|1+i|^4, d^2) * delta at d = 2, delta = 1/5, and every tuple
    satisfies the sum-of-|det| superadditivity check.  The mod-(2) analogue
    over the same box (where it holds one representative per residue) gives
    the same minimum against min(16, d^2) * delta."""
    started = time.perf_counter()
    failures: list[str] = []
    details: list[str] = []
    target = SqrtVal(Fraction(4, 5), 0, 5)

    code_1pi = outer_codes.repetition_code(2, outer_codes.MatrixSpace(F2, 2))
    value, witness, eq2_ok = brute_delta_min(code_1pi, "1pi")
    if value != target:
        failures.append(f"mod-(1+i) delta_min = {value}, expected 4/5")
    if not eq2_ok:
        failures.append("superadditivity cross-check failed on some mod-(1+i) tuple")
    bound = bounds.hamming_bound(2, 2, Fraction(1, 5), 2)
    if value < SqrtVal(bound, 0, 5):
        failures.append(f"mod-(1+i) delta_min {value} below the bound {bound}")
    elif value == SqrtVal(bound, 0, 5):
        details.append(f"mod-(1+i): meets the determinant bound {bound} with equality")

    code_2 = outer_codes.repetition_code(2, outer_codes.MatrixSpace(F2I, 2))
    value2, _, eq2_ok2 = brute_delta_min(code_2, "2")
    bound2 = bounds.hamming_bound_m2f2i(Fraction(1, 5), 2)
    if value2 != SqrtVal(bound2, 0, 5):
        failures.append(f"mod-(2) delta_min = {value2}, expected {bound2}")
    if not eq2_ok2:
        failures.append("superadditivity cross-check failed on some mod-(2) tuple")
    details.append(f"mod-(2) analogue: delta_min = {value2} = min(16, 4) * 1/5")

    witness_str = "(" + "; ".join(str(cw) for cw in witness) + ")"
    return _report(
        "delta_min_rep2",
        "4096 mod-(1+i) tuples and 256 mod-(2) tuples over the box",
        failures,
        witness_ok=witness_str,
        details=details,
        started=started,
    )


# ----------------------------------------------------------------------
# registry

CLAIMS: dict[str, Callable[..., OracleReport]] = {
    "counts": certify_counts,
    "regular_rep": certify_regular_rep,
    "iso_f8m3": certify_iso_f8m3,
    "iso_f16m4": certify_iso_f16m4,
    "iso_m2f2_f4j": certify_iso_m2f2_f4j,
    "iso_m2f2i_f4ij": certify_iso_m2f2i_f4ij,
    "f_basis": certify_f_basis,
    "norm_f4i": certify_norm_f4i,
    "isometry_weights": certify_isometry_weights,
    "inner_pair_lee": certify_inner_pair_lee,
    "code_distances": certify_code_distances,
    "projection_compat": certify_projection_compat,
    "golden_mindet": certify_golden_mindet,
    "det_floors_1pi": certify_det_floors_1pi,
    "det_floors_2": certify_det_floors_2,
    "delta_min_rep2": certify_delta_min_rep2,
}

_JOB_AWARE = {"golden_mindet", "det_floors_1pi", "det_floors_2"}


def run_claim(name: str, jobs: int = 1) -> OracleReport:
    try:
        fn = CLAIMS[name]
    except KeyError:
        raise ValueError(
            f"unknown claim {name!r}; known: {', '.join(sorted(CLAIMS))}"
        ) from None
    if name in _JOB_AWARE:
        return fn(jobs=jobs)
    return fn()


def run_all(jobs: int = 1) -> list[OracleReport]:
    return [run_claim(name, jobs=jobs) for name in CLAIMS]
