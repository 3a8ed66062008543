"""The golden space-time code over Z[i, theta], with exact determinants.

A codeword is parameterized by four Gaussian integers (a, b, c, d) and is the
2x2 complex matrix

    X = (1/sqrt5) * [[ alpha*(a + b*theta),       alpha*(c + d*theta)      ],
                     [ i*alphabar*(c + d*thetabar), alphabar*(a + b*thetabar)]]

with theta = (1+sqrt5)/2, thetabar = 1 - theta, alpha = 1 + i - i*theta and
alphabar = 1 + i*theta.  Writing N(u + v*theta) = u^2 + uv - v^2 (a Gaussian
integer), the determinant collapses to

    5 * det(X) = (2+i) * (N(a + b*theta) - i * N(c + d*theta)),

because alpha*alphabar = 2 + i.  Everything here manipulates that identity
with exact integer arithmetic; |det(X)|^2 is always |z|^2 / 5 for the
Gaussian integer z = N_ab - i*N_cd, so minimum-determinant searches reduce to
integer scans.

Cosets come from reducing the coordinates modulo the ideals (1+i) and (2) of
Z[i].  The reductions land in F4-pairs and F4[i]-pairs respectively, and the
2x2 model of :func:`cosetcodes.cyclic.pair_to_matrix` turns them into
matrices whose invertibility class dictates an exact floor on |det|^2:

    ideal (1+i):  zero matrix -> 4/5,  nonzero non-unit -> 2/5,  unit -> 1/5
    ideal (2):    classify u = N(x0bar) + i*N(x1bar) in F2[i];
                  u = 0 -> 4/5,  u nonzero non-unit -> 2/5,  u unit -> 1/5

The i-twist in u is forced by the algebra: the codeword algebra has e^2 = i
while the 2x2 pair model uses j^2 = 1, and reducing the determinant identity
mod 2 gives det(X) = i*N(x0bar) + N(x1bar) up to units — NOT the pair-model
determinant N(x0bar) + N(x1bar).  Grouping the norm pairs by u is exactly
what makes the floors true; grouping by bare norm equality does not (the
codeword (1,0,1,0) has norm pair (1,1) and |det|^2 = 2/5).  The verify
module checks both groupings exhaustively and reports the difference.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence

from .cyclic import pair_to_matrix
from .matrices import RingMatrix
from .rings import F2, F2I, F4, F4I, RingElement, quadratic_norm


# ----------------------------------------------------------------------
# Gaussian integers and golden integers

class GaussianInt:
    """Exact element of Z[i]."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        self.re = re
        self.im = im

    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def abs_sq(self) -> int:
        return self.re * self.re + self.im * self.im

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GaussianInt)
            and other.re == self.re
            and other.im == self.im
        )

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.im > 0:
            imag = "i" if self.im == 1 else f"{self.im}i"
            return f"{self.re}+{imag}" if self.re else imag
        imag = "-i" if self.im == -1 else f"{self.im}i"
        return f"{self.re}{imag}" if self.re else imag

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"

    _RE = re.compile(r"^([+-]?\d+)?(?:([+-]?\d*)i)?$")

    @classmethod
    def parse(cls, text: str) -> "GaussianInt":
        s = text.replace(" ", "")
        m = cls._RE.match(s)
        if not m or not s:
            raise ValueError(f"cannot parse Gaussian integer {text!r}")
        re_part, im_part = m.groups()
        re_val = int(re_part) if re_part else 0
        if im_part is None:
            im_val = 0
        elif im_part in ("", "+"):
            im_val = 1
        elif im_part == "-":
            im_val = -1
        else:
            im_val = int(im_part)
        return cls(re_val, im_val)


GI_ZERO = GaussianInt(0, 0)
GI_ONE = GaussianInt(1, 0)
GI_I = GaussianInt(0, 1)


class GoldenInt:
    """Exact element u + v*theta of Z[i, theta], theta^2 = theta + 1."""

    __slots__ = ("u", "v")

    def __init__(self, u: GaussianInt, v: GaussianInt):
        self.u = u
        self.v = v

    def __add__(self, other: "GoldenInt") -> "GoldenInt":
        return GoldenInt(self.u + other.u, self.v + other.v)

    def __sub__(self, other: "GoldenInt") -> "GoldenInt":
        return GoldenInt(self.u - other.u, self.v - other.v)

    def __mul__(self, other: "GoldenInt") -> "GoldenInt":
        # (u1 + v1 t)(u2 + v2 t) = u1u2 + v1v2 + (u1v2 + v1u2 + v1v2) t
        vv = self.v * other.v
        return GoldenInt(
            self.u * other.u + vv,
            self.u * other.v + self.v * other.u + vv,
        )

    def galois_conj(self) -> "GoldenInt":
        """theta -> 1 - theta."""
        return GoldenInt(self.u + self.v, -self.v)

    def complex_conj(self) -> "GoldenInt":
        """i -> -i on both coefficients (theta is real)."""
        return GoldenInt(self.u.conj(), self.v.conj())

    @property
    def is_zero(self) -> bool:
        return self.u.is_zero and self.v.is_zero

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GoldenInt) and other.u == self.u and other.v == self.v
        )

    def __hash__(self) -> int:
        return hash((self.u, self.v))

    def __str__(self) -> str:
        return f"({self.u})+({self.v})t"

    def __repr__(self) -> str:
        return f"GoldenInt({self.u!r}, {self.v!r})"


def golden_norm(x: GoldenInt) -> GaussianInt:
    """N(u + v*theta) = x * galois_conj(x) = u^2 + uv - v^2, in Z[i]."""
    return x.u * x.u + x.u * x.v - x.v * x.v


ALPHA = GoldenInt(GaussianInt(1, 1), GaussianInt(0, -1))     # 1 + i - i*theta
ALPHA_BAR = GoldenInt(GaussianInt(1, 0), GaussianInt(0, 1))  # 1 + i*theta


def _gi_times_golden(s: GaussianInt, x: GoldenInt) -> GoldenInt:
    return GoldenInt(s * x.u, s * x.v)


# ----------------------------------------------------------------------
# codewords

@dataclass(frozen=True)
class GoldenCodeword:
    """The coordinate tuple (a, b, c, d) of one codeword."""

    a: GaussianInt
    b: GaussianInt
    c: GaussianInt
    d: GaussianInt

    @classmethod
    def from_ints(cls, coords: Sequence[int]) -> "GoldenCodeword":
        ar, ai, br, bi, cr, ci, dr, di = coords
        return cls(
            GaussianInt(ar, ai),
            GaussianInt(br, bi),
            GaussianInt(cr, ci),
            GaussianInt(dr, di),
        )

    def coords(self) -> tuple[GaussianInt, GaussianInt, GaussianInt, GaussianInt]:
        return (self.a, self.b, self.c, self.d)

    @property
    def is_zero(self) -> bool:
        return all(g.is_zero for g in self.coords())

    def x0(self) -> GoldenInt:
        return GoldenInt(self.a, self.b)

    def x1(self) -> GoldenInt:
        return GoldenInt(self.c, self.d)

    def matrix_times_sqrt5(self) -> tuple[tuple[GoldenInt, GoldenInt], tuple[GoldenInt, GoldenInt]]:
        """The 2x2 codeword matrix without the 1/sqrt5 normalization."""
        x0, x1 = self.x0(), self.x1()
        top = (ALPHA * x0, ALPHA * x1)
        bottom = (
            _gi_times_golden(GI_I, ALPHA_BAR * x1.galois_conj()),
            ALPHA_BAR * x0.galois_conj(),
        )
        return (top, bottom)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.coords()) + ")"


def det_numerator(cw: GoldenCodeword) -> GaussianInt:
    """5 * det(X) as a Gaussian integer, from the full symbolic 2x2 expansion.

    The theta-component of the expansion must vanish identically; if it ever
    does not, the codeword parameterization is broken and we raise rather
    than return a truncated value.
    """
    (m00, m01), (m10, m11) = cw.matrix_times_sqrt5()
    det = m00 * m11 - m01 * m10
    if not det.v.is_zero:
        raise ArithmeticError(
            f"determinant of {cw} has a nonvanishing theta-component {det.v}"
        )
    return det.u


def abs_det_sq(cw: GoldenCodeword) -> Fraction:
    """|det(X)|^2 as an exact rational (the 1/sqrt5 scaling included)."""
    z = det_numerator(cw)
    return Fraction(z.abs_sq(), 25)


def det_complex(cw: GoldenCodeword) -> complex:
    """Floating-point determinant of the normalized codeword matrix.

    Independent numeric route used by tests to cross-check the symbolic
    identity to ~1e-12; never used for decisions.
    """
    sqrt5 = 5.0 ** 0.5
    theta = (1.0 + sqrt5) / 2.0
    theta_bar = 1.0 - theta

    def ev(x: GoldenInt, t: float) -> complex:
        return complex(x.u.re, x.u.im) + complex(x.v.re, x.v.im) * t

    a0 = ev(GoldenInt(cw.a, cw.b), theta)
    a0c = ev(GoldenInt(cw.a, cw.b), theta_bar)
    a1 = ev(GoldenInt(cw.c, cw.d), theta)
    a1c = ev(GoldenInt(cw.c, cw.d), theta_bar)
    alpha = 1 + 1j - 1j * theta
    alpha_bar = 1 + 1j * theta
    m00 = alpha * a0 / sqrt5
    m01 = alpha * a1 / sqrt5
    m10 = 1j * alpha_bar * a1c / sqrt5
    m11 = alpha_bar * a0c / sqrt5
    return m00 * m11 - m01 * m10


# ----------------------------------------------------------------------
# fast integer path (shared by the scans)

def norm_ints(ar: int, ai: int, br: int, bi: int) -> tuple[int, int]:
    """Real/imaginary parts of N((ar+ai*i) + (br+bi*i)*theta)."""
    nr = ar * ar - ai * ai + ar * br - ai * bi - (br * br - bi * bi)
    ni = 2 * ar * ai + ar * bi + ai * br - 2 * br * bi
    return nr, ni


def det_sq_times5(coords: Sequence[int]) -> int:
    """m such that |det(X)|^2 = m / 5, straight from the 8 integer coords."""
    ar, ai, br, bi, cr, ci, dr, di = coords
    nar, nai = norm_ints(ar, ai, br, bi)
    ncr, nci = norm_ints(cr, ci, dr, di)
    zr = nar + nci  # z = N_ab - i*N_cd
    zi = nai - ncr
    return zr * zr + zi * zi


# ----------------------------------------------------------------------
# coset projections

class ProjectionClass(Enum):
    ZERO = "zero"
    NON_UNIT = "nonzero-nonunit"
    UNIT = "unit"


def reduce_mod_1pi(g: GaussianInt) -> RingElement:
    """Z[i] -> Z[i]/(1+i) = F2; the residue is (re + im) mod 2."""
    return F2.elements[(g.re + g.im) & 1]


def reduce_mod_2(g: GaussianInt) -> RingElement:
    """Z[i] -> Z[i]/(2) = F2[i], coordinatewise parity."""
    return F2I.elements[(g.re & 1) | ((g.im & 1) << 1)]


def project_pair_mod_1pi(cw: GoldenCodeword) -> tuple[RingElement, RingElement]:
    """(x0, x1) reduced coordinatewise into F4 = F2[w] (theta -> w).

    This is the plain coordinate labeling.  The algebra writes x = x0 + e*x1
    with e on the LEFT while the finite pair model keeps j on the right, so
    the labeling that is actually multiplicative mod (1+i) conjugates the
    second slot: x0 + e*x1 = x0 + conj(x1)*e.  Both labelings induce the
    same coset partition (conjugation permutes F4 coordinatewise); the
    multiplicative version and its mod-2 failure are certified in verify.
    """
    x0 = F4.from_w_components(reduce_mod_1pi(cw.a), reduce_mod_1pi(cw.b))
    x1 = F4.from_w_components(reduce_mod_1pi(cw.c), reduce_mod_1pi(cw.d))
    return x0, x1


def project_pair_mod_2(cw: GoldenCodeword) -> tuple[RingElement, RingElement]:
    """(x0, x1) reduced coordinatewise into F4[i] (theta -> w).

    Plain coordinate labeling; see project_pair_mod_1pi for the left/right
    twist caveat.  Mod 2 no relabeling makes the projection multiplicative
    (e^2 = i in the algebra but j^2 = 1 in the pair model, and i is not 1
    mod 2); the exact failure locus is certified in verify.
    """
    x0 = F4I.from_w_components(reduce_mod_2(cw.a), reduce_mod_2(cw.b))
    x1 = F4I.from_w_components(reduce_mod_2(cw.c), reduce_mod_2(cw.d))
    return x0, x1


def project_mod_1pi(cw: GoldenCodeword) -> RingMatrix:
    return pair_to_matrix(*project_pair_mod_1pi(cw))


def project_mod_2(cw: GoldenCodeword) -> RingMatrix:
    return pair_to_matrix(*project_pair_mod_2(cw))


def classify_projection(m: RingMatrix) -> ProjectionClass:
    if m.is_zero:
        return ProjectionClass.ZERO
    if m.is_invertible:
        return ProjectionClass.UNIT
    return ProjectionClass.NON_UNIT


def mod2_norm_pair(cw: GoldenCodeword) -> tuple[RingElement, RingElement]:
    """(N(x0bar), N(x1bar)) in F2[i] for the mod-2 reduction."""
    x0, x1 = project_pair_mod_2(cw)
    return quadratic_norm(x0), quadratic_norm(x1)


def mod2_det_class(cw: GoldenCodeword) -> ProjectionClass:
    """Unit class of u = N(x0bar) + i*N(x1bar), i.e. of det(X) mod 2.

    This is the classification under which the three determinant floors of
    the ideal-(2) case are exact (see the module docstring for why the bare
    norm-equality grouping is not determinant-compatible).
    """
    n0, n1 = mod2_norm_pair(cw)
    u = n0 + F2I.gen_i * n1
    if u.is_zero:
        return ProjectionClass.ZERO
    if u.is_unit:
        return ProjectionClass.UNIT
    return ProjectionClass.NON_UNIT


# Floors on m = 5*|det|^2 keyed by class, for both ideals.
FLOOR_BY_CLASS = {
    ProjectionClass.ZERO: 4,
    ProjectionClass.NON_UNIT: 2,
    ProjectionClass.UNIT: 1,
}


def _key_mod_1pi(coords: Sequence[int]) -> int:
    ar, ai, br, bi, cr, ci, dr, di = coords
    return (
        ((ar + ai) & 1)
        | ((br + bi) & 1) << 1
        | ((cr + ci) & 1) << 2
        | ((dr + di) & 1) << 3
    )


def _key_mod_2(coords: Sequence[int]) -> int:
    key = 0
    for pos, v in enumerate(coords):
        key |= (v & 1) << pos
    return key


def _codeword_from_key_1pi(key: int) -> GoldenCodeword:
    return GoldenCodeword.from_ints(
        [key & 1, 0, (key >> 1) & 1, 0, (key >> 2) & 1, 0, (key >> 3) & 1, 0]
    )


def _codeword_from_key_2(key: int) -> GoldenCodeword:
    return GoldenCodeword.from_ints([(key >> pos) & 1 for pos in range(8)])


def floor_table_mod_1pi() -> list[int]:
    """floor on m = 5*|det|^2, indexed by the 4-bit mod-(1+i) residue key."""
    table = []
    for key in range(16):
        cls = classify_projection(project_mod_1pi(_codeword_from_key_1pi(key)))
        table.append(FLOOR_BY_CLASS[cls])
    return table


def floor_table_mod_2() -> list[int]:
    """floor on m, indexed by the 8-bit coordinate-parity key, via the
    determinant-compatible norm classification."""
    table = []
    for key in range(256):
        cls = mod2_det_class(_codeword_from_key_2(key))
        table.append(FLOOR_BY_CLASS[cls])
    return table


def equal_norms_floor_table_mod_2() -> list[int]:
    """The naive grouping (equal norms -> 4, distinct nonzero -> 2, one zero
    -> 1).  Kept only so the oracle can exhibit its counterexample."""
    table = []
    for key in range(256):
        n0, n1 = mod2_norm_pair(_codeword_from_key_2(key))
        if n0 == n1:
            table.append(4)
        elif (not n0.is_zero) and (not n1.is_zero):
            table.append(2)
        else:
            table.append(1)
    return table


# ----------------------------------------------------------------------
# the algebra product carried by the coordinate pairs (e^2 = i)

def golden_pair_mul(
    x: tuple[GoldenInt, GoldenInt], y: tuple[GoldenInt, GoldenInt]
) -> tuple[GoldenInt, GoldenInt]:
    """(x0 + e x1)(y0 + e y1) with e^2 = i, l e = e sigma(l):

        = (x0 y0 + i sigma(x1) y1) + e (sigma(x0) y1 + x1 y0).
    """
    x0, x1 = x
    y0, y1 = y
    first = x0 * y0 + _gi_times_golden(GI_I, x1.galois_conj() * y1)
    second = x0.galois_conj() * y1 + x1 * y0
    return first, second


# ----------------------------------------------------------------------
# box scans

def box_coordinates(box: int) -> range:
    return range(-box, box + 1)


def iter_box_codewords(box: int) -> Iterator[tuple[int, ...]]:
    """All (2*box+1)^8 coordinate tuples, lexicographic, zero included."""
    import itertools

    return itertools.product(box_coordinates(box), repeat=8)


def _scan_chunk(args: tuple[int, tuple[int, ...], int, int]) -> tuple[int, tuple[int, ...]] | None:
    """Minimum-m scan over codewords whose first coordinate is in a_re_values.

    filter_mode: 0 = none, 1 = fix the mod-(1+i) key, 2 = fix the mod-2 key.
    Returns (min_m, witness_coords) over nonzero codewords, or None if the
    chunk contains no admissible codeword.
    """
    import itertools

    box, a_re_values, filter_mode, filter_key = args
    rng = range(-box, box + 1)
    best_m = None
    best_witness = None
    for ar in a_re_values:
        for rest in itertools.product(rng, repeat=7):
            coords = (ar,) + rest
            if not any(coords):
                continue
            if filter_mode == 1 and _key_mod_1pi(coords) != filter_key:
                continue
            if filter_mode == 2 and _key_mod_2(coords) != filter_key:
                continue
            m = det_sq_times5(coords)
            if best_m is None or m < best_m:
                best_m = m
                best_witness = coords
    if best_m is None:
        return None
    return best_m, best_witness


def min_abs_det_sq(
    box: int = 2,
    *,
    coset: RingMatrix | None = None,
    ideal: str | None = None,
    jobs: int = 1,
) -> tuple[Fraction, GoldenCodeword]:
    """Exact minimum of |det(X)|^2 over the nonzero codewords of the box.

    With ``coset``/``ideal`` the scan is restricted to codewords whose
    projection (mod (1+i) or mod 2, per ``ideal`` in {"1pi", "2"}) equals the
    given 2x2 matrix.  The witness is the first minimizer in lexicographic
    coordinate order regardless of ``jobs``.
    """
    filter_mode = 0
    filter_key = 0
    if coset is not None:
        if ideal == "1pi":
            from .cyclic import matrix_to_pair

            x0, x1 = matrix_to_pair(coset, F4)
            a, b = F4.w_components(x0)
            c, d = F4.w_components(x1)
            filter_mode = 1
            filter_key = a.mask | b.mask << 1 | c.mask << 2 | d.mask << 3
        elif ideal == "2":
            from .cyclic import matrix_to_pair

            x0, x1 = matrix_to_pair(coset, F4I)
            masks = []
            for elem in (x0, x1):
                p, q = F4I.w_components(elem)
                masks.extend([p.mask, q.mask])
            filter_mode = 2
            filter_key = 0
            for pos, m2 in enumerate(masks):
                filter_key |= (m2 & 1) << (2 * pos)
                filter_key |= ((m2 >> 1) & 1) << (2 * pos + 1)
        else:
            raise ValueError("ideal must be '1pi' or '2' when a coset is given")
    elif ideal is not None:
        raise ValueError("ideal given without a coset matrix")

    a_values = list(box_coordinates(box))
    if jobs <= 1:
        chunks = [(box, tuple(a_values), filter_mode, filter_key)]
        results = [_scan_chunk(c) for c in chunks]
    else:
        from concurrent.futures import ProcessPoolExecutor

        jobs = min(jobs, len(a_values))
        step = -(-len(a_values) // jobs)
        chunk_vals = [
            tuple(a_values[k : k + step]) for k in range(0, len(a_values), step)
        ]
        args = [(box, vals, filter_mode, filter_key) for vals in chunk_vals]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_chunk, args))

    best: tuple[int, tuple[int, ...]] | None = None
    for res in results:  # chunk order == enumeration order, so first win stays
        if res is not None and (best is None or res[0] < best[0]):
            best = res
    if best is None:
        raise ValueError("no nonzero codeword matches the requested coset in the box")
    m, coords = best
    return Fraction(m, 5), GoldenCodeword.from_ints(coords)


def _floor_scan_chunk(
    args: tuple[int, tuple[int, ...], str]
) -> tuple[int, list[tuple[int, ...]], list[int]]:
    """Check the determinant floors over one chunk of the box.

    Returns (checked_count, violations, class_counts[4/2/1 indexed 0..2])
    for the requested ideal; violations hold the offending coordinate tuples
    (kept to at most 5 per chunk).
    """
    import itertools

    box, a_re_values, ideal = args
    if ideal == "1pi":
        table = floor_table_mod_1pi()
        keyfn = _key_mod_1pi
    else:
        table = floor_table_mod_2()
        keyfn = _key_mod_2
    rng = range(-box, box + 1)
    checked = 0
    violations: list[tuple[int, ...]] = []
    counts = [0, 0, 0]  # floors 4, 2, 1
    floor_index = {4: 0, 2: 1, 1: 2}
    for ar in a_re_values:
        for rest in itertools.product(rng, repeat=7):
            coords = (ar,) + rest
            if not any(coords):
                continue
            checked += 1
            floor = table[keyfn(coords)]
            counts[floor_index[floor]] += 1
            if det_sq_times5(coords) < floor:
                if len(violations) < 5:
                    violations.append(coords)
    return checked, violations, counts


def scan_det_floors(
    ideal: str, box: int = 2, jobs: int = 1
) -> tuple[int, list[tuple[int, ...]], list[int]]:
    """Exhaustive floor check over the box for ideal "1pi" or "2".

    Returns (codewords_checked, violations, per-floor counts).  An empty
    violation list means every floor held.
    """
    if ideal not in ("1pi", "2"):
        raise ValueError("ideal must be '1pi' or '2'")
    a_values = list(box_coordinates(box))
    if jobs <= 1:
        parts = [_floor_scan_chunk((box, tuple(a_values), ideal))]
    else:
        from concurrent.futures import ProcessPoolExecutor

        jobs = min(jobs, len(a_values))
        step = -(-len(a_values) // jobs)
        chunk_vals = [
            tuple(a_values[k : k + step]) for k in range(0, len(a_values), step)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_floor_scan_chunk, [(box, v, ideal) for v in chunk_vals]))
    checked = sum(p[0] for p in parts)
    violations = [v for p in parts for v in p[1]]
    counts = [sum(p[2][k] for p in parts) for k in range(3)]
    return checked, violations, counts
