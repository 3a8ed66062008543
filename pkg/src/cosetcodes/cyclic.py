"""Cyclic algebras over the small fields and their explicit matrix models.

An element of the degree-n cyclic algebra with trivial twist (gamma = 1) is
x = x_0 + e*x_1 + ... + e^(n-1)*x_{n-1} with coefficients in F_{2^n}, subject
to the relations

    e^n = 1,        l * e = e * sigma(l)    (sigma = squaring).

Multiplication collects coefficients of e^m:

    (x * y)_m = sum over j+k = m (mod n) of sigma^k(x_j) * y_k,

and the left-regular representation sends x to the n x n matrix over the field
with entry (r, c) = sigma^c(x_{r-c}) for r >= c and sigma^c(x_{n-c+r}) above
the diagonal.  Both are implemented verbatim so they can be checked against
each other by exhaustion.

Two literal matrix models over F2 are provided as frozen constant tables:

* degree 3 over F8 -> 3x3 binary matrices (a genuine ring isomorphism onto
  its image; certified exhaustively by the verify module);
* degree 4 over F16_ALT -> 4x4 binary matrices.  Here the generator image W4
  is the companion matrix of x^4+x+1, which is irreducible, so the extended
  map is an additive bijection; but W4 does NOT satisfy the reducible
  polynomial w^4+w^2+1 that defines F16_ALT, so the map cannot be (and is
  not) multiplicative on field parts.  The verify module reports each
  relation separately rather than averaging them into one verdict.

The quadratic models phi/psi ("pair_to_matrix") send a pair over a quadratic
extension to a 2x2 matrix over the base ring using the twist j^2 = 1:

    (a + b*w, c + d*w)  ->  [[a+d, b+c], [b+c+d, a+b+d]].

The f-basis change rewrites a degree-4 element in powers of the nilpotent
f = 1 + e (f^4 = 0); the transition matrix is Pascal's triangle mod 2 and is
its own inverse.
"""

from __future__ import annotations

from typing import Sequence

from .matrices import RingMatrix
from .rings import (
    F2,
    F2I,
    F4,
    F4I,
    F8,
    F16_ALT,
    QuotientRing,
    RingElement,
    quadratic_conj,
)


def _sq(x: RingElement) -> RingElement:
    # sigma as plain squaring; well defined on every ring here, an
    # automorphism only on the genuine fields (see rings.frobenius).
    return x * x


def _sigma_pow(x: RingElement, k: int) -> RingElement:
    for _ in range(k):
        x = _sq(x)
    return x


class CyclicElement:
    """x_0 + e*x_1 + ... + e^(n-1)*x_{n-1} with coefficients in one ring."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: QuotientRing, coeffs: Sequence[RingElement]):
        coeffs = tuple(coeffs)
        if len(coeffs) != ring.w_deg:
            raise ValueError(
                f"need {ring.w_deg} coefficients for degree-{ring.w_deg} algebra "
                f"over {ring.name}, got {len(coeffs)}"
            )
        for c in coeffs:
            if c.ring is not ring:
                raise ValueError(f"coefficient {c!r} not in {ring.name}")
        self.ring = ring
        self.coeffs = coeffs

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def _coerce(self, other: "CyclicElement") -> "CyclicElement":
        if not isinstance(other, CyclicElement):
            raise TypeError(f"cannot combine CyclicElement with {type(other).__name__}")
        if other.ring is not self.ring:
            raise ValueError("elements of different algebras")
        return other

    def __add__(self, other: "CyclicElement") -> "CyclicElement":
        other = self._coerce(other)
        return CyclicElement(
            self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    __sub__ = __add__

    def __mul__(self, other: "CyclicElement") -> "CyclicElement":
        other = self._coerce(other)
        n = self.n
        zero = self.ring.zero
        out = [zero] * n
        for j in range(n):
            xj = self.coeffs[j]
            if xj.is_zero:
                continue
            for k in range(n):
                yk = other.coeffs[k]
                if yk.is_zero:
                    continue
                out[(j + k) % n] = out[(j + k) % n] + _sigma_pow(xj, k) * yk
        return CyclicElement(self.ring, out)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CyclicElement)
            and other.ring is self.ring
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ring.name, tuple(c.mask for c in self.coeffs)))

    def __str__(self) -> str:
        return "; ".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"CyclicElement({self.ring.name}, {self})"

    @classmethod
    def parse(cls, ring: QuotientRing, text: str) -> "CyclicElement":
        """Parse "x0; x1; ..." (missing trailing coefficients read as 0)."""
        parts = [p.strip() for p in text.split(";")]
        if len(parts) > ring.w_deg:
            raise ValueError(f"too many coefficients in {text!r}")
        coeffs = [ring.parse(p) if p else ring.zero for p in parts]
        coeffs += [ring.zero] * (ring.w_deg - len(coeffs))
        return cls(ring, coeffs)


def regular_representation(x: CyclicElement) -> RingMatrix:
    """Left-regular representation of x as an n x n matrix over its field."""
    n = x.n
    rows = []
    for r in range(n):
        row = []
        for c in range(n):
            idx = (r - c) % n
            row.append(_sigma_pow(x.coeffs[idx], c))
        rows.append(row)
    return RingMatrix(x.ring, rows)


# ----------------------------------------------------------------------
# degree-3 model over F8: images in M3(F2)

# Image of the cyclic generator e (e^3 = 1).
F8_E_IMAGE = RingMatrix.from_masks(F2, [[1, 0, 0], [0, 0, 1], [0, 1, 1]])


def f8_field_image(a: RingElement) -> RingMatrix:
    """3x3 binary image of a field coefficient a0 + a1*w + a2*w^2 in F8."""
    if a.ring is not F8:
        raise ValueError("f8_field_image expects an F8 element")
    a0, a1, a2 = (a.mask >> k & 1 for k in range(3))
    return RingMatrix.from_masks(
        F2,
        [
            [a0, a1, a2],
            [a2, a0 ^ a2, a1],
            [a1, a1 ^ a2, a0 ^ a2],
        ],
    )


def iso_f8_to_m3(x: CyclicElement) -> RingMatrix:
    """Sum of E^j * image(x_j); a ring isomorphism onto its image."""
    if x.ring is not F8:
        raise ValueError("iso_f8_to_m3 expects a degree-3 element over f8")
    acc = RingMatrix.zeros(F2, 3)
    power = RingMatrix.identity(F2, 3)
    for c in x.coeffs:
        acc = acc + power * f8_field_image(c)
        power = power * F8_E_IMAGE
    return acc


# ----------------------------------------------------------------------
# degree-4 model over F16_ALT: images in M4(F2)

F16_E_IMAGE = RingMatrix.from_masks(
    F2, [[1, 0, 0, 0], [0, 0, 1, 0], [1, 1, 0, 0], [0, 0, 1, 1]]
)
F16_W_IMAGE = RingMatrix.from_masks(
    F2, [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 0, 0]]
)


def f16_field_image(a: RingElement) -> RingMatrix:
    """4x4 binary image of a0 + a1*w + a2*w^2 + a3*w^3, via powers of W4."""
    if a.ring is not F16_ALT:
        raise ValueError("f16_field_image expects an F16_ALT element")
    acc = RingMatrix.zeros(F2, 4)
    power = RingMatrix.identity(F2, 4)
    for k in range(4):
        if (a.mask >> k) & 1:
            acc = acc + power
        power = power * F16_W_IMAGE
    return acc


def iso_f16_to_m4(x: CyclicElement) -> RingMatrix:
    """Sum of E^j * image(x_j); an additive bijection onto M4(F2).

    Not multiplicative on field parts (W4 satisfies x^4+x+1, not the
    reducible defining polynomial of F16_ALT); see the verify module's
    per-relation report before trusting any ring-level identity here.
    """
    if x.ring is not F16_ALT:
        raise ValueError("iso_f16_to_m4 expects a degree-4 element over f16alt")
    acc = RingMatrix.zeros(F2, 4)
    power = RingMatrix.identity(F2, 4)
    for c in x.coeffs:
        acc = acc + power * f16_field_image(c)
        power = power * F16_E_IMAGE
    return acc


# ----------------------------------------------------------------------
# quadratic pair models (phi over F4 -> M2(F2), psi over F4[i] -> M2(F2[i]))

_PAIR_TARGET = {F4: F2, F4I: F2I}


def pair_to_matrix(x: RingElement, y: RingElement) -> RingMatrix:
    """(a+bw, c+dw) -> [[a+d, b+c], [b+c+d, a+b+d]] over the base ring."""
    ring = x.ring
    if y.ring is not ring or ring not in _PAIR_TARGET:
        raise ValueError("pair_to_matrix expects two elements of f4 or f4i")
    a, b = ring.w_components(x)
    c, d = ring.w_components(y)
    return RingMatrix(
        _PAIR_TARGET[ring],
        [[a + d, b + c], [b + c + d, a + b + d]],
    )


def matrix_to_pair(m: RingMatrix, ring: QuotientRing) -> tuple[RingElement, RingElement]:
    """Inverse of pair_to_matrix; ring is the quadratic extension (f4 or f4i)."""
    if ring not in _PAIR_TARGET or m.ring is not _PAIR_TARGET[ring] or m.n != 2:
        raise ValueError("matrix_to_pair expects a 2x2 matrix over the base ring")
    y11, y12 = m[0, 0], m[0, 1]
    y21, y22 = m[1, 0], m[1, 1]
    x = ring.from_w_components(y11 + y12 + y21, y11 + y22)
    y = ring.from_w_components(y11 + y12 + y22, y12 + y21)
    return x, y


def twisted_pair_mul(
    x: tuple[RingElement, RingElement], y: tuple[RingElement, RingElement]
) -> tuple[RingElement, RingElement]:
    """Product in the rank-2 algebra with j^2 = 1, l*j = j*sigma(l):

        (a + b j)(c + d j) = (ac + b*sigma(d)) + (ad + b*sigma(c)) j.

    sigma is the relative conjugation of the quadratic extension (squaring
    on F4, but NOT squaring on F4[i], where sigma must fix i).  This is the
    algebra structure that pair_to_matrix transports to 2x2 matrices;
    exhaustive multiplicativity is certified in verify.
    """
    a, b = x
    c, d = y
    return (a * c + b * quadratic_conj(d), a * d + b * quadratic_conj(c))


def multiplication_matrix(x: RingElement) -> RingMatrix:
    """Multiplication-by-x matrix [[a, b], [b, a+b]] on the basis (1, w).

    For x = a + b*w in a quadratic extension with w^2 = w + 1; zero exactly
    when x is zero, invertible exactly when x is a unit.
    """
    ring = x.ring
    if ring not in _PAIR_TARGET:
        raise ValueError("multiplication_matrix expects an element of f4 or f4i")
    a, b = ring.w_components(x)
    return RingMatrix(_PAIR_TARGET[ring], [[a, b], [b, a + b]])


# ----------------------------------------------------------------------
# f-basis (powers of the nilpotent f = 1 + e) for the degree-4 algebra

# Pascal's triangle mod 2 for n = 4; self-inverse over F2.
_PASCAL4 = ((1, 1, 1, 1), (0, 1, 0, 1), (0, 0, 1, 1), (0, 0, 0, 1))


def _pascal_apply(coeffs: Sequence[RingElement]) -> list[RingElement]:
    zero = coeffs[0].ring.zero
    out = []
    for row in _PASCAL4:
        acc = zero
        for bit, c in zip(row, coeffs):
            if bit:
                acc = acc + c
        out.append(acc)
    return out


def to_f_basis(x: CyclicElement) -> tuple[RingElement, ...]:
    """Coefficients (y_0..y_3) of x in powers of f = 1 + e:

        y_0 = x_0+x_1+x_2+x_3,  y_1 = x_1+x_3,  y_2 = x_2+x_3,  y_3 = x_3.
    """
    if x.n != 4:
        raise ValueError("f-basis is defined for the degree-4 algebra")
    return tuple(_pascal_apply(x.coeffs))


def from_f_basis(ring: QuotientRing, coeffs: Sequence[RingElement]) -> CyclicElement:
    """Rebuild x from f-basis coefficients (the transform is an involution)."""
    if len(coeffs) != 4:
        raise ValueError("f-basis needs exactly 4 coefficients")
    return CyclicElement(ring, _pascal_apply(coeffs))


def algebra_elements(ring: QuotientRing):
    """All ring.size^n elements of the degree-n algebra, lexicographic by
    coefficient masks (last coefficient fastest)."""
    import itertools

    for coeffs in itertools.product(ring.elements, repeat=ring.w_deg):
        yield CyclicElement(ring, coeffs)
