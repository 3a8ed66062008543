"""Outer codes over the finite rings and their matrix-alphabet images.

A :class:`LinearCode` is given by ``k`` generator rows of length ``L`` over a
ring alphabet; codewords are all message combinations ``sum m_i * row_i``.
Over the non-field rings the generated module need not be free, so the
codeword iterator may visit a word more than once — harmless for minimum
weights, which is all it feeds.

Two wrappers move a code into a matrix alphabet:

* :func:`lift_code` replaces each symbol x by its multiplication matrix M_x
  (same length, weight-preserving: M_x = 0 iff x = 0);
* :func:`pushforward_pairs` replaces consecutive symbol pairs by their 2x2
  image under the twisted pair model, halving the length.

Weights:

* Hamming — number of nonzero symbols;
* Bachoc — per 2x2 binary matrix: 0 for zero, 1 for invertible, 2 for the
  rest; designed so that the pushforward of the pair model is an isometry
  from F4-Hamming weight;
* Lee — per consecutive pair over F4[i]: |lift(N(x)) + lift(N(y))|^2 with the
  relative norms lifted from F2[i] = {0,1,i,1+i} into Z[i].  Values realized
  on norm pairs: one unit and one non-unit gives 1, two units give 2 or 4,
  two non-units give 0.

Named codes used by the certification suite: the [4,3,2] dual-repetition and
[6,3,4] hexacode over F4 with fixed generator rows, repetition and
single-parity codes over arbitrary alphabets, extended Reed-Solomon codes of
length 16 over the genuine field F16 (distance certified by parity-check
column independence, not assumed), and the two-symbol inner parity code over
F4[i] whose 64 members satisfy x + y in (1+i)F4[i].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Iterator, Sequence

from .cyclic import multiplication_matrix, pair_to_matrix
from .matrices import RingMatrix
from .rings import F2, F4, F4I, F16, QuotientRing, RingElement, get_ring, quadratic_norm

# Message spaces larger than this are refused by the exhaustive searches.
MESSAGE_SPACE_LIMIT = 2**24


class MatrixSpace:
    """The alphabet M_n(ring), quacking enough like a ring for code use."""

    def __init__(self, ring: QuotientRing, n: int):
        self.ring = ring
        self.n = n
        self.name = f"m{n}{ring.name}"
        self.zero = RingMatrix.zeros(ring, n)
        self.one = RingMatrix.identity(ring, n)
        self.size = ring.size ** (n * n)

    def __iter__(self) -> Iterator[RingMatrix]:
        from .matrices import all_matrices

        return all_matrices(self.ring, self.n)

    def __repr__(self) -> str:
        return f"<matrix alphabet {self.name}, {self.size} elements>"


Alphabet = QuotientRing | MatrixSpace
Symbol = RingElement | RingMatrix


@dataclass(frozen=True)
class LinearCode:
    """A length-L code spanned by k generator rows over one alphabet."""

    alphabet: Alphabet
    L: int
    k: int
    rows: tuple[tuple[Symbol, ...], ...]
    name: str = ""
    parity_rows: tuple[tuple[Symbol, ...], ...] = field(default=())

    def __post_init__(self):
        if len(self.rows) != self.k:
            raise ValueError(f"expected {self.k} generator rows, got {len(self.rows)}")
        for row in self.rows + self.parity_rows:
            if len(row) != self.L:
                raise ValueError("generator/parity row length does not match L")

    @property
    def message_space_size(self) -> int:
        return self.alphabet.size ** self.k

    def encode(self, message: Sequence[Symbol]) -> tuple[Symbol, ...]:
        if len(message) != self.k:
            raise ValueError(f"message must have {self.k} symbols")
        word = [self.alphabet.zero] * self.L
        for m, row in zip(message, self.rows):
            for j, g in enumerate(row):
                word[j] = word[j] + m * g
        return tuple(word)

    def codewords(self) -> Iterator[tuple[Symbol, ...]]:
        """All encodings of all messages (may repeat words over non-fields)."""
        if self.message_space_size > MESSAGE_SPACE_LIMIT:
            raise ValueError(
                f"message space of {self.name or 'code'} has "
                f"{self.message_space_size} elements, over the limit"
            )
        for message in itertools.product(self.alphabet, repeat=self.k):
            yield self.encode(message)

    def contains(self, word: Sequence[Symbol]) -> bool:
        word = tuple(word)
        return any(cw == word for cw in self.codewords())

    def check_parity(self, word: Sequence[Symbol]) -> bool:
        """True iff word * H^T = 0 for the stored parity rows."""
        for h in self.parity_rows:
            acc = self.alphabet.zero
            for x, hj in zip(word, h):
                acc = acc + x * hj
            if not _is_zero_symbol(acc):
                return False
        return True

    def __repr__(self) -> str:
        label = self.name or "code"
        return f"<{label}: [{self.L},{self.k}] over {self.alphabet.name}>"


@dataclass(frozen=True)
class MappedCode:
    """A code pushed through a per-word symbol map into a matrix alphabet."""

    base: LinearCode
    alphabet: Alphabet
    L: int
    word_map: Callable[[tuple[Symbol, ...]], tuple[Symbol, ...]]
    name: str = ""

    @property
    def message_space_size(self) -> int:
        return self.base.message_space_size

    def codewords(self) -> Iterator[tuple[Symbol, ...]]:
        for cw in self.base.codewords():
            yield self.word_map(cw)

    def __repr__(self) -> str:
        return f"<{self.name or 'mapped code'}: length {self.L} over {self.alphabet.name}>"


def _is_zero_symbol(x: Symbol) -> bool:
    return x.is_zero


def lift_code(code: LinearCode) -> MappedCode:
    """Componentwise x -> M_x (multiplication matrix); length preserved."""

    def word_map(cw: tuple[Symbol, ...]) -> tuple[Symbol, ...]:
        return tuple(multiplication_matrix(x) for x in cw)

    target = MatrixSpace(code.alphabet.subring, 2)
    return MappedCode(
        base=code,
        alphabet=target,
        L=code.L,
        word_map=word_map,
        name=f"lift({code.name})" if code.name else "lifted code",
    )


def pushforward_pairs(code: LinearCode) -> MappedCode:
    """Consecutive pairs (c_1,c_2),(c_3,c_4),... -> 2x2 matrices; L halves."""
    if code.L % 2:
        raise ValueError("pair pushforward needs even length")

    def word_map(cw: tuple[Symbol, ...]) -> tuple[Symbol, ...]:
        return tuple(
            pair_to_matrix(cw[2 * j], cw[2 * j + 1]) for j in range(len(cw) // 2)
        )

    target = MatrixSpace(code.alphabet.subring, 2)
    return MappedCode(
        base=code,
        alphabet=target,
        L=code.L // 2,
        word_map=word_map,
        name=f"pairs({code.name})" if code.name else "pair pushforward",
    )


# ----------------------------------------------------------------------
# weights

class WeightKind(Enum):
    HAMMING = "hamming"
    BACHOC = "bachoc"
    LEE = "lee"


def hamming_weight(word: Iterable[Symbol]) -> int:
    return sum(1 for x in word if not _is_zero_symbol(x))


def bachoc_weight(m: RingMatrix) -> int:
    """0 for the zero matrix, 1 for invertible, 2 for nonzero singular.

    Defined on 2x2 matrices over F2 (the pair-model alphabet)."""
    if m.ring is not F2 or m.n != 2:
        raise ValueError("bachoc weight is defined on 2x2 matrices over f2")
    if m.is_zero:
        return 0
    if m.is_invertible:
        return 1
    return 2


def bachoc_word_weight(word: Iterable[RingMatrix]) -> int:
    return sum(bachoc_weight(m) for m in word)


_NORM_LIFT = {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (1, 1)}  # F2I mask -> Z[i]


def lee_weight(x: RingElement, y: RingElement) -> int:
    """|lift(N(x)) + lift(N(y))|^2 for a pair over F4[i]."""
    if x.ring is not F4I or y.ring is not F4I:
        raise ValueError("lee weight is defined on pairs over f4i")
    nx = quadratic_norm(x)
    ny = quadratic_norm(y)
    xr, xi = _NORM_LIFT[nx.mask]
    yr, yi = _NORM_LIFT[ny.mask]
    return (xr + yr) ** 2 + (xi + yi) ** 2


def lee_word_weight(word: Sequence[RingElement]) -> int:
    if len(word) % 2:
        raise ValueError("lee weight needs an even-length word")
    return sum(lee_weight(word[2 * j], word[2 * j + 1]) for j in range(len(word) // 2))


def word_weight(word: Sequence[Symbol], kind: WeightKind) -> int:
    if kind is WeightKind.HAMMING:
        return hamming_weight(word)
    if kind is WeightKind.BACHOC:
        return bachoc_word_weight(word)
    return lee_word_weight(word)


def min_distance(code: LinearCode | MappedCode, kind: WeightKind = WeightKind.HAMMING) -> int:
    """Minimum weight over nonzero codewords (= distance, by linearity)."""
    if code.message_space_size > MESSAGE_SPACE_LIMIT:
        raise ValueError("message space too large for exhaustive distance search")
    best: int | None = None
    for cw in code.codewords():
        if all(_is_zero_symbol(x) for x in cw):
            continue
        w = word_weight(cw, kind)
        if best is None or w < best:
            best = w
    if best is None:
        raise ValueError("code has no nonzero codeword")
    return best


# ----------------------------------------------------------------------
# named codes

def _rows(ring: QuotientRing, entries: Sequence[Sequence[str]]) -> tuple[tuple[RingElement, ...], ...]:
    return tuple(tuple(ring.parse(e) for e in row) for row in entries)


def repetition_code(L: int, alphabet: Alphabet) -> LinearCode:
    return LinearCode(
        alphabet=alphabet,
        L=L,
        k=1,
        rows=(tuple(alphabet.one for _ in range(L)),),
        name=f"repetition[{L}]",
    )


def parity_check_code(L: int, alphabet: Alphabet) -> LinearCode:
    """[L, L-1, 2]: codewords (x_1, ..., x_{L-1}, x_1 + ... + x_{L-1})."""
    rows = []
    for r in range(L - 1):
        row = [alphabet.zero] * L
        row[r] = alphabet.one
        row[L - 1] = alphabet.one
        rows.append(tuple(row))
    parity = (tuple(alphabet.one for _ in range(L)),)
    return LinearCode(
        alphabet=alphabet,
        L=L,
        k=L - 1,
        rows=tuple(rows),
        parity_rows=parity,
        name=f"parity[{L}]",
    )


def dual_repetition_code() -> LinearCode:
    """The [4,3,2] code over F4: (x1+x2+x3, x1, x2, x3)."""
    ring = F4
    rows = _rows(
        ring,
        [
            ["1", "1", "0", "0"],
            ["1", "0", "1", "0"],
            ["1", "0", "0", "1"],
        ],
    )
    return LinearCode(alphabet=ring, L=4, k=3, rows=rows, name="dualrep[4,3,2]")


def hexacode() -> LinearCode:
    """The [6,3,4] hexacode over F4 with its standard generator."""
    ring = F4
    rows = _rows(
        ring,
        [
            ["1", "0", "0", "1", "w", "w"],
            ["0", "1", "0", "w", "1", "w"],
            ["0", "0", "1", "w", "w", "1"],
        ],
    )
    return LinearCode(alphabet=ring, L=6, k=3, rows=rows, name="hexacode[6,3,4]")


def matrix_parity_code(L: int) -> LinearCode:
    """Single-parity code over the alphabet M2(F2); for L = 2 this is the
    repetition code {(X, X)}."""
    return parity_check_code(L, MatrixSpace(F2, 2))


def reed_solomon_code(k: int, L: int = 16) -> LinearCode:
    """Extended Reed-Solomon [L, k, L-k+1] over F16, L <= 16.

    Evaluation code of polynomials of degree < k at L fixed points (all of
    F16 for L = 16, in the ring's enumeration order).  Parity rows are the
    Vandermonde power rows used by the distance certificate.
    """
    if not 1 <= k <= L <= 16:
        raise ValueError("need 1 <= k <= L <= 16")
    points = F16.elements[:L]
    rows = tuple(
        tuple(p**deg for p in points) for deg in range(k)
    )
    parity = tuple(
        tuple(p**m for p in points) for m in range(L - k)
    )
    return LinearCode(
        alphabet=F16,
        L=L,
        k=k,
        rows=rows,
        parity_rows=parity,
        name=f"rs[{L},{k}]",
    )


def rs_distance_certificate(code: LinearCode) -> int:
    """Certify d = L - k + 1 for an extended RS evaluation code.

    First verifies G * H^T = 0 (H really is a parity check), then that every
    set of (L - k) parity-check columns is linearly independent (Vandermonde
    minors are invertible), which forces every nonzero codeword to have
    weight > L - k; with the Singleton bound d <= L - k + 1 this pins d
    exactly.  Returns the certified distance.
    """
    r = code.L - code.k
    if r == 0:
        return 1
    for g in code.rows:
        for h in code.parity_rows:
            acc = code.alphabet.zero
            for x, y in zip(g, h):
                acc = acc + x * y
            if not acc.is_zero:
                raise ArithmeticError(f"{code.name}: stored parity rows do not check G")
    cols = [tuple(code.parity_rows[m][j] for m in range(r)) for j in range(code.L)]
    for subset in itertools.combinations(range(code.L), r):
        minor = RingMatrix(
            code.alphabet, [[cols[j][m] for j in subset] for m in range(r)]
        )
        if not minor.is_invertible:
            raise ArithmeticError(
                f"parity columns {subset} of {code.name} are dependent"
            )
    return r + 1


def inner_parity_pair_code() -> LinearCode:
    """The 64-member pair code over F4[i] with parity (1+i)(x + y) = 0.

    Generator [[1, 1], [0, 1+i]]: members are (m1, m1 + m2*(1+i)); as m2
    runs over F4[i] the offset runs over the four multiples of (1+i), so the
    256 messages cover each of the 64 distinct members four times.
    """
    ring = F4I
    one_plus_i = ring.parse("1+i")
    rows = (
        (ring.one, ring.one),
        (ring.zero, one_plus_i),
    )
    parity = ((one_plus_i, one_plus_i),)
    return LinearCode(
        alphabet=ring, L=2, k=2, rows=rows, parity_rows=parity, name="inner-parity[2]"
    )


def named_code(name: str, L: int | None = None, ring_name: str | None = None) -> LinearCode:
    """CLI registry.  Parameterized names take --L / --ring where sensible."""
    if name == "dualrep":
        return dual_repetition_code()
    if name == "hexacode":
        return hexacode()
    if name == "rs16_13":
        return reed_solomon_code(13)
    if name == "rs16_14":
        return reed_solomon_code(14)
    if name == "inner_pair":
        return inner_parity_pair_code()
    if name == "repetition":
        alphabet = get_ring(ring_name) if ring_name else MatrixSpace(F2, 2)
        return repetition_code(L or 2, alphabet)
    if name == "parity":
        alphabet = get_ring(ring_name) if ring_name else MatrixSpace(F2, 2)
        return parity_check_code(L or 4, alphabet)
    if name == "matrix_parity":
        return matrix_parity_code(L or 2)
    raise ValueError(
        f"unknown code {name!r}; known: dualrep, hexacode, rs16_13, rs16_14, "
        "inner_pair, repetition, parity, matrix_parity"
    )


# ----------------------------------------------------------------------
# code files ("ring L k" header, then k generator rows)

def load_code(text: str, name: str = "") -> LinearCode:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty code file")
    header = lines[0].split()
    if len(header) != 3:
        raise ValueError(f"header must be 'ring L k', got {lines[0]!r}")
    ring = get_ring(header[0])
    L, k = int(header[1]), int(header[2])
    if len(lines) != 1 + k:
        raise ValueError(f"expected {k} generator rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        symbols = ln.split()
        if len(symbols) != L:
            raise ValueError(f"row {ln!r} does not have {L} symbols")
        rows.append(tuple(ring.parse(s) for s in symbols))
    return LinearCode(
        alphabet=ring, L=L, k=k, rows=tuple(rows), name=name or "custom"
    )


def dump_code(code: LinearCode) -> str:
    if not isinstance(code.alphabet, QuotientRing):
        raise ValueError("only ring-alphabet codes have a file form")
    lines = [f"{code.alphabet.name} {code.L} {code.k}"]
    for row in code.rows:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
