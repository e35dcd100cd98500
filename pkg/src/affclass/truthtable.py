"""Truth tables of n-variable Boolean functions packed into Python ints.

Bit ``i`` of the rule number (0-based) is the output on input assignment ``i``,
so position ``i + 1`` in the 1-based numbering used throughout this package.
Text forms are written most-significant bit first, which is the usual way
Wolfram-style rule numbers are printed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .config import DEFAULT, ValidationError

_HEX_DIGITS = frozenset("0123456789abcdefABCDEF")


def _check_n(n: int, max_n: int | None = None) -> None:
    cap = DEFAULT.max_n_table if max_n is None else max_n
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"variable count must be an integer >= 1, got {n!r}")
    if n > cap:
        raise ValidationError(f"n={n} exceeds the truth-table cap ({cap})")


@lru_cache(maxsize=None)
def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def variable_mask(n: int, j: int) -> int:
    """Truth table of the projection x_j (1-based j): set where bit j-1 of the input is 1."""
    width = 1 << (j - 1)
    period = (1 << (2 * width)) - 1
    low_block = (1 << width) - 1
    # period-spaced copies of the low block mark inputs with bit j-1 clear
    clear = full_mask(n) // period * low_block
    return full_mask(n) ^ clear


@dataclass(frozen=True)
class TruthTable:
    """An n-variable Boolean function; ``rule`` is its Wolfram rule number."""

    n: int
    rule: int

    def __post_init__(self):
        _check_n(self.n)
        if not isinstance(self.rule, int) or self.rule < 0 or self.rule >> (1 << self.n):
            raise ValidationError(f"rule number does not fit in 2^{self.n} bits")

    @property
    def size(self) -> int:
        return 1 << self.n

    def bit(self, position: int) -> int:
        """Output bit at 1-based ``position``."""
        if not 1 <= position <= self.size:
            raise ValidationError(f"position {position} outside [1, {self.size}]")
        return (self.rule >> (position - 1)) & 1

    def __call__(self, x: int) -> int:
        return (self.rule >> x) & 1

    @property
    def weight(self) -> int:
        return self.rule.bit_count()

    def to_bits(self) -> str:
        return format(self.rule, f"0{self.size}b")

    def to_hex(self) -> str:
        if self.n < 2:
            raise ValidationError("hex form needs n >= 2")
        return format(self.rule, f"0{self.size // 4}x")

    def __invert__(self) -> "TruthTable":
        return complement(self)

    def __xor__(self, other: "TruthTable") -> "TruthTable":
        return xor(self, other)

    def __str__(self) -> str:
        return self.to_bits()


def _same_n(a: TruthTable, b: TruthTable) -> int:
    if a.n != b.n:
        raise ValidationError(f"variable counts differ: {a.n} vs {b.n}")
    return a.n


def from_rule(n: int, r: int) -> TruthTable:
    return TruthTable(n, r)


def from_bits(s: str) -> TruthTable:
    """Parse an MSB-first 0/1 string whose length is a power of two >= 2."""
    s = s.strip()
    length = len(s)
    if length < 2 or length & (length - 1) or set(s) - {"0", "1"}:
        raise ValidationError(f"not a truth table bit string: {s!r}")
    return TruthTable(length.bit_length() - 1, int(s, 2))


def from_hex(s: str, n: int | None = None) -> TruthTable:
    """Parse MSB-first lowercase-or-uppercase hex nibbles, no ``0x`` prefix."""
    s = s.strip()
    length = len(s)
    if length < 1 or length & (length - 1):
        raise ValidationError(f"hex truth table length must be a power of two: {length}")
    if not set(s) <= _HEX_DIGITS:
        raise ValidationError(f"not a bare hex string: {s[:32]!r}")
    value = int(s, 16)
    inferred = (length * 4).bit_length() - 1
    if n is not None and n != inferred:
        raise ValidationError(f"hex string of length {length} encodes n={inferred}, not n={n}")
    return TruthTable(inferred, value)


def complement(f: TruthTable) -> TruthTable:
    return TruthTable(f.n, f.rule ^ full_mask(f.n))


def concat_high_low(high: TruthTable, low: TruthTable) -> TruthTable:
    """(n+1)-variable table with ``low`` on inputs where the new top variable is 0."""
    n = _same_n(high, low)
    return TruthTable(n + 1, (high.rule << (1 << n)) | low.rule)


def concat_self(f: TruthTable) -> TruthTable:
    return concat_high_low(f, f)


def concat_with_complement(f: TruthTable) -> TruthTable:
    # f in the low half: g(x, x_new) = f(x) ^ x_new
    return concat_high_low(complement(f), f)


def xor(a: TruthTable, b: TruthTable) -> TruthTable:
    return TruthTable(_same_n(a, b), a.rule ^ b.rule)


def cvt(a: TruthTable, b: TruthTable) -> int:
    """Carry value transform: bitwise AND shifted up one place, 2^n + 1 bits wide."""
    _same_n(a, b)
    return (a.rule & b.rule) << 1


def hamming_distance(a: TruthTable, b: TruthTable) -> int:
    _same_n(a, b)
    return (a.rule ^ b.rule).bit_count()


@dataclass(frozen=True)
class AnfPolynomial:
    """ANF coefficients; bit ``u`` is the coefficient of the monomial prod_{j in u} x_j."""

    n: int
    coefficients: int

    @property
    def degree(self) -> int:
        c, best = self.coefficients, 0
        while c:
            low = c & -c
            best = max(best, (low.bit_length() - 1).bit_count())
            c ^= low
        return best

    @property
    def constant(self) -> int:
        return self.coefficients & 1

    def monomials(self) -> list[int]:
        return [u for u in range(1 << self.n) if (self.coefficients >> u) & 1]

    def truth_table(self) -> TruthTable:
        return TruthTable(self.n, _moebius_int(self.n, self.coefficients))

    def __str__(self) -> str:
        terms = []
        for u in self.monomials():
            terms.append("1" if u == 0 else "".join(
                f"x{j + 1}" for j in range(self.n) if (u >> j) & 1))
        return " ^ ".join(terms) or "0"


def _moebius_int(n: int, c: int) -> int:
    for i in range(n):
        # positions whose input has bit i clear feed the partner with bit i set
        c ^= (c & ~variable_mask(n, i + 1) & full_mask(n)) << (1 << i)
    return c


def moebius(f: TruthTable | AnfPolynomial) -> AnfPolynomial:
    """Moebius transform of a truth table. Applying it to an AnfPolynomial returns
    the evaluation table packed the same way, which makes the transform an involution."""
    if isinstance(f, AnfPolynomial):
        return AnfPolynomial(f.n, _moebius_int(f.n, f.coefficients))
    return AnfPolynomial(f.n, _moebius_int(f.n, f.rule))


def is_affine(f: TruthTable) -> bool:
    return moebius(f).degree <= 1


def is_linear(f: TruthTable) -> bool:
    p = moebius(f)
    return p.degree <= 1 and p.constant == 0


@dataclass(frozen=True)
class AffineSpec:
    """k_n x_n ^ ... ^ k_1 x_1 ^ k_0 with bit j-1 of ``mask`` holding k_j."""

    n: int
    mask: int
    constant: int = 0

    def __post_init__(self):
        _check_n(self.n)
        if not 0 <= self.mask < (1 << self.n):
            raise ValidationError(f"mask {self.mask} outside [0, 2^{self.n})")
        if self.constant not in (0, 1):
            raise ValidationError("constant must be 0 or 1")

    @property
    def is_linear(self) -> bool:
        return self.constant == 0

    def __call__(self, x: int) -> int:
        return ((self.mask & x).bit_count() & 1) ^ self.constant


def affine_truth_table(spec: AffineSpec) -> TruthTable:
    rule = full_mask(spec.n) if spec.constant else 0
    for j in range(1, spec.n + 1):
        if (spec.mask >> (j - 1)) & 1:
            rule ^= variable_mask(spec.n, j)
    return TruthTable(spec.n, rule)


def affine_spec(f: TruthTable) -> AffineSpec | None:
    """Decode an affine function back to its coefficients; None if f is not affine."""
    p = moebius(f)
    if p.degree > 1:
        return None
    mask = 0
    for j in range(f.n):
        mask |= ((p.coefficients >> (1 << j)) & 1) << j
    return AffineSpec(f.n, mask, p.constant)


def all_functions(n: int):
    for r in range(1 << (1 << n)):
        yield TruthTable(n, r)
