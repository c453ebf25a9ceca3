"""
Arithmetic of subsets of the cyclic group Z_N.

A :class:`PcSet` stores its members as a bitmask (bit ``e`` set iff ``e`` is a
member).  Everything here is a pure function of immutable values.

Conventions
-----------
- ``T_n(x) = x + n``, ``I_n(x) = -x + n`` and ``M_m(x) = m x``, all mod N.
- The canonical form of a set is the lexicographically smallest sorted element
  list among its 2N dihedral images.  For sets of equal size this is the same
  as the *largest* bitmask once the bit order is reversed (element ``e`` on bit
  ``N-1-e``), which is what the vectorised enumeration code relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ModulusMismatch

# sets fit a 64-bit mask; exhaustive enumeration is capped separately
MAX_MODULUS = 64
MAX_ENUM_MODULUS = 32
_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def _check_modulus(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_MODULUS:
        raise DomainError(f"modulus must be an integer in 1..{MAX_MODULUS}, got {n!r}")


@dataclass(frozen=True, order=False)
class PcSet:
    """A subset of Z_N, stored as a membership bitmask."""

    modulus: int
    mask: int

    def __post_init__(self):
        _check_modulus(self.modulus)
        if self.mask < 0 or self.mask >> self.modulus:
            raise DomainError(f"mask {self.mask:#x} has bits outside Z_{self.modulus}")

    @classmethod
    def of(cls, elements: Iterable[int], modulus: int) -> "PcSet":
        """Build a set from elements, which must already lie in ``0..N-1``."""
        _check_modulus(modulus)
        mask = 0
        for e in elements:
            if not 0 <= e < modulus:
                raise DomainError(f"element {e} outside Z_{modulus}")
            mask |= 1 << e
        return cls(modulus, mask)

    @classmethod
    def reduce(cls, elements: Iterable[int], modulus: int) -> "PcSet":
        """Build a set from arbitrary integers, reducing each mod N."""
        _check_modulus(modulus)
        mask = 0
        for e in elements:
            mask |= 1 << (e % modulus)
        return cls(modulus, mask)

    @classmethod
    def empty(cls, modulus: int) -> "PcSet":
        return cls(modulus, 0)

    @classmethod
    def full(cls, modulus: int) -> "PcSet":
        return cls(modulus, (1 << modulus) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        m = self.mask
        return tuple(e for e in range(self.modulus) if m >> e & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, e: object) -> bool:
        return isinstance(e, int) and 0 <= e < self.modulus and bool(self.mask >> e & 1)

    def sort_key(self) -> tuple[int, ...]:
        """Key ordering sets by their sorted element lists."""
        return self.members

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"

    def __repr__(self) -> str:
        return f"PcSet({self}, N={self.modulus})"


def _same_modulus(a: PcSet, b: PcSet) -> int:
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"sets live in Z_{a.modulus} and Z_{b.modulus}")
    return a.modulus


# ---------------------------------------------------------------------------
# bit helpers


def rotate_mask(mask: int, r: int, n: int) -> int:
    """Mask of the translate by ``+r`` (cyclic left rotation of the bits)."""
    r %= n
    full = (1 << n) - 1
    return ((mask << r) | (mask >> (n - r))) & full


def reverse_mask(mask: int, n: int) -> int:
    """Mask of the image under ``x -> N-1-x``."""
    out = 0
    for e in range(n):
        if mask >> e & 1:
            out |= 1 << (n - 1 - e)
    return out


# ---------------------------------------------------------------------------
# interval structure


@dataclass(frozen=True)
class IntervalVector:
    modulus: int
    counts: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.counts[n % self.modulus]


@dataclass(frozen=True)
class IntervalContent:
    modulus: int
    digits: tuple[int, ...]

    def __str__(self) -> str:
        if all(d < 10 for d in self.digits):
            return "".join(map(str, self.digits))
        return "(" + ",".join(map(str, self.digits)) + ")"

    @property
    def cardinality(self) -> int:
        """Size of any set with this content, from k(k-1) = 2 * sum(digits)."""
        s = 2 * sum(self.digits)
        k = (1 + math.isqrt(1 + 4 * s)) // 2
        return k


@dataclass(frozen=True)
class PattersonPoly:
    modulus: int
    coefficients: tuple[int, ...]

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"


def interval_function(a: PcSet, b: PcSet) -> tuple[int, ...]:
    """``result[n]`` counts the ``k`` in ``a`` whose ``n``-transpose lies in ``b``."""
    n = _same_modulus(a, b)
    am, bm = a.mask, b.mask
    # k in a and k+n in b  <=>  bit k of (a & (b rotated by -n))
    return tuple((am & rotate_mask(bm, -d, n)).bit_count() for d in range(n))


def interval_vector(a: PcSet) -> IntervalVector:
    return IntervalVector(a.modulus, interval_function(a, a))


def interval_content(a: PcSet) -> IntervalContent:
    """Folded interval vector: digits for intervals ``1..N//2``.

    The last digit is halved for even N, since each unordered pair at distance
    N/2 is counted twice among ordered differences.
    """
    n = a.modulus
    if n < 2:
        raise DomainError("interval content needs N >= 2")
    iv = interval_vector(a).counts
    digits = list(iv[1 : n // 2 + 1])
    if n % 2 == 0:
        digits[-1] //= 2
    return IntervalContent(n, tuple(digits))


def patterson(a: PcSet) -> PattersonPoly:
    """Coefficients of ``A(x) A(x^-1)`` reduced mod ``x^N - 1``.

    Computed as an honest polynomial product, independently of
    :func:`interval_function`.
    """
    n = a.modulus
    coeffs = [0] * n
    members = a.members
    for i in members:
        for j in members:
            # x^i * x^(-j)
            coeffs[(i - j) % n] += 1
    return PattersonPoly(n, tuple(coeffs))


# ---------------------------------------------------------------------------
# transformations


@dataclass(frozen=True)
class Transform:
    """One of ``T_n``, ``I_n`` or ``M_m`` acting on Z_N.

    >>> Transform("M", 5)(PcSet.of([0, 1, 2, 3, 5, 6], 12))
    PcSet({0,1,3,5,6,10}, N=12)
    """

    kind: str
    param: int

    def __post_init__(self):
        if self.kind not in ("T", "I", "M"):
            raise DomainError(f"unknown transform kind {self.kind!r}")

    def point(self, x: int, n: int) -> int:
        if self.kind == "T":
            return (x + self.param) % n
        if self.kind == "I":
            return (self.param - x) % n
        return (self.param * x) % n

    def is_bijective(self, n: int) -> bool:
        return self.kind != "M" or math.gcd(self.param, n) == 1

    def __call__(self, a: PcSet) -> PcSet:
        return transform(a, self)

    def __str__(self) -> str:
        return f"{self.kind}{self.param}"


def transform(a: PcSet, op: Transform) -> PcSet:
    n = a.modulus
    if op.kind in ("T", "I") and not 0 <= op.param < n:
        raise DomainError(f"{op.kind}_n needs 0 <= n < {n}, got {op.param}")
    if op.kind == "T":
        return PcSet(n, rotate_mask(a.mask, op.param, n))
    return PcSet.reduce((op.point(x, n) for x in a.members), n)


def transpose(a: PcSet, n: int) -> PcSet:
    return transform(a, Transform("T", n % a.modulus))


def invert(a: PcSet, n: int = 0) -> PcSet:
    return transform(a, Transform("I", n % a.modulus))


def multiply(a: PcSet, m: int) -> PcSet:
    return transform(a, Transform("M", m))


def complement(a: PcSet) -> PcSet:
    return PcSet(a.modulus, ((1 << a.modulus) - 1) & ~a.mask)


def dihedral_images(a: PcSet) -> list[PcSet]:
    """All 2N images ``T_n(A)`` and ``T_n(I_0(A))``, with repetitions."""
    n = a.modulus
    inv = invert(a, 0).mask
    out = [PcSet(n, rotate_mask(a.mask, r, n)) for r in range(n)]
    out += [PcSet(n, rotate_mask(inv, r, n)) for r in range(n)]
    return out


def canonical_mask(mask: int, n: int) -> int:
    """Bitmask of the canonical dihedral representative of ``mask``."""
    rev = reverse_mask(mask, n)
    best = rev
    for r in range(n):
        # rotations of rev are reversed images of translates; rotations of
        # mask are reversed images of inversions
        best = max(best, rotate_mask(rev, r, n), rotate_mask(mask, r, n))
    return reverse_mask(best, n)


def canonical_form(a: PcSet) -> PcSet:
    return PcSet(a.modulus, canonical_mask(a.mask, a.modulus))


def is_canonical(a: PcSet) -> bool:
    return canonical_mask(a.mask, a.modulus) == a.mask


# ---------------------------------------------------------------------------
# set literal syntax


def parse_set(text: str, modulus: int) -> PcSet:
    """Parse ``"0,1,3,4"`` (decimal, comma separated) or ``"15ab"`` (base 36).

    A literal containing a comma, or wrapped in braces (``"{12}"``), is a
    decimal list; otherwise every character is one base-36 digit.  ``""`` and
    ``"{}"`` denote the empty set.
    """
    _check_modulus(modulus)
    body = text.strip()
    braced = body.startswith("{") and body.endswith("}")
    if braced:
        body = body[1:-1].strip()
    if not body:
        return PcSet.empty(modulus)
    if braced or "," in body:
        elements = []
        for tok in body.split(","):
            tok = tok.strip()
            if not tok:
                raise DomainError(f"empty token in set literal {text!r}")
            if not tok.isdigit():
                raise DomainError(f"mixed or malformed token {tok!r} in {text!r}")
            elements.append(int(tok))
    else:
        elements = []
        for ch in body.lower():
            if ch not in _DIGITS:
                raise DomainError(f"bad digit {ch!r} in set literal {text!r}")
            elements.append(_DIGITS.index(ch))
    for e in elements:
        if e >= modulus:
            raise DomainError(f"element {e} out of range for Z_{modulus} in {text!r}")
    if len(set(elements)) != len(elements):
        raise DomainError(f"repeated element in set literal {text!r}")
    return PcSet.of(elements, modulus)


def format_set(a: PcSet, style: str = "comma") -> str:
    if style == "comma":
        return ",".join(map(str, a.members))
    if style == "compact":
        if a.modulus > len(_DIGITS):
            raise DomainError("compact syntax needs N <= 36")
        return "".join(_DIGITS[e] for e in a.members)
    raise DomainError(f"unknown set style {style!r}")


def sorted_sets(sets: Sequence[PcSet]) -> list[PcSet]:
    return sorted(sets, key=PcSet.sort_key)
