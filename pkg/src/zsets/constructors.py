"""
Generative rules producing Z-related pairs.

Every constructor checks its own output with :func:`is_z_related` and raises
:class:`InvariantError` if the check fails, so each rule doubles as an
executable check that the rule preserves the Z-relation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Optional

from .core import PcSet, complement, multiply
from .errors import DomainError, InvariantError
from .homometry import Kind, classify, is_z_related


@dataclass(frozen=True)
class ZPair:
    modulus: int
    first: PcSet
    second: PcSet
    rule: str = "given"
    params: dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        for s in (self.first, self.second):
            if s.modulus != self.modulus:
                raise DomainError(f"{s!r} does not live in Z_{self.modulus}")
        if not is_z_related(self.first, self.second):
            raise InvariantError(
                f"{self.rule}{self.params}: {self.first} and {self.second} are not Z-related in Z_{self.modulus}"
            )

    @classmethod
    def of(cls, first, second, modulus: int) -> "ZPair":
        return cls(modulus, PcSet.of(first, modulus), PcSet.of(second, modulus))

    @property
    def kind(self) -> Kind:
        return classify(self.first, self.second).kind

    @property
    def provenance(self) -> dict[str, Any]:
        return {"rule": self.rule, "params": dict(self.params)}

    def swapped(self) -> "ZPair":
        return ZPair(self.modulus, self.second, self.first, self.rule, self.params)


def _lift(a: PcSet, modulus: int) -> PcSet:
    """Reinterpret the members of ``a`` as integers of a larger Z_modulus."""
    return PcSet.of(a.members, modulus)


def complement_pair(p: ZPair) -> ZPair:
    return ZPair(p.modulus, complement(p.first), complement(p.second), "complement", {"of": p.provenance})


def multiply_pair(p: ZPair, m: int) -> ZPair:
    if math.gcd(m, p.modulus) != 1:
        raise DomainError(f"M_{m} is not a bijection of Z_{p.modulus}")
    return ZPair(p.modulus, multiply(p.first, m), multiply(p.second, m), "multiply", {"m": m, "of": p.provenance})


def replicate(p: ZPair, m: int) -> ZPair:
    """Union of the translates by 0, N, ..., N(m-1), inside Z_{Nm}.

    ``m = 2`` is the doubling ``(A u T_N A) Z_2N (B u T_N B)``.
    """
    if not isinstance(m, int) or m < 2:
        raise DomainError("replicate needs m >= 2")
    n = p.modulus
    big = n * m

    def rep(a: PcSet) -> PcSet:
        return PcSet.of((x + n * j for x in a.members for j in range(m)), big)

    return ZPair(big, rep(p.first), rep(p.second), "replicate", {"m": m, "of": p.provenance})


def multiply_replicate(p: ZPair, m: int) -> ZPair:
    """Multiply by ``m`` inside Z_{Nm}, then fill with the translates by 0..m-1."""
    n = p.modulus
    if not isinstance(m, int) or math.gcd(n, m) != 1 or m in (1, n - 1) or m < 1:
        raise DomainError(f"multiply_replicate needs gcd(N, m) = 1 and m not in {{1, N-1}}; got N={n}, m={m}")
    big = n * m

    def rep(a: PcSet) -> PcSet:
        scaled = multiply(_lift(a, big), m)
        return PcSet.of(((x + j) % big for x in scaled.members for j in range(m)), big)

    return ZPair(big, rep(p.first), rep(p.second), "multiply_replicate", {"m": m, "of": p.provenance})


def rosenblatt(kind: str, n: int, a: Optional[int] = None) -> ZPair:
    """The two families of four-element pairs.

    ``kind="i"``: ``{0,a,a+n,2n}`` and ``{0,a,n,2n+a}`` in Z_{4n},
    ``1 <= a <= n-1``.  ``kind="ii"``: ``{0,n,4n,6n}`` and ``{0,2n,3n,7n}``
    in Z_{13n}.
    """
    if kind == "i":
        if not isinstance(n, int) or n < 2:
            raise DomainError("type i needs n >= 2")
        if a is None or not 1 <= a <= n - 1:
            raise DomainError(f"type i needs 1 <= a <= n-1, got a={a}")
        N = 4 * n
        first, second = (0, a, a + n, 2 * n), (0, a, n, 2 * n + a)
        params = {"type": "i", "n": n, "a": a}
    elif kind == "ii":
        if not isinstance(n, int) or n < 1:
            raise DomainError("type ii needs n >= 1")
        if a is not None:
            raise DomainError("type ii takes no parameter a")
        N = 13 * n
        first, second = (0, n, 4 * n, 6 * n), (0, 2 * n, 3 * n, 7 * n)
        params = {"type": "ii", "n": n}
    else:
        raise DomainError(f"unknown Rosenblatt type {kind!r}")
    pair = ZPair(N, PcSet.of(first, N), PcSet.of(second, N), "rosenblatt", params)
    return pair


def rosenblatt_instances(max_modulus: int) -> list[ZPair]:
    """Every in-range Rosenblatt pair with modulus at most ``max_modulus``."""
    out = []
    for n in range(2, max_modulus // 4 + 1):
        out.extend(rosenblatt("i", n, a) for a in range(1, n))
    for n in range(1, max_modulus // 13 + 1):
        out.append(rosenblatt("ii", n))
    return out


def interlaced_family(k: int) -> ZPair:
    """``{0,1,3+k,4+k,6+k}`` and ``{0,1,2,4+k,7+k}`` in Z_{10+2k}."""
    if not isinstance(k, int) or k < 0:
        raise DomainError("k must be a non-negative integer")
    N = 10 + 2 * k
    return ZPair(
        N,
        PcSet.of((0, 1, 3 + k, 4 + k, 6 + k), N),
        PcSet.of((0, 1, 2, 4 + k, 7 + k), N),
        "interlaced",
        {"k": k},
    )


def empirical_family(which: int, n: int) -> ZPair:
    """The two five-element families in Z_{2n}, valid for ``n >= 5``."""
    if not isinstance(n, int) or n < 5:
        raise DomainError("empirical families need n >= 5")
    if which == 1:
        first, second = (0, 1, n - 2, n - 1, n + 1), (0, 1, 2, n - 1, n + 2)
    elif which == 2:
        first, second = (0, 1, 2, n - 2, n + 1), (0, 1, 3, n - 1, n)
    else:
        raise DomainError(f"family must be 1 or 2, got {which!r}")
    N = 2 * n
    return ZPair(N, PcSet.of(first, N), PcSet.of(second, N), "empirical", {"family": which, "n": n})


RULES = ("complement", "multiply", "replicate", "multiply_replicate", "rosenblatt", "interlaced", "empirical")
