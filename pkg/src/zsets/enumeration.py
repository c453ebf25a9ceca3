"""
Exhaustive enumeration of dihedral set classes of Z_N and their homometric
tuples.

The heavy step is a vectorised canonical-form filter over every k-subset
containing 0 (a canonical representative of a nonempty class always starts
with 0).  Candidate masks are split into contiguous ranges that may be
filtered by separate worker processes; results are concatenated in range
order, so output never depends on the worker count.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional

import numpy as np

from .core import MAX_ENUM_MODULUS, PcSet
from .errors import DomainError
from .homometry import HomometryTuple, group_by_content

log = logging.getLogger(__name__)

_CHUNK = 1 << 20


def _check_nk(n: int, k: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_ENUM_MODULUS:
        raise DomainError(f"N must lie in 1..{MAX_ENUM_MODULUS}, got {n!r}")
    if not isinstance(k, int) or not 0 <= k <= n:
        raise DomainError(f"k must lie in 0..N, got {k!r}")


# ---------------------------------------------------------------------------
# vectorised bit kernels


def _dtype(n: int):
    return np.uint32 if n <= 31 else np.uint64


def _rot(x: np.ndarray, r: int, n: int, full) -> np.ndarray:
    if r == 0:
        return x
    return ((x << x.dtype.type(r)) | (x >> x.dtype.type(n - r))) & full


def _reverse(x: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros_like(x)
    one = x.dtype.type(1)
    for e in range(n):
        out |= ((x >> x.dtype.type(e)) & one) << x.dtype.type(n - 1 - e)
    return out


@lru_cache(maxsize=None)
def _subset_masks(n: int, k: int) -> np.ndarray:
    """All k-subsets of ``{0..n-1}`` as sorted bitmasks."""
    dt = _dtype(max(n, 1))
    if k == 0:
        return np.zeros(1, dtype=dt)
    if k > n:
        return np.zeros(0, dtype=dt)
    if k == n:
        return np.array([(1 << n) - 1], dtype=dt)
    without = _subset_masks(n - 1, k)
    with_top = _subset_masks(n - 1, k - 1) | dt(1 << (n - 1))
    return np.concatenate([without.astype(dt), with_top.astype(dt)])


def candidate_masks(n: int, k: int) -> np.ndarray:
    """k-subsets of Z_N containing 0 (plus the empty set when k = 0)."""
    dt = _dtype(n)
    if k == 0:
        return np.zeros(1, dtype=dt)
    rest = _subset_masks(n - 1, k - 1).astype(dt)
    return (rest << dt(1)) | dt(1)


def canonical_filter(masks: np.ndarray, n: int) -> np.ndarray:
    """Keep the masks that are their own canonical dihedral representative."""
    if masks.size == 0:
        return masks
    full = masks.dtype.type((1 << n) - 1)
    rev = _reverse(masks, n)
    keep = np.ones(masks.shape, dtype=bool)
    for r in range(n):
        keep &= rev >= _rot(rev, r, n, full)
        keep &= rev >= _rot(masks, r, n, full)
    return masks[keep]


def _filter_chunk(args):
    masks, n = args
    return canonical_filter(masks, n)


def content_matrix(masks: np.ndarray, n: int) -> np.ndarray:
    """Interval content rows by direct pair counting (popcount of overlaps)."""
    full = masks.dtype.type((1 << n) - 1)
    cols = []
    for d in range(1, n // 2 + 1):
        c = np.bitwise_count(masks & _rot(masks, d, n, full)).astype(np.int64)
        if 2 * d == n:
            c //= 2
        cols.append(c)
    if not cols:
        return np.zeros((masks.size, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def patterson_matrix(masks: np.ndarray, n: int) -> np.ndarray:
    """Patterson coefficients via the spectral route ``|FFT(1_A)|^2``."""
    bits = ((masks[:, None] >> np.arange(n, dtype=masks.dtype)) & 1).astype(float)
    spec = np.fft.fft(bits, axis=1)
    auto = np.fft.ifft(spec * np.conj(spec), axis=1).real
    return np.rint(auto).astype(np.int64)


# ---------------------------------------------------------------------------
# class enumeration


def class_masks(n: int, k: int, workers: int = 1) -> np.ndarray:
    """Canonical masks of every dihedral class of k-subsets, sorted by element list."""
    _check_nk(n, k)
    cand = candidate_masks(n, k)
    chunks = [cand[i : i + _CHUNK] for i in range(0, cand.size, _CHUNK)]
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_filter_chunk, [(c, n) for c in chunks]))
    else:
        parts = [canonical_filter(c, n) for c in chunks]
    masks = np.concatenate(parts) if parts else cand[:0]
    # order by sorted element list == descending reversed mask (equal sizes)
    order = np.argsort(_reverse(masks, n), kind="stable")[::-1]
    return masks[order]


def enum_classes(n: int, k: int, workers: int = 1) -> list[PcSet]:
    """One canonical representative per dihedral class of k-subsets of Z_N."""
    return [PcSet(n, int(m)) for m in class_masks(n, k, workers)]


# ---------------------------------------------------------------------------
# census


@dataclass(frozen=True)
class TupleCensus:
    modulus: int
    cardinality: int
    class_count: int
    tuples: tuple[HomometryTuple, ...]
    spectrum: dict[int, int] = field(default_factory=dict)

    @property
    def vectors_with_tuples(self) -> int:
        return len(self.tuples)

    @property
    def has_large_tuples(self) -> bool:
        """True when some tuple has more than two classes (an italic cell)."""
        return any(t > 2 for t in self.spectrum)


def _group_rows(masks: np.ndarray, keys: np.ndarray) -> list[list[int]]:
    """Group mask indices by identical key rows; only groups of size >= 2."""
    if masks.size == 0:
        return []
    _, inverse, counts = np.unique(keys, axis=0, return_inverse=True, return_counts=True)
    inverse = inverse.reshape(-1)
    groups: dict[int, list[int]] = {}
    for idx in np.flatnonzero(counts[inverse] >= 2):
        groups.setdefault(int(inverse[idx]), []).append(int(idx))
    return list(groups.values())


def census(n: int, k: int, workers: int = 1, method: str = "content") -> TupleCensus:
    """Group the dihedral classes of k-subsets of Z_N into homometric tuples.

    ``method`` selects the grouping key: ``"content"`` (interval content from
    pair counting) or ``"patterson"`` (spectral autocorrelation).  Both must
    give identical censuses.
    """
    _check_nk(n, k)
    if n < 2:
        return TupleCensus(n, k, 1, (), {})
    masks = class_masks(n, k, workers)
    if method == "content":
        keys = content_matrix(masks, n)
    elif method == "patterson":
        keys = patterson_matrix(masks, n)
    else:
        raise DomainError(f"unknown census method {method!r}")
    sets = []
    for idx in _group_rows(masks, keys):
        sets.extend(PcSet(n, int(masks[i])) for i in idx)
    tuples = tuple(group_by_content(sets))
    spectrum = dict(sorted(Counter(len(t.classes) for t in tuples).items()))
    return TupleCensus(n, k, int(masks.size), tuples, spectrum)


def first_tuple_of_multiplicity(n: int, k: int, t: int, workers: int = 1) -> Optional[HomometryTuple]:
    """Lexicographically first tuple with exactly ``t`` classes, or ``None``."""
    if t < 3:
        raise DomainError("t must be at least 3")
    hits = [tp for tp in census(n, k, workers).tuples if len(tp.classes) == t]
    if not hits:
        return None
    return min(hits, key=lambda tp: [c.sort_key() for c in tp.classes])


# ---------------------------------------------------------------------------
# tables


@dataclass
class CensusTable:
    """Cells ``(N, k) -> TupleCensus``; missing keys are "not computed"."""

    moduli: list[int]
    sizes: list[int]
    cells: dict[tuple[int, int], TupleCensus] = field(default_factory=dict)

    def value(self, n: int, k: int) -> Optional[int]:
        c = self.cells.get((n, k))
        return None if c is None else c.vectors_with_tuples

    def italic(self, n: int, k: int) -> bool:
        c = self.cells.get((n, k))
        return c is not None and c.has_large_tuples

    def to_csv(self, mark_italics: bool = True) -> str:
        """CSV with a header of N values and one row per k.

        Uncomputed cells are ``--``; cells holding tuples of multiplicity > 2
        get a trailing ``*`` when ``mark_italics`` is set.
        """
        lines = ["k\\N," + ",".join(map(str, self.moduli))]
        for k in self.sizes:
            row = [str(k)]
            for n in self.moduli:
                v = self.value(n, k)
                if v is None:
                    row.append("--")
                else:
                    row.append(f"{v}*" if mark_italics and self.italic(n, k) else str(v))
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"


def build_table(
    moduli: Iterable[int],
    sizes: Iterable[int],
    workers: int = 1,
    half: bool = False,
    progress: Optional[Callable[[int, int], None]] = None,
) -> CensusTable:
    """Census every cell with ``k <= N``.

    Cells with ``k > N/2`` mirror ``N - k`` by complementation; ``half=True``
    leaves them uncomputed, which is the layout of the printed tables.
    """
    moduli, sizes = list(moduli), list(sizes)
    table = CensusTable(moduli, sizes)
    for n in moduli:
        for k in sizes:
            if k > n or (half and 2 * k > n):
                continue
            if progress:
                progress(n, k)
            table.cells[(n, k)] = census(n, k, workers)
    return table


def class_count_bruteforce(n: int, k: int) -> int:
    """Number of dihedral classes of k-subsets by canonicalising every subset."""
    from itertools import combinations

    from .core import canonical_mask

    seen = set()
    for combo in combinations(range(n), k):
        seen.add(canonical_mask(sum(1 << e for e in combo), n))
    return len(seen)
