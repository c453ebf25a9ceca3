"""Z-relation predicates and grouping of set classes by interval content."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .core import (
    IntervalContent,
    PcSet,
    _same_modulus,
    canonical_form,
    dihedral_images,
    interval_content,
    is_canonical,
    sorted_sets,
)
from .errors import DomainError


class Kind(str, Enum):
    NOT_RELATED = "not-related"
    TRIVIAL = "trivial"
    STRICT = "strict"


@dataclass(frozen=True)
class HomometryVerdict:
    related: bool
    kind: Kind

    @property
    def z_related(self) -> bool:
        """The music-theoretic reading: Z-related means strictly homometric."""
        return self.kind is Kind.STRICT


@dataclass(frozen=True)
class HomometryTuple:
    """Two or more dihedrally distinct classes sharing one interval content."""

    modulus: int
    cardinality: int
    content: IntervalContent
    classes: tuple[PcSet, ...]

    def __post_init__(self):
        if len(self.classes) < 2:
            raise DomainError("a homometric tuple needs at least two classes")

    @property
    def multiplicity(self) -> int:
        return len(self.classes)


def is_z_related(a: PcSet, b: PcSet) -> bool:
    """Same interval content (hence same Patterson function when ``|A| = |B|``)."""
    _same_modulus(a, b)
    if len(a) != len(b):
        return False
    if a.modulus < 2:
        return True
    return interval_content(a) == interval_content(b)


def classify(a: PcSet, b: PcSet) -> HomometryVerdict:
    if not is_z_related(a, b):
        return HomometryVerdict(False, Kind.NOT_RELATED)
    if canonical_form(a) == canonical_form(b):
        return HomometryVerdict(True, Kind.TRIVIAL)
    return HomometryVerdict(True, Kind.STRICT)


def group_by_content(sets: Iterable[PcSet]) -> list[HomometryTuple]:
    """Partition canonical classes by interval content, keeping cells of size >= 2.

    Classes inside a tuple are sorted by element list; tuples are sorted by
    content digits.
    """
    sets = list(sets)
    if not sets:
        return []
    n, k = sets[0].modulus, len(sets[0])
    cells: dict[IntervalContent, list[PcSet]] = {}
    for s in sets:
        if s.modulus != n or len(s) != k:
            raise DomainError("group_by_content needs a common modulus and cardinality")
        if not is_canonical(s):
            raise DomainError(f"{s} is not a canonical form")
        cells.setdefault(interval_content(s), []).append(s)
    out = []
    for content in sorted(cells, key=lambda c: c.digits):
        members = sorted_sets(set(cells[content]))
        if len(members) >= 2:
            out.append(HomometryTuple(n, k, content, tuple(members)))
    return out


def dihedral_orbit(a: PcSet) -> list[PcSet]:
    """Distinct transpositions and inversions of ``a``, sorted."""
    return sorted_sets(set(dihedral_images(a)))


def block_family(classes: Iterable[PcSet]) -> list[PcSet]:
    """Union of the dihedral orbits of ``classes``, sorted and deduplicated."""
    out: set[PcSet] = set()
    for c in classes:
        out.update(dihedral_images(c))
    return sorted_sets(out)
