"""
Serialisation and the bundled reference data with its comparison reports.

JSON documents produced here are plain dicts with a stable key order;
:func:`validate` checks them against the schema files shipped in
``zsets/schemas``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Any, Optional

from .constructors import ZPair
from .core import PcSet, interval_content, interval_function, parse_set, patterson
from .enumeration import CensusTable, TupleCensus
from .homometry import HomometryTuple, HomometryVerdict, block_family
from .levi import AutResult
from .permgroup import PermGroup, format_cycles

SCHEMAS = ("ivec", "zcheck", "pair", "census", "table", "autgroup", "permgroup", "table1")


def _read(package: str, name: str) -> str:
    return resources.files(package).joinpath(name).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def schema(name: str) -> dict:
    return json.loads(_read("zsets.schemas", f"{name}.json"))


def validate(doc: dict, name: str) -> None:
    """Raise ``jsonschema.ValidationError`` if ``doc`` does not match schema ``name``."""
    import jsonschema

    jsonschema.validate(doc, schema(name))


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# documents


def set_list(a: PcSet) -> list[int]:
    return list(a.members)


def ivec_doc(a: PcSet) -> dict:
    doc = {
        "modulus": a.modulus,
        "set": set_list(a),
        "interval_function": list(interval_function(a, a)),
        "patterson": list(patterson(a).coefficients),
    }
    if a.modulus >= 2:
        doc["interval_content"] = list(interval_content(a).digits)
    return doc


def zcheck_doc(a: PcSet, b: PcSet, verdict: HomometryVerdict) -> dict:
    return {
        "modulus": a.modulus,
        "a": set_list(a),
        "b": set_list(b),
        "related": verdict.related,
        "kind": verdict.kind.value,
        "z_related": verdict.z_related,
        "content_a": list(interval_content(a).digits),
        "content_b": list(interval_content(b).digits),
    }


def pair_doc(p: ZPair) -> dict:
    return {
        "modulus": p.modulus,
        "first": set_list(p.first),
        "second": set_list(p.second),
        "content": list(interval_content(p.first).digits),
        "kind": p.kind.value,
        "provenance": p.provenance,
    }


def tuple_doc(t: HomometryTuple) -> dict:
    return {"content": list(t.content.digits), "classes": [set_list(c) for c in t.classes]}


def census_doc(c: TupleCensus) -> dict:
    return {
        "modulus": c.modulus,
        "cardinality": c.cardinality,
        "class_count": c.class_count,
        "vectors_with_tuples": c.vectors_with_tuples,
        "spectrum": {str(t): n for t, n in c.spectrum.items()},
        "tuples": [tuple_doc(t) for t in c.tuples],
    }


def table_doc(t: CensusTable) -> dict:
    cells = []
    for n in t.moduli:
        for k in t.sizes:
            c = t.cells.get((n, k))
            if c is not None:
                cells.append(
                    {
                        "N": n,
                        "k": k,
                        "vectors_with_tuples": c.vectors_with_tuples,
                        "italic": c.has_large_tuples,
                        "spectrum": {str(m): v for m, v in c.spectrum.items()},
                    }
                )
    return {"moduli": t.moduli, "sizes": t.sizes, "cells": cells}


def permgroup_doc(g: PermGroup) -> dict:
    return {
        "degree": g.degree,
        "generators": [format_cycles(p) for p in g.generators],
        "order": g.order(),
        "orbits": g.orbits(),
    }


def autgroup_doc(r: AutResult) -> dict:
    return {
        "modulus": r.modulus,
        "block_count": len(r.blocks),
        "generators": [format_cycles(p) for p in r.point_generators],
        "order": r.order,
        "point_orbits": r.point_orbits,
        "block_orbits": [[set_list(b) for b in orb] for orb in r.block_orbits],
        "graph": {
            "vertices": r.modulus + len(r.blocks),
            "generators": [format_cycles(p) for p in r.graph_generators],
            "vertex_orbit_count": len(r.vertex_orbits),
        },
    }


# ---------------------------------------------------------------------------
# text renderings


def census_text(c: TupleCensus) -> str:
    spectrum = " ".join(f"{t}:{n}" for t, n in c.spectrum.items()) or "-"
    lines = [
        f"N={c.modulus} k={c.cardinality} classes={c.class_count} "
        f"vectors_with_tuples={c.vectors_with_tuples} spectrum={spectrum}"
    ]
    for t in c.tuples:
        lines.append(f"  ic={t.content} " + " ".join(str(s) for s in t.classes))
    return "\n".join(lines) + "\n"


def table_text(t: CensusTable) -> str:
    width = 7
    head = "k\\N".ljust(4) + "".join(str(n).rjust(width) for n in t.moduli)
    lines = [head]
    for k in t.sizes:
        row = str(k).ljust(4)
        for n in t.moduli:
            v = t.value(n, k)
            cell = "--" if v is None else f"{v}{'*' if t.italic(n, k) else ''}"
            row += cell.rjust(width)
        lines.append(row)
    return "\n".join(lines) + "\n"


def autgroup_text(r: AutResult) -> str:
    lines = [
        f"N={r.modulus} blocks={len(r.blocks)} order={r.order}",
        "generators: " + (" ".join(format_cycles(p) for p in r.point_generators) or "()"),
        f"point orbits ({len(r.point_orbits)}): " + " ".join("{" + ",".join(map(str, o)) + "}" for o in r.point_orbits),
        f"block orbits ({len(r.block_orbits)}): sizes " + ",".join(str(len(o)) for o in r.block_orbits),
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# bundled reference data


def table1_chords(text: Optional[str] = None) -> list[str]:
    """The 48 chords of the Z_12 network, in reading order."""
    if text is None:
        text = _read("zsets.data", "table1.txt")
    return text.split()


@dataclass
class Table1Report:
    chords: list[PcSet]
    expected: list[PcSet]
    missing: list[PcSet]
    extra: list[PcSet]

    @property
    def matches(self) -> bool:
        return not self.missing and not self.extra

    @property
    def symmetric_difference(self) -> list[PcSet]:
        return self.missing + self.extra

    def to_doc(self) -> dict:
        return {
            "chord_count": len(self.chords),
            "unique_chords": len(set(self.chords)),
            "expected_count": len(self.expected),
            "matches": self.matches,
            "missing": [set_list(s) for s in self.missing],
            "extra": [set_list(s) for s in self.extra],
        }


def verify_table1(chords: Optional[list[str]] = None) -> Table1Report:
    """Compare the chord network with the dihedral closure of {0,1,3,7}, {0,1,4,6}."""
    words = table1_chords() if chords is None else chords
    parsed = [parse_set(w, 12) for w in words]
    expected = block_family([PcSet.of((0, 1, 3, 7), 12), PcSet.of((0, 1, 4, 6), 12)])
    have, want = set(parsed), set(expected)
    key = PcSet.sort_key
    return Table1Report(
        chords=parsed,
        expected=expected,
        missing=sorted(want - have, key=key),
        extra=sorted(have - want, key=key),
    )


@dataclass(frozen=True)
class ReferenceCell:
    """One printed cell: ``value`` is None for ``--`` and ``?`` is kept as ``unknown``."""

    value: Optional[int]
    italic: bool = False
    unknown: bool = False


def reference_census_table(which: str) -> dict[tuple[int, int], ReferenceCell]:
    """Cells of the printed census tables; ``which`` is ``"small"`` or ``"large"``."""
    rows = _read("zsets.data", f"reference_census_{which}.csv").split()
    moduli = [int(x) for x in rows[0].split(",")[1:]]
    out = {}
    for row in rows[1:]:
        k, *cells = row.split(",")
        for n, cell in zip(moduli, cells):
            if cell == "--":
                continue
            if cell == "?":
                out[(n, int(k))] = ReferenceCell(None, unknown=True)
            else:
                out[(n, int(k))] = ReferenceCell(int(cell.rstrip("*")), cell.endswith("*"))
    return out


def audit_against_reference(table: CensusTable, which: str) -> list[dict]:
    """Discrepancies between a computed table and the printed one.

    A value mismatch carries the full tuple listing of the computed cell so the
    disagreement can be checked by hand; an italic-only mismatch carries the
    spectrum.
    """
    report = []
    for (n, k), cell in sorted(reference_census_table(which).items()):
        c = table.cells.get((n, k))
        if c is None or cell.unknown:
            continue
        if c.vectors_with_tuples != cell.value:
            report.append(
                {"N": n, "k": k, "issue": "value", "reference": cell.value, "computed": c.vectors_with_tuples,
                 "tuples": [tuple_doc(t) for t in c.tuples]}
            )
        elif c.has_large_tuples != cell.italic:
            report.append(
                {"N": n, "k": k, "issue": "italic", "reference": cell.italic, "computed": c.has_large_tuples,
                 "spectrum": {str(m): v for m, v in c.spectrum.items()}}
            )
    return report


# octuple in Z_24 and the first triple in Z_16, as printed
REFERENCE_FIRST_TRIPLE = ((0, 1, 2, 4, 6, 9), (0, 1, 2, 4, 9, 14), (0, 1, 3, 5, 7, 8))
REFERENCE_OCTUPLE = (
    (0, 1, 2, 4, 6, 9, 12, 16, 17),
    (0, 1, 2, 4, 6, 9, 14, 17, 18),
    (0, 1, 2, 4, 8, 9, 12, 14, 17),
    (0, 1, 2, 4, 9, 10, 14, 17, 22),
    (0, 1, 2, 4, 9, 14, 16, 17, 20),
    (0, 1, 2, 6, 9, 10, 12, 14, 17),
    (0, 1, 3, 5, 7, 8, 13, 16, 17),
    (0, 1, 3, 5, 8, 9, 13, 15, 16),
)

# generators printed for the Z_8 and Z_12 block families, keyed by (N, k)
REFERENCE_GENERATORS = {
    (8, 4): ("(1,3)(2,6)(5,7)", "(1,5)(3,7)", "(0,1)(2,7)(3,6)(4,5)", "(2,6)(3,7)"),
    (12, 4): ("(3,9)", "(4,10)", "(5,11)", "(2,5)(8,11)", "(1,2)(4,5)(7,8)(10,11)", "(0,1)(3,4)(6,7)(9,10)"),
    (12, 5): ("(1,5)(2,10)(4,8)(7,11)", "(1,7)(3,9)(5,11)", "(0,1)(2,11)(3,10)(4,9)(5,8)(6,7)"),
    (12, 6): ("(2,10)(3,11)(4,8)(5,9)", "(1,3)(2,10)(4,8)(5,11)(7,9)", "(0,1)(2,3)(4,5)(6,7)(8,9)(10,11)"),
}
REFERENCE_BLOCK_COUNTS = {(8, 4): 16, (12, 4): 48, (12, 5): 108, (12, 6): 552}
