"""All sextic scrollar tuples of a fixed genus, with their region labels."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterator

from .scrollar import RegionLabel, ScrollarError, ScrollarTuple, classify_region, expected_codim

__all__ = [
    "GenusSlice",
    "NegativeGenus",
    "Row",
    "emit",
    "enumerate_by_genus",
    "region_counts",
    "tuples_with_sum",
]

HEADER = ("e1", "e2", "e3", "e4", "e5", "region", "realizable", "expected_codim")


class NegativeGenus(ScrollarError):
    pass


@dataclass(frozen=True)
class Row:
    e: ScrollarTuple
    region: RegionLabel
    realizable: bool
    expected_codim: int

    def to_dict(self) -> dict:
        out = {f"e{k}": v for k, v in enumerate(self.e, start=1)}
        out.update(region=self.region.value, realizable=self.realizable, expected_codim=self.expected_codim)
        return out


@dataclass(frozen=True)
class GenusSlice:
    genus: int
    rows: tuple[Row, ...]


def tuples_with_sum(total: int, parts: int = 5, smallest: int = 1) -> Iterator[tuple[int, ...]]:
    """Nondecreasing tuples of ``parts`` integers ``>= smallest`` summing to ``total``, in lex order."""
    if parts == 1:
        if total >= smallest:
            yield (total,)
        return
    for first in range(smallest, total // parts + 1):
        for rest in tuples_with_sum(total - first, parts - 1, first):
            yield (first,) + rest


def _check_genus(g: int) -> None:
    if isinstance(g, bool) or not isinstance(g, int):
        raise ScrollarError(f"genus must be an integer, got {g!r}")
    if g < 0:
        raise NegativeGenus(f"genus must be >= 0, got {g}")


def enumerate_by_genus(g: int) -> GenusSlice:
    _check_genus(g)
    rows = []
    for t in tuples_with_sum(g + 5):
        e = ScrollarTuple(t)
        label = classify_region(e)
        rows.append(Row(e, label, label.realizable, expected_codim(e)))
    return GenusSlice(g, tuple(rows))


def region_counts(g: int) -> dict[RegionLabel, int]:
    counts = {label: 0 for label in RegionLabel}
    for row in enumerate_by_genus(g).rows:
        counts[row.region] += 1
    return counts


def emit(slice_: GenusSlice, fmt: str = "csv") -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in slice_.rows], indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r} (expected csv or json)")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for r in slice_.rows:
        w.writerow([*r.e, r.region.value, "true" if r.realizable else "false", r.expected_codim])
    return buf.getvalue()
