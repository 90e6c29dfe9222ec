"""Batch computation of WRP tables and collision reports."""

from __future__ import annotations

import csv
import io
import json
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cycles import CycleBudgetExceeded
from .diagram import DiagramError, build_diagram, validate_reduced
from .invariant import WRPPair, mirror_wrp, wrp_of_diagram
from .pdcode import KnotName, PDCode, PDError, TableRow

__all__ = [
    "TableEntry",
    "CollisionReport",
    "compute_entry",
    "compute_table",
    "collision_report",
    "format_table",
]


@dataclass(frozen=True)
class TableEntry:
    name: KnotName
    pd: PDCode | None
    wrp: WRPPair | None = None
    wrp_mirror: WRPPair | None = None
    alternating: bool = True
    prime_warning: bool = False
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None

    @property
    def self_mirror(self) -> bool:
        return self.ok and self.wrp == self.wrp_mirror


def compute_entry(name: KnotName, pd: PDCode | None, error: str | None = None,
                  budget: int | None = None) -> TableEntry:
    if error is not None or pd is None:
        return TableEntry(name, pd, error=error or "no PD code")
    try:
        d = build_diagram(pd)
        report = validate_reduced(d)
        p = wrp_of_diagram(d, budget)
    except (PDError, DiagramError, CycleBudgetExceeded, ValueError) as exc:
        return TableEntry(name, pd, error=f"{type(exc).__name__}: {exc}")
    return TableEntry(name, pd, p, mirror_wrp(p), p.alternating, report.non_prime_warning)


def _entry_args(item):
    if isinstance(item, TableRow):
        return item.name, item.pd, item.error
    name, pd = item
    if isinstance(name, str):
        name = KnotName(name)
    return name, pd, None


def _compute_packed(args):
    name, pd, error, budget = args
    return compute_entry(name, pd, error, budget)


def compute_table(entries, *, jobs: int = 1, budget: int | None = None) -> list[TableEntry]:
    """WRP and mirror WRP for every entry, in input order.

    ``entries`` holds ``(name, pd)`` pairs or :class:`TableRow` objects.
    Failures are recorded on their row; the batch always completes.
    """
    packed = [(*_entry_args(item), budget) for item in entries]
    if jobs <= 1 or len(packed) < 2:
        return [_compute_packed(a) for a in packed]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_compute_packed, packed, chunksize=8))


@dataclass
class CollisionReport:
    """Entries grouped by equal WRP.

    With mirrors included, a chiral-by-WRP entry contributes ``name`` and
    ``name + "m"``; an entry whose WRP equals its mirror's contributes once
    and is listed in ``self_mirror``.  Equality with the mirror is only a
    necessary condition for amphichirality.
    """

    groups: list[list[str]]
    include_mirrors: bool
    self_mirror: list[str] = field(default_factory=list)
    failed: list[str] = field(default_factory=list)
    values: dict[str, WRPPair] = field(default_factory=dict)

    @property
    def items(self) -> int:
        return sum(len(g) for g in self.groups)

    @property
    def collisions(self) -> list[list[str]]:
        return [g for g in self.groups if len(g) > 1]

    @property
    def all_singletons(self) -> bool:
        return not self.collisions

    def summary(self) -> dict:
        return {
            "items": self.items,
            "classes": len(self.groups),
            "collision_classes": len(self.collisions),
            "self_mirror": len(self.self_mirror),
            "failed": len(self.failed),
            "include_mirrors": self.include_mirrors,
        }

    def to_json(self) -> str:
        return json.dumps({
            "summary": self.summary(),
            "collisions": [
                {"members": g, "wrp": str(self.values[g[0]])} for g in self.collisions
            ],
            "self_mirror": self.self_mirror,
            "failed": self.failed,
        }, indent=2)

    def to_text(self) -> str:
        s = self.summary()
        lines = [
            f"items: {s['items']}  classes: {s['classes']}  "
            f"collision classes: {s['collision_classes']}  failed: {s['failed']}",
        ]
        if self.include_mirrors:
            lines.append(
                f"equal to own mirror by WRP (necessary, not sufficient, for amphichirality): "
                f"{len(self.self_mirror)}")
            if self.self_mirror:
                lines.append("  " + " ".join(self.self_mirror))
        for g in self.collisions:
            lines.append(f"collision: {' = '.join(g)}  {self.values[g[0]]}")
        if self.all_singletons:
            lines.append("all classes are singletons")
        return "\n".join(lines)


def collision_report(table: list[TableEntry], include_mirrors: bool = False) -> CollisionReport:
    classes: OrderedDict = OrderedDict()
    report = CollisionReport([], include_mirrors)
    for e in table:
        if not e.ok:
            report.failed.append(str(e.name))
            continue
        items = [(str(e.name), e.wrp)]
        if include_mirrors:
            if e.self_mirror:
                report.self_mirror.append(str(e.name))
            else:
                items.append((e.name.name + "m", e.wrp_mirror))
        for label, value in items:
            classes.setdefault(value.as_set(), []).append(label)
            report.values[label] = value
    report.groups = list(classes.values())
    return report


def format_table(table: list[TableEntry], fmt: str = "txt", mirrors: bool = False) -> str:
    """Render a computed table as ``txt`` (``name<TAB>{p1, p2}``), ``csv`` or ``json``."""
    rows = []
    for e in table:
        rows.append((str(e.name), e, e.wrp))
        if mirrors and e.ok:
            rows.append((e.name.name + "m", e, e.wrp_mirror))
    if fmt == "txt":
        out = []
        for label, e, value in rows:
            out.append(f"{label}\t{value}" if e.ok else f"{label}\tERROR: {e.error}")
        return "".join(line + "\n" for line in out)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "wrp", "first_terms", "second_terms", "alternating", "error"])
        for label, e, value in rows:
            if e.ok:
                w.writerow([label, str(value), json.dumps(value.first.to_json()),
                            json.dumps(value.second.to_json()), int(e.alternating), ""])
            else:
                w.writerow([label, "", "", "", "", e.error])
        return buf.getvalue()
    if fmt == "json":
        out = []
        for label, e, value in rows:
            rec = {"name": label}
            if e.ok:
                rec.update(wrp=str(value), terms=value.to_json(), alternating=e.alternating,
                           prime_warning=e.prime_warning)
            else:
                rec["error"] = e.error
            out.append(rec)
        return json.dumps(out, indent=1) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")
