"""Planar diagram (PD) codes: parsing, validation, serialization, generators.

A PD code lists one ``X(a,b,c,d)`` per crossing.  The four labels are the
arcs meeting the crossing, read counterclockwise starting from the incoming
under-strand, so the under-strand runs ``a -> c``.  Arcs are numbered
consecutively along each component in its direction of travel; every
component owns one contiguous label interval and wraps from its largest
label back to its smallest.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

__all__ = [
    "PDError",
    "PDCode",
    "KnotName",
    "parse_pd",
    "serialize_pd",
    "pd_from_ports",
    "pd_torus2",
    "pd_pretzel",
    "pd_twist",
    "TableError",
    "TableRow",
    "load_table",
    "load_table_rows",
    "parse_table_rows",
    "relabel_pd",
    "mirror_pd",
]


class PDError(ValueError):
    """Malformed or inconsistent PD code."""


Crossing = tuple[int, int, int, int]


@dataclass(frozen=True)
class PDCode:
    """A validated PD code.

    ``components`` holds each component's label interval ``(lo, hi)`` in
    ascending order of ``lo``.
    """

    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, int], ...] = field(compare=False)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def n(self) -> int:
        return len(self.crossings)

    def successor(self, label: int) -> int:
        for lo, hi in self.components:
            if lo <= label <= hi:
                return lo if label == hi else label + 1
        raise KeyError(label)

    def __str__(self):
        return serialize_pd(self)


@dataclass(frozen=True)
class KnotName:
    name: str
    mirror: bool = False

    def __post_init__(self):
        if not self.name:
            raise ValueError("knot name must be non-empty")

    def __str__(self):
        return self.name + ("m" if self.mirror else "")


def _components_of(crossings: tuple[Crossing, ...]) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = defaultdict(int)
    for x in crossings:
        for lab in x:
            counts[lab] += 1
    bad = sorted(lab for lab, c in counts.items() if c != 2)
    if bad:
        detail = ", ".join(f"{lab} (x{counts[lab]})" for lab in bad[:6])
        raise PDError(f"every arc label must occur exactly twice; offending labels: {detail}")

    # strands pass straight through a crossing: label adjacency along components
    nbrs: dict[int, list[int]] = defaultdict(list)
    for x in crossings:
        for p in (0, 1):
            a, b = x[p], x[p + 2]
            nbrs[a].append(b)
            nbrs[b].append(a)

    seen: set[int] = set()
    comps = []
    for start in sorted(counts):
        if start in seen:
            continue
        stack = [start]
        members = set()
        while stack:
            v = stack.pop()
            if v in members:
                continue
            members.add(v)
            stack.extend(nbrs[v])
        seen |= members
        lo, hi = min(members), max(members)
        if hi - lo + 1 != len(members):
            raise PDError(f"component labels {sorted(members)} are not a contiguous interval")
        size = len(members)
        for v in members:
            succ = lo if v == hi else v + 1
            pred = hi if v == lo else v - 1
            if size > 2 and sorted(nbrs[v]) != sorted([succ, pred]):
                raise PDError(
                    f"arc {v} is not followed by {succ} along its component "
                    f"(adjacent to {sorted(nbrs[v])})"
                )
        comps.append((lo, hi))
    return tuple(sorted(comps))


def make_pd(crossings) -> PDCode:
    xs = tuple(tuple(int(v) for v in x) for x in crossings)
    if not xs:
        raise PDError("empty diagram: no crossings")
    for x in xs:
        if len(x) != 4:
            raise PDError(f"crossing {x} does not have 4 labels")
        if any(v < 0 for v in x):
            raise PDError(f"negative arc label in {x}")
    return PDCode(xs, _components_of(xs))


_X_RE = re.compile(r"[Xx]\s*[\(\[]\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*[\)\]]")


def parse_pd(text: str) -> PDCode:
    """Parse ``X(a,b,c,d)`` terms separated by whitespace/commas.

    ``#`` starts a comment running to end of line.  Raises :class:`PDError`
    with the character position of any syntax error.
    """
    crossings = []
    pos = 0
    n = len(text)
    while True:
        # separators and comments
        while pos < n:
            if text[pos] in " \t\r\n,;":
                pos += 1
            elif text[pos] == "#":
                nl = text.find("\n", pos)
                pos = n if nl < 0 else nl + 1
            else:
                break
        if pos >= n:
            break
        m = _X_RE.match(text, pos)
        if m is None:
            snippet = text[pos:pos + 20]
            raise PDError(f"syntax error at position {pos}: expected X(a,b,c,d), got {snippet!r}")
        crossings.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    return make_pd(crossings)


def serialize_pd(code: PDCode) -> str:
    return " ".join("X({},{},{},{})".format(*x) for x in code.crossings)


def pd_from_ports(links, n: int, incoming=None) -> PDCode:
    """Emit a PD code from a port-level description.

    Crossing ``i`` has ports ``(i, 0..3)`` in counterclockwise order, with
    ports 0 and 2 forming the under-strand.  ``links`` maps every port to the
    port at the other end of its arc (both directions must be present).

    Each component is traversed in a direction consistent with ``incoming``,
    a set of ports known to be arc heads; unconstrained components are
    traversed so that their smallest port is entered.  Labels are assigned
    consecutively along components starting at 1.
    """
    incoming = set(incoming or ())
    for i in range(n):
        for p in range(4):
            q = links.get((i, p))
            if q is None or links.get(q) != (i, p):
                raise PDError(f"port {(i, p)} is not linked symmetrically")

    def walk(entry):
        seq = []
        cur = entry
        while True:
            seq.append(cur)
            i, p = cur
            cur = links[(i, (p + 2) % 4)]
            if cur == entry:
                return seq
            if len(seq) > 4 * n:
                raise PDError("strand does not close up")

    label_of: dict = {}
    entries: set = set()
    next_label = 1
    for start in sorted(links):
        if start in label_of:
            continue
        seq = walk(start)
        exits = {(i, (p + 2) % 4) for i, p in seq}
        fwd_hint = incoming & set(seq)
        rev_hint = incoming & exits
        if fwd_hint and rev_hint:
            raise PDError(f"inconsistent orientation hints on the component through {start}")
        if rev_hint:
            i, p = start
            seq = walk((i, (p + 2) % 4))
        for port in seq:
            label_of[port] = next_label
            label_of[links[port]] = next_label
            entries.add(port)
            next_label += 1

    out = []
    for i in range(n):
        u = 0 if (i, 0) in entries else 2
        out.append(tuple(label_of[(i, (u + k) % 4)] for k in range(4)))
    return make_pd(out)


def mirror_pd(code: PDCode) -> PDCode:
    """PD code of the mirror image: same labels, over and under exchanged."""
    out = []
    for a, b, c, d in code.crossings:
        if code.successor(b) == d and code.successor(d) != b:
            out.append((b, c, d, a))
        elif code.successor(d) == b and code.successor(b) != d:
            out.append((d, a, b, c))
        else:
            # two-arc component: orientation is not recoverable from labels here
            from .diagram import build_diagram, mirror

            return mirror(build_diagram(code)).to_pd()
    return make_pd(out)


def relabel_pd(code: PDCode, rng) -> PDCode:
    """Random PD code of the same oriented diagram.

    Shuffles crossing order, rotates the starting arc of every component and
    permutes the order of the component label intervals.  ``rng`` is a
    :class:`random.Random`.
    """
    comps = list(code.components)
    order = list(range(len(comps)))
    rng.shuffle(order)
    base = 1
    mapping: dict[int, int] = {}
    for ci in order:
        lo, hi = comps[ci]
        m = hi - lo + 1
        shift = rng.randrange(m)
        for lab in range(lo, hi + 1):
            mapping[lab] = base + (lab - lo + shift) % m
        base += m
    xs = [tuple(mapping[v] for v in x) for x in code.crossings]
    rng.shuffle(xs)
    return make_pd(xs)


def pd_torus2(k: int) -> PDCode:
    """Closed 2-braid with ``k`` crossings, all positive.

    For even ``k`` the two components run parallel through the braid.
    """
    if k < 2:
        raise ValueError(f"T(2,k) needs k >= 2, got {k}")
    # ports ccw: 0=SW, 1=SE, 2=NE, 3=NW; under SW->NE, over SE->NW; braid runs upward
    links = {}
    incoming = set()
    for i in range(k):
        j = (i + 1) % k
        links[(i, 2)] = (j, 1)
        links[(j, 1)] = (i, 2)
        links[(i, 3)] = (j, 0)
        links[(j, 0)] = (i, 3)
        incoming |= {(i, 0), (i, 1)}
    return pd_from_ports(links, k, incoming)


def pd_pretzel(*twists: int) -> PDCode:
    """Alternating pretzel diagram with columns of ``twists[j]`` crossings.

    Components are oriented by :func:`pd_from_ports`' default rule.
    """
    if len(twists) < 2 or any(t < 1 for t in twists):
        raise ValueError(f"pretzel needs at least two columns of >= 1 crossing, got {twists}")
    # ports ccw: 0=NE, 1=NW, 2=SW, 3=SE; under NE-SW
    links = {}

    def join(a, b):
        links[a] = b
        links[b] = a

    tops, bottoms = [], []
    idx = 0
    for t in twists:
        col = list(range(idx, idx + t))
        idx += t
        for x, y in zip(col, col[1:]):
            join((x, 2), (y, 1))
            join((x, 3), (y, 0))
        tops.append(col[0])
        bottoms.append(col[-1])
    m = len(twists)
    for j in range(m):
        join((tops[j], 0), (tops[(j + 1) % m], 1))
        join((bottoms[j], 3), (bottoms[(j + 1) % m], 2))
    return pd_from_ports(links, idx)


def pd_twist(k: int) -> PDCode:
    """Twist knot: a ``k``-crossing twist region closed by a 2-crossing clasp.

    Built as the mirrored pretzel ``P(k, 1, 1)``, so it has ``k + 2`` crossings.
    Chirality: the twist-region crossings are positive.  The clasp is
    positive too for odd ``k`` and negative for even ``k`` (``k = 2`` is the
    figure-eight knot).
    """
    if k < 2:
        raise ValueError(f"twist knot needs k >= 2, got {k}")
    return mirror_pd(pd_pretzel(k, 1, 1))


class TableError(ValueError):
    """A knot-table file that cannot be loaded."""


@dataclass(frozen=True)
class TableRow:
    line: int
    name: KnotName
    pd: PDCode | None
    error: str | None = None


def _read_rows(path) -> list[TableRow]:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise TableError(f"cannot read {path}: {exc}") from exc
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise TableError(f"{path}: not UTF-8 ({exc})") from exc
    return parse_table_rows(text, path)


def parse_table_rows(text: str, path="<table>") -> list[TableRow]:
    """Table rows from already-decoded text; ``path`` is only used in messages."""
    rows: list[TableRow] = []
    seen: dict[str, int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "\t" not in line:
            raise TableError(f"{path}:{lineno}: expected 'name<TAB>pd-code'")
        name, _, body = line.partition("\t")
        name = name.strip()
        if not name:
            raise TableError(f"{path}:{lineno}: empty knot name")
        if name in seen:
            raise TableError(f"{path}:{lineno}: duplicate name {name!r} (first on line {seen[name]})")
        seen[name] = lineno
        try:
            rows.append(TableRow(lineno, KnotName(name), parse_pd(body)))
        except PDError as exc:
            rows.append(TableRow(lineno, KnotName(name), None, f"line {lineno}: {exc}"))
    return rows


def load_table(path) -> list[tuple[KnotName, PDCode]]:
    """Read ``name<TAB>pd-code`` lines; any bad line is an error naming its line."""
    out = []
    for row in _read_rows(path):
        if row.error:
            raise TableError(f"{path}:{row.error}")
        out.append((row.name, row.pd))
    return out


def load_table_rows(path) -> list[TableRow]:
    """Like :func:`load_table` but keeps unparsable PD codes as failed rows."""
    return _read_rows(path)
