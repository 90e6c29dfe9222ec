"""Regenerate the vendored knot tables under data/.

Needs ``spherogram`` (PD codes, Hoste-Thistlethwaite names) and optionally
``database_knotinfo`` (an independent cross-check of the names).  Neither is a
runtime dependency of wrpinv.

    python scripts/make_fixtures.py [--check-knotinfo]

Each spherogram PD code is stored mirrored.  Under wrpinv's crossing-sign
rule this gives every name the chirality of the published WRP table, where
K3a1 is the trefoil with value {w^6, 2w^3 + 3w^2}.
"""

from __future__ import annotations

import argparse
import ast
import sys
import warnings
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from wrpinv.invariant import mirror_wrp, wrp_equal, wrp_of_pd  # noqa: E402
from wrpinv.pdcode import make_pd, mirror_pd, serialize_pd  # noqa: E402

ALTERNATING_COUNTS = {3: 1, 4: 1, 5: 2, 6: 3, 7: 7, 8: 18, 9: 41, 10: 123, 11: 367}

HEADER = """\
# Prime alternating knots, Hoste-Thistlethwaite names, {desc}.
# Source: spherogram {version} (Link(name).PD_code()), labels shifted to start at 1,
# each code mirrored so that K3a1 is the all-positive trefoil under wrpinv's sign rule.
# Generated by scripts/make_fixtures.py; format: name<TAB>pd-code.
"""


def spherogram_pd(name):
    import spherogram

    pd = spherogram.Link(name).PD_code()
    return mirror_pd(make_pd([tuple(v + 1 for v in x) for x in pd]))


def write_table(path, names, desc):
    import spherogram

    lines = [HEADER.format(desc=desc, version=spherogram.__version__)]
    for name in names:
        lines.append(f"{name}\t{serialize_pd(spherogram_pd(name))}\n")
    path.write_text("".join(lines), encoding="utf-8")
    print(f"wrote {len(names)} entries to {path}")


def check_knotinfo(names):
    """Compare against KnotInfo's PD codes for the same DT names (up to mirror)."""
    from database_knotinfo import link_list

    by_dt = {}
    for row in link_list()[1:]:
        dt = row.get("dt_name") or ""
        if row.get("pd_notation"):
            by_dt[dt] = row["pd_notation"]
    bad = 0
    for name in names:
        dt = name[1:].replace("a", "a_", 1)
        pd = by_dt.get(dt)
        if pd is None:
            print(f"  {name}: not in KnotInfo")
            continue
        ki = wrp_of_pd(make_pd(ast.literal_eval(pd)))
        ours = wrp_of_pd(spherogram_pd(name))
        if not (wrp_equal(ki, ours) or wrp_equal(mirror_wrp(ki), ours)):
            print(f"  {name}: WRP differs from KnotInfo {dt}")
            bad += 1
    print(f"KnotInfo cross-check: {len(names)} names, {bad} disagreements")


def main():
    warnings.filterwarnings("ignore")
    ap = argparse.ArgumentParser()
    ap.add_argument("--check-knotinfo", action="store_true")
    args = ap.parse_args()
    data = ROOT / "data"
    le10 = [f"K{n}a{i}" for n in range(3, 11) for i in range(1, ALTERNATING_COUNTS[n] + 1)]
    a11 = [f"K11a{i}" for i in range(1, ALTERNATING_COUNTS[11] + 1)]
    write_table(data / "alternating_le10.tsv", le10, "3 to 10 crossings")
    write_table(data / "alternating_11.tsv", a11, "11 crossings")
    if args.check_knotinfo:
        check_knotinfo(le10 + a11)


if __name__ == "__main__":
    main()
