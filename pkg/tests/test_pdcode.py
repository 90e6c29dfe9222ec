import random

import pytest

from wrpinv.pdcode import (
    KnotName,
    PDError,
    TableError,
    load_table,
    load_table_rows,
    make_pd,
    mirror_pd,
    parse_pd,
    parse_table_rows,
    pd_pretzel,
    pd_torus2,
    pd_twist,
    relabel_pd,
    serialize_pd,
)

from .conftest import TREFOIL


def test_parse_trefoil():
    code = parse_pd(TREFOIL)
    assert code.crossings == ((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3))
    assert code.n == 3
    assert code.component_count == 1
    assert serialize_pd(code) == TREFOIL


@pytest.mark.parametrize("text", [
    "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)",
    "X[1, 4, 2, 5]\nX[3, 6, 4, 1]\r\nX[5, 2, 6, 3]",
    "# trefoil\nX(1,4,2,5) X(3,6,4,1)   # two\n X(5,2,6,3)",
    "x(1,4,2,5); x(3,6,4,1); x(5,2,6,3)",
])
def test_parse_accepts_separators_and_comments(text):
    assert parse_pd(text) == parse_pd(TREFOIL)


def test_syntax_error_reports_position():
    with pytest.raises(PDError, match="position 11"):
        parse_pd("X(1,4,2,5) Y(3,6,4,1)")


@pytest.mark.parametrize("text, msg", [
    ("", "empty"),
    ("X(1,4,2,5) X(3,6,4,1)", "twice|appear"),
    ("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) X(5,2,6,3)", "twice|appear"),
])
def test_invalid_codes(text, msg):
    with pytest.raises(PDError, match=msg):
        parse_pd(text)


def test_rejects_non_successive_numbering():
    # trefoil with labels 2 and 5 swapped breaks the interval structure
    with pytest.raises(PDError):
        parse_pd("X(1,4,5,2) X(3,6,4,1) X(2,5,6,3)")


def test_link_components():
    hopf = pd_torus2(2)
    assert hopf.component_count == 2
    assert hopf.components == ((1, 2), (3, 4))
    assert hopf.successor(2) == 1


@pytest.mark.parametrize("k", range(2, 9))
def test_torus_generator(k):
    code = pd_torus2(k)
    assert code.n == k
    assert code.component_count == (1 if k % 2 else 2)
    assert parse_pd(serialize_pd(code)) == code


def test_torus3_is_the_trefoil_fixture_reordered():
    assert sorted(pd_torus2(3).crossings) == sorted(parse_pd(TREFOIL).crossings)


@pytest.mark.parametrize("k", range(2, 9))
def test_twist_generator(k):
    code = pd_twist(k)
    assert code.n == k + 2
    assert code.component_count == 1


def test_pretzel_component_count():
    assert pd_pretzel(1, 1, 1).component_count == 1
    assert pd_pretzel(2, 2, 2).component_count == 3


def test_generators_reject_small_k():
    with pytest.raises(ValueError):
        pd_torus2(1)
    with pytest.raises(ValueError):
        pd_twist(1)


def test_mirror_is_involution():
    code = parse_pd(TREFOIL)
    assert mirror_pd(mirror_pd(code)) == code
    assert mirror_pd(code) != code


def test_relabel_keeps_invariants(le10):
    rng = random.Random(7)
    for _, code in le10[:30]:
        new = relabel_pd(code, rng)
        assert new.n == code.n
        assert new.component_count == code.component_count


def test_roundtrip_all_fixtures(le10, a11):
    for _, code in le10 + a11:
        assert parse_pd(serialize_pd(code)) == code


def test_knot_name():
    assert str(KnotName("K3a1")) == "K3a1"
    assert str(KnotName("K3a1", mirror=True)) == "K3a1m"


def test_load_table(tmp_path):
    f = tmp_path / "t.tsv"
    f.write_text(f"# comment\n\nK3a1\t{TREFOIL}\r\nHopf\tX(1,3,2,4) X(4,2,3,1)\n", encoding="utf-8")
    rows = load_table(f)
    assert [str(n) for n, _ in rows] == ["K3a1", "Hopf"]
    assert rows[0][1] == parse_pd(TREFOIL)


def test_load_table_errors_name_line(tmp_path):
    f = tmp_path / "t.tsv"
    f.write_text(f"K3a1\t{TREFOIL}\nbad\tX(1,2\n", encoding="utf-8")
    with pytest.raises(TableError, match="line 2"):
        load_table(f)
    rows = load_table_rows(f)
    assert rows[1].pd is None and "line 2" in rows[1].error


def test_load_table_structural_errors(tmp_path):
    f = tmp_path / "t.tsv"
    f.write_text(f"K3a1 {TREFOIL}\n", encoding="utf-8")
    with pytest.raises(TableError, match=":1:"):
        load_table(f)
    with pytest.raises(TableError, match="duplicate"):
        parse_table_rows(f"a\t{TREFOIL}\na\t{TREFOIL}\n")
    with pytest.raises(TableError, match="cannot read"):
        load_table(tmp_path / "missing.tsv")


def test_empty_table(tmp_path):
    f = tmp_path / "t.tsv"
    f.write_text("", encoding="utf-8")
    assert load_table(f) == []


def test_vendored_counts(le10, a11):
    assert len(le10) == 196
    assert len(a11) == 367
    assert str(le10[0][0]) == "K3a1"
    assert le10[0][1].n == 3
