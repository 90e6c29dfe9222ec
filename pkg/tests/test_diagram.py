import pytest

from wrpinv.diagram import (
    Color,
    DiagramError,
    SplitDiagramError,
    build_diagram,
    checkerboard,
    crossing_sign,
    faces,
    is_alternating,
    mirror,
    sign_counts,
    validate_reduced,
)
from wrpinv.pdcode import mirror_pd, parse_pd, pd_torus2, pd_twist

from .conftest import TREFOIL

KINKED_TREFOIL = "X(2,5,3,6) X(4,1,5,2) X(10,3,1,4) X(6,10,7,9) X(7,9,8,8)"
GRANNY = "X(2,5,3,6) X(6,3,7,4) X(4,7,5,8) X(8,11,9,12) X(12,9,1,10) X(10,1,11,2)"
NON_ALTERNATING_8_19 = "X(16,6,1,5) X(6,2,7,1) X(11,3,12,2) X(3,15,4,14) X(4,10,5,9) X(12,8,13,7) X(8,14,9,13) X(15,11,16,10)"


def test_trefoil_diagram():
    d = build_diagram(TREFOIL)
    assert d.n == 3
    assert d.signs == (1, 1, 1)
    assert len(faces(d)) == 5
    assert is_alternating(d)
    assert validate_reduced(d).ok


def test_mirror_trefoil_is_all_negative():
    assert build_diagram(mirror_pd(parse_pd(TREFOIL))).signs == (-1, -1, -1)
    assert mirror(build_diagram(TREFOIL)).signs == (-1, -1, -1)


def test_hopf_link():
    d = build_diagram(pd_torus2(2))
    assert d.n == 2
    assert len(d.faces) == 4
    assert d.component_count() == 2


def test_sign_rule():
    # over-strand entering one port counterclockwise after the under-strand is positive
    assert crossing_sign(0, 1) == 1
    assert crossing_sign(0, 3) == -1
    assert crossing_sign(2, 3) == 1
    assert crossing_sign(3, 0) == 1


def test_euler_and_shading_on_fixtures(le10):
    for _, code in le10:
        d = build_diagram(code)
        assert len(d.faces) == d.n + 2
        corners = sum(len(f.corners) for f in d.faces)
        assert corners == 4 * d.n
        for i in range(d.n):
            for k in range(4):
                assert d.color_at(i, k) != d.color_at(i, (k + 1) % 4)
        assert is_alternating(d)
        assert validate_reduced(d).ok


def test_black_faces_at_under_in_corner_alternate(le10):
    # in an alternating diagram every crossing sees the same colour on the
    # corner right after its incoming under-strand, up to the sign
    for _, code in le10[:40]:
        d = build_diagram(code)
        seen = {(d.signs[i], d.color_at(i, d.under_in(i))) for i in range(d.n)}
        assert len({c for s, c in seen if s == 1}) <= 1


def test_outer_color_choice():
    d = build_diagram(TREFOIL)
    e = checkerboard(d, Color.BLACK)
    assert d.faces[0].color is Color.WHITE
    assert e.faces[0].color is Color.BLACK
    for f, g in zip(d.faces, e.faces):
        assert g.color is f.color.other()


def test_to_pd_roundtrip(le10):
    for _, code in le10[:50]:
        d = build_diagram(code)
        again = build_diagram(d.to_pd())
        assert sorted(again.signs) == sorted(d.signs)
        assert d.to_pd() == again.to_pd()


def test_nugatory_crossing_detected():
    # trefoil after two random Reidemeister moves; crossings 3 and 4 are kinks
    d = build_diagram(KINKED_TREFOIL)
    report = validate_reduced(d)
    assert not report.ok
    assert report.nugatory == [3, 4]
    assert '"status": "FAIL"' in report.to_json()


def test_figure_eight_kink():
    d = build_diagram("X(1,1,2,2)")  # one-crossing unknot
    report = validate_reduced(d)
    assert report.nugatory == [0]
    assert not report.ok


def test_split_diagram_rejected():
    split = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) X(7,10,8,11) X(9,12,10,7) X(11,8,12,9)"
    with pytest.raises(SplitDiagramError):
        build_diagram(split)


def test_nonplanar_rejected():
    # figure-eight with one crossing's rotation reversed
    with pytest.raises(DiagramError, match="not planar"):
        build_diagram("X(8,6,1,5) X(4,1,5,2) X(2,8,3,7) X(6,4,7,3)")


def test_composite_warning():
    report = validate_reduced(build_diagram(GRANNY))
    assert report.ok
    assert report.non_prime_warning
    assert report.warnings()


def test_prime_fixtures_have_no_warning(le10):
    for _, code in le10:
        assert not validate_reduced(build_diagram(code)).non_prime_warning


def test_twist_signs():
    assert sign_counts(build_diagram(pd_twist(3))) == {1: 5}
    assert sign_counts(build_diagram(pd_twist(2))) == {1: 2, -1: 2}


def test_reversed_orientation_keeps_signs_of_knots(le10):
    for _, code in le10[:20]:
        d = build_diagram(code)
        assert d.reversed().signs == d.signs


def test_non_alternating_detected():
    # 8_19 is non-alternating
    d = build_diagram(NON_ALTERNATING_8_19)
    assert not is_alternating(d)
