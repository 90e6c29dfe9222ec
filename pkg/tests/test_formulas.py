from wrpinv.formulas import torus2_formula, twist_formula, twist_report, twist_rows
from wrpinv.invariant import wrp_of_pd
from wrpinv.pdcode import pd_torus2


def test_torus_formula_holds_for_k_at_least_3():
    for k in range(3, 9):
        assert wrp_of_pd(pd_torus2(k)) == torus2_formula(k)


def test_hopf_link_differs_from_formula():
    # the two theta-graph edges merge into one of weight w^2
    assert str(wrp_of_pd(pd_torus2(2))) == "{w^4, w^4}"
    assert str(torus2_formula(2)) == "{w^4, 4w^2}"


def test_twist_formula_value():
    assert str(twist_formula(5)) == "{w^6 + 2w^5 + 2w^2, 2w^5 + w^4 + 3w^2}"


def test_twist_rows():
    verdicts = {row.k: row.agreement(row.formula_total) for row in twist_rows(2, 6)}
    assert verdicts[3] == verdicts[5] == "agree"
    for k in (2, 4, 6):
        assert verdicts[k] == "deviate (agree after setting r = w)"


def test_report_text():
    text = twist_report(2, 6)
    assert text.count("computed, mirror") == 5
    assert "k=6 (8 crossings)" in text
