import pytest

from wrpinv.diagram import build_diagram, mirror
from wrpinv.flype import (
    FlypeError,
    FlypeSpec,
    apply_flype,
    canonical_key,
    check_flype_invariance,
    find_flype_sites,
    isomorphic,
    reverse_site,
)
from wrpinv.invariant import wrp_of_diagram
from wrpinv.pdcode import pd_pretzel, relabel_pd

from .conftest import TREFOIL
from .test_diagram import KINKED_TREFOIL, NON_ALTERNATING_8_19


def test_trefoil_sites_are_degenerate():
    d = build_diagram(TREFOIL)
    sites = find_flype_sites(d)
    assert len(sites) == 6
    for s in sites:
        assert s.degenerate
        assert isomorphic(apply_flype(d, s), d)


def test_pretzel_has_nontrivial_flypes():
    d = build_diagram(pd_pretzel(2, 2, 1))
    sites = find_flype_sites(d)
    assert len(sites) == 10
    moved = [s for s in sites if not isomorphic(apply_flype(d, s), d)]
    assert moved
    for s in moved:
        out = apply_flype(d, s)
        assert wrp_of_diagram(out) == wrp_of_diagram(d)
        assert sorted(out.signs) == sorted(d.signs)


def test_flype_roundtrip(le10_by_name):
    d = build_diagram(le10_by_name["K8a1"])
    for s in find_flype_sites(d):
        out = apply_flype(d, s)
        back = apply_flype(out, reverse_site(out, s))
        assert isomorphic(back, d)


def test_canonical_key_ignores_numbering(le10):
    import random
    rng = random.Random(3)
    for _, code in le10[:30]:
        d = build_diagram(code)
        assert canonical_key(build_diagram(relabel_pd(code, rng))) == canonical_key(d)


def test_canonical_key_separates_mirrors(le10_by_name):
    d = build_diagram(le10_by_name["K3a1"])
    assert not isomorphic(d, mirror(d))


def test_rejects_bad_input():
    with pytest.raises(FlypeError, match="reduced"):
        find_flype_sites(build_diagram(KINKED_TREFOIL))
    with pytest.raises(FlypeError, match="alternating"):
        find_flype_sites(build_diagram(NON_ALTERNATING_8_19))


def test_rejects_bad_spec():
    d = build_diagram(TREFOIL)
    s = find_flype_sites(d)[0]
    bad = FlypeSpec(s.crossing_c, s.tangle, (s.boundary[2], s.boundary[3], s.boundary[0], s.boundary[1]))
    with pytest.raises(FlypeError):
        apply_flype(d, bad)


def test_check_report(le10_by_name):
    check = check_flype_invariance(build_diagram(le10_by_name["K7a1"]), shapes=True, roundtrip=True)
    assert check.passed
    assert check.sites > 0
    assert "PASS" in str(check)
