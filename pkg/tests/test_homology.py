import json

import pytest

from qtstirling.homology import (
    BoundaryError,
    boundary_gamma,
    boundary_of_chain,
    boundary_pi,
    build_complex,
    describe,
    expected_genfn,
    homology,
    report_json,
)
from qtstirling.posets import build_gamma, build_pi, match_gamma, match_pi, unmatched_genfn
from qtstirling.qtpoly import BiPoly, q
from qtstirling.rgwords import RGWord
from qtstirling.rookboards import RookPlacement
from qtstirling.snf import HAVE_COMPILED


def W(s):
    return RGWord.parse(s)


def test_boundary_of_word_example():
    assert boundary_pi(W("122344")) == {W("121344"): 1, W("122343"): -1}
    assert boundary_of_chain(boundary_pi(W("122344")), boundary_pi) == {}


def test_allowable_words_are_cycles():
    assert boundary_pi(W("12131")) == {}


def test_boundary_of_placements():
    # all rooks shaded: zero
    assert boundary_gamma(RookPlacement(5, ((1, 2), (1, 4)))) == {}
    # one unshaded rook: one term with sign +1
    T = RookPlacement(5, ((2, 2),))
    assert boundary_gamma(T) == {RookPlacement(5, ((3, 2),)): 1}


def test_d_squared_on_gamma_six_three():
    for T in build_gamma(6, 3).elements:
        assert boundary_of_chain(boundary_gamma(T), boundary_gamma) == {}


def test_matrix_shapes():
    cx = build_complex(build_pi(5, 3))
    assert [(m.nrows, m.ncols) for m in cx.boundaries[1:]] == [(6, 8), (8, 7), (7, 3), (3, 1)]
    cg = build_complex(build_gamma(4, 2))
    assert [(m.nrows, m.ncols) for m in cg.boundaries[1:]] == [(3, 4), (4, 3), (3, 1)]
    assert build_complex(build_pi(4, 4)).boundaries[1:] == ()


def test_homology_examples():
    r = homology(build_complex(build_pi(5, 3)))
    assert r.genfn() == 1 + q**2 + q**4
    assert r.torsion_free and r.basis_verified
    g = homology(build_complex(build_gamma(4, 2)))
    assert g.dims == (0, 0, 1, 0)
    p = homology(build_complex(build_pi(3, 3)))
    assert p.dims == (1,)


BACKENDS = ["python"] + (["compiled"] if HAVE_COMPILED else [])


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("n", range(1, 7))
def test_homology_closed_forms(n, backend):
    for k in range(1, n + 1):
        P = build_pi(n, k)
        M = match_pi(P)
        r = homology(build_complex(P), M, backend)
        assert r.genfn() == expected_genfn("pi", n, k) == unmatched_genfn(M)
        assert r.torsion_free and r.basis_verified
    for m in range(0, n):
        G = build_gamma(n, m)
        M = match_gamma(G)
        r = homology(build_complex(G), M, backend)
        assert r.genfn() == expected_genfn("gamma", n, m) == unmatched_genfn(M)
        assert r.torsion_free and r.basis_verified


def test_basis_check_rejects_a_bad_claim():
    # claiming every rank-1 element as a generator cannot give a basis
    from qtstirling.posets import Matching

    P = build_pi(4, 2)
    cx = build_complex(P)
    wrong = Matching(P, (), tuple(h for h in range(len(P)) if P.ranks[h] == 1))
    assert not homology(cx, wrong).basis_verified


def test_broken_boundary_is_detected(monkeypatch):
    import qtstirling.homology as H

    original = H.boundary_pi
    # dropping the alternating signs breaks d o d = 0
    monkeypatch.setattr(H, "boundary_pi", lambda w: {k: 1 for k in original(w)})
    with pytest.raises(BoundaryError):
        H.build_complex(build_pi(6, 4))


def test_reports():
    cx = build_complex(build_pi(5, 3))
    r = homology(cx)
    obj = json.loads(report_json(cx, r, matrices=True))
    assert [x["dim"] for x in obj["ranks"]] == [1, 0, 1, 0, 1]
    assert obj["ranks"][2]["basis"] == ["11233"]
    assert len(obj["boundaries"]) == 4
    text = describe(cx, r)
    assert "H_4: rank 1" in text and "basis verified: yes" in text


def test_expected_genfn_examples():
    assert expected_genfn("gamma", 5, 2) == q**2
    assert expected_genfn("pi", 5, 3) == BiPoly({(0, 0): 1, (2, 0): 1, (4, 0): 1})
