import pytest

from indcomplex.calculus.spheres import format_space
from indcomplex.graph import NotAForestError, complete, cycle, path, star
from indcomplex.homology.chains import BettiVector
from indcomplex.verify import (
    RouteResult,
    UnknownHomotopyTypeError,
    VerificationReport,
    Verifier,
)


@pytest.fixture(scope="module")
def verifier():
    return Verifier()


def test_path_and_cycle(verifier):
    report = verifier.verify_expr("path:4", "cycle:5")
    assert set(report.routes) == {"brute", "recursion", "closed_form"}
    assert report.ok and report.fields_agree and report.euler_ok
    assert report.routes["brute"].betti.as_dict() == {2: 2, 3: 3}
    assert format_space(report.routes["closed_form"].space) == "S^2 v S^2 v 3·S^3"
    assert report.agreement == {
        "brute~recursion": True,
        "brute~closed_form": True,
        "recursion~closed_form": True,
    }


def test_star_with_complete(verifier):
    report = verifier.verify_expr("star:4", "complete:2")
    assert set(report.routes) == {"brute", "recursion", "domination"}
    assert report.ok
    assert report.routes["brute"].betti.as_dict() == {0: 2, 2: 1}
    assert report.routes["domination"].conn == -1
    assert report.routes["domination"].i_number == 1
    assert report.routes["domination"].i_brute == 1
    assert report.i_agrees is True
    assert report.routes["domination"].to_json() == {"i": 1, "i_brute": 1, "conn_H": -1}


def test_domination_route_checks_enumeration(verifier, monkeypatch):
    monkeypatch.setattr(
        "indcomplex.verify.predict_conn_lex_complete", lambda g, unsafe=False: 3
    )
    report = verifier.verify_expr("star:4", "complete:2")
    assert report.routes["domination"].i_number == 5
    assert report.routes["domination"].i_brute == 1
    assert not report.ok
    assert "i(G)" in report.disagreements()


def test_disconnected_line(verifier):
    report = verifier.verify_expr("path:2", "cycle:4")
    assert report.ok
    assert report.routes["brute"].betti.as_dict() == {0: 3}
    assert report.routes["closed_form"].space.component_count == 4


def test_wedge_override(verifier):
    # I(K_3) is two 0-spheres; the wedge flag supplies it directly
    report = verifier.verify(path(3), complete(3), wedge=(2, 0))
    assert report.ok
    assert "closed_form" in report.routes


def test_non_forest_skips_predictions(verifier):
    report = verifier.verify_expr("cycle:5", "complete:2")
    assert set(report.routes) == {"brute"}
    assert report.notices == ["G is not a forest: prediction routes skipped"]
    assert report.ok


def test_unknown_homotopy_type(verifier):
    report = verifier.verify_expr("path:2", "join(cycle:5,path:1)")
    assert set(report.routes) == {"brute"}
    assert "homotopy type of I(H) unknown" in report.notices[0]


def test_guard_hit_is_not_a_failure():
    report = Verifier({"max_faces": 5}).verify_expr("path:4", "cycle:5")
    assert "brute" not in report.routes
    assert report.guard_hits[0].startswith("brute:")
    assert report.ok
    assert "brute" in report.timings


def test_predict():
    report = Verifier().predict(path(5), cycle(5))
    assert set(report.routes) == {"recursion", "closed_form"}
    assert report.ok
    report = Verifier().predict(star(4), wedge=(3, 1))
    assert report.h_expr == "-"
    assert set(report.routes) == {"recursion"}


def test_predict_errors():
    verifier = Verifier()
    with pytest.raises(NotAForestError):
        verifier.predict(cycle(5), complete(2))
    with pytest.raises(UnknownHomotopyTypeError, match="--wedge"):
        verifier.predict(path(3))
    with pytest.raises(ValueError, match="n >= 1"):
        verifier.predict(path(3), wedge=(0, 1))


class TestAgreement:
    def test_prefers_spaces(self):
        from indcomplex.calculus.spheres import sphere

        a = RouteResult("recursion", space=sphere(1), betti=BettiVector(((1, 1),)))
        b = RouteResult("closed_form", space=sphere(1, 2), betti=BettiVector(((1, 1),)))
        report = VerificationReport("g", "h", {"recursion": a, "closed_form": b})
        assert report.agreement == {"recursion~closed_form": False}
        assert not report.ok
        assert report.disagreements() == ["recursion~closed_form"]

    def test_falls_back_to_connectivity(self):
        a = RouteResult("brute", betti=BettiVector(((2, 1),)), conn=1)
        b = RouteResult("domination", conn=1)
        report = VerificationReport("g", "h", {"brute": a, "domination": b})
        assert report.ok

    def test_field_and_euler_failures(self):
        report = VerificationReport("g", "h", fields_agree=False, euler_ok=False)
        assert not report.ok
        assert report.disagreements() == ["fields", "euler"]

    def test_i_mismatch_fails(self):
        a = RouteResult("brute", betti=BettiVector(((1, 1),)), conn=0)
        b = RouteResult("domination", conn=0, i_number=2, i_brute=3)
        report = VerificationReport("g", "h", {"brute": a, "domination": b})
        assert report.agreement == {"brute~domination": True}
        assert report.i_agrees is False
        assert not report.ok
        assert report.disagreements() == ["i(G)"]


def test_json(verifier):
    report = verifier.verify_expr("path:4", "cycle:5")
    data = report.to_json(timings=False)
    assert "timings_ms" not in data
    assert data["instance"] == {"G": "path:4", "H": "cycle:5"}
    assert data["ok"] is True
    closed = data["routes"]["closed_form"]
    assert closed["terms"] == [[1, 2, 2], [2, 3, 3]]
    assert closed["conn_H"] == 1
    assert len(data["routes"]["brute"]["betti"]) == 2
    assert "timings_ms" in report.to_json()
