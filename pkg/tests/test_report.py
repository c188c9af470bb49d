from composihedra.report import Check, RunReport, lemma_violations, natural_incidence_matches, verify


def test_run_catches_exceptions():
    rep = RunReport("x")
    rep.run("boom", lambda: 1 / 0)
    rep.run("fine", lambda: (True, "ok"))
    assert not rep.passed
    assert rep.checks[0].detail.startswith("ZeroDivisionError")
    assert "[FAIL] boom" in rep.text() and "[PASS] fine: ok" in rep.text()


def test_check_line():
    assert Check("a", True).line() == "[PASS] a"


def test_verify_small():
    for n in range(1, 5):
        rep = verify(n)
        assert rep.passed, rep.text()
    rep = verify(4, (3, 1, 2, 4))
    assert rep.passed and rep.counts["f-vector"] == [15, 23, 10]


def test_verify_skips():
    names = [c.name for c in verify(4, lattice=False, products=False).checks]
    assert "lattice isomorphism" not in names and "facet products" not in names


def test_lemmas_and_incidence():
    assert lemma_violations(4, (2, 1, 1, 3)) == []
    ok, _ = natural_incidence_matches(4, (1, 1, 2, 1))
    assert ok
