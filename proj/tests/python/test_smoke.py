import pytest

import semitotal


def test_solve_edge():
    g = semitotal.generate("path", 2)
    assert semitotal.solve(g, "gamma_t2") == (2, [0, 1])
    assert semitotal.solve(g, "gamma_t2", method="oracle") == (2, [0, 1])


def test_graph6_and_product():
    c4 = semitotal.cartesian_product(semitotal.generate("path", 2), semitotal.generate("path", 2))
    assert c4.graph6() == "Cr"
    assert semitotal.parse_graph6("Cr") == c4
    assert c4.order == 4 and c4.edge_count == 4
    assert c4.dist(0, 3) == 2


def test_predicates_and_sets():
    c6 = semitotal.generate("cycle", 6)
    assert semitotal.is_semitotal_dominating(c6, [0, 2, 4])
    assert not semitotal.is_semitotal_dominating(c6, [0, 3])
    assert semitotal.is_two_packing(c6, [0, 3])
    assert len(semitotal.enumerate_min_semitotal_sets(c6)) == 14
    ap = semitotal.max_allied_set(c6)
    assert ap["allied"] == [0, 1] and ap["free"] == [3]


def test_errors():
    iso = semitotal.Graph(2)
    with pytest.raises(semitotal.PreconditionError):
        semitotal.solve(iso, "gamma")
    with pytest.raises(ValueError):
        semitotal.parse_graph6("A@")
    with pytest.raises(ValueError):
        semitotal.generate("cycle", 2)


def test_verify_pair_and_scan():
    rec = semitotal.verify_pair("path:2", "path:2")
    assert rec["gamma_t2_prod"] == 2
    assert rec["ratio"] == {"num": 1, "den": 2}
    assert rec["replay"]["claim1"] == "pass"
    records = semitotal.scan("paths:2-3 x cycles:3-4", workers=2)
    assert [r["id"].split(" x ")[0].split("=")[0] for r in records] == ["path:2"] * 2 + ["path:3"] * 2
    assert all(r["thm2_holds"] for r in records)
