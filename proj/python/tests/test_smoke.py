import pytest

import cisgraphs as cg


def test_gallery_graphs():
    p4 = cg.gallery("P4")
    assert p4.order() == 4
    assert p4.edges() == [(0, 1), (1, 2), (2, 3)]
    assert cg.Graph.from_graph6(p4.graph6()) == p4
    assert "G12" in cg.gallery_names()
    with pytest.raises(ValueError):
        cg.gallery("nope")


def test_p4_memberships():
    p4 = cg.gallery("P4")
    assert cg.holds(p4, "split")
    assert cg.holds(p4, "aCIS")
    assert not cg.holds(p4, "CIS")
    assert not cg.holds(p4, "wtriangle")


def test_report_round_trip():
    report = cg.classify(cg.gallery("Cir9"), "Cir9", include_lp=True)
    assert report["schema"] == "cisgraphs.report/1"
    status = {p["property"]: p["status"] for p in report["properties"]}
    assert status["triangle"] == "holds"
    assert status["eq"] == "fails"
    assert cg.verify_report(report)


def test_equistable():
    assert cg.is_equistable(cg.Graph(3, [(0, 1), (0, 2), (1, 2)]))
    cert = cg.equistable_certificate(cg.gallery("P4"))
    assert cert["type"] == "forced_subset"
    assert cert["subset"] == [1, 2]


def test_line_graphs():
    k33 = cg.Graph(6, [(a, b) for a in range(3) for b in range(3, 6)])
    lk33 = cg.line_graph(k33)
    assert cg.is_isomorphic(lk33, cg.gallery("LK33"))
    assert cg.is_isomorphic(cg.root_graph(lk33), k33)
    assert cg.is_cis_line_root(k33)


def test_cliques_and_counts():
    assert len(cg.maximal_cliques(cg.gallery("G12"))) == 13
    assert len(cg.maximal_stable_sets(cg.gallery("G12"))) == 16
    assert [len(cg.all_graphs(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]


def test_scan_and_table():
    assert cg.scan_violations(5, include_lp=True) == 0
    cells = cg.verify_table()
    assert any(c["row"] == "CIS" and c["col"] == "cap-es" and c["outcome"] == "pass" for c in cells)
