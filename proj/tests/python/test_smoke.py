"""Smoke tests for the python bindings."""

import qmyc


def test_classical_graph_roundtrip():
    g = qmyc.cycle(4)
    assert g.n == 4
    assert g.edge_count() == 4
    assert g.connected()
    assert qmyc.ClassicalGraph(g.adjacency) == g


def test_catalog_and_appendix():
    names = qmyc.catalog_names()
    assert "G6_38" in names and "K5" in names
    entry = qmyc.catalog_get("G6_38")
    assert entry["det"] == 0
    assert entry["has_twins"] is False
    report = qmyc.verify_appendix()
    assert report["mismatches"] == 0
    assert report["g38_unique_twin_free_singular"]
    assert report["matching_c10"] == "C10_j1234"


def test_twins_and_determinants():
    g38 = qmyc.ClassicalGraph(qmyc.catalog_get("G6_38")["graph"].adjacency)
    assert qmyc.classical_twins(g38) == []
    assert qmyc.det_adjacency(qmyc.complete(5)) == 4
    assert qmyc.twin_verdict(g38) == "NoQuantumTwins(PatternForced)"
    assert qmyc.twin_verdict(qmyc.complete(5)) == "NoQuantumTwins(InvertibleA)"


def test_mycielskian_of_k2_is_c5():
    mu = qmyc.mycielskian_classical(qmyc.complete(2), 2)
    assert mu.n == 5
    assert mu.edge_count() == 5
    assert all(mu.degree(v) == 2 for v in range(5))
    report = qmyc.check_classical(mu)
    assert report["all_pass"] and report["irreflexive"]
    assert abs(report["delta_sq"] - 5.0) < 1e-9


def test_quantum_path_on_m2():
    # complete quantum graph on M2 with the normalized trace
    eye = [[(1 if i == j else 0) for j in range(4)] for i in range(4)]
    eta = [1, 0, 0, 1]  # GNS coordinates of the unit, scaled by sqrt(w)
    import math

    w = math.sqrt(0.5)
    adj = [
        [4 * (eta[i] * w) * (eta[j] * w) - eye[i][j] for j in range(4)]
        for i in range(4)
    ]
    report = qmyc.check_quantum([2], [[0.5, 0.5]], adj)
    assert report["all_pass"] and report["irreflexive"]
    mu = qmyc.mycielskian_quantum([2], [[0.5, 0.5]], adj, 2)
    assert abs(mu["delta_sq"] - 9.0) < 1e-9
    assert mu["blocks"] == [1, 2, 2]


def test_distinguishing():
    assert qmyc.distinguishing_number(qmyc.cycle(6), 6) == 2
    assert qmyc.distinguishing_number(qmyc.complete(4), 4) == 4
    assert qmyc.is_distinguishing(qmyc.cycle(6), [1, 1, 2, 1, 2, 2])
    bound = qmyc.mycielski_distinguishing_bound(qmyc.path(4), 4)
    assert bound["bound_holds"] and bound["d_g"] == 2


def test_automorphisms():
    assert len(qmyc.automorphism_group(qmyc.cycle(5))) == 10
    assert len(qmyc.automorphism_group(qmyc.path(4))) == 2
