"""Smoke tests for the pybirat module: counts, golden invariants, and a few
exact values cross-checked against the classical tables."""

import pybirat


def test_numerology_counts_and_families():
    expected = {1: (7, 3), 2: (13, 5), 3: (22, 8)}
    for n, (types, families) in expected.items():
        rows = pybirat.types(n)
        assert len(rows) == types
        assert len({(t["r"], t["a"]) for t in rows}) == families
        for t in rows:
            # The index relation, re-evaluated in Python.
            assert t["i"] == (t["r"] + 1) * t["b"] - (t["r"] - n - 1) * (
                t["a"] * t["b"] - 1
            )
            assert t["secant_degree"] == t["a"] * t["b"] - 1


def test_maximal_list_row_counts():
    assert len(pybirat.solve_n1()["rows"]) == 10
    assert len(pybirat.solve_n2()["rows"]) == 20
    assert len(pybirat.solve_n3_a4()["rows"]) == 3
    assert len(pybirat.solve_n3_a5()["rows"]) == 4
    assert len(pybirat.solve_n3_a5(b_min=1)["rows"]) == 15
    assert len(pybirat.solve_n3_easy()["rows"]) == 6


def test_first_curve_row_is_exact():
    row = pybirat.solve_n1()["rows"][0]
    assert row["case_id"] == "n1.i"
    assert (row["d"], row["g"], row["z"], row["e"]) == (5, 1, 1, 5)
    assert row["derivation"]  # every derived row carries its trace


def test_rejection_traces_are_populated():
    rejected = pybirat.solve_n3_a4()["rejected"]
    assert any(
        r["candidate"] == "b=1 z=10 d=8" and "not an integer" in r["reason"]
        for r in rejected
    )


def test_classification_counts():
    for n, rows in {1: 8, 2: 13, 3: 7}.items():
        report = pybirat.classify(n)
        assert report["theorem_row_count"] == rows
        for excluded in report["excluded"]:
            assert excluded["verdict"] in ("singular target", "nonexistent")
            assert excluded["citation"]
    assert len(pybirat.corollary()) == 18
    assert len(pybirat.corollary(expand_parametric=True)) == 21


def test_resolutions_all_verify():
    checks = pybirat.verify_resolutions()
    assert len(checks) == 13
    assert all(c["pass"] for c in checks)
    by_case = {c["case_id"]: c for c in checks}
    assert (
        by_case["51.viii"]["d"],
        by_case["51.viii"]["g"],
        by_case["51.viii"]["chi"],
    ) == (13, 19, 1)


def test_six_secant_count_matches_hand_value():
    count = pybirat.n6_4(20, 51, -55)
    assert count["applicable"]
    assert count["value"] == 29375
    # On the actual surface-section invariants the count vanishes.
    assert pybirat.n6_4(20, 51, 70)["value"] == 0


def test_liaison_is_an_involution():
    assert pybirat.liaison(17, 36, 5, 5) == (8, 9)
    assert pybirat.liaison(8, 9, 5, 5) == (17, 36)
