"""Smoke tests for the python bindings."""

import json

import pytest

import prmpir


def test_params_and_construction():
    assert prmpir.prm_params(4, 2) == (11, 6, 4)
    code = prmpir.build_prm(4, 2)
    assert (code.n, code.k, code.tau) == (11, 6, 4)
    assert code.coordinates[0] == 0b11  # {1,2}
    assert code.coordinate_labels[0] == "{1,2}"
    assert code.generator[0][:6] == "100000"
    assert code.check_invariants(full_coverage=True) == ""


def test_encode_retrieve_roundtrip():
    code = prmpir.build_prm(4, 2)
    codeword = code.encode("100000")
    assert codeword == "10000011001"
    for t in range(code.tau):
        assert code.retrieve(codeword, 0, t) == 1
    with pytest.raises(ValueError):
        code.encode("10")


def test_shortening():
    row = prmpir.shorten_row(5, 2, 4)
    assert row["rho"] == [0, 1, 1]
    assert sorted(row["family"]) == ["{1,2,3}", "{1,4}"]
    assert (row["gamma_prime"], row["k"], row["n"]) == (5, 6, 21)

    code = prmpir.build_sprm(5, 2, 4)
    assert (code.n, code.k, code.tau) == (21, 6, 8)
    assert code.check_invariants() == ""

    shorter = prmpir.arbitrary_shorten(code, [0])
    assert shorter.k == code.k - 1
    assert shorter.tau == code.tau

    punctured = prmpir.puncture(code)
    assert (punctured.n, punctured.tau) == (code.n - 1, code.tau - 1)


def test_bounds_and_tables():
    assert prmpir.lb_systematic(6, 3) == 10
    report, code = prmpir.best_code(6, 4)
    assert report["achieved"] == 11 and report["optimal"]
    assert (code.n, code.k, code.tau) == (11, 6, 4)

    rows = [json.loads(r) for r in prmpir.table1()]
    assert len(rows) == 10
    assert rows[4]["gamma_prime"] == 5

    cells = [json.loads(c) for c in prmpir.table2()]
    assert len(cells) == 124
    assert all(c["n1"] <= c["n2"] for c in cells)


def test_distance_oracles():
    code = prmpir.build_prm(4, 2)
    assert prmpir.min_distance(code.generator) == 4
    assert prmpir.ghw(code.generator, 2) == 6
    assert prmpir.gf2_rank(code.generator) == 6
    assert prmpir.ghw_upper(5, 2, 9) == (1, 8)


def test_simulation_and_audit():
    code = prmpir.build_prm(4, 3)
    result = prmpir.simulate(code, records=3, trials=500, seed=1)
    assert result["correct"] == result["trials"] == 500

    audit = prmpir.privacy_audit(code, records=2, trials_per_target=4000, seed=0)
    assert audit["pass"]

    broken = prmpir.privacy_audit(
        code, records=2, trials_per_target=4000, seed=0, plaintext_client=True
    )
    assert not broken["pass"]
