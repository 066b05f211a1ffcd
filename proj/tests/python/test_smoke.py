import json
from pathlib import Path

import pytest

import coprime_ramsey as cr

GOLDEN = Path(__file__).resolve().parents[1] / "golden"


def test_nth_prime():
    assert [cr.nth_prime(m) for m in range(1, 7)] == [2, 3, 5, 7, 11, 13]
    assert cr.nth_prime(1998) == 17383


@pytest.mark.parametrize(
    "demands, expected",
    [([3, 3], 7), ([10, 10], 61), ([3, 3, 3], 13), ([3, 4], 11), ([2, 2], 3)],
)
def test_r_cop(demands, expected):
    assert cr.r_cop(demands) == expected


def test_r_cop_rejects_bad_demands():
    with pytest.raises(ValueError):
        cr.r_cop([1, 3])


@pytest.mark.parametrize(
    "name",
    ["values", "mixed", "rank-table", "edge-summary", "edge-transfer", "imbalance",
     "support-primitive", "skip2", "window", "offdiag", "labels"],
)
def test_table_matches_cli_golden(name):
    assert cr.table(name) == (GOLDEN / f"{name}.csv").read_text()


def test_table_json_shape():
    doc = json.loads(cr.table("values", ks=[3, 10], format="json"))
    assert doc["columns"][0] == "k"
    assert [row["R_cop(k;2)"] for row in doc["rows"]] == [7, 61]


def test_table_errors():
    with pytest.raises(KeyError):
        cr.table("nosuch")
    with pytest.raises(ValueError):
        cr.table("values", format="xml")


def test_skip2_witness_round_trip():
    w = cr.skip2_witness(10)
    assert w.length == 60
    assert w.class_sizes(2) == [30, 30]
    assert cr.verify(w, [10, 10]) == (True, "")
    accepted, reason = cr.verify(w, [9, 9])
    assert not accepted and reason

    again = cr.Witness.from_json(w.to_json())
    assert again.colors == w.colors
    assert again.witness_primes == w.witness_primes


def test_tampered_witness_rejected():
    doc = json.loads(cr.skip2_witness(10).to_json())
    doc["witness_primes"][2] = 5   # vertex 3 claims prime 5
    accepted, reason = cr.verify(cr.Witness.from_json(json.dumps(doc)), [10, 10])
    assert not accepted
    assert "does not divide" in reason


def test_endpoint_decide():
    assert cr.balanced_endpoint_decide(3, 3) == ("no", 12, 79)
    outcome, n, _ = cr.balanced_endpoint_decide(4, 5, budget_ms=200)
    assert outcome == "unknown"
    assert n == cr.r_cop([5] * 4) - 1
