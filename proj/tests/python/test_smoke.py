import csv
import io
import json
import os
import subprocess
from fractions import Fraction

import pytest

import quasicount as qc

FIRST_FORTY = [0, 0, 0, 0, 1, 1, 2, 3, 2, 3, 2, 5, 3, 4, 5, 5, 3, 6, 4, 7,
               7, 6, 4, 11, 5, 7, 6, 9, 5, 13, 6, 9, 9, 9, 9, 13, 7, 10, 11, 15]


def test_first_forty():
    assert [qc.qc_sum(n) for n in range(1, 41)] == FIRST_FORTY


def test_worked_example():
    t = qc.t_value(7, (7, 7, 7))
    assert t["case"] == "AllEqual"
    assert t["tau2"] == 2
    assert t["tau1"] is None
    assert t["value"] == 2
    assert t["product"] == Fraction(5, 6)
    assert t["genus"] == 3
    assert qc.signatures(8) == [(2, 8, 8), (4, 8, 8)]
    assert qc.genus(8, (4, 8, 8)) == 3


def test_methods_agree():
    for n in (8, 30, 35, 49, 200):
        assert qc.qc_closed(n) == qc.qc_sum(n) == qc.qc_oracle(n)
    assert qc.qc_closed(6) is None
    assert qc.qc_unified(49) == (Fraction(5, 6), 10)
    assert qc.corollary_constant(7) == Fraction(2, 3)


def test_big_values_are_python_ints():
    value = qc.qc_sum(223092870)
    assert isinstance(value, int)
    assert value == qc.qc_closed(223092870)
    assert qc.r_cyclic(1) == 1


def test_dessins_and_lloyd():
    assert qc.r_cyclic(7) == qc.dessin_pairs_oracle(7) == 8
    assert qc.lloyd_series(7) == [1, 0, 1, 2]
    assert qc.lloyd_series(11, 4)[4] == 8


def test_errors():
    with pytest.raises(ValueError):
        qc.t_value(8, (8, 8, 8))
    with pytest.raises(qc.OracleBoundError):
        qc.qc_oracle(5000)
    with pytest.raises(qc.DomainError):
        qc.verify("nothing", 100)


def test_verify_suites():
    for suite in ("recursions", "oracle", "corollary", "lloyd"):
        result = qc.verify(suite, 100)
        assert result["passed"], result["failures"]
        assert result["checked"] > 0


def test_report_json():
    rep = json.loads(qc.report(8, method="all"))
    assert rep["qc_sum"] == rep["qc_closed"] == rep["oracle"] == "3"
    assert [s["periods"] for s in rep["signatures"]] == [["2", "8", "8"], ["4", "8", "8"]]
    assert rep["consistent"] is True


def test_range_csv():
    text = qc.range_table(1, 40)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0].keys()) == ["n", "qc", "r_cn", "num_signatures", "min_genus", "max_genus"]
    assert [int(r["qc"]) for r in rows] == FIRST_FORTY
    assert rows[3]["min_genus"] == ""
    assert "\r" not in text


@pytest.mark.skipif("QUASICOUNT_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_matches_module():
    out = subprocess.run([os.environ["QUASICOUNT_CLI"], "range", "5", "5", "--format", "csv"],
                         capture_output=True, text=True, check=True).stdout
    assert out == qc.range_table(5, 5)
    assert out.splitlines()[1] == "5,1,6,1,2,2"
