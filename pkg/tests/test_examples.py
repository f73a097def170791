import pytest

from etgrs import EtgrsError
from etgrs.examples import EXAMPLES, reproduce
from etgrs.reports import ClaimStatus


def _statuses(report):
    return [claim.status for claim in report.claims]


def test_registry():
    assert sorted(EXAMPLES) == [1, 2, 3, 4]
    assert len(EXAMPLES[3].pairs) == 22
    assert len(EXAMPLES[4].pairs) == 110


def test_example1():
    report = reproduce(1)
    assert report.passed
    assert _statuses(report) == [ClaimStatus.PASS]
    assert report.claims[0].observed == "MDS [8,3,6]"


def test_example2():
    report = reproduce(2)
    assert report.passed
    assert _statuses(report) == [ClaimStatus.PASS] * 6
    assert {claim.statement for claim in report.claims} == {"MDS [7,4,4]"}


def test_example3():
    report = reproduce(3)
    assert report.passed
    assert _statuses(report) == [ClaimStatus.PASS] * 22
    assert all(claim.observed == "NMDS [8,3,5], dual distance 3" for claim in report.claims)


def test_example4_flags_deviations():
    report = reproduce(4)
    assert report.passed
    *pairs, parameters = report.claims
    assert len(pairs) == 110
    deviations = [claim.label for claim in pairs if claim.status is ClaimStatus.DEVIATION]
    # delta = 0 makes the column of the point 0 equal to the last tail column
    assert deviations == [f"(eta, delta) = ({eta}, 0)" for eta in range(1, 11)]
    assert sum(claim.status is ClaimStatus.PASS for claim in pairs) == 100
    assert parameters.status is ClaimStatus.DEVIATION
    assert parameters.statement == "dual parameters [8,4,4]"
    assert parameters.observed == "[8,5,3]"
    assert "dependent-k-minus-1-columns" in {finding.kind for finding in report.findings}


def test_unknown_example():
    with pytest.raises(EtgrsError, match="unknown example 5"):
        reproduce(5)
