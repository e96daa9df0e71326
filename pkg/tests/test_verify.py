import pytest

from monomial_lab.errors import DomainError
from monomial_lab.verify import hilbert_degrees, verify_family


@pytest.mark.parametrize("n,t", [(2, 1), (2, 3), (3, 3), (4, 2)])
def test_family_passes(n, t):
    report = verify_family(n, t)
    assert report.overall, [c for c in report.checks if not c.passed]
    assert report.observations["numerator_is_one"] is True


def test_overall_is_conjunction():
    report = verify_family(3, 2, kmax=1)
    failed = [c.claim_id for c in report.checks if not c.passed]
    assert failed == ["astab"]
    assert report.overall is False


def test_hilbert_window():
    assert hilbert_degrees(5) == 4
    assert hilbert_degrees(6) == 3


def test_invalid_params():
    with pytest.raises(DomainError):
        verify_family(1, 2)


def test_n2_embedded_primes_only_observed():
    report = verify_family(2, 2)
    assert "closure_embedded_primes" not in {c.claim_id for c in report.checks}
    assert report.observations["closure_embedded_primes"] is False
