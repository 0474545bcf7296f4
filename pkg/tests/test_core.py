import pytest

from chromaloc.core import INF, DomainError, ParseError, Prime, PrimeError, extnat, format_extnat


@pytest.mark.parametrize("n", [2, 3, 5, 7, 65537, 2**61 - 1, 2**127 - 1])
def test_primes_accepted(n):
    assert Prime(n) == n
    assert str(Prime(n)) == str(n)


@pytest.mark.parametrize("n", [-3, 0, 1, 4, 9, 65535, 2**61 + 1, 561])
def test_non_primes_rejected(n):
    with pytest.raises(PrimeError):
        Prime(n)


@pytest.mark.parametrize("bad", [2.0, "2", True, None])
def test_prime_rejects_non_ints(bad):
    with pytest.raises(PrimeError):
        Prime(bad)


def test_extnat():
    assert extnat(0) == 0
    assert extnat("inf") == INF
    assert extnat("12") == 12
    assert min(3, INF) == 3 and max(3, INF) == INF
    assert format_extnat(INF) == "inf" and format_extnat(4) == "4"
    for bad in (-1, "x", 1.5, True):
        with pytest.raises(DomainError):
            extnat(bad)


def test_parse_error_message():
    err = ParseError("unexpected ')'", 4, frozenset({"id", "("}))
    assert err.offset == 4
    assert "offset 4" in str(err) and "(, id" in str(err)
