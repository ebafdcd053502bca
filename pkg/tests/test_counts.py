"""Finite-field counting harness: censuses, masses, reconstruction."""

from fractions import Fraction

import pytest

from g3motives import counts, lowgenus
from g3motives.lowgenus import _data_path as data_path
from g3motives.errors import (UnsupportedCharacteristic,
                              UnsupportedPrimePower, ValidationError)
from g3motives.motives import trace


def total_mass(census):
    return sum(z.weight for z in census)


def test_charpoly_from_counts_pins():
    # supersingular over F_2: N = 3 -> x^2 + 2
    assert counts.charpoly_from_counts((3,), 1, 2) == (1, 0, 2)
    assert counts.charpoly_from_counts((4,), 1, 3) == (1, 0, 3)
    # trace -2 curve over F_2: N = 5
    assert counts.charpoly_from_counts((5,), 1, 2) == (1, 2, 2)


def test_zetaclass_validate_rejects_bad():
    with pytest.raises(ValidationError):
        counts.ZetaClass(2, 1, (1, 0), Fraction(1)).validate()
    with pytest.raises(ValidationError):
        # functional equation fails: constant term must be q
        counts.ZetaClass(2, 1, (1, 0, 3), Fraction(1)).validate()
    with pytest.raises(ValidationError):
        # trace 5 over F_2 violates positivity of point counts
        counts.ZetaClass(2, 1, (1, -5, 2), Fraction(1)).validate()


@pytest.mark.parametrize("q", [2, 3, 5])
def test_genus1_mass_identity(q):
    assert total_mass(counts.enum_genus1(q)) == q


@pytest.mark.parametrize("q", [2, 3, 5])
def test_genus1_traces_match_closed_form(q):
    census = counts.enum_genus1(q)
    for a in (0, 2, 4, 6, 8, 10):
        assert counts.mass_trace((a,), q, census) == \
            trace(lowgenus.ec_a1(a), q)


def test_genus2_mass_and_traces():
    census = counts.enum_hyperelliptic(2, 3)
    assert total_mass(census) == 27  # q^3
    for lam in [(0, 0), (2, 0), (1, 1), (4, 2), (3, 3)]:
        assert counts.mass_trace(lam, 3, census) == \
            trace(lowgenus.ec_m2_local(lam), 3)
    # odd-weight local systems have vanishing mass sums
    for lam in [(1, 0), (2, 1), (3, 2)]:
        assert counts.mass_trace(lam, 3, census) == 0


def test_hyperelliptic_even_char_unsupported():
    with pytest.raises(UnsupportedCharacteristic):
        counts.enum_hyperelliptic(2, 2)
    with pytest.raises(UnsupportedPrimePower):
        counts.enum_hyperelliptic(2, 9)


def test_quartic_census_q2():
    census = counts.enum_quartics(2)
    assert len(census) == 73
    assert total_mass(census) == 65  # q^6 + 1


def test_genus3_shipped_census():
    census = counts.read_census(str(data_path("census_3_3.csv")))
    assert len(census) == 479
    assert total_mass(census) == 973  # q^6 + q^5 + 1
    assert counts.mass_trace((2, 1, 0), 3, census) == 720


def test_genus3_split_masses():
    # quartics carry q^6 + 1, hyperelliptics q^5
    assert total_mass(counts.enum_hyperelliptic(3, 3)) == 243


def test_census_roundtrip(tmp_path):
    census = counts.enum_genus1(3)
    path = str(tmp_path / "census_1_3.csv")
    counts.write_census(census, path)
    back = counts.read_census(path)
    assert back == census


def test_shipped_genus2_censuses_consistent():
    for q in (3, 5, 7, 11, 13, 17):
        census = counts.read_census(str(data_path(
            counts.census_filename(2, q))))
        assert total_mass(census) == q ** 3
