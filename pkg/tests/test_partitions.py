"""Partitions and symmetric-group characters."""

import math
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from g3motives.partitions import (character, cycle_type, partitions,
                                  partitions_upto, zee)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partition_counts():
    for n, p in enumerate(PARTITION_COUNTS):
        assert len(partitions(n)) == p


def test_partitions_are_sorted_weakly_decreasing():
    for n in range(8):
        for mu in partitions(n):
            assert sum(mu) == n
            assert list(mu) == sorted(mu, reverse=True)


def test_partitions_upto():
    for n in range(6):
        assert len(list(partitions_upto(n))) == sum(PARTITION_COUNTS[:n + 1])


def test_zee_sums_to_factorial():
    # sum over partitions of n!/z_mu = number of permutations
    for n in range(1, 8):
        total = sum(math.factorial(n) // zee(mu) for mu in partitions(n))
        assert total == math.factorial(n)


def test_character_first_column_dimensions():
    # chi^mu(1^n) is the number of standard Young tableaux; spot values
    assert character((3,), (1, 1, 1)) == 1
    assert character((1, 1, 1), (1, 1, 1)) == 1
    assert character((2, 1), (1, 1, 1)) == 2
    assert character((2, 2), (1, 1, 1, 1)) == 2
    assert character((3, 1), (1, 1, 1, 1)) == 3


def test_character_orthogonality():
    # first orthogonality: sum_rho chi^mu(rho) chi^nu(rho) / z_rho = delta
    for n in range(1, 7):
        for mu in partitions(n):
            for nu in partitions(n):
                s = sum(
                    Fraction(character(mu, rho) * character(nu, rho),
                             zee(rho)) for rho in partitions(n))
                assert s == (1 if mu == nu else 0)


def test_sign_character():
    for n in range(1, 7):
        sign = tuple([1] * n)
        for rho in partitions(n):
            expect = (-1) ** (n - len(rho))
            assert character(sign, rho) == expect


@given(st.permutations(list(range(7))))
@settings(max_examples=50)
def test_cycle_type_is_partition(perm):
    mapping = {i: p for i, p in enumerate(perm)}
    rho = cycle_type(mapping, list(range(7)))
    assert sum(rho) == 7
    assert list(rho) == sorted(rho, reverse=True)
