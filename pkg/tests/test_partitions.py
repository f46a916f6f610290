"""Partition counts, the type-D quantities, and the tau injection.

The recurrence-based p(n) is cross-checked against literal enumeration,
and tau is checked exhaustively for injectivity on a range of weights.
"""

import pytest

from heckeverify.partitions import (
    PartitionError, p, partitions_of, ordered_pairs,
    typeD_count, typeD_bound, tau, tau_injective_on, check_inequalities,
)


def brute_p(n):
    return sum(1 for _ in partitions_of(n))


@pytest.mark.parametrize("n", range(0, 26))
def test_p_matches_enumeration(n):
    assert p(n) == brute_p(n)


def test_p_known_values():
    # frozen reference values
    assert [p(n) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert p(20) == 627
    assert p(50) == 204226
    assert p(100) == 190569292


def test_p_negative_is_zero():
    assert p(-1) == 0
    assert p(-5) == 0


def test_ordered_pairs_small():
    # n=2: (2|-), (11|-), (1|1), (-|2), (-|11)
    assert ordered_pairs(0) == 1
    assert ordered_pairs(1) == 2
    assert ordered_pairs(2) == 5
    brute = sum(brute_p(i) * brute_p(4 - i) for i in range(5))
    assert ordered_pairs(4) == brute


def test_typeD_count_values():
    want = {4: 13, 5: 18, 6: 37, 7: 55, 8: 100, 9: 150,
            10: 251, 11: 376, 12: 599}
    for n, v in want.items():
        assert typeD_count(n) == v, n


def test_typeD_count_is_unordered_pair_count():
    # direct enumeration of unordered pairs, equal pairs counted twice
    for n in range(4, 12):
        count = 0
        for i in range(n + 1):
            for a in partitions_of(i):
                for b in partitions_of(n - i):
                    if (i, a) < (n - i, b):
                        count += 1
                    elif (i, a) == (n - i, b):
                        count += 2
        assert typeD_count(n) == count, n


def test_typeD_bound_values():
    want = {4: 16, 5: 32, 6: 48, 7: 96, 8: 144, 9: 288,
            10: 432, 11: 864, 12: 1296}
    for n, v in want.items():
        assert typeD_bound(n) == v, n


def test_typeD_domain_errors():
    with pytest.raises(PartitionError):
        typeD_count(3)
    with pytest.raises(PartitionError):
        typeD_bound(2)


def test_tau_examples():
    img, branch = tau((8, 2), 10)
    assert img == (2, 2, 2, 1, 1)
    assert branch == "two-part-rewrite"
    img, branch = tau((4, 3, 3), 10)
    assert img == (4, 2, 1, 1)
    assert branch == "three-to-two-ones"
    # weight n-1 case just decrements the last part
    img, branch = tau((5, 4), 10)
    assert img == (5, 3)
    assert branch == "drop-one-from-last"
    img, branch = tau((6, 4), 10)
    assert img == (6, 1, 1)
    assert branch == "last-to-ones"
    img, branch = tau((4, 4, 2), 10)
    assert img == (4, 4)
    assert branch == "drop-final-two"
    img, branch = tau((5, 3, 2), 10)
    assert img == (4, 1, 1, 1, 1)
    assert branch == "merge-spread"


def test_tau_domain_errors():
    with pytest.raises(PartitionError):
        tau((5, 2), 7)          # n too small
    with pytest.raises(PartitionError):
        tau((4, 2, 1), 9)       # part below 2
    with pytest.raises(PartitionError):
        tau((2, 3), 8)          # not weakly decreasing
    with pytest.raises(PartitionError):
        tau((3, 3), 10)         # weight neither n nor n-1


@pytest.mark.parametrize("n", range(8, 31))
def test_tau_injective(n):
    assert tau_injective_on(n)


@pytest.mark.parametrize("n", range(8, 31))
def test_tau_counts_force_doubling_bound(n):
    # domain size p(n)-p(n-2) must fit inside p(n-2)
    dom = sum(1 for parts in partitions_of(n, min_part=2))
    dom += sum(1 for parts in partitions_of(n - 1, min_part=2))
    assert dom == p(n) - p(n - 2)
    assert dom <= p(n - 2)


def test_check_inequalities_all_hold():
    results = check_inequalities(200, tau_max=40)
    assert len(results) == 7
    for rec in results:
        assert rec["holds"], rec
    # the doubling inequality is tight (equality) at n=8 and n=9
    doubling = next(r for r in results if "2 p(n-2)" in r["name"])
    assert doubling["tightest_margin"] == 0
    assert doubling["at_n"] in (8, 9)


def test_triple_bound_fails_below_stated_range():
    # 3*typeD_count(5) = 54 < 55 = typeD_count(7): the bound genuinely
    # needs its n >= 11 hypothesis
    assert 3 * typeD_count(5) < typeD_count(7)
    assert all(3 * typeD_count(n) > typeD_count(n + 2) for n in range(11, 60))


def test_check_inequalities_domain():
    with pytest.raises(PartitionError):
        check_inequalities(11)
