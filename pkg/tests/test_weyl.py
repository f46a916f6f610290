"""Weyl group enumeration, Poincare polynomials, character counts.

Cross-checks: the degree-product Poincare polynomial against BFS length
histograms, root-of-unity vanishing three ways (polynomial remainder,
degree divisibility, complex evaluation), and irreducible-character
formulas against vectorized conjugacy-class sweeps.
"""

import cmath
import random

import pytest

from heckeverify.rootsystem import parse_type, build
from heckeverify.weyl import (
    WeylBudgetError, WeylElement, enumerate_group, poincare,
    poincare_vanishes, vanishes_by_degrees, valid_orders, irr_count,
    conjugacy_class_count, cyclotomic, INFINITE_ORDER,
)
from heckeverify.partitions import p, ordered_pairs, typeD_count


def rs_of(name):
    return build(parse_type(name))


# ---------------------------------------------------------------------------
# enumeration


def test_a2_enumeration():
    g = enumerate_group(rs_of("A2"))
    assert len(g) == 6
    assert sorted(int(l) for l in g.lengths) == [0, 1, 1, 2, 2, 3]


def test_g2_enumeration():
    g = enumerate_group(rs_of("G2"))
    assert len(g) == 12
    assert int(g.lengths.max()) == 6


def test_f4_enumeration():
    g = enumerate_group(rs_of("F4"))
    assert len(g) == 1152
    assert int(g.lengths.max()) == 24


@pytest.mark.parametrize("name", ["A3", "B3", "C4", "D4", "B2"])
def test_enumeration_count_matches_degree_product(name):
    rs = rs_of(name)
    assert len(enumerate_group(rs)) == rs.weyl_order()


def test_budget_refusal_names_the_order():
    with pytest.raises(WeylBudgetError, match="696729600"):
        enumerate_group(rs_of("E8"))
    with pytest.raises(WeylBudgetError, match="10321920"):
        enumerate_group(rs_of("B8"))


def test_elements_carry_correct_lengths():
    for name in ["A3", "B3", "G2", "D4"]:
        g = enumerate_group(rs_of(name))
        rng = random.Random(20260816)
        for i in rng.sample(range(len(g)), min(25, len(g))):
            assert g.element(i).length() == int(g.lengths[i]), (name, i)


def test_lookup_roundtrip():
    g = enumerate_group(rs_of("B3"))
    rows = g.lookup(g.perms[::7])
    assert list(rows) == list(range(0, len(g), 7))


# ---------------------------------------------------------------------------
# Poincare polynomial


def test_poincare_a1():
    assert poincare(rs_of("A1")) == (1, 1)


def test_poincare_b2():
    # (1+q)(1+q+q^2+q^3)
    assert poincare(rs_of("B2")) == (1, 2, 2, 2, 1)


def test_poincare_g2_palindromic():
    pc = poincare(rs_of("G2"))
    assert len(pc) == 7 and sum(pc) == 12
    assert pc == pc[::-1]


@pytest.mark.parametrize("name", [
    "A1", "A2", "A4", "A7", "B2", "B4", "B5", "C3", "D4", "D5", "F4", "G2", "E6",
])
def test_poincare_equals_bfs_histogram(name):
    rs = rs_of(name)
    assert rs.weyl_order() <= 10 ** 5
    hist = enumerate_group(rs).length_histogram()
    pc = poincare(rs)
    assert tuple(hist.get(i, 0) for i in range(len(pc))) == pc


# ---------------------------------------------------------------------------
# vanishing at roots of unity


def test_vanishing_examples():
    assert poincare_vanishes(rs_of("G2"), 4) is False
    assert poincare_vanishes(rs_of("G2"), 5) is False
    for name in ["A1", "B3", "E7", "G2"]:
        assert poincare_vanishes(rs_of(name), 2) is True
    assert poincare_vanishes(rs_of("E7"), 9) is True


def test_vanishing_infinite_order():
    assert poincare_vanishes(rs_of("B2"), INFINITE_ORDER) is False
    assert poincare_vanishes(rs_of("B2"), None) is False
    with pytest.raises(ValueError):
        poincare_vanishes(rs_of("B2"), 1)


ALL_SMALL = ["A1", "A2", "A3", "A5", "B2", "B3", "B5", "C3", "C4", "D4",
             "D5", "D6", "E6", "E7", "E8", "F4", "G2"]


@pytest.mark.parametrize("name", ALL_SMALL)
def test_vanishing_three_ways(name):
    rs = rs_of(name)
    for m in range(2, 61):
        by_poly = poincare_vanishes(rs, m)
        by_deg = vanishes_by_degrees(rs, m)
        assert by_poly == by_deg, (name, m)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "B3"])
def test_vanishing_matches_complex_evaluation(name):
    # numeric sanity for small groups where magnitudes are tame
    rs = rs_of(name)
    pc = poincare(rs)
    for m in range(2, 25):
        z = cmath.exp(2j * cmath.pi / m)
        val = sum(c * z ** k for k, c in enumerate(pc))
        assert (abs(val) < 1e-8) == poincare_vanishes(rs, m), (name, m, val)


def test_cyclotomic_basics():
    assert cyclotomic(1) == (-1, 1)
    assert cyclotomic(2) == (1, 1)
    assert cyclotomic(4) == (1, 0, 1)
    assert cyclotomic(6) == (1, -1, 1)
    # degree is Euler phi
    assert len(cyclotomic(60)) - 1 == 16


# ---------------------------------------------------------------------------
# valid orders


def test_valid_orders_exceptional():
    assert valid_orders(rs_of("E6")) == {7, 10, 11}
    assert valid_orders(rs_of("E7")) == {11, 13, 15, 16, 17}
    assert valid_orders(rs_of("E8")) == {11, 13, 16, 17, 19, 21, 22, 23,
                                         25, 26, 27, 28, 29}
    assert valid_orders(rs_of("F4")) == {5, 7, 9, 10, 11}
    assert valid_orders(rs_of("G2")) == {4, 5}


@pytest.mark.parametrize("n", range(1, 10))
def test_valid_orders_type_a_empty(n):
    assert valid_orders(rs_of(f"A{n}")) == set()


@pytest.mark.parametrize("n", range(4, 13))
def test_valid_orders_type_d_closed_form(n):
    want = {m for m in range(n + 1, 2 * n - 2) if m % 2 == 1}
    assert valid_orders(rs_of(f"D{n}")) == want


@pytest.mark.parametrize("n", range(2, 9))
def test_valid_orders_type_bc(n):
    # every degree is even, so valid orders are the odd m above n
    want = {m for m in range(n + 1, 2 * n) if m % 2 == 1}
    assert valid_orders(rs_of(f"B{n}")) == want
    if n >= 3:
        assert valid_orders(rs_of(f"C{n}")) == want


# ---------------------------------------------------------------------------
# irreducible character counts


def test_irr_exceptional_table():
    for name, want in [("E6", 25), ("E7", 60), ("E8", 112),
                       ("F4", 25), ("G2", 6)]:
        assert irr_count(rs_of(name)) == want


def test_irr_formulas():
    assert irr_count(rs_of("B2")) == 5
    for n in range(1, 10):
        assert irr_count(rs_of(f"A{n}")) == p(n + 1)
    for n in range(2, 9):
        assert irr_count(rs_of(f"B{n}")) == ordered_pairs(n)
    for n in range(4, 13):
        assert irr_count(rs_of(f"D{n}")) == typeD_count(n)


@pytest.mark.parametrize("name", [
    "A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5",
    "C3", "C4", "C5", "D4", "D5", "D6", "F4", "G2", "E6",
])
def test_irr_equals_conjugacy_class_count(name):
    rs = rs_of(name)
    count, sizes = conjugacy_class_count(rs)
    assert count == irr_count(rs), name
    assert sum(sizes) == rs.weyl_order()


# ---------------------------------------------------------------------------
# exact elements


def test_word_roundtrip():
    rng = random.Random(20260816)
    for name in ["A3", "B3", "G2", "F4"]:
        rs = rs_of(name)
        for _ in range(20):
            word = [rng.randrange(rs.rank) for _ in range(rng.randrange(12))]
            w = WeylElement.from_word(rs, word)
            red = w.word()
            assert WeylElement.from_word(rs, red) == w
            assert len(red) == w.length()
            assert len(red) <= len(word)


def test_inverse_and_identity():
    rs = rs_of("B3")
    rng = random.Random(7)
    for _ in range(15):
        word = [rng.randrange(3) for _ in range(9)]
        w = WeylElement.from_word(rs, word)
        assert (w * w.inverse()).is_identity()
        assert (w.inverse() * w).is_identity()
        assert w.order() <= rs.weyl_order()


def test_longest_element_a2():
    rs = rs_of("A2")
    w0 = WeylElement.from_word(rs, [0, 1, 0])
    assert w0.length() == 3
    for r in rs.positive_roots:
        assert all(c <= 0 for c in w0.apply_root(r))


def test_apply_weight_matches_root_action():
    # alpha_i in weight coordinates is row i of the Cartan matrix
    for name in ["A3", "B3", "G2"]:
        rs = rs_of(name)
        rng = random.Random(11)
        for _ in range(10):
            w = WeylElement.from_word(
                rs, [rng.randrange(rs.rank) for _ in range(8)])
            for i in range(rs.rank):
                img = w.apply_root(rs.simples[i])
                via_weight = w.apply_weight(tuple(rs.cartan[i]))
                direct = tuple(
                    sum(img[k] * rs.cartan[k][j] for k in range(rs.rank))
                    for j in range(rs.rank))
                assert via_weight == direct


def test_simple_reflection_order_two():
    rs = rs_of("F4")
    for j in range(4):
        s = WeylElement.simple(rs, j)
        assert s.order() == 2
        assert s.length() == 1
