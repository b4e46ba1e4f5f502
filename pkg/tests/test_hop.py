import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permcheb.hop import (
    Color,
    ColoredDerangement,
    ColoredPerm,
    big_phi,
    big_phi_inv,
    big_phi_ring,
    big_phi_ring_inv,
    colored_derangements,
    colored_perms,
    foata_o,
    foata_o_inv,
    foata_o_prime,
    foata_o_prime_inv,
    orbit,
    phi_k,
    phi_s,
    theta_k,
    theta_s,
)
from permcheb.perms import LetterClass, Permutation, all_stats, classify_linear, enumerate_perms

perms = st.integers(1, 8).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def P(text):
    return Permutation.parse(text)


def test_phi_k_example():
    assert str(phi_k(P("467125839"), 5)) == "467512839"
    assert phi_k(P("132"), 3) == P("132")
    with pytest.raises(ValueError):
        phi_k(P("132"), 4)


def test_phi_s_empty():
    p = P("467125839")
    assert phi_s(p, []) == p


def test_orbit_of_213():
    assert {str(q) for q in orbit(P("213"))} == {"123", "213", "312", "321"}


def test_orbit_sizes_are_powers_of_two():
    for p in enumerate_perms(6):
        st_ = all_stats(p)
        assert len(orbit(p)) == 2 ** st_["dbl"]


def test_big_phi_example():
    c = ColoredPerm.parse("7r 2 6 5b 3 9 8r 4b 1")
    assert str(big_phi(c)) == "265379418"
    assert big_phi_inv(P("265379418")) == c
    assert str(c) == "7r 2 6 5b 3 9 8r 4b 1"


def test_colored_perm_validation():
    with pytest.raises(ValueError):
        ColoredPerm(P("123"), {})  # has double ascents
    with pytest.raises(ValueError):
        ColoredPerm(P("321"), {3: Color.RED})  # 2 uncolored
    with pytest.raises(ValueError):
        ColoredDerangement(P("123"), {})


def test_colored_counts():
    for n in range(1, 7):
        assert sum(1 for _ in colored_perms(n)) == sum(1 for _ in enumerate_perms(n))
        assert sum(1 for _ in colored_derangements(n)) == sum(1 for _ in enumerate_perms(n, "derangements"))


def test_foata_examples():
    p = P("649237185")
    assert str(foata_o(p)) == "427168953"
    assert foata_o_inv(P("427168953")) == p
    assert foata_o(Permutation.identity(3)) == Permutation.identity(3)
    assert str(foata_o_prime(p)) == "839524167"
    assert str(foata_o_prime(Permutation.identity(2))) == "21"


def test_theta_example():
    assert str(theta_k(P("231"), 2)) == "312"
    with pytest.raises(ValueError):
        theta_k(P("123"), 1)


def test_big_phi_ring_identity_without_cddes():
    for c in colored_derangements(5):
        if not c.colors:
            assert big_phi_ring(c) == c.base


def test_big_phi_ring_round_trip():
    for c in colored_derangements(5):
        assert big_phi_ring_inv(big_phi_ring(c)) == c


@given(perms)
def test_foata_round_trips(p):
    assert foata_o_inv(foata_o(p)) == p
    assert foata_o_prime_inv(foata_o_prime(p)) == p


@given(perms, st.data())
def test_phi_properties(p, data):
    a = data.draw(st.sets(st.integers(1, p.n)))
    b = data.draw(st.sets(st.integers(1, p.n)))
    assert phi_s(phi_s(p, a), a) == p
    assert phi_s(phi_s(p, a), b) == phi_s(phi_s(p, b), a)
    assert phi_s(p, a | b) == phi_s(phi_s(p, a - b), b)
    before, after = all_stats(p), all_stats(phi_s(p, a))
    assert (before["pk"], before["dbl"]) == (after["pk"], after["dbl"])


@given(perms)
def test_phi_k_toggles_class(p):
    classes = dict(zip(p.word, classify_linear(p)))
    for k in p.word:
        q = phi_k(p, k)
        new = dict(zip(q.word, classify_linear(q)))[k]
        swap = {LetterClass.DOUBLE_ASCENT: LetterClass.DOUBLE_DESCENT,
                LetterClass.DOUBLE_DESCENT: LetterClass.DOUBLE_ASCENT}
        assert new is swap.get(classes[k], classes[k])


derangements = perms.filter(lambda p: p.is_derangement())


@settings(max_examples=60)
@given(derangements, st.data())
def test_theta_properties(d, data):
    a = data.draw(st.sets(st.integers(1, d.n)))
    b = data.draw(st.sets(st.integers(1, d.n)))
    assert theta_s(theta_s(d, a), a) == d
    assert theta_s(theta_s(d, a), b) == theta_s(theta_s(d, b), a)
    before, after = all_stats(d), all_stats(theta_s(d, a))
    assert (before["cpk"], before["cdbl"]) == (after["cpk"], after["cdbl"])
