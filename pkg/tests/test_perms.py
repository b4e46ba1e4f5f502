import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permcheb import bulk
from permcheb.exact import parse_poly
from permcheb.perms import (
    STATS,
    LetterClass as L,
    Permutation,
    all_stats,
    classify_cyclic,
    classify_linear,
    distribution,
    distribution_slow,
    enumerate_perms,
    is_alternating,
    is_reverse_alternating,
    left_to_right_maxima,
    left_to_right_minima,
    parse_cycles,
    render_cycles,
    runs,
    short_runs,
    stat,
)

perms = st.integers(1, 8).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def P(text):
    return Permutation.parse(text)


def test_parse_formats():
    assert P("312").word == (3, 1, 2)
    assert P("10 1 2 3 4 5 6 7 8 9").n == 10
    assert P("3,1,2") == P("312")
    assert str(P("10 1 2 3 4 5 6 7 8 9")) == "10 1 2 3 4 5 6 7 8 9"
    for bad in ("112", "0", "12a", "13"):
        with pytest.raises(ValueError):
            P(bad)


def test_linear_classes():
    assert classify_linear(P("132")) == [L.VALLEY, L.PEAK, L.VALLEY]
    assert classify_linear(P("213")) == [L.DOUBLE_DESCENT, L.VALLEY, L.DOUBLE_ASCENT]
    p = P("467125839")
    assert [stat(p, k) for k in ("pk", "val", "dasc", "ddes")] == [2, 3, 4, 0]


def test_cyclic_classes():
    assert classify_cyclic(P("21")) == [L.PEAK, L.VALLEY]
    assert classify_cyclic(P("231")) == [L.DOUBLE_ASCENT, L.PEAK, L.VALLEY]
    assert classify_cyclic(Permutation.identity(3)) == [None, None, None]


def test_unknown_stat():
    with pytest.raises(ValueError):
        stat(P("12"), "bogus")


def test_cycles_and_rendering():
    p = P("649237185")
    assert render_cycles(p.cycles()) == "(42)(716)(8)(953)"
    assert render_cycles(p.cycles(smallest_first=True)) == "(8)(395)(24)(167)"
    assert Permutation.from_cycles(parse_cycles("(42)(716)(8)(953)")) == p
    with pytest.raises(ValueError):
        parse_cycles("42)(7")


def test_enumerate():
    assert len(list(enumerate_perms(3))) == 6
    assert [str(p) for p in enumerate_perms(3, "derangements")] == ["231", "312"]
    assert list(enumerate_perms(1, "derangements")) == []
    with pytest.raises(ValueError):
        list(enumerate_perms(3, "odd"))


def test_distribution_examples():
    assert distribution(3, "all", ["des"], ["t"]) == parse_poly("1 + 4*t + t^2")
    assert distribution(5, "derangements", ["cpk"], ["t"]) == parse_poly("8*t + 36*t^2")
    assert distribution(5, "derangements", ["cddes"], ["t"]) == parse_poly("19 + 21*t + 3*t^2 + t^3")
    assert distribution(0, "all", ["pk"], ["t"]) == 1


def test_distribution_parallel_matches_serial():
    a = distribution(7, "all", ["pk", "dbl"], ["s", "t"], jobs=1)
    b = distribution(7, "all", ["pk", "dbl"], ["s", "t"], jobs=3)
    assert a == b


@pytest.mark.parametrize("n", range(0, 7))
@pytest.mark.parametrize("subset", ["all", "derangements"])
def test_bulk_matches_reference(n, subset):
    stats = list(STATS[:6]) if subset == "all" else ["cpk", "cval", "cdasc", "cddes", "cyc", "exc"]
    variables = ["s", "t", "u", "v", "w", "y"]
    assert distribution(n, subset, stats, variables) == distribution_slow(n, subset, stats, variables)


def test_bulk_shared_variable():
    # two statistics on one variable: exponents add
    assert distribution(5, "all", ["dasc", "ddes"], ["t", "t"]) == distribution(5, "all", ["dbl"], ["t"])


def test_bulk_columns_match_all_stats():
    arr = bulk.lex_permutations(6)
    cols = bulk.stat_columns(arr, STATS)
    for row in range(0, arr.shape[0], 37):
        p = Permutation(tuple(int(a) for a in arr[row]))
        assert {k: int(cols[k][row]) for k in STATS} == all_stats(p)


def test_bulk_limits():
    with pytest.raises(ValueError):
        list(bulk.permutation_blocks(bulk.MAX_N + 1))


def test_runs():
    word = (4, 6, 7, 1, 9, 2, 6, 8, 5)  # repeats a letter; runs only need a word
    assert runs(word) == [(4, 6, 7), (1, 9), (2, 6, 8), (5,)]
    assert short_runs(word) == [5]
    assert runs(P("3142")) == [(3,), (1, 4), (2,)]
    assert short_runs(P("3142")) == [3, 2]


def test_lr_extrema():
    assert left_to_right_maxima((4, 2, 7, 1, 6, 8, 9, 5, 3)) == [4, 7, 8, 9]
    assert left_to_right_minima((8, 3, 9, 5, 2, 4, 1, 6, 7)) == [8, 3, 2, 1]


def test_alternating():
    assert is_alternating(P("1324"))
    assert not is_alternating(P("3142"))
    assert is_reverse_alternating(P("3142"))
    assert sum(is_alternating(p) for p in enumerate_perms(4)) == 5
    arr = bulk.lex_permutations(5)
    assert int(bulk.alternating_mask(arr).sum()) == 16
    assert int(bulk.alternating_mask(arr, reverse=True).sum()) == 16


@given(perms)
def test_stat_relations(p):
    st_ = all_stats(p)
    assert st_["val"] == st_["pk"] + 1
    assert st_["pk"] + st_["val"] + st_["dbl"] == p.n
    assert st_["cpk"] == st_["cval"]
    assert st_["cpk"] + st_["cval"] + st_["cdbl"] + st_["fix"] == p.n
    assert st_["exc"] == st_["cpk"] + st_["cdasc"]


@given(perms)
def test_inverse_and_cycles(p):
    assert p.inverse().inverse() == p
    assert Permutation.from_cycles(p.cycles()) == p
    assert Permutation.from_cycles(p.cycles(smallest_first=True)) == p
    assert all_stats(p)["cyc"] == len(p.cycles())


def test_counts():
    for n in range(1, 8):
        assert sum(1 for _ in enumerate_perms(n)) == math.factorial(n)
    assert [bulk.count_where(n, "derangements", lambda b: np.ones(len(b), bool)) for n in range(1, 8)] == [
        0, 1, 2, 9, 44, 265, 1854,
    ]
