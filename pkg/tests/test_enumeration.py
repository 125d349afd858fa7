import pytest

from lamplight.analysis import canonical_key, normalize, semantic_table, shift_class, tables_equal
from lamplight.enumeration import (
    LEVELS,
    PruneLevel,
    count_programs,
    enumerate_programs,
    enumerate_texts,
    full_exclusion_reason,
    growth_table,
    growth_table_csv,
)
from lamplight.fastrun import Compiled
from lamplight.group import canonical_word, elements_of_norm
from lamplight.lang import Halted, parse
from lamplight.series import solve_E_canonical, solve_E_dead_after, solve_E_dead_inside, solve_E_naive
from lamplight.soundness import random_tapes

from oracles import balanced_strings

N = 12


@pytest.fixture(scope="module")
def series():
    return {
        PruneLevel.NAIVE: solve_E_naive(14),
        PruneLevel.CANONICAL: solve_E_canonical(N),
        PruneLevel.DEAD_AFTER: solve_E_dead_after(N),
        PruneLevel.DEAD_INSIDE: solve_E_dead_inside(N)[0],
    }


def shortlex(texts):
    return sorted(texts, key=lambda s: (len(s), s))


def test_level_parsing():
    assert PruneLevel.parse("dead-inside") is PruneLevel.DEAD_INSIDE
    assert PruneLevel.parse("FULL") is PruneLevel.FULL
    assert [lv.label for lv in LEVELS] == ["naive", "canonical", "dead-after", "dead-inside", "full"]
    with pytest.raises(ValueError):
        PruneLevel.parse("bogus")


def test_small_examples():
    naive2 = enumerate_texts(2, "naive")
    assert len(naive2) == 10 and "[]" in naive2
    assert count_programs(3, "canonical") == 21
    assert count_programs(4, "dead-after") == 68
    assert "[][]" in enumerate_texts(4, "canonical")
    assert "[][]" not in enumerate_texts(4, "dead-after")


def test_canonical_three():
    words = sorted(canonical_word(x) for x in elements_of_norm(3))
    loops = ["[r]", "[l]", "[t]"]
    sides = ["t[]", "r[]", "l[]", "[]t", "[]r", "[]l"]
    assert len(words) == 12
    assert sorted(enumerate_texts(3, "canonical")) == sorted(words + loops + sides)


def test_naive_matches_oracle():
    for n in range(9):
        assert enumerate_texts(n, "naive") == shortlex(balanced_strings(n))


@pytest.mark.parametrize("n", range(15))
def test_naive_count_matches_series(series, n):
    assert count_programs(n, "naive") == series[PruneLevel.NAIVE][n]


@pytest.mark.parametrize("level", [PruneLevel.CANONICAL, PruneLevel.DEAD_AFTER, PruneLevel.DEAD_INSIDE])
def test_count_matches_series(series, level):
    for n in range(N + 1):
        assert count_programs(n, level) == series[level][n]


@pytest.mark.parametrize("level", LEVELS)
def test_enumeration_matches_count(level):
    for n in range(9):
        texts = enumerate_texts(n, level)
        assert len(texts) == count_programs(n, level)
        assert len(set(texts)) == len(texts)
        assert texts == sorted(texts)
        assert all(len(t) == n for t in texts)


@pytest.mark.parametrize("n", [9, 10])
def test_unique_at_ten(n):
    texts = enumerate_texts(n, "dead-inside")
    assert len(set(texts)) == len(texts) == count_programs(n, "dead-inside")


def test_levels_nested():
    for n in range(9):
        sets = [set(enumerate_texts(n, lv)) for lv in LEVELS]
        for hi, lo in zip(sets, sets[1:]):
            assert lo <= hi


def test_programs_parse_back():
    for p in enumerate_programs(5, "full"):
        assert parse(str(p)) == p


def test_full_exclusions():
    assert full_exclusion_reason(parse("[[]]")) == "nested"
    assert full_exclusion_reason(parse("[t]")) is None
    assert "[[]]" in enumerate_texts(4, "dead-inside")
    assert "[[]]" not in enumerate_texts(4, "full")
    assert count_programs(4, "full") < count_programs(4, "dead-inside")


def test_full_level_sound():
    # each exclusion is justified by a strictly shorter equivalent program
    tapes = random_tapes(30, seed=2)
    for n in range(9):
        kept = set(enumerate_texts(n, "full"))
        for text in enumerate_texts(n, "dead-inside"):
            if text in kept:
                continue
            assert full_exclusion_reason(parse(text)) is not None
            q = normalize(text)
            assert q.length < n, text
            if shift_class(text) is not None:
                assert tables_equal(text, q)
                continue
            a, b = Compiled(parse(text)), Compiled(q)
            for t in tapes:
                ra, rb = a.run(t, 10**4), b.run(t, 10**4)
                assert isinstance(ra, Halted) == isinstance(rb, Halted), text
                if isinstance(ra, Halted):
                    assert ra.tape == rb.tape


def test_canonical_complete_up_to_7():
    best = {}
    for n in range(8):
        for text in enumerate_texts(n, "canonical"):
            if shift_class(text) is not None:
                best.setdefault(canonical_key(semantic_table(text)), n)
    for n in range(8):
        for text in enumerate_texts(n, "naive"):
            if shift_class(text) is not None:
                assert best[canonical_key(semantic_table(text))] <= n, text


def test_growth_table():
    rows = growth_table(3)
    assert rows[0] == {"n": 0, "naive": 1, "canonical": 1, "dead-after": 1, "dead-inside": 1, "full": 1}
    assert all(rows[1][lv.label] == 3 for lv in LEVELS)
    assert rows[2]["naive"] == 10 and rows[2]["canonical"] == 7
    csv = growth_table_csv(rows).splitlines()
    assert csv[0] == "n,naive,canonical,dead-after,dead-inside,full"
    assert csv[3] == "2,10,7,7,7,7"


def test_monotone_chain_to_12():
    for n in range(N + 1):
        counts = [count_programs(n, lv) for lv in LEVELS]
        assert counts == sorted(counts, reverse=True)
