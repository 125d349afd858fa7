from itertools import product

import pytest

from lamplight.analysis import SemanticTable, semantic_table, shift_class, tables_equal
from lamplight.enumeration import PruneLevel, enumerate_texts
from lamplight.search import SearchError, SearchSpec, equivalence_census, search_shortest

from oracles import trace_run

SET_BIT = SemanticTable((0,), 0, {(0,): (1,), (1,): (1,)})
XOR_SWAP_1 = "[rtl]r[ltr]l[rtl]"


def verify_independently(text, target):
    """Run the found program on every window assignment with the oracle."""
    window = target.window
    for bits in product((0, 1), repeat=len(window)):
        ones = {b for b, v in zip(window, bits) if v}
        final, head, _ = trace_run(text, ones)
        want = target.mapping[bits]
        if want is None:
            assert final is None
        else:
            assert head == target.shift
            assert final == {b for b, v in zip(window, want) if v}


def brute_minimum(target, max_length):
    for n in range(max_length + 1):
        for text in enumerate_texts(n, "naive"):
            if shift_class(text) is not None and tables_equal(semantic_table(text), target):
                return n
    return None


def test_identity_target():
    result = search_shortest(SearchSpec(SemanticTable((), 0, {(): ()}), 3))
    assert result.found and str(result.program) == ""


@pytest.mark.parametrize("level", [PruneLevel.CANONICAL, PruneLevel.FULL])
def test_set_bit(level):
    result = search_shortest(SearchSpec(SET_BIT, 6, level))
    assert str(result.program) == "[t]t"
    assert result.program.length == 4
    verify_independently("[t]t", SET_BIT)
    assert brute_minimum(SET_BIT, 3) is None


def test_full_examines_no_more_than_canonical():
    target = semantic_table("r[t]tl")
    full = search_shortest(SearchSpec(target, 8, PruneLevel.FULL))
    canon = search_shortest(SearchSpec(target, 8, PruneLevel.CANONICAL))
    assert tables_equal(full.program, canon.program)
    for n, count in full.examined.items():
        assert count <= canon.examined[n]


def test_xor_swap_one_table():
    # the n = 1 program halts only when both bits are 0
    target = semantic_table(XOR_SWAP_1)
    assert target.mapping == {(0, 0): (0, 0), (0, 1): None, (1, 0): None, (1, 1): None}
    result = search_shortest(SearchSpec(target, 14))
    assert result.found and result.program.length <= 14
    verify_independently(str(result.program), target)
    assert brute_minimum(target, result.program.length - 1) is None


def test_found_programs_verified():
    for source in ["[t]", "rtl", "[rtl]", "r[t]l[t]", "t[r[t]l]"]:
        target = semantic_table(source)
        result = search_shortest(SearchSpec(target, len(source)))
        assert result.found and result.program.length <= len(source)
        verify_independently(str(result.program), target)


def test_not_found():
    swap = SemanticTable((0, 1), 0, {(0, 0): (0, 0), (0, 1): (1, 0), (1, 0): (0, 1), (1, 1): (1, 1)})
    result = search_shortest(SearchSpec(swap, 5))
    assert not result.found
    assert result.to_json()["found"] is False


def test_errors():
    wide = SemanticTable(tuple(range(3)), 0, {k: k for k in product((0, 1), repeat=3)})
    with pytest.raises(SearchError):
        search_shortest(SearchSpec(wide, 4), window_cap=2)
    with pytest.raises(SearchError):
        search_shortest(SearchSpec(SET_BIT, -1))


def test_spec_from_json():
    spec = SearchSpec.from_json({"window": [0], "shift": 0, "map": {"0": "1", "1": "1"}}, 5, "canonical")
    assert spec.level is PruneLevel.CANONICAL and tables_equal(spec.target, SET_BIT)


def test_census_small():
    rows = equivalence_census(2)
    assert rows[0].buckets == 1 and rows[0].duplicate_mass == 0
    # t, r, l and the length-2 words are all distinct behaviours
    assert rows[2].duplicate_mass == 0


def test_census_ratio_non_increasing():
    ratios = [equivalence_census(6, lv)[-1].duplicate_ratio for lv in PruneLevel]
    assert ratios == sorted(ratios, reverse=True)


def test_census_json():
    data = equivalence_census(1)[1].to_json()
    assert data["length"] == "1" and data["buckets"] == "4"
