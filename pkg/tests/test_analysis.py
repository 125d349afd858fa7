import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lamplight.analysis import (
    NotFixedShift,
    SemanticTable,
    bit_window,
    canonical_key,
    head_effect,
    is_divergent_form,
    is_E00,
    is_E01,
    is_L00,
    is_L01,
    normalize,
    normalize_steps,
    semantic_table,
    shift_class,
    table_equal,
    tables_equal,
)
from lamplight.lang import parse

from oracles import balanced_strings, trace_run

DOUBLING = "[tr[r]r[r]trt[l]l[l]r]"

programs = st.recursive(
    st.sampled_from(["t", "r", "l", ""]),
    lambda inner: st.one_of(st.tuples(inner, inner).map("".join), inner.map(lambda s: f"[{s}]")),
    max_leaves=14,
)


def small_texts(max_n):
    return [s for n in range(max_n + 1) for s in balanced_strings(n)]


def fixed_texts(max_n):
    return [s for s in small_texts(max_n) if shift_class(s) is not None]


def oracle_table(text):
    """Brute-force table through the independent tracing interpreter."""
    window = sorted(bit_window(text))
    shift = shift_class(text)
    out = {}
    for bits in product((0, 1), repeat=len(window)):
        ones = {b for b, v in zip(window, bits) if v}
        final, head, _ = trace_run(text, ones)
        if final is None:
            out[bits] = None
        else:
            assert head == shift and final <= set(window)
            out[bits] = tuple(int(b in final) for b in window)
    return SemanticTable(tuple(window), shift, out)


# -- shift and window ----------------------------------------------------------


def test_shift_class_examples():
    assert shift_class("") == 0
    assert shift_class("r[t]l") == 0
    assert shift_class("rr") == 2
    assert shift_class("[r]") is None
    assert shift_class(DOUBLING) is None
    assert shift_class("[[r]l]") is None


def test_bit_window_examples():
    assert bit_window("") == frozenset()
    assert bit_window("r[t]l") == {1}
    assert bit_window("[rtl]") == {0, 1}
    with pytest.raises(NotFixedShift):
        bit_window("[r]")


def test_bit_window_sound():
    rng = random.Random(3)
    for text in fixed_texts(8):
        window = bit_window(text)
        for _ in range(4):
            ones = {i for i in range(-5, 6) if rng.random() < 0.5}
            _, _, touched = trace_run(text, ones)
            assert touched <= window, text


def test_segment_classes():
    assert is_L00("") and is_L00("rtl") and not is_L00("t")
    assert is_L01("t") and is_L01("rltrl") and not is_L01("r")
    with pytest.raises(ValueError):
        is_L00("[t]")
    with pytest.raises(ValueError):
        is_L01("[t]")


def test_head_effect():
    assert is_E00("rr[t]ll")
    assert is_E00("") and is_E00("[t]") is False
    assert is_E01("t") and is_E01("r[t]lt")
    assert head_effect("[r]") is None
    assert head_effect("[t]") is None


def test_E00_sound():
    # members never change bit 0 on any halting run
    for text in fixed_texts(8):
        if not is_E00(text):
            continue
        for ones in ({0}, {0, 1}, {-1, 0, 2}, set(), {1, -1}):
            final, _, _ = trace_run(text, ones)
            if final is not None:
                assert (0 in final) == (0 in ones), text


# -- semantic tables -----------------------------------------------------------


def test_table_examples():
    t = semantic_table("")
    assert t.window == () and t.mapping == {(): ()}
    t = semantic_table("[t]")
    assert t.window == (0,) and t.mapping == {(0,): (0,), (1,): (0,)}
    t = semantic_table("[]")
    assert t.mapping == {(0,): (0,), (1,): None}
    with pytest.raises(NotFixedShift):
        semantic_table("[r]")


def test_table_json():
    t = semantic_table("[t]t")
    data = t.to_json()
    assert data == {"window": [0], "shift": 0, "map": {"0": "1", "1": "1"}}
    assert SemanticTable.from_json(data) == t
    assert semantic_table("[]").to_json()["map"]["1"] == "⊥"
    with pytest.raises(ValueError):
        SemanticTable.from_json({"window": [0], "shift": 0, "map": {"0": "1"}})
    with pytest.raises(ValueError):
        SemanticTable.from_json({"window": [1, 0], "shift": 0, "map": {}})


def test_tables_match_oracle():
    for text in fixed_texts(7):
        assert semantic_table(text).mapping == oracle_table(text).mapping, text


def test_tables_equal_examples():
    assert tables_equal("[t][rtl]", "[t]")
    assert tables_equal("[t]t", "t[t]t")
    assert not tables_equal("t", "r")
    assert not tables_equal("[t]", "[t]t")
    # identity extension across different windows
    assert tables_equal("rtl rtl", "")
    assert tables_equal("[]t[]", "r[]t[]l")
    with pytest.raises(NotFixedShift):
        tables_equal("[t][r]", "[t]")


def test_canonical_key_agrees_with_equality():
    texts = fixed_texts(6)
    rng = random.Random(5)
    tables = [semantic_table(t) for t in rng.sample(texts, 150)]
    for a in tables:
        for b in tables:
            assert (canonical_key(a) == canonical_key(b)) == table_equal(a, b)


# -- normalization ------------------------------------------------------------

RULE_PAIRS = [
    ("R0", "rlt", "t"),
    ("R0", "rtltrl", "trtl"),
    ("R1", "[t][r]", "[t]"),
    ("R1", "[t]rtl[r]", "[t]rtl"),
    ("R1", "[r]rr[t]ll[l]", "[r]rr[t]ll"),
    ("R2", "[t[r]]", "[t]"),
    ("R3", "[[t]]", "[t]"),
    ("R3", "[[rt]]", "[rt]"),
    ("R4", "[r]t[t]", "[r]"),
    ("R5", "[l]t[r[l]]", "[l]tr[l]"),
    ("R6", "[[t]r]", "[tr]"),
    ("R6", "[rtl[t]]", "[trtl]"),
    ("R7", "[r[t[r]]l]", "[]"),
    ("R8", "[rtl]", "[]"),
    ("R8", "[rl]", "[]"),
    ("R8", "[l[t]r]", "[]"),
    ("R9", "[r[l]t]", "[]"),
    ("R10", "[rtl[]]", "[]"),
    ("R10", "[[]r]", "[]"),
    ("R11", "[r]t[]", "[]t[]"),
    ("R11", "[t]t[rtl]", "[]t[]"),
    ("R12", "r[t]t[]l", "[]t[]"),
    ("R12", "[t]t[]r[r]", "[]t[]"),
]


@pytest.mark.parametrize("rule, before, after", RULE_PAIRS)
def test_rule_pairs(rule, before, after):
    assert str(normalize(before)) == after
    if shift_class(before) is not None:
        assert tables_equal(before, after)


def test_normalize_examples():
    assert str(normalize("[t][r]")) == "[t]"
    assert str(normalize("[[t]]")) == "[t]"
    assert str(normalize("[rtl]")) == "[]"
    assert str(normalize("[]")) == "[]"


def test_E00_segment_kills_following_loop():
    assert str(normalize("[t]rr[t]ll[r]")) == "[t]rr[t]ll"


def test_bottom_rendering():
    assert str(normalize("[t]t[]")) == "[]t[]"
    assert is_divergent_form(normalize("[t]t[]"))
    assert not is_divergent_form(normalize("[t]t"))


def test_left_alone():
    for text in ("[t]t", "t[t]", "[r]t[tr]", "[r[t]]", DOUBLING):
        assert str(normalize(text)) == text


def test_steps_end_at_normal_form():
    steps = normalize_steps("[r]t[t[r]]")
    assert [str(s) for s in steps] == ["[r]t[t[r]]", "[r]t[t]", "[r]tt", "[r]"]


@settings(max_examples=300)
@given(programs)
def test_idempotent_and_shrinking(text):
    q = normalize(text)
    assert normalize(q) == q
    assert q.length <= parse(text).length


def test_sound_on_fixed_shift_up_to_6():
    for text in fixed_texts(6):
        q = normalize(text)
        assert shift_class(q) is not None or is_divergent_form(q)
        assert tables_equal(text, q), text


def test_sound_on_unbounded_samples():
    rng = random.Random(11)
    texts = [t for t in small_texts(7) if shift_class(t) is None]
    for text in rng.sample(texts, 300):
        q = str(normalize(text))
        for _ in range(5):
            ones = {i for i in range(-4, 5) if rng.random() < 0.5}
            a = trace_run(text, ones, limit=20000, strict=False)
            b = trace_run(q, ones, limit=20000, strict=False)
            assert (a[0] is None) == (b[0] is None), (text, q)
            if a[0] is not None:
                assert a[:2] == b[:2], (text, q)


@pytest.mark.parametrize("text", ["[t]t[]", "[r]t[t[r]]", "[rtl[]]", "t"])
def test_steps_end_with_normalize(text):
    assert normalize_steps(text)[-1] == normalize(text)
