"""Braid words, colorings, and the cocycle state-sum invariant."""

import itertools
import random

import pytest

from ybknots import (
    BraidGenerator,
    BraidWord,
    GroupRingElement,
    apply_word,
    cocycle_space,
    ColoringSet,
    colorings,
    count_colorings,
    equivalent_words,
    make_affine,
    parse_braid,
    state_sum,
    swap_set,
)
from ybknots.errors import BraidSyntaxError, IndexOutOfRange
from ybknots.reference import (
    BORROMEAN_VALUE,
    BORROMEAN_WORD,
    KISHINO_WORDS,
    KNOT_NAMES,
    MIRROR_TORUS_4_VALUE,
    TABLE1_COUNTS,
    torus_value,
    twisted_torus_value,
    word_corpus,
    z3_biquandle,
    z3_cocycle,
    z3_family_value,
    z4_biquandle,
    z4_cocycle,
)


def test_parse_kishino_word():
    w = parse_braid(KISHINO_WORDS["K1"])
    assert w.strands == 3
    assert len(w) == 8
    assert w.text() == "s1 v1 s1^-1 s2 s1 v1 s1^-1 s2^-1"


def test_parse_exponents_and_normalization():
    assert parse_braid("s1^3").text() == "s1 s1 s1"
    assert parse_braid("s2^-2").text() == "s2^-1 s2^-1"
    assert parse_braid("v1^2").text() == "v1 v1"
    assert parse_braid("v1^-1").text() == "v1"
    assert parse_braid("s1^0").text() == ""
    assert parse_braid("  s1   v1 ").text() == "s1 v1"


def test_parse_strands_inference():
    assert parse_braid("v2").strands == 3
    assert parse_braid("", strands=2).strands == 2
    assert parse_braid("").strands == 1
    assert parse_braid("s1", strands=5).strands == 5


def test_parse_errors():
    with pytest.raises(BraidSyntaxError) as err:
        parse_braid("x2")
    assert err.value.position == 0
    with pytest.raises(BraidSyntaxError):
        parse_braid("s1 q3 s2")
    with pytest.raises(BraidSyntaxError):
        parse_braid("s0")
    with pytest.raises(IndexOutOfRange):
        parse_braid("s3", strands=3)


def test_generator_and_word_objects():
    g = BraidGenerator("positive", 2)
    assert g.token() == "s2"
    assert g.inverse().token() == "s2^-1"
    v = BraidGenerator("virtual", 1)
    assert v.inverse() == v
    with pytest.raises(IndexOutOfRange):
        BraidWord(2, (BraidGenerator("positive", 2),))
    w = parse_braid("s1 v1")
    assert parse_braid(w.text()).generators == w.generators


def test_apply_word_fixed_pair():
    X = z4_biquandle()
    # (1, 3) is a fixed pair of R, so the positive crossing keeps it
    assert apply_word(X, parse_braid("s1"), (1, 3)) == (1, 3)
    assert apply_word(X, parse_braid("v1"), (1, 3)) == (3, 1)


def test_apply_word_inverse_cancels():
    X = make_affine(15, 4, 11, 2)
    rng = random.Random(3)
    for text in ("s1 s1^-1", "s1^-1 s1", "s2 s2^-1 v1 v1"):
        w = parse_braid(text, strands=3)
        for _ in range(20):
            colors = tuple(rng.randrange(15) for _ in range(3))
            assert apply_word(X, w, colors) == colors


def test_apply_word_concatenation():
    X = z4_biquandle()
    rng = random.Random(5)
    wa = parse_braid("s1 v2", strands=3)
    wb = parse_braid("s2^-1 s1", strands=3)
    both = parse_braid("s1 v2 s2^-1 s1", strands=3)
    for _ in range(20):
        colors = tuple(rng.randrange(4) for _ in range(3))
        assert apply_word(X, both, colors) == \
            apply_word(X, wb, apply_word(X, wa, colors))


def _word_permutation(word):
    perm = list(range(word.strands))
    for g in word.generators:
        i = g.index - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return perm


def _cycle_count(perm):
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def test_swap_set_counts_follow_permutation_cycles():
    # every crossing kind permutes colors on the swap solution, so the
    # coloring count is n^(number of closure cycles)
    X = swap_set(3)
    for text in ("s1", "s1 s2", "v1 s2^-1 v2", "s1 s1", BORROMEAN_WORD):
        w = parse_braid(text, strands=3)
        expected = 3 ** _cycle_count(_word_permutation(w))
        assert count_colorings(X, w) == expected


def test_kishino_counts_at_u_2():
    X = make_affine(15, 4, 11, 2)
    got = tuple(count_colorings(X, parse_braid(KISHINO_WORDS[name]))
                for name in KNOT_NAMES)
    assert got == TABLE1_COUNTS[2] == (225, 15, 75, 15, 15, 45)


def test_coloring_set_frozen():
    X = z4_biquandle()
    w = parse_braid("s1 s1")
    cs = colorings(X, w)
    assert isinstance(cs, ColoringSet)
    assert cs.count == 8
    assert cs.tuples == ((0, 0), (0, 2), (1, 1), (1, 3),
                         (2, 0), (2, 2), (3, 1), (3, 3))
    assert count_colorings(X, w) == 8


def test_unknot_colorings():
    X = z4_biquandle()
    assert count_colorings(X, parse_braid("")) == 4
    assert count_colorings(X, parse_braid("", strands=2)) == 16


@pytest.mark.parametrize("n", range(1, 9))
def test_torus_family_values(n):
    X = z4_biquandle()
    psi = z4_cocycle()
    value = state_sum(X, psi, parse_braid(" ".join(["s1"] * n)))
    assert value.value == torus_value(n)


def test_torus_chirality():
    X = z4_biquandle()
    psi = z4_cocycle()
    plus = state_sum(X, psi, parse_braid("s1^4"))
    minus = state_sum(X, psi, parse_braid("s1^-4"))
    assert plus.value == GroupRingElement(4, (8, 0, 0, 8))
    assert minus.value == MIRROR_TORUS_4_VALUE
    assert minus.value == GroupRingElement(4, (8, 8, 0, 0))
    assert plus.value != minus.value


@pytest.mark.parametrize("n", range(1, 9))
def test_twisted_family_values(n):
    X = z4_biquandle()
    psi = z4_cocycle()
    value = state_sum(X, psi, parse_braid(" ".join(["s1 v1"] * n)))
    assert value.value == twisted_torus_value(n)


@pytest.mark.parametrize("n", range(0, 7))
def test_z3_family_values(n):
    X = z3_biquandle()
    psi = z3_cocycle(1, 0, 0)
    word = parse_braid(" ".join(["s1"] * n + ["v1"]))
    assert state_sum(X, psi, word).value == z3_family_value(n)


def test_borromean_value():
    X = z4_biquandle()
    value = state_sum(X, z4_cocycle(), parse_braid(BORROMEAN_WORD))
    assert value.value == BORROMEAN_VALUE
    assert value.value == GroupRingElement(4, (16, 0, 48, 0))


def test_state_sum_on_trivial_word():
    X = z4_biquandle()
    value = state_sum(X, z4_cocycle(), parse_braid(""))
    assert value.value == GroupRingElement(4, (4, 0, 0, 0))


def test_invariant_value_interface():
    X = z4_biquandle()
    value = state_sum(X, z4_cocycle(), parse_braid("s1^4"))
    assert value.render() == "8 + 8*x^3"
    assert value.colorings == 16
    assert value.to_json() == {
        "colorings": 16,
        "value": {"modulus": 4, "coefficients": [8, 0, 0, 8]}}


def test_coefficient_sum_counts_colorings():
    X = z4_biquandle()
    psi = z4_cocycle()
    for _, text in word_corpus():
        w = parse_braid(text)
        value = state_sum(X, psi, w)
        assert value.value.coefficient_sum() == count_colorings(X, w)
        assert value.colorings == count_colorings(X, w)


def test_equivalent_words_frozen_moves():
    eq = [w.text() for w in equivalent_words(parse_braid("s1 s2 s1"))]
    assert len(eq) == 24
    assert "s2 s1 s2" in eq
    assert "s1 s2 s1" not in eq

    eq2 = [w.text() for w in equivalent_words(parse_braid("v1 v1"))]
    assert len(eq2) == 12
    assert "" in eq2

    eq3 = [w.text() for w in equivalent_words(parse_braid("s1"))]
    assert eq3 == ["s1 s1^-1 s1", "s1^-1 s1 s1", "s1 s1 s1^-1",
                   "v1 s1 v1", "s1 s2", "s1 s2^-1"]


def test_equivalent_words_are_well_formed():
    for _, text in word_corpus():
        base = parse_braid(text)
        for w in equivalent_words(base):
            assert isinstance(w, BraidWord)
            assert parse_braid(w.text(), strands=w.strands).generators == \
                w.generators


def test_invariance_spot_checks():
    z4 = z4_biquandle()
    psi = z4_cocycle()
    for text in ("s1^4", "s1 v1 s1 v1", BORROMEAN_WORD):
        base = parse_braid(text)
        reference_value = state_sum(z4, psi, base).value
        reference_count = count_colorings(z4, base)
        for w in equivalent_words(base):
            assert count_colorings(z4, w) == reference_count, w.text()
            assert state_sum(z4, psi, w).value == reference_value, w.text()


def test_stabilization_breaks_without_type_one():
    # a cocycle that does not vanish on the fixed pairs fails move
    # invariance, which is what the type-one condition rules out
    z4 = z4_biquandle()
    witness = z4.biquandle_witness()
    g = next(gen for gen in cocycle_space(z4, 2, 4)
             if any(gen(witness.x_of[a], a) for a in range(4)))
    assert list(map(int, g.values)) == [
        1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0]
    plain = state_sum(z4, g, parse_braid("s1"))
    stabilized = state_sum(z4, g, parse_braid("s1 s2"))
    assert plain.value == GroupRingElement(4, (2, 2, 0, 0))
    assert stabilized.value == GroupRingElement(4, (2, 0, 2, 0))
    assert plain.value != stabilized.value
