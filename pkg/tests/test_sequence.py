import itertools

import numpy as np
import pytest

from algebra.matrices import WALSH_4
from sequence.generators import (
    block_extend,
    block_prefix,
    prefix,
    prefix_array,
    verify_equivalence,
    walsh_prefix,
)
from sequence.signs import LINK_SET, Sign, digits4, format_digits, link_count, sign_at
from sequence.substitution import (
    ALL_LETTERS,
    S0,
    S1,
    Letter,
    SubstitutionRule,
    fixed_point,
    parse_word,
    signs_of,
    substitute,
)
from utils.errors import InvalidInputError

FIRST_16 = "++++" "+-+-" "++--" "+--+"
FIRST_64 = FIRST_16 + "++++-+-+++---++-" + "+++++-+---++-++-" + "++++-+-+--+++--+"
WORKED_INDEX = int("1320011102311122", 4)


def as_text(signs):
    return "".join(Sign(int(s)).symbol for s in signs)


@pytest.mark.parametrize("n, expected", [(0, [0]), (5, [1, 1]), (22, [2, 1, 1]), (16, [0, 0, 1])])
def test_digits4(n, expected):
    assert digits4(n) == expected


def test_digits4_rejects_negative():
    with pytest.raises(InvalidInputError):
        digits4(-1)


def test_link_set_matches_two_digit_minus_signs():
    minus = {n for n in range(16) if sign_at(n) is Sign.MINUS}
    assert minus == {5, 7, 10, 11, 13, 14}
    assert {n1 * 4 + n0 for n1, n0 in LINK_SET} == minus
    assert len(LINK_SET) == 6


def test_worked_example_has_nine_links():
    assert format_digits(WORKED_INDEX) == "1320011102311122"
    assert link_count(WORKED_INDEX) == 9
    assert sign_at(WORKED_INDEX) is Sign.MINUS


def test_small_link_counts():
    assert link_count(0) == 0
    assert link_count(5) == 1


def test_first_sixteen_terms():
    assert as_text(sign_at(n) for n in range(16)) == FIRST_16
    assert as_text(prefix(16)) == FIRST_16


def test_prefix_64_reads_table_rows():
    assert as_text(prefix(64)) == FIRST_64


def test_prefix_empty():
    assert prefix(0) == []
    assert prefix_array(0).size == 0


def test_prefix_matches_digit_formula():
    assert [int(s) for s in prefix(4096)] == [int(sign_at(n)) for n in range(4096)]
    assert prefix_array(4096).tolist() == [int(s) for s in prefix(4096)]


def test_appending_zero_digit_keeps_sign():
    assert all(sign_at(4 * m) == sign_at(m) for m in range(2000))


def test_recurrence_with_walsh_rows():
    for m in range(1000):
        for c in range(4):
            assert int(sign_at(4 * m + c)) == int(sign_at(m)) * WALSH_4[m % 4][c]


def test_block_extend_from_four_plus():
    word = [Sign.PLUS] * 4
    assert as_text(block_extend(word)) == FIRST_16


def test_block_extend_three_times_gives_prefix_256():
    word = [Sign.PLUS] * 4
    for _ in range(3):
        word = block_extend(word)
    assert word == prefix(256)


def test_block_extend_single_letter():
    assert block_extend([Sign.PLUS]) == prefix(4)


@pytest.mark.parametrize("size", [2, 3, 8, 12])
def test_block_extend_rejects_other_lengths(size):
    with pytest.raises(InvalidInputError):
        block_extend([Sign.PLUS] * size)


def test_block_prefix_truncates():
    assert block_prefix(10) == prefix(10)


def test_substitution_examples():
    a = [Letter("a")]
    assert substitute(S1, a, 1) == parse_word("+a+b")
    assert substitute(S1, a, 2) == parse_word("+a+b+c+d") == substitute(S0, a, 1)
    assert as_text(signs_of(substitute(S0, a, 2))) == FIRST_16


def test_s1_squared_is_s0_on_short_words():
    words = [list(w) for w in itertools.product(ALL_LETTERS, repeat=2)]
    words += [fixed_point(S0, 16), [-x for x in fixed_point(S1, 13)]]
    for word in words:
        assert substitute(S1, word, 2) == substitute(S0, word, 1)


def test_substitute_zero_steps_is_identity():
    word = parse_word("+a-c")
    assert substitute(S0, word, 0) == word


def test_negative_letters_map_to_negated_images():
    assert S0.image(Letter("b", Sign.MINUS)) == tuple(parse_word("-a+b-c+d"))
    assert S1.image(Letter("d", Sign.MINUS)) == tuple(parse_word("-c+d"))


def test_fixed_point_letters_follow_position_and_sign():
    word = fixed_point(S0, 1024)
    for m, letter in enumerate(word):
        assert letter.index == m % 4
        assert letter.sign == sign_at(m)


def test_rule_requires_all_letters():
    with pytest.raises(InvalidInputError):
        SubstitutionRule.from_positive("partial", {"a": "+a+b", "b": "+a"})


def test_rule_requires_sign_equivariance():
    mapping = dict(S1.mapping)
    mapping[Letter("a", Sign.MINUS)] = tuple(parse_word("-a+b"))
    with pytest.raises(InvalidInputError):
        SubstitutionRule("broken", mapping)


def test_parse_word_rejects_garbage():
    with pytest.raises(InvalidInputError):
        parse_word("+a*b")


@pytest.mark.parametrize("length", [1, 16, 4 ** 6])
def test_verify_equivalence_passes(length):
    report = verify_equivalence(length)
    assert report.passed
    assert report.details["first_mismatch"] is None


def test_verify_equivalence_reports_first_mismatch(monkeypatch):
    import sequence.generators as generators

    def corrupted(length):
        signs = prefix(length)
        signs[37] = -signs[37]
        return signs

    monkeypatch.setattr(generators, "prefix", corrupted)
    report = generators.verify_equivalence(64)
    assert not report.passed
    assert report.details["first_mismatch"] == 37
    assert report.witnesses[0]["generator"] == "recurrence"


def test_walsh_prefix_order_two_is_the_sequence():
    assert np.array_equal(walsh_prefix(2, 1024), prefix_array(1024))


def test_walsh_prefix_order_one_is_rudin_shapiro():
    assert as_text(walsh_prefix(1, 16)) == "+++-++-++++---+-"


def test_prefix_array_respects_fast_limit(env_settings):
    env_settings(QH_FAST_INDEX_LIMIT=100)
    with pytest.raises(InvalidInputError):
        prefix_array(101)
