import pytest
from hypothesis import given, strategies as st

from overpart.core import (
    DuplicateOverline,
    NonPositivePart,
    Overpartition,
    frequency_profile,
    make_overpartition,
    v_stat,
)


def O(*parts):
    return make_overpartition(parts)


def test_construction_canonicalizes_and_reports_weight():
    lam = make_overpartition([(7, True), (7, False), (6, False), (5, True), (2, False), (1, True)])
    assert lam.weight == 28
    assert lam.num_parts == 6
    assert lam.parts == ((7, True), (7, False), (6, False), (5, True), (2, False), (1, True))


def test_input_order_is_irrelevant():
    shuffled = make_overpartition([(2, False), (7, False), (1, True), (5, True), (7, True), (6, False)])
    assert shuffled == O((7, True), (7, False), (6, False), (5, True), (2, False), (1, True))


def test_empty_overpartition():
    lam = make_overpartition([])
    assert lam.weight == 0 and lam.num_parts == 0
    assert str(lam) == "-"
    assert Overpartition.parse("-") == lam


def test_duplicate_overline_rejected():
    with pytest.raises(DuplicateOverline) as err:
        make_overpartition([(3, True), (3, True)])
    assert err.value.size == 3


def test_nonpositive_part_rejected():
    with pytest.raises(NonPositivePart):
        make_overpartition([(0, False)])
    with pytest.raises(NonPositivePart):
        make_overpartition([(-2, True)])


def test_overlined_copy_precedes_plain_copies():
    lam = O((4, False), (4, True), (4, False))
    assert lam.parts == ((4, True), (4, False), (4, False))
    for a, b in zip(lam.parts, lam.parts[1:]):
        assert a[0] > b[0] or (a[0] == b[0] and (a[1], b[1]) != (False, True))


def test_text_round_trip():
    lam = O((7, True), (7, False), (6, False), (5, True), (2, False), (1, True))
    assert str(lam) == "7~,7,6,5~,2,1~"
    assert Overpartition.parse("7~, 7,6 ,5~,2,1~") == lam
    with pytest.raises(ValueError):
        Overpartition.parse("3,x")


def test_frequency_profile_of_running_example():
    prof = frequency_profile(O((7, True), (7, False), (6, False), (5, True), (2, False), (1, True)))
    assert prof.f == {7: 1, 6: 1, 2: 1}
    assert prof.fbar == {7: 1, 5: 1, 1: 1}
    assert prof.max_size == 7


def test_frequency_profile_trivia():
    assert frequency_profile(O()) == frequency_profile(make_overpartition([]))
    prof = frequency_profile(O((1, True), (1, False)))
    assert prof.plain(1) == 1 and prof.over(1) == 1


def test_v_stat_examples():
    lam = O((7, True), (7, False), (6, False), (5, True), (2, False), (1, True))
    assert v_stat(lam, 5) == 2
    assert v_stat(lam, 7) == 3
    assert v_stat(lam, 0) == 0


parts_strategy = st.lists(
    st.tuples(st.integers(min_value=1, max_value=12), st.booleans()),
    max_size=10,
).map(lambda raw: [(s, o and s not in {t for t, p in raw[:j] if p}) for j, (s, o) in enumerate(raw)])


@given(parts_strategy)
def test_profile_reconstruction_round_trip(raw):
    lam = make_overpartition(raw)
    assert frequency_profile(lam).to_overpartition() == lam


@given(parts_strategy)
def test_v_stat_monotone_and_total(raw):
    lam = make_overpartition(raw)
    values = [v_stat(lam, l) for l in range(0, lam.max_size + 1)]
    assert all(a <= b for a, b in zip(values, values[1:]))
    assert v_stat(lam, lam.max_size) == sum(1 for _, o in lam.parts if o)


@given(parts_strategy)
def test_text_round_trip_property(raw):
    lam = make_overpartition(raw)
    assert Overpartition.parse(str(lam)) == lam
