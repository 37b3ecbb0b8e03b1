import pytest
from hypothesis import given, settings, strategies as st

from overpart.core import InvalidParameters
from overpart.enumeration import count_table, residue_counts, residue_rules
from overpart.series import (
    IllFormedMonomial,
    Monomial,
    NonUnitConstantTerm,
    OrderMismatch,
    QSeries,
    XQSeries,
    bilateral_theta,
    gen_d,
    invert,
    pochhammer,
    qseries_rows,
    residue_product,
    series_j,
    series_w,
    theta_halves,
    triple_product,
    xqseries_rows,
)

Q = Monomial(1, 0, 1)


def test_pochhammer_distinct_parts_oracle():
    # (-q; q)_inf coefficients are the distinct-part partition counts,
    # frozen from expanding (1+q)(1+q^2)(1+q^3)(1+q^4) by hand
    s = pochhammer([Monomial(-1, 0, 1)], Q, None, 4).to_qseries()
    assert s.coeffs == (1, 1, 1, 2, 2)


def test_pochhammer_empty_product_is_one():
    assert pochhammer([Q], Q, 0, 5).to_qseries() == QSeries.one(5)


def test_pochhammer_constant_term_is_one():
    s = pochhammer([Monomial(1, 0, 1), Monomial(1, 0, 4), Monomial(1, 0, 5)],
                   Monomial(1, 0, 5), None, 12).to_qseries()
    assert s.coeffs[0] == 1


def test_pochhammer_finite_matches_manual_expansion():
    # (q; q)_2 = (1-q)(1-q^2) = 1 - q - q^2 + q^3
    s = pochhammer([Q], Q, 2, 5).to_qseries()
    assert s.coeffs == (1, -1, -1, 1, 0, 0)


def test_pochhammer_rejects_constant_argument():
    with pytest.raises(IllFormedMonomial):
        pochhammer([Monomial(1, 0, 0)], Q, None, 4)
    with pytest.raises(IllFormedMonomial):
        pochhammer([Q], Monomial(1, 0, 0), None, 4)


def test_invert_geometric_series():
    one_minus_q = XQSeries.one(3).one_minus_times(1, 0, 1)
    assert one_minus_q.invert().to_qseries().coeffs == (1, 1, 1, 1)


def test_invert_partition_numbers():
    s = invert(pochhammer([Q], Q, None, 4)).to_qseries()
    assert s.coeffs == (1, 1, 2, 3, 5)


def test_invert_requires_unit_constant():
    with pytest.raises(NonUnitConstantTerm):
        QSeries(4, (2, 1)).invert()
    with pytest.raises(NonUnitConstantTerm):
        XQSeries(4, ((0, 1),)).invert()


def test_order_mixing_is_an_error():
    with pytest.raises(OrderMismatch):
        QSeries.one(4) + QSeries.one(5)
    with pytest.raises(OrderMismatch):
        XQSeries.one(4) * XQSeries.one(3)


sparse = st.lists(st.tuples(st.integers(0, 10), st.integers(-4, 4)), max_size=5)


def _qs(pairs, unit=False):
    coeffs = [0] * 11
    if unit:
        coeffs[0] = 1
    for exp, val in pairs:
        coeffs[exp] += val
    if unit and coeffs[0] not in (1, -1):
        coeffs[0] = 1
    return QSeries(10, tuple(coeffs))


@given(sparse, sparse, sparse)
def test_ring_laws_on_random_sparse_series(a, b, c):
    x, y, z = _qs(a), _qs(b), _qs(c)
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(sparse)
@settings(max_examples=60)
def test_invert_is_an_involution(a):
    s = _qs(a, unit=True)
    assert s.invert().invert() == s
    assert s * s.invert() == QSeries.one(10)


def test_series_w_constant_term_is_one_for_k_at_least_2():
    for k in range(2, 6):
        for i in range(1, k + 1):
            assert series_w(k, i, 6).coeff(0, 0) == 1, (k, i)


def test_series_w_degenerates_to_zero_at_k1():
    # the k = 1 sum telescopes away entirely; its x^0 q^0 coefficient is 0,
    # not 1, which is one face of the k = 1 breakdown of these identities
    assert series_w(1, 1, 12) == XQSeries.zero(12)


def test_series_w_at_i_zero_is_zero():
    for k in (1, 2, 3):
        assert series_w(k, 0, 8) == XQSeries.zero(8)


def test_series_w_coefficient_example():
    assert series_w(3, 2, 6).coeff(2, 3) == 3


def test_series_w_matches_enumerated_table():
    for k, i in [(2, 1), (2, 2), (3, 2)]:
        table = count_table("main", k, i, 12, 12)
        w = series_w(k, i, 12)
        for n in range(13):
            for m in range(13):
                assert w.coeff(m, n) == table.cell(m, n), (k, i, m, n)


def test_series_w_x_degree_bound():
    for k, i in [(2, 1), (3, 2), (4, 4), (5, 3)]:
        w = series_w(k, i, 16)
        assert all(deg <= n for n, deg in enumerate(w.x_degrees()))


def test_series_w_rejects_bad_parameters():
    with pytest.raises(InvalidParameters):
        series_w(3, 4, 6)
    with pytest.raises(InvalidParameters):
        series_w(0, 0, 6)
    with pytest.raises(InvalidParameters):
        series_w(3, 2, -1)


def test_series_j_at_i_one_is_series_w():
    assert series_j(3, 1, 14) == series_w(3, 1, 14)
    assert series_j(2, 1, 14) == series_w(2, 1, 14)


def test_series_j_tracks_the_clm_family():
    # its x^m q^n coefficient counts the i = 1 condition-side objects
    table = count_table("main", 3, 1, 12, 12)
    j = series_j(3, 1, 12)
    for n in range(13):
        for m in range(13):
            assert j.coeff(m, n) == table.cell(m, n)


def test_substitution_reindexes_exactly():
    w = series_w(3, 2, 10)
    shifted = w.subs_x_to_xq()
    for n in range(11):
        for m in range(n + 1):
            assert shifted.coeff(m, n) == (w.coeff(m, n - m) if n - m >= 0 else 0)


def test_residue_product_overpartition_numbers():
    s = residue_product(1, {0}, {0}, 4)
    assert s.coeffs == (1, 2, 4, 8, 14)


def test_residue_product_empty_allowance_is_one():
    assert residue_product(3, set(), set(), 6) == QSeries.one(6)


def test_residue_product_c_specialization():
    rules = residue_rules("main", 3, 2)
    allowed = frozenset(range(5)) - rules.forbidden_plain
    s = residue_product(5, allowed, frozenset(range(5)), 10)
    assert s.coeffs[2] == 3
    assert list(s.coeffs) == residue_counts("main", 3, 2, 10)


def test_bilateral_theta_constant_term():
    assert bilateral_theta(4, 2, 10).coeffs[0] == 1


def test_theta_equals_triple_product():
    for k in range(2, 6):
        for i in range(1, k + 1):
            assert bilateral_theta(k, i, 30) == triple_product(k, i, 30), (k, i)


def test_theta_unfolds_into_two_one_sided_sums():
    for k in range(1, 6):
        for i in range(1, k + 1):
            h1, h2 = theta_halves(k, i, 30)
            assert h1 + h2 == bilateral_theta(k, i, 30), (k, i)


def test_theta_collapses_at_k1():
    assert bilateral_theta(1, 1, 30) == QSeries.zero(30)
    with pytest.raises(IllFormedMonomial):
        triple_product(1, 1, 30)  # one argument would be q^0


def test_gen_d_small_coefficients():
    g = gen_d(3, 2, 6)
    assert g.coeffs[0] == 1 and g.coeffs[1] == 2 and g.coeffs[2] == 3


def test_gen_d_equals_residue_product():
    for k in range(2, 6):
        for i in range(1, k + 1):
            rules = residue_rules("main", k, i)
            allowed = frozenset(range(rules.modulus)) - rules.forbidden_plain
            product = residue_product(rules.modulus, allowed, frozenset(range(rules.modulus)), 24)
            assert gen_d(k, i, 24) == product, (k, i)


def test_row_dumps():
    assert qseries_rows(QSeries(3, (1, 0, 2))) == [(0, 1), (1, 0), (2, 2), (3, 0)]
    w = XQSeries(2, ((1,), (0, 1)))
    assert xqseries_rows(w) == [(0, 0, 1), (1, 1, 1)]
