"""The inductive stalk solver, closed forms, and the Fourier-transform table."""

import pytest

from springerq.ic_engine import (
    MultiplicityTable,
    OrbitLabel,
    StalkTable,
    closed_form_f,
    closed_form_t,
    fake_degree_poly,
    ft_support_flag,
    ft_support_info,
    ft_table,
    ic_stalk_poly,
    order_two_partition,
    solve_stalk_tables,
)
from springerq.partitions import Partition
from springerq.qseries import LaurentPoly, ONE, og_poincare

P = Partition


# -- solver anchors -----------------------------------------------------------


def test_rank_one_degenerate_case():
    stalks, mult = solve_stalk_tables(1)
    assert stalks.f[1] == LaurentPoly({-1: 1})
    assert mult.t(1, 0) == ONE


def test_rank_two_hand_run():
    stalks, mult = solve_stalk_tables(2)
    assert stalks.f[1] == LaurentPoly({-2: 1})
    assert stalks.f[2] == LaurentPoly({-3: 1, -1: 1})
    assert mult.t(1, 0) == LaurentPoly({-1: 1, 0: 1, 1: 1})
    assert mult.t(2, 0) == ONE
    assert mult.t(2, 1) == ONE


def test_f1_and_t1_anchors_up_to_rank_twelve():
    for n in range(1, 13):
        stalks, mult = solve_stalk_tables(n)
        assert stalks.f[1] == LaurentPoly({-n: 1})
        t10 = mult.t(1, 0)
        assert t10 == LaurentPoly({k: 1 for k in range(-(n - 1), n)})


def test_solver_rejects_bad_rank():
    with pytest.raises(ValueError):
        solve_stalk_tables(0)


def test_solver_is_thread_safe():
    import threading

    results = []

    def worker():
        results.append(solve_stalk_tables(9))

    threads = [threading.Thread(target=worker) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)


# -- closed forms -------------------------------------------------------------


def test_closed_form_examples():
    assert closed_form_f(2, 1) == LaurentPoly({-2: 1})
    assert closed_form_f(2, 2) == LaurentPoly({-3: 1, -1: 1})
    assert closed_form_f(5, 0) == ONE
    assert closed_form_t(2, 1, 0) == LaurentPoly({-1: 1, 0: 1, 1: 1})
    assert closed_form_t(2, 2, 2) == ONE
    assert closed_form_t(2, 2, 0) == ONE  # g_{2,2} = 1
    with pytest.raises(ValueError):
        closed_form_f(2, 3)
    with pytest.raises(ValueError):
        closed_form_t(2, 1, 2)


def test_solver_matches_closed_forms():
    for n in range(1, 9):
        stalks, mult = solve_stalk_tables(n)
        for i in range(n + 1):
            assert stalks.f[i] == closed_form_f(n, i), (n, i)
        for i in range(1, n + 1):
            for j in range(i + 1):
                assert mult.t(i, j) == closed_form_t(n, i, j), (n, i, j)


def test_cross_rank_reduction():
    for n in range(2, 9):
        mult = solve_stalk_tables(n)[1]
        for i in range(1, n + 1):
            for j in range(1, i):
                assert mult.t(i, j) == solve_stalk_tables(n - j)[1].t(i - j, 0), (n, i, j)


def test_recomposition_identity():
    # og_{i,2n+1}(q) q^(-m_i) = sum_j f_j T^i_j reassembled exactly
    for n in range(1, 9):
        stalks, mult = solve_stalk_tables(n)
        for i in range(1, n + 1):
            lhs = og_poincare(i, n).shift(-i * (2 * n - i + 1) // 2)
            rhs = LaurentPoly()
            for j in range(i + 1):
                rhs = rhs + stalks.f[j] * mult.t(i, j)
            assert lhs == rhs, (n, i)


def test_f_support_and_parity():
    for n in range(1, 9):
        stalks = solve_stalk_tables(n)[0]
        for i in range(1, n + 1):
            f = stalks.f[i]
            m_i = i * (2 * n - i + 1) // 2
            assert f.min_exp == -m_i and f.max_exp <= -1
            shifted = f.shift(m_i)
            assert shifted.nonneg_coeffs()
            assert all(e % 2 == 0 for e in shifted.support())


def test_t_support_bound_attained():
    for n in range(1, 9):
        mult = solve_stalk_tables(n)[1]
        for i in range(1, n + 1):
            for j in range(i + 1):
                t = mult.t(i, j)
                bound = (i - j) * (n - i)
                assert t.max_exp == bound and t.min_exp == -bound, (n, i, j)


def test_table_validation():
    with pytest.raises(ValueError):
        StalkTable(1, (ONE, ONE))  # f_1 not negatively supported
    with pytest.raises(ValueError):
        StalkTable(1, (LaurentPoly({-1: 1}), LaurentPoly({-1: 1})))  # f_0 != 1
    with pytest.raises(ValueError):
        MultiplicityTable(1, {(1, 1): LaurentPoly({1: 1})})  # not symmetric
    with pytest.raises(ValueError):
        MultiplicityTable(1, {(1, 0): LaurentPoly({-1: -1, 1: -1})})  # negative


# -- stalk polynomials at arbitrary base points ---------------------------------


def test_ic_stalk_poly_examples():
    assert ic_stalk_poly(2, 1, 0) == LaurentPoly({-2: 1})
    # on-orbit stalk sits at -(dim orbit)/2
    for n in range(1, 6):
        for i in range(n + 1):
            d = i * (2 * n + 1 - i)
            assert ic_stalk_poly(n, i, i) == LaurentPoly({-d // 2: 1})
    # restriction shifts the rank n-j origin stalk down by s_j/2
    assert ic_stalk_poly(3, 2, 1) == LaurentPoly({-5: 1})


def test_ic_stalk_poly_consistency():
    for n in range(1, 7):
        stalks = solve_stalk_tables(n)[0]
        for i in range(1, n + 1):
            assert ic_stalk_poly(n, i, 0) == stalks.f[i]
            for j in range(i):
                s_j = j * (2 * n + 1 - j)
                expected = closed_form_f(n - j, i - j).shift(-s_j // 2)
                assert ic_stalk_poly(n, i, j) == expected, (n, i, j)
    with pytest.raises(ValueError):
        ic_stalk_poly(2, 1, 2)


# -- fake degrees ----------------------------------------------------------------


def test_fake_degree_examples():
    assert fake_degree_poly(2, 0) == LaurentPoly({4: 1})
    assert fake_degree_poly(2, 1) == LaurentPoly({2: 1})
    assert fake_degree_poly(2, 2) == LaurentPoly({1: 1, 3: 1})


def test_fake_degree_is_shifted_stalk():
    # P_i(q) = q^(n^2) f_i(q)
    for n in range(1, 9):
        stalks = solve_stalk_tables(n)[0]
        for i in range(n + 1):
            assert fake_degree_poly(n, i) == stalks.f[i].shift(n * n), (n, i)


# -- Fourier-transform table -----------------------------------------------------


def test_order_two_partition():
    assert order_two_partition(2, 1) == P((2, 1, 1, 1))
    assert order_two_partition(3, 0) == P((1,) * 7)
    with pytest.raises(ValueError):
        order_two_partition(2, 3)


def test_ft_table_small():
    rows = ft_table(2)
    assert [r.trivial_target_dim for r in rows] == [1, 5, 10]
    assert [r.nontrivial_target_dim for r in rows] == [None, 4, 5]
    assert rows[0].nontrivial_monodromy is None
    assert rows[1].trivial_monodromy == "finite-tits"
    assert rows[1].nontrivial_monodromy == "infinite-braid"
    assert rows[2].orbit == OrbitLabel(2, P((2, 2, 1)))


def test_ft_table_dimension_identity():
    # C(2n,i) - C(2n,i-2) + C(2n+1,i-1) = C(2n+1,i)
    for n in range(1, 31):
        rows = ft_table(n)
        for i in range(1, n + 1):
            assert (
                rows[i].trivial_target_dim
                == rows[i].nontrivial_target_dim + rows[i - 1].trivial_target_dim
            ), (n, i)


# -- support classification -------------------------------------------------------


def test_ft_support_examples():
    assert ft_support_flag(OrbitLabel(3, P((3, 2, 2))), "trivial") == "proper"
    assert ft_support_flag(OrbitLabel(3, P((2, 2, 1, 1, 1))), "nontrivial") == "full"
    # gap-free, not order-two, not Richardson: outside the classified families
    assert ft_support_flag(OrbitLabel(3, P((3, 2, 1, 1))), "trivial") == "unknown"
    # order-two orbits have full support, the zero orbit and 2^n 1 included
    assert ft_support_flag(OrbitLabel(3, P((2, 2, 2, 1))), "trivial") == "full"
    for n in range(1, 5):
        for i in range(n + 1):
            orbit = OrbitLabel(n, order_two_partition(n, i))
            assert ft_support_flag(orbit, "trivial") == "full"


def test_ft_support_richardson_names():
    info = ft_support_info(OrbitLabel(1, P((3,))), "trivial")
    assert info == ft_support_info(OrbitLabel(3, P((7,))), "trivial")
    assert info.flag == "proper" and info.support_name == "g_1^0"
    assert not info.general_template
    # three odd parts at rank 2 lands in the i = 1 parabolic family
    info = ft_support_info(OrbitLabel(2, P((3, 1, 1))), "trivial")
    assert info.flag == "proper" and info.support_name == "g_1^1"
    assert info.general_template


def test_ft_support_nontrivial_requires_order_two():
    with pytest.raises(ValueError):
        ft_support_flag(OrbitLabel(3, P((3, 2, 2))), "nontrivial")
    with pytest.raises(ValueError):
        ft_support_flag(OrbitLabel(2, P((1, 1, 1, 1, 1))), "nontrivial")
    with pytest.raises(ValueError):
        ft_support_flag(OrbitLabel(2, P((2, 2, 1))), "other")
