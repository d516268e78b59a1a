"""Double monomial construction, generators, and M-basis expansion."""

import random

import pytest

from dqsym.compositions import Composition, enumerate_compositions
from dqsym.polynomial import Monomial, XYPolynomial, one, x_var, y_var, zero
from dqsym.qsym import (
    Expansion,
    NotInMaximalIdeal,
    NotInSpan,
    TruncationContext,
    TruncationTooSmall,
    cell_class,
    double_monomial,
    expand_in_M,
    is_quasisymmetric,
    monomial_qsym,
    qsym_generator,
)

from oracles import (
    brute_monomial_qsym_terms,
    eval_double_monomial,
    eval_poly,
    poly_x_terms,
    sample_points,
)


class TestTruncationContext:
    def test_validation(self):
        with pytest.raises(ValueError):
            TruncationContext(-1, 0)
        ctx = TruncationContext(2, 3)
        assert (ctx.n_x, ctx.n_y) == (2, 3)
        assert ctx == TruncationContext(2, 3)

    def test_for_product(self):
        ctx = TruncationContext.for_product(Composition([3, 2]), Composition([2, 3]))
        assert (ctx.n_x, ctx.n_y) == (4, 11)
        unit = TruncationContext.for_product(Composition(), Composition())
        assert (unit.n_x, unit.n_y) == (0, 1)


class TestDoubleMonomial:
    def test_single_part(self):
        ctx = TruncationContext(2, 1)
        expected = (x_var(1) - y_var(1)) + (x_var(2) - y_var(1))
        assert double_monomial(Composition([1]), ctx) == expected

    def test_empty_composition(self):
        assert double_monomial(Composition(), TruncationContext(3, 2)) == one()
        assert double_monomial(Composition(), TruncationContext(0, 0)) == one()

    def test_two_rows_single_choice(self):
        ctx = TruncationContext(2, 2)
        expected = (x_var(1) - y_var(1)) * (x_var(1) - y_var(2)) * (x_var(2) - y_var(1))
        assert double_monomial(Composition([2, 1]), ctx) == expected

    def test_truncation_too_small(self):
        with pytest.raises(TruncationTooSmall):
            double_monomial(Composition([1, 1]), TruncationContext(1, 1))
        with pytest.raises(TruncationTooSmall):
            double_monomial(Composition([3]), TruncationContext(1, 2))

    def test_against_direct_evaluation(self):
        # independent route: evaluate the defining sum with integer loops
        for alpha in enumerate_compositions(3, 3):
            ctx = TruncationContext(4, 3)
            p = double_monomial(alpha, ctx)
            for xs, ys in sample_points(4, 3, 3, seed=alpha.size() * 7 + len(alpha)):
                assert eval_poly(p, xs, ys) == eval_double_monomial(alpha, 4, xs, ys)

    def test_row_class_factor(self):
        assert cell_class(2, 3) == (x_var(3) - y_var(1)) * (x_var(3) - y_var(2))
        assert cell_class(0, 1) == one()


class TestMonomialQsym:
    def test_examples(self):
        assert monomial_qsym(Composition([1]), TruncationContext(2, 1)) == x_var(1) + x_var(2)
        assert monomial_qsym(Composition(), TruncationContext(2, 1)) == one()
        expected = (
            x_var(1) ** 2 * x_var(2)
            + x_var(1) ** 2 * x_var(3)
            + x_var(2) ** 2 * x_var(3)
        )
        assert monomial_qsym(Composition([2, 1]), TruncationContext(3, 2)) == expected

    def test_matches_brute_force(self):
        for alpha in enumerate_compositions(2, 3):
            p = monomial_qsym(alpha, TruncationContext(4, 3))
            expected = brute_monomial_qsym_terms(alpha, 4)
            assert poly_x_terms(p) == expected

    def test_is_y_to_zero_of_double(self):
        for alpha in [Composition([5]), Composition([2, 3]), Composition([1, 1, 1, 1, 1])]:
            ctx = TruncationContext(len(alpha) + 1, 5)
            doubled = double_monomial(alpha, ctx)
            killed = doubled.substitute(
                {v: 0 for v in doubled.variables() if v[0] == "y"}
            )
            assert killed == monomial_qsym(alpha, ctx)


class TestIsQuasisymmetric:
    def test_symmetric_sum(self):
        assert is_quasisymmetric(x_var(1) + x_var(2), TruncationContext(2, 0))

    def test_single_variable_fails(self):
        assert not is_quasisymmetric(x_var(1), TruncationContext(2, 0))

    def test_double_monomials_pass(self):
        ctx = TruncationContext(4, 5)
        assert is_quasisymmetric(double_monomial(Composition([3, 2]), ctx), ctx)
        for alpha in enumerate_compositions(3, 3):
            ctx33 = TruncationContext(3, 3)
            assert is_quasisymmetric(double_monomial(alpha, ctx33), ctx33)

    def test_mismatched_coefficient_fails(self):
        p = x_var(1) * x_var(2) + 2 * x_var(1) * x_var(3) + x_var(2) * x_var(3)
        assert not is_quasisymmetric(p, TruncationContext(3, 0))

    def test_y_only_passes(self):
        assert is_quasisymmetric(y_var(1) - y_var(2), TruncationContext(2, 2))

    def test_out_of_context_variables_rejected(self):
        with pytest.raises(ValueError):
            is_quasisymmetric(x_var(3), TruncationContext(2, 0))


class TestQsymGenerator:
    def test_linear(self):
        x = x_var(1)
        assert qsym_generator([x], TruncationContext(2, 0)) == x_var(1) + x_var(2)

    def test_two_factor_generators(self):
        x = x_var(1)
        ctx = TruncationContext(2, 0)
        assert qsym_generator([x * x, x], ctx) == x_var(1) ** 2 * x_var(2)
        assert qsym_generator([x, x], ctx) == x_var(1) * x_var(2)

    def test_matches_monomial_qsym_on_powers(self):
        x = x_var(1)
        for s in range(4):
            ctx = TruncationContext(4, 1)
            ones = Composition([1] * s)
            assert qsym_generator([x] * s, ctx) == monomial_qsym(ones, ctx)

    def test_constant_term_rejected(self):
        with pytest.raises(NotInMaximalIdeal):
            qsym_generator([x_var(1) + 1], TruncationContext(2, 0))

    def test_wrong_variable_rejected(self):
        with pytest.raises(ValueError):
            qsym_generator([x_var(2)], TruncationContext(3, 0))
        with pytest.raises(ValueError):
            qsym_generator([y_var(1)], TruncationContext(3, 0))

    def test_more_factors_than_variables(self):
        x = x_var(1)
        assert qsym_generator([x, x, x], TruncationContext(2, 0)) == zero()

    def test_two_variable_relation(self):
        ctx = TruncationContext(2, 0)
        x = x_var(1)
        t = qsym_generator([x, x], ctx)
        z = qsym_generator([x], ctx)
        w = qsym_generator([x * x, x], ctx)
        assert t**3 - t * z * w + w**2 == zero()
        printed = z**3 - t * z * w + w**2
        assert printed != zero()
        assert printed.substitute({("x", 1): 1, ("x", 2): 1}).as_int() == 7


class TestExpansion:
    def test_cleaning_and_validation(self):
        e = Expansion({Composition([1]): zero(), Composition([2]): one()})
        assert e.support() == [Composition([2])]
        with pytest.raises(ValueError):
            Expansion({Composition([1]): x_var(1)})

    def test_lookup_default(self):
        e = Expansion({Composition([2]): one()})
        assert e[Composition([3])] == zero()
        assert Composition([2]) in e
        assert Composition([3]) not in e

    def test_addition_and_scaling(self):
        a = Expansion({Composition([1]): y_var(1), Composition([2]): one()})
        b = Expansion({Composition([1]): -y_var(1)})
        assert (a + b).support() == [Composition([2])]
        scaled = a.scale(2)
        assert scaled[Composition([1])] == 2 * y_var(1)
        with pytest.raises(ValueError):
            a.scale(x_var(1))

    def test_records_sorted_by_graded_order(self):
        e = Expansion(
            {
                Composition([1, 1]): 2 * one(),
                Composition([2]): one(),
                Composition([1]): y_var(2) - y_var(1),
            }
        )
        records = e.to_records()
        assert [r["gamma"] for r in records] == [[1], [2], [1, 1]]
        assert Expansion.from_records(records) == e


class TestExpandInM:
    def test_basis_element(self):
        ctx = TruncationContext(2, 2)
        e = expand_in_M(double_monomial(Composition([2]), ctx), ctx)
        assert e == Expansion({Composition([2]): one()})

    def test_zero(self):
        assert expand_in_M(zero(), TruncationContext(2, 2)) == Expansion()

    def test_square_of_single_part(self):
        ctx = TruncationContext(3, 3)
        p = double_monomial(Composition([1]), ctx) ** 2
        expected = Expansion(
            {
                Composition([1, 1]): 2 * one(),
                Composition([2]): one(),
                Composition([1]): y_var(2) - y_var(1),
            }
        )
        assert expand_in_M(p, ctx) == expected

    def test_round_trip_sample(self):
        ctx = TruncationContext(3, 3)
        for alpha in [Composition(), Composition([3]), Composition([1, 2]), Composition([2, 1, 3])]:
            p = double_monomial(alpha, ctx)
            assert expand_in_M(p, ctx) == Expansion({alpha: one()})

    def test_additivity(self):
        ctx = TruncationContext(3, 3)
        p = double_monomial(Composition([2]), ctx) * double_monomial(Composition([1]), ctx)
        q = double_monomial(Composition([1, 1]), ctx)
        assert expand_in_M(p + q, ctx) == expand_in_M(p, ctx) + expand_in_M(q, ctx)

    def test_x_free_input(self):
        coefficient = y_var(2) - y_var(1)
        e = expand_in_M(coefficient, TruncationContext(2, 2))
        assert e == Expansion({Composition(): coefficient})

    def test_context_independence(self):
        alpha, beta = Composition([2]), Composition([1, 1])
        small = TruncationContext.for_product(alpha, beta)
        big = TruncationContext(small.n_x + 1, small.n_y + 1)
        product_small = double_monomial(alpha, small) * double_monomial(beta, small)
        product_big = double_monomial(alpha, big) * double_monomial(beta, big)
        assert expand_in_M(product_small, small) == expand_in_M(product_big, big)

    def test_not_quasisymmetric(self):
        with pytest.raises(NotInSpan):
            expand_in_M(x_var(1), TruncationContext(2, 1))

    def test_context_too_small_for_support(self):
        # quasisymmetric, but the expansion needs a part above n_y
        p = x_var(1) ** 2 + x_var(2) ** 2
        with pytest.raises(NotInSpan):
            expand_in_M(p, TruncationContext(2, 1))

    def test_out_of_context_variables_rejected(self):
        with pytest.raises(ValueError):
            expand_in_M(x_var(5), TruncationContext(2, 1))
