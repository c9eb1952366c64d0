"""Monomial orders, division, reduced bases, and ideal predicates."""

import random
from fractions import Fraction

import pytest

from support import P, ideal, random_polynomial, ring
from varinv import (
    Ideal,
    MonomialOrder,
    RingMismatchError,
    VarSet,
    eliminate,
    ideal_equal,
    ideal_member,
    ideal_sum,
    normal_form,
    reduced_groebner,
    s_polynomial,
)
from varinv.groebner import exact_quotient, leading_monomial


class TestMonomialOrder:
    def test_lex(self):
        o = MonomialOrder.lex(ring("x,y"))
        assert o.compare((2, 0), (1, 1)) == 1  # x^2 > x*y

    def test_deglex_degree_dominates(self):
        o = MonomialOrder.deglex(ring("x,y"))
        assert o.compare((0, 2), (1, 0)) == 1  # y^2 > x

    def test_deglex_vs_degrevlex_discriminating_pair(self):
        vs = ring("x,y,z")
        xz, y2 = (1, 0, 1), (0, 2, 0)
        assert MonomialOrder.deglex(vs).compare(xz, y2) == 1
        assert MonomialOrder.degrevlex(vs).compare(xz, y2) == -1

    def test_priority_permutation_required(self):
        with pytest.raises(ValueError):
            MonomialOrder.lex(ring("x,y"), ("x",))
        with pytest.raises(ValueError):
            MonomialOrder("weight", ring("x"), ())

    def test_arity_checked(self):
        with pytest.raises(ValueError):
            MonomialOrder.lex(ring("x,y")).compare((1,), (0, 1))

    def test_total_order_random(self):
        rng = random.Random(301)
        vs = ring("x,y,z")
        orders = [MonomialOrder(k, vs) for k in ("lex", "deglex", "degrevlex")]
        for _ in range(200):
            a = tuple(rng.randrange(4) for _ in range(3))
            b = tuple(rng.randrange(4) for _ in range(3))
            for o in orders:
                c = o.compare(a, b)
                assert c == -o.compare(b, a)
                assert (c == 0) == (a == b)
                if a != (0, 0, 0):
                    assert o.compare(a, (0, 0, 0)) == 1  # 1 is smallest


class TestNormalForm:
    def test_single_divisor(self):
        vs = ring("x,y")
        got = normal_form(P("x^2*y + 1", vs), [P("x^2", vs)], MonomialOrder.lex(vs))
        assert got == 1

    def test_generators_reduce_to_zero(self):
        I = ideal("x,y,z", "x - y^2", "y*z - 1", "x*z + y")
        basis = I.groebner_basis()
        for g in I.generators:
            assert normal_form(g, list(basis)) == 0

    def test_membership_of_plane_curve(self):
        vs = ring("x,y")
        got = normal_form(P("x^2 + x*y + y^3", vs), [P("x", vs), P("y", vs)], MonomialOrder.lex(vs))
        assert got == 0

    def test_zero_divisor_rejected(self):
        vs = ring("x")
        with pytest.raises(ValueError):
            normal_form(P("x", vs), [P("0", vs)])


class TestSPolynomial:
    def test_adjacent_powers_cancel_completely(self):
        vs = ring("x,y")
        assert s_polynomial(P("x^2", vs), P("x*y", vs)) == 0

    def test_one_step_hand_computation(self):
        vs = ring("x,y,z")
        o = MonomialOrder.lex(vs)
        assert s_polynomial(P("x - y", vs), P("x - z", vs), o) == P("z - y", vs)

    def test_self_pair(self):
        f = P("x^2 - y", "x,y")
        assert s_polynomial(f, f) == 0

    def test_zero_rejected(self):
        vs = ring("x")
        with pytest.raises(ValueError):
            s_polynomial(P("0", vs), P("x", vs))


class TestReducedGroebner:
    def test_plane_curve_collapses_to_maximal_ideal(self):
        I = ideal("x,y", "2*x + y", "x + 3*y^2", "x^2 + x*y + y^3")
        basis = I.groebner_basis(MonomialOrder.lex(ring("x,y")))
        assert set(basis) == {P("x", "x,y"), P("y", "x,y")}

    def test_zero_ideal(self):
        assert Ideal(ring("x,y")).groebner_basis() == ()

    def test_unit_ideal(self):
        I = ideal("x", "x", "x + 1")
        assert I.groebner_basis() == (P("1", "x"),)
        assert I.is_unit()

    def test_basis_is_monic_and_sorted(self):
        I = ideal("x,y", "3*x^2 - y", "2*y^2 - x")
        o = MonomialOrder.degrevlex(ring("x,y"))
        basis = I.groebner_basis(o)
        keys = [o.key(leading_monomial(g, o)) for g in basis]
        assert keys == sorted(keys)
        for g in basis:
            assert g.terms[leading_monomial(g, o)] == 1

    def test_cache_reused(self):
        I = ideal("x,y", "x^2 - y")
        assert I.groebner_basis() is I.groebner_basis()

    def test_reduced_groebner_function(self):
        I = ideal("x,y", "x - y")
        assert reduced_groebner(I) == I.groebner_basis()


class TestIdealPredicates:
    def test_membership_on_locus(self):
        I = ideal("x,y,z", "x - y", "x*z + 1")
        assert ideal_member(P("2*x*z + 2", "x,y,z"), I)

    def test_scheme_distinction(self):
        assert not ideal_member(P("x", "x"), ideal("x", "x^2"))

    def test_zero_always_member(self):
        assert ideal_member(P("0", "x"), Ideal(ring("x")))

    def test_equal_after_linear_recombination(self):
        assert ideal_equal(ideal("x,y", "x", "y"), ideal("x,y", "x + y", "x - y"))

    def test_x_versus_x_squared(self):
        assert not ideal_equal(ideal("x", "x"), ideal("x", "x^2"))

    def test_maximal_versus_fat_point(self):
        assert not ideal_equal(ideal("x,y", "x", "y"), ideal("x,y", "x", "y^2"))

    def test_sum(self):
        s = ideal_sum(ideal("x,y", "x"), ideal("x,y", "y"))
        assert ideal_equal(s, ideal("x,y", "x", "y"))

    def test_sum_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            ideal_sum(ideal("x", "x"), ideal("y", "y"))

    def test_membership_order_invariant_random(self):
        rng = random.Random(302)
        vs = ring("x,y")
        orders = [MonomialOrder(k, vs) for k in ("lex", "deglex", "degrevlex")]
        for _ in range(60):
            I = Ideal(vs, [random_polynomial(rng, vs) for _ in range(2)])
            f = random_polynomial(rng, vs, allow_zero=True)
            answers = {I.contains(f, o) for o in orders}
            assert len(answers) == 1


class TestEliminate:
    def test_single_spolynomial_case(self):
        I = ideal("x,y,z", "x - y^2", "x - z")
        out = eliminate(I, {"x"})
        assert out.ring == ring("y,z")
        assert ideal_equal(out, ideal("y,z", "y^2 - z"))

    def test_graph_ideal_eliminates_to_zero(self):
        I = ideal("x,y,z", "x - y*z - z^2")
        out = eliminate(I, {"x"})
        assert out.is_zero

    def test_cannot_drop_everything(self):
        with pytest.raises(ValueError):
            eliminate(ideal("x", "x"), {"x"})

    def test_soundness_random(self):
        from varinv import change_ring

        rng = random.Random(303)
        vs = ring("x,y,z")
        for _ in range(40):
            I = Ideal(vs, [random_polynomial(rng, vs) for _ in range(2)])
            out = eliminate(I, {"z"})
            zi = vs.index("z")
            for g in out.generators:
                lifted = change_ring(g, vs)
                assert all(m[zi] == 0 for m in lifted.terms)
                assert ideal_member(lifted, I)


class TestExactQuotient:
    def test_difference_of_squares(self):
        vs = ring("x,y")
        assert exact_quotient(P("x^2 - y^2", vs), P("x - y", vs)) == P("x + y", vs)

    def test_not_divisible(self):
        vs = ring("x,y")
        with pytest.raises(ValueError):
            exact_quotient(P("x^2 + 1", vs), P("x - y", vs))

    def test_random_products(self):
        rng = random.Random(304)
        vs = ring("x,y")
        for _ in range(100):
            f = random_polynomial(rng, vs)
            g = random_polynomial(rng, vs)
            assert exact_quotient(f * g, g) == f


class TestAgainstSympy:
    """Independent cross-check of reduced bases against sympy's engine."""

    @pytest.mark.parametrize("kind,sympy_order", [("lex", "lex"), ("deglex", "grlex"), ("degrevlex", "grevlex")])
    def test_random_ideals_match(self, kind, sympy_order):
        sympy = pytest.importorskip("sympy")
        from sympy.polys.orderings import grevlex, grlex, lex
        from sympy.polys.rings import ring as sring

        order_obj = {"lex": lex, "grlex": grlex, "grevlex": grevlex}[sympy_order]
        R, sx, sy = sring("x,y", sympy.QQ, order_obj)
        rng = random.Random(hash(kind) % 10_000)
        vs = ring("x,y")
        mine_order = MonomialOrder(kind, vs)
        for _ in range(25):
            polys = [random_polynomial(rng, vs, max_degree=3, max_terms=3) for _ in range(2)]
            mine = Ideal(vs, polys).groebner_basis(mine_order)
            sympy_gens = []
            for p in polys:
                total = R.zero
                for mono, coeff in p.terms.items():
                    total += (
                        R.from_dict({mono: sympy.QQ(coeff.numerator, coeff.denominator)})
                    )
                sympy_gens.append(total)
            theirs = sympy.polys.groebnertools.groebner(sympy_gens, R)
            converted = []
            for f in theirs:
                terms = {
                    tuple(mono): Fraction(int(c.numerator), int(c.denominator))
                    for mono, c in f.terms()
                }
                from varinv import Polynomial

                converted.append(Polynomial(vs, terms))
            assert sorted(mine, key=lambda g: mine_order.key(leading_monomial(g, mine_order))) == sorted(
                converted, key=lambda g: mine_order.key(leading_monomial(g, mine_order))
            )
