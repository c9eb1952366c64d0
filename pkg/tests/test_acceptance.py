"""Acceptance suite: one test per criterion, exact comparisons throughout.

Every expected value is either quoted from the worked examples shipped in
the corpus fixtures, derived by an independent oracle inside the test, or a
definitional identity.  Run with ``pytest -v tests/test_acceptance.py``;
each test prints its own pass line for log scraping.
"""

import itertools
import random
from fractions import Fraction

import pytest

from support import P, random_polynomial, ring
from varinv import (
    Ideal,
    MonomialOrder,
    Polynomial,
    RationalPoint,
    ZeroCount,
    compare_invariants,
    count_distinct_zeros,
    elementary_ideal,
    evaluate,
    gradient,
    ideal_equal,
    ideal_member,
    ideal_sum,
    normal_form,
    parse_polynomial,
    quasi_singular,
    radical_zero_dim,
    rename_variables,
    s_polynomial,
    squarefree_part,
    substitute,
    verify_certificate,
)
from varinv.corpus import find_case
from varinv.groebner import leading_monomial
from varinv.polyring import change_ring
from varinv.textio import render
from varinv.zerodim import rational_roots


def done(n: int, detail: str = "") -> None:
    suffix = f" ({detail})" if detail else ""
    print(f"acceptance criterion {n}: PASS{suffix}")


def test_criterion_1_plane_curve_elementary_ideals():
    vs = ring("x,y")
    lex = MonomialOrder.lex(vs)
    p, q = P("x^2 + x*y + y^3", vs), P("x^2 + y^3", vs)
    modulo = Ideal(vs, [p, q])
    left = ideal_sum(elementary_ideal([p], 1), modulo)
    right = ideal_sum(elementary_ideal([q], 1), modulo)
    assert set(left.groebner_basis(lex)) == {P("x", vs), P("y", vs)}
    assert set(right.groebner_basis(lex)) == {P("x", vs), P("y^2", vs)}
    # neither the identity nor the transposition can align the ideals
    for image in itertools.permutations(vs.names):
        mapping = dict(zip(vs.names, image))
        renamed = Ideal(vs, [change_ring(rename_variables(g, mapping), vs) for g in left.generators])
        assert not ideal_equal(renamed, right)
    verdict = compare_invariants([p], [q], modulo, 1)
    assert not verdict.equal and verdict.witness_renaming is None
    done(1, "E_1+R bases {x, y} vs {x, y^2}; distinguishable")


def test_criterion_2_space_curves_at_parameters_one_and_two():
    vs = ring("x,y,z")
    deglex = MonomialOrder.deglex(vs)
    p = P("x + y*z + z^2", vs)
    q1, q2 = P("x^2 + y^3", vs), P("2*x^2 + y^3", vs)
    modulo = Ideal(vs, [p, q1, q2])
    computed = ideal_sum(elementary_ideal([p, q1], 1), modulo)
    displayed = Ideal(
        vs,
        [
            P("x^2", vs),
            P("x*z^2", vs),
            P("x + y*z + z^2", vs),
            P("3*y^2 - 2*x*z", vs),
            P("x*y + 2*x*z", vs),
            P("z^3 + 3*x*z", vs),
        ],
    )
    assert ideal_equal(computed, displayed, deglex)
    verdict = compare_invariants([p, q1], [p, q2], modulo, 1)
    assert not verdict.equal
    done(2, "E_1+R matches the printed deglex basis; distinguishable")


def test_criterion_3_quasi_singular_counts():
    checks = []

    def expect(poly, names, want, point=None):
        report = quasi_singular(P(poly, names))
        assert report.count == want, f"{poly}: {report.count} != {want}"
        if point is not None:
            assert point in report.rational_points
            for g in report.gradient:
                assert evaluate(g, point) == 0
        checks.append(poly)

    expect("x + y + z - x*y*z", "x,y,z", ZeroCount.finite(2))
    expect("x + y^2 + y*z - x*y*z", "x,y,z", ZeroCount.empty())
    for n in (3, 4, 5):
        names = ",".join(f"x{i}" for i in range(1, n + 1))
        all_names = [f"x{i}" for i in range(1, n + 1)]
        p = " + ".join(all_names) + " - " + "*".join(all_names)
        inner = f"x1*x{n} - " + " - ".join(all_names[1:])
        q = f"x1 - ({inner})" + ("*" + "*".join(all_names[1:-1]) if n > 2 else "")
        expect(p, names, ZeroCount.finite(n - 1))
        expect(q, names, ZeroCount.empty())
    expect("x^2 + y^2 - 1", "x,y", ZeroCount.finite(1), RationalPoint.of(0, 0))
    expect("x^2*y - 1", "x,y", ZeroCount.infinite())
    expect("x - x^2 - x^2*y - 1", "x,y", ZeroCount.empty())
    expect(
        "x - (1 + x + x*y)^2", "x,y", ZeroCount.finite(1),
        RationalPoint.of(0, Fraction(-1, 2)),
    )
    expect("x - y - x^2*y - x^2*y^2", "x,y", ZeroCount.finite(4))
    expect("x - (x + y + x*y)^2*y", "x,y", ZeroCount.finite(3))
    expect("x^2*z - y^3*z^2 - 3*y^2*z + 2*x - 3*y - 1", "x,y,z", ZeroCount.infinite())
    expect(
        "x - (1/2*y^3*z^2 + 3/2*y^2*z - 1/2*x*z + 3/2*y + 1/2)^2",
        "x,y,z",
        ZeroCount.empty(),
    )
    done(3, f"{len(checks)} exact counts")


def test_criterion_4_locus_containment_forward_only():
    vs = ring("x,y,z")
    p = P("x^2*z - y^3*z^2 - 3*y^2*z + 2*x - 3*y - 1", vs)
    locus = Ideal(vs, [P("x - y", vs), P("x*z + 1", vs)])
    for g in gradient(p):
        assert ideal_member(g, locus)
    # the reverse containment is out of scope and must be reported so
    result = find_case("prop-3.1").run()
    containment = next(c for c in result.checks if c.kind == "containment")
    assert containment.ok
    assert "reverse containment: unverified" in containment.detail
    done(4, "three memberships hold; reverse containment reported unverified")


def test_criterion_5_gradient_bases_and_count_oracle():
    vs = ring("x,y")
    lex_yx = MonomialOrder.lex(vs, ("y", "x"))
    p = P("x - y - x^2*y - x^2*y^2", vs)
    q = P("x - (x + y + x*y)^2*y", vs)
    grad_p = Ideal(vs, list(gradient(p)))
    grad_q = Ideal(vs, list(gradient(q)))
    printed_p = Ideal(vs, [P("4*y^3 + 6*y^2 + 2*y + x + 2", vs), P("4*y^4 + 8*y^3 + 4*y^2 + 2*y + 1", vs)])
    printed_q = Ideal(vs, [P("36*y^2 + 24*y + 8*x + 27", vs), P("4*y^3 + 4*y^2 + 3*y + 1", vs)])
    assert ideal_equal(grad_p, printed_p, lex_yx)
    assert ideal_equal(grad_q, printed_q, lex_yx)
    # independent count oracle for the stray-token reading: the quartic is
    # squarefree, so the y-coordinates of the zeros are its 4 distinct roots,
    # and x is determined linearly by the other printed generator
    quartic = P("4*y^4 + 8*y^3 + 4*y^2 + 2*y + 1", "y")
    assert squarefree_part(quartic) == quartic / 4
    assert count_distinct_zeros(grad_p) == ZeroCount.finite(4)
    done(5, "printed bases ideal-equal; quartic squarefree gives exactly 4 zeros")


def test_criterion_6_certificate_suite():
    valid = ["cert-ex1", "cert-ex2", "cert-prop-3.1", "cert-ex-3.2"]
    for case_id in valid:
        result = find_case(case_id).run()
        assert result.ok, result.summary()
        kinds = [c.kind for c in result.checks]
        assert kinds == ["cert", "cert"]  # the chain and its mutated variant
    done(6, "4 chains verify; each mutation fails at the mutated step")


# --- criterion 7: randomized property suites, at least 200 cases each ----


def test_criterion_7a_spolynomials_of_computed_bases_reduce_to_zero():
    rng = random.Random(710)
    cases = 0
    while cases < 200:
        arity = rng.choice((2, 2, 3))
        vs = ring(",".join("xyz"[:arity]))
        order = MonomialOrder(rng.choice(("lex", "deglex", "degrevlex")), vs)
        gens = [random_polynomial(rng, vs, max_degree=3, max_terms=3) for _ in range(rng.randint(2, 3))]
        basis = Ideal(vs, gens).groebner_basis(order)
        if len(basis) < 2:
            continue
        for f, g in itertools.combinations(basis, 2):
            s = s_polynomial(f, g, order)
            if not s.is_zero:
                assert normal_form(s, list(basis), order).is_zero
        cases += 1
    done(7, f"7a: {cases} bases certified by S-polynomial reduction")


def test_criterion_7b_reduced_basis_invariance_under_regeneration():
    rng = random.Random(711)
    vs = ring("x,y")
    for _ in range(200):
        gens = [random_polynomial(rng, vs, max_degree=3, max_terms=3) for _ in range(rng.randint(2, 3))]
        order = MonomialOrder(rng.choice(("lex", "deglex", "degrevlex")), vs)
        basis = Ideal(vs, gens).groebner_basis(order)
        shuffled = list(gens)
        rng.shuffle(shuffled)
        shuffled.append(gens[0])  # duplicate
        combo = Polynomial.zero(vs)
        for g in gens:
            combo = combo + g * random_polynomial(rng, vs, max_degree=1, max_terms=2, allow_zero=True)
        shuffled.append(combo)
        assert Ideal(vs, shuffled).groebner_basis(order) == basis
    done(7, "7b: 200 regenerated ideals give identical reduced bases")


def test_criterion_7c_radical_idempotence():
    rng = random.Random(712)
    vs = ring("x,y")
    x, y = Polynomial.variable(vs, "x"), Polynomial.variable(vs, "y")
    for _ in range(200):
        gx = Polynomial.constant(vs, 1)
        for _ in range(rng.randint(1, 2)):
            gx = gx * (x - rng.randint(-2, 2)) ** rng.randint(1, 2)
        gy = Polynomial.constant(vs, 1)
        for _ in range(rng.randint(1, 2)):
            gy = gy * (y - rng.randint(-2, 2)) ** rng.randint(1, 2)
        ideal = Ideal(vs, [gx, gy])
        rad = radical_zero_dim(ideal)
        again = radical_zero_dim(rad)
        assert rad.groebner_basis() == again.groebner_basis()
    done(7, "7c: 200 radicals are idempotent")


def test_criterion_7d_count_invariance_under_automorphisms():
    rng = random.Random(713)
    vs = ring("x,y")
    x, y = Polynomial.variable(vs, "x"), Polynomial.variable(vs, "y")
    linear_cases = shift_cases = 0
    while linear_cases < 200:
        p = random_polynomial(rng, vs, max_degree=3, max_terms=3)
        if p.is_constant:
            continue
        a, b = rng.randint(-2, 2), rng.randint(-2, 2)
        composed = substitute(p, {"x": x + a * y, "y": y + b * (x + a * y)})
        assert quasi_singular(composed).count == quasi_singular(p).count
        linear_cases += 1
    while shift_cases < 200:
        p = random_polynomial(rng, vs, max_degree=3, max_terms=3)
        if p.is_constant:
            continue
        c = Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)))
        assert quasi_singular(p + c).count == quasi_singular(p).count
        shift_cases += 1
    done(7, f"7d: {linear_cases} linear substitutions and {shift_cases} shifts preserve counts")


def test_criterion_7e_parse_render_round_trip():
    rng = random.Random(714)
    vs = ring("x,y,z")
    for _ in range(250):
        p = random_polynomial(rng, vs, max_degree=4, max_terms=5, allow_zero=True)
        assert parse_polynomial(render(p), vs) == p
    # and on every shipped system fixture
    from varinv.corpus import fixture_root
    from varinv.textio import parse_system, render_system

    files = 0
    for entry in fixture_root().iterdir():
        if entry.name.endswith(".ps"):
            system = parse_system(entry.read_text(encoding="utf-8"))
            assert parse_system(render_system(system)) == system
            files += 1
    assert files >= 10
    done(7, f"7e: 250 random round trips plus {files} fixture files")


def test_criterion_8_out_of_scope_boundaries_hold():
    # symbolic coefficients are deliberately unsupported: the parameter of
    # the one-parameter family must be instantiated, never parsed
    from varinv import ParseError

    with pytest.raises(ParseError, match="unknown variable"):
        parse_polynomial("k*x^2 + y^3", ring("x,y"))
    # the corpus carries the rational instantiations instead
    case = find_case("ex-2.2")
    assert any(c["kind"] == "compare" for c in case.checks)
    # holomorphic statements are attested only through the computable
    # surrogate: the count differences of criterion 3
    assert quasi_singular(P("x + y + z - x*y*z", "x,y,z")).count != quasi_singular(
        P("x + y^2 + y*z - x*y*z", "x,y,z")
    ).count
    done(8, "symbolic parameters refused; count surrogate attested")
