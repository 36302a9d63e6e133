import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from twistedhopf import perm
from twistedhopf.exact import row_space_rank
from twistedhopf.grammar import parse_element
from twistedhopf.hopf import (
    HOPF_LAWS,
    big_delta,
    check_hopf_laws,
    counit_on_hat,
    delta_small,
    delta_small_terms,
    epsilon,
    hat_algebra_compose,
    is_primitive,
    iterated_reduced,
    primitive_space,
    reciprocity_rhs,
    reduced_big_delta,
)
from twistedhopf.operads import compose_full, get_operad, lie_dynkin_expand
from twistedhopf.smod import HatTensor, InvalidInput, act_right, hat_canonicalize


def pair_map(P, pairs):
    return {(P.parse_label(a).terms.popitem()[0], P.parse_label(b).terms.popitem()[0]): Fraction(c) for a, b, c in pairs}


def test_delta_small_as(As):
    ((left, right, c),) = delta_small(As, As.element((2, 1)))
    assert left == right == As.element((2, 1)) and c == 1


def test_delta_small_pois_bracket(Pois):
    got = delta_small_terms(Pois, Pois.element(Pois.bracket_label()))
    assert got == pair_map(Pois, [("{[1,2]}", "{1}{2}", 1), ("{1}{2}", "{[1,2]}", 1)])


def test_delta_small_pois_double_bracket(Pois):
    # each bracket node goes to one side; the other side sees a product:
    # [x1 x2, x3] = [x1, x3] x2 + x1 [x2, x3]
    expected = pair_map(
        Pois,
        [
            ("{[[1,2],3]}", "{1}{2}{3}", 1),
            ("{1}{2}{3}", "{[[1,2],3]}", 1),
            ("{[1,2]}{3}", "{[1,3]}{2}", 1),
            ("{[1,2]}{3}", "{1}{[2,3]}", 1),
            ("{[1,3]}{2}", "{[1,2]}{3}", 1),
            ("{1}{[2,3]}", "{[1,2]}{3}", 1),
        ],
    )
    assert delta_small_terms(Pois, parse_element(Pois, "{[[1,2],3]}")) == expected


def test_pois_delta_is_equivariant(Pois):
    for n in range(1, 5):
        for label in Pois.basis(n):
            for s in permutations(range(1, n + 1)):
                x = Pois.element(label)
                lhs = delta_small_terms(Pois, act_right(x, s))
                rhs: dict = {}
                for (a, b), c in delta_small_terms(Pois, x).items():
                    for a2, ca in Pois.act(a, s).items():
                        for b2, cb in Pois.act(b, s).items():
                            rhs[(a2, b2)] = rhs.get((a2, b2), 0) + c * ca * cb
                assert lhs == {k: v for k, v in rhs.items() if v}


def test_epsilon(As, Pois, Mag2):
    assert epsilon(As, As.element((3, 1, 2))) == 1
    assert epsilon(Pois, Pois.element(((1, 2),))) == 0
    assert epsilon(Pois, Pois.element(Pois.product_label(3))) == 1
    assert epsilon(Mag2, parse_element(Mag2, "(v2 (v2 1 3) 2)")) == 1
    for P in (As, Pois, Mag2, get_operad("com")):
        assert epsilon(P, P.unit_element()) == 1


def test_big_delta_as_arity_two(As):
    t = big_delta(As, As.element((1, 2)))
    expected = {
        (((), (1, 2)), (1, 2)): 1,
        (((1, 2), ()), (1, 2)): 1,
        (((1,), (1,)), (1, 2)): 1,
        (((1,), (1,)), (2, 1)): 1,
    }
    assert t.terms == expected


def test_big_delta_unit(As, Pois, Mag2):
    for P in (As, Pois, Mag2):
        t = big_delta(P, P.unit_element())
        assert t.terms == {((P.unit(), P.empty()), (1,)): 1, ((P.empty(), P.unit()), (1,)): 1}


def test_big_delta_as_matches_formula_on_s3(As):
    """Every term built through the generic canonicalization path."""
    for s in permutations(range(1, 4)):
        expected = HatTensor((As, As), 3)
        for k in range(4):
            for S in combinations(range(1, 4), k):
                T = tuple(j for j in range(1, 4) if j not in S)
                labels = (perm.restrict(s, S), perm.restrict(s, T))
                expected = expected + hat_canonicalize((As, As), labels, perm.invert(perm.sigma_st(S, T)))
        assert big_delta(As, As.element(s)) == expected


def test_reduced_examples(As):
    assert not reduced_big_delta(As, As.unit_element())
    r = reduced_big_delta(As, As.element((1, 2)))
    assert r == reduced_big_delta(As, As.element((2, 1)))
    assert r.terms == {(((1,), (1,)), (1, 2)): 1, (((1,), (1,)), (2, 1)): 1}


def test_counit_law(As, Pois):
    for P in (As, Pois):
        for n in range(4):
            for label in P.basis(n):
                x = P.element(label)
                d = big_delta(P, x)
                assert counit_on_hat(d, 0) == x == counit_on_hat(d, 1)


def test_iterated_reduced(As):
    for n in range(1, 5):
        for s in As.basis(n):
            x = As.element(s)
            assert not iterated_reduced(As, x, n + 1)
            if n >= 2:
                # all-singleton splits survive: n! orderings of the n letters
                assert len(iterated_reduced(As, x, n).terms) == len(list(permutations(range(n))))
    with pytest.raises(InvalidInput):
        iterated_reduced(As, As.unit_element(), 1)


def test_hat_algebra_compose_examples(As, Pois):
    for P in (As, Pois):
        one = P.unit_element()
        for label in P.basis(3):
            d = big_delta(P, P.element(label))
            assert hat_algebra_compose(P, one, [d]) == d
    d1 = big_delta(As, As.unit_element())
    assert hat_algebra_compose(As, As.element((1, 2)), [d1, d1]) == big_delta(As, As.element((1, 2)))
    d1 = big_delta(Pois, Pois.unit_element())
    br = Pois.element(Pois.bracket_label())
    got = hat_algebra_compose(Pois, br, [d1, d1])
    assert got == big_delta(Pois, br)
    assert got.terms == {
        ((Pois.bracket_label(), ()), (1, 2)): 1,
        (((), Pois.bracket_label()), (1, 2)): 1,
    }
    with pytest.raises(InvalidInput):
        hat_algebra_compose(As, As.element((1, 2)), [d1])


def test_algebra_morphism_on_mixed_operands(As):
    rng = random.Random(2)
    for _ in range(40):
        k = rng.randint(1, 3)
        mu = As.element(As.random_label(k, rng)) + 2 * As.element(As.random_label(k, rng))
        xs = [As.element(As.random_label(rng.randint(0, 2), rng)) for _ in range(k)]
        lhs = big_delta(As, compose_full(As, mu, xs))
        assert lhs == hat_algebra_compose(As, mu, [big_delta(As, x) for x in xs])


def test_primitive_spaces(As, Pois, Mag2):
    assert primitive_space(As, 1).basis == [As.unit_element()]
    (v,) = primitive_space(As, 2).basis
    assert row_space_rank([v.terms, (As.element((1, 2)) - As.element((2, 1))).terms]) == 1
    assert [primitive_space(As, n).dimension for n in range(1, 6)] == [1, 1, 2, 6, 24]
    assert [primitive_space(Pois, n).dimension for n in range(1, 5)] == [1, 1, 2, 6]
    (m,) = primitive_space(Mag2, 2).basis
    assert row_space_rank([m.terms, parse_element(Mag2, "(v2 1 2) - (v2 2 1)").terms]) == 1
    assert [primitive_space(get_operad("com"), n).dimension for n in range(1, 5)] == [1, 0, 0, 0]
    with pytest.raises(InvalidInput):
        primitive_space(As, 0)


def test_primitive_basis_vectors_are_primitive(As, Pois):
    for P, n_max in ((As, 4), (Pois, 4)):
        for n in range(1, n_max + 1):
            for v in primitive_space(P, n).basis:
                assert is_primitive(P, v)


def test_primitive_basis_is_deterministic(As):
    a = [str(v) for v in primitive_space(As, 4).basis]
    b = [str(v) for v in primitive_space(As, 4).basis]
    assert a == b


def test_prim_as_is_dynkin_span(As):
    for n in range(1, 6):
        prims = [v.terms for v in primitive_space(As, n).basis]
        dyn = [lie_dynkin_expand(As, (1,) + r).terms for r in permutations(range(2, n + 1))]
        assert row_space_rank(prims) == row_space_rank(dyn) == row_space_rank(prims + dyn)


def test_pois_bracket_primitive_product_not(Pois):
    assert is_primitive(Pois, Pois.element(Pois.bracket_label()))
    assert not is_primitive(Pois, Pois.element(Pois.product_label(2)))


def test_reciprocity_rhs_example(As):
    h = lie_dynkin_expand(As, (1, 2))
    mu = As.element((2, 1))
    one = As.unit_element()
    assert big_delta(As, compose_full(As, mu, [h, one])) == reciprocity_rhs(As, mu, [h, one])


@pytest.mark.parametrize(
    "name,law,n",
    [
        ("as", "coassoc", 4),
        ("as", "cocommutative", 4),
        ("pois", "primitive_closure", 4),
        ("as", "reciprocity", 4),
        ("pois", "delta_operad_morphism", 4),
        ("mag2", "connectedness", 3),
        ("com", "algebra_morphism", 4),
    ],
)
def test_hopf_law_examples(name, law, n):
    report = check_hopf_laws(get_operad(name), law, n, seed=1)
    assert report.passed, report.counterexamples
    assert report.checked > 0


def test_hopf_law_errors(As):
    with pytest.raises(InvalidInput):
        check_hopf_laws(As, "antipode", 3)
    with pytest.raises(InvalidInput):
        check_hopf_laws(get_operad("lie"), "coassoc", 3)
    assert len(HOPF_LAWS) == 8


def test_broken_coproduct_is_caught():
    """Dropping the swapped singleton term breaks cocommutativity and coassociativity."""
    from twistedhopf.operads import AssociativeOperad

    class Skewed(AssociativeOperad):
        def coproduct(self, label):
            if label == (2, 1):
                return {((1, 2), (2, 1)): Fraction(1)}
            return {(label, label): Fraction(1)}

    P = Skewed()
    assert not check_hopf_laws(P, "cocommutative", 3).passed
    assert not check_hopf_laws(P, "delta_operad_morphism", 3).passed
