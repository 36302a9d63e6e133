from itertools import combinations, permutations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistedhopf import perm
from twistedhopf.perm import PermutationError


def perms(max_n=6):
    return st.integers(0, max_n).flatmap(lambda n: st.permutations(list(range(1, n + 1))).map(tuple))


def all_perms(n):
    return list(permutations(range(1, n + 1)))


# fixtures taken literally from the worked examples


def test_standardize_example():
    assert perm.standardize((3, 2, 1, 8, 7, 5, 4)) == (3, 2, 1, 7, 6, 5, 4)


def test_standardize_trivial():
    assert perm.standardize((1, 2, 3)) == (1, 2, 3)
    assert perm.standardize(()) == ()
    with pytest.raises(PermutationError):
        perm.standardize((1, 1))


def test_multiply_and_invert():
    assert perm.multiply((2, 1), (2, 1)) == (1, 2)
    assert perm.invert((2, 3, 1)) == (3, 1, 2)
    assert perm.multiply((3, 1, 2), (2, 3, 1)) == (1, 2, 3)
    with pytest.raises(PermutationError):
        perm.multiply((1,), (1, 2))


def test_partial_compose_example():
    assert perm.partial_compose((3, 4, 2, 5, 1), 2, (1, 2, 3)) == (3, 4, 5, 6, 2, 7, 1)
    with pytest.raises(PermutationError):
        perm.partial_compose((1, 2), 3, (1,))


@given(perms())
def test_partial_compose_units(s):
    for i in range(1, len(s) + 1):
        assert perm.partial_compose(s, i, (1,)) == s
    assert perm.partial_compose((1,), 1, s) == s


def test_block_permutation_example():
    assert perm.block_permutation((2, 3, 1), (1, 2, 2)) == (3, 4, 5, 1, 2)
    assert perm.block_permutation((1, 2, 3), (2, 0, 3)) == (1, 2, 3, 4, 5)
    assert perm.block_permutation((2, 1), (1, 1)) == (2, 1)
    with pytest.raises(PermutationError):
        perm.block_permutation((2, 1), (1,))


def test_restrict_example():
    assert perm.restrict((3, 2, 6, 1, 8, 7, 5, 4), (1, 4, 6, 7)) == (2, 1, 4, 3)
    assert perm.restrict((2, 1), (2,)) == (1,)
    assert perm.restrict((2, 1), ()) == ()
    with pytest.raises(PermutationError):
        perm.restrict((1, 2), (3,))


def test_delta_i_examples():
    # st(3,6,1,8,7,5,4): ranks of the surviving values
    assert perm.delta_i((3, 2, 6, 1, 8, 7, 5, 4), 2) == (2, 5, 1, 7, 6, 4, 3)
    assert perm.delta_i((2, 1), 1) == (1,)
    assert perm.delta_i((1, 2, 3), 2) == (1, 2)
    with pytest.raises(PermutationError):
        perm.delta_i((1, 2), 0)


def test_zeta_and_sigma_st():
    assert perm.zeta(2, 1) == (2, 3, 1)
    assert perm.zeta(1, 1) == (2, 1)
    assert perm.zeta(0, 3) == (1, 2, 3)
    assert perm.sigma_st((2,), (1, 3)) == (2, 1, 3)
    assert perm.sigma_st((1, 4, 6, 7), (2, 3, 5, 8)) == (1, 4, 6, 7, 2, 3, 5, 8)
    with pytest.raises(PermutationError):
        perm.sigma_st((1, 2), (2,))


def test_direct_sum():
    assert perm.direct_sum((2, 1), (1,)) == (2, 1, 3)
    assert perm.direct_sum((), (2, 1)) == (2, 1)


def brute_shuffles(p, q):
    """Oracle: filter S_{p+q} by the defining form."""
    out = []
    for s in all_perms(p + q):
        inv = perm.invert(s)
        if list(inv[:p]) == sorted(inv[:p]) and list(inv[p:]) == sorted(inv[p:]):
            out.append(s)
    return out


@pytest.mark.parametrize("p,q", [(0, 0), (1, 1), (2, 0), (2, 2), (1, 3), (3, 2)])
def test_enumerate_shuffles_matches_brute_force(p, q):
    got = perm.enumerate_shuffles(p, q)
    assert sorted(got) == sorted(brute_shuffles(p, q))
    assert len(got) == comb(p + q, p)


def test_shuffles_deterministic_order():
    assert perm.enumerate_shuffles(1, 1) == ((1, 2), (2, 1))
    assert perm.enumerate_shuffles(2, 0) == ((1, 2),)


def test_shuffle_decompose_examples():
    assert perm.shuffle_decompose((1, 2, 3), 2, 1) == ((1, 2), (1,), (1, 2, 3))
    assert perm.shuffle_decompose(perm.zeta(2, 2), 2, 2) == ((1, 2), (1, 2), perm.zeta(2, 2))


@pytest.mark.parametrize("p,q", [(2, 2), (1, 3), (3, 3), (0, 4)])
def test_shuffle_decompose_round_trip_and_uniqueness(p, q):
    seen = {}
    for s in all_perms(p + q):
        s1, s2, a = perm.shuffle_decompose(s, p, q)
        assert perm.is_shuffle(a, (p, q))
        assert perm.multiply(perm.direct_sum(s1, s2), a) == s
    # uniqueness: the triples recomposing to each s are exactly one
    for s1 in all_perms(p):
        for s2 in all_perms(q):
            for a in perm.enumerate_shuffles(p, q):
                r = perm.multiply(perm.direct_sum(s1, s2), a)
                assert r not in seen
                seen[r] = (s1, s2, a)
    assert len(seen) == len(all_perms(p + q))


def test_degeneracy_relation_one():
    for n in range(2, 7):
        for s in all_perms(n):
            for i in range(1, n):
                for j in range(i, n):
                    assert perm.delta_i(perm.delta_i(s, i), j) == perm.delta_i(perm.delta_i(s, j + 1), i)


def test_degeneracy_relation_two():
    for n in range(1, 6):
        ps = all_perms(n)
        for s in ps:
            for r in ps:
                for i in range(1, n + 1):
                    lhs = perm.delta_i(perm.multiply(s, r), i)
                    rhs = perm.multiply(perm.delta_i(s, r[i - 1]), perm.delta_i(r, i))
                    assert lhs == rhs


def test_sigma_st_inverse_is_shuffle():
    for n in range(7):
        full = range(1, n + 1)
        for k in range(n + 1):
            for S in combinations(full, k):
                T = tuple(x for x in full if x not in S)
                assert perm.invert(perm.sigma_st(S, T)) in perm.enumerate_shuffles(k, n - k)


@given(st.lists(st.integers(0, 50), unique=True, max_size=8))
def test_standardize_idempotent(seq):
    once = perm.standardize(seq)
    assert perm.standardize(once) == once
    assert perm.is_permutation(once)


@given(st.integers(0, 5), st.integers(0, 5))
def test_zeta_inverse_pair(p, q):
    assert perm.multiply(perm.zeta(p, q), perm.zeta(q, p)) == perm.identity(p + q)


@given(perms())
def test_invert_is_group_inverse(s):
    assert perm.multiply(s, perm.invert(s)) == perm.identity(len(s))
    assert perm.multiply(s, perm.identity(len(s))) == s


def test_format_and_parse():
    assert perm.format_perm((2, 1, 3)) == "[2,1,3]"
    assert perm.parse_perm(" [2, 1,3] ") == (2, 1, 3)
    assert perm.parse_perm("[]") == ()
    with pytest.raises(PermutationError):
        perm.parse_perm("[1,1]")
