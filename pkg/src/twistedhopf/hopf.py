"""The twisted coproduct of a connected Hopf operad and its primitives.

For ``mu`` in ``P(n)`` with arity-preserving coproduct ``delta(mu) = sum mu' (x) mu''``

    Delta(mu) = sum over S u T = [n] of (mu'|_S (x) mu''|_T) . sigma(S, T)^-1

lands in ``(P ^ P)(n)``.  Because ``sigma(S, T)^-1`` is already a shuffle the
terms come out canonical.  Primitive elements form the kernel of the reduced
coproduct, which drops the terms with ``S`` or ``T`` empty.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

from . import exact, perm
from .operads.base import Operad, compose_full, compose_partial, restrict_to_set
from .report import LawReport
from .smod import (
    HatTensor,
    InvalidInput,
    SElement,
    add_into,
    apply_on_factor,
    canonicalize_term,
    tau_swap,
)

ONE = Fraction(1)


def _check(P: Operad, x: SElement) -> None:
    if x.family is not P:
        raise InvalidInput(f"element of {x.family.name} used with operad {P.name}")
    if not P.connected:
        raise InvalidInput(f"{P.name} is not a connected Hopf operad")


def delta_small(P: Operad, x: SElement) -> list[tuple[SElement, SElement, Fraction]]:
    """Sweedler triples ``(left, right, coeff)`` of the arity-preserving coproduct."""
    _check(P, x)
    acc: dict = {}
    for label, c in x.terms.items():
        for pair, d in P.coproduct(label).items():
            add_into(acc, pair, c * d)
    return [(P.element(a), P.element(b), c) for (a, b), c in sorted(acc.items(), key=lambda kv: (P.sort_key(kv[0][0]), P.sort_key(kv[0][1])))]


def delta_small_terms(P: Operad, x: SElement) -> dict:
    """The same coproduct as a map ``(left label, right label) -> coeff``."""
    acc: dict = {}
    for label, c in x.terms.items():
        for pair, d in P.coproduct(label).items():
            add_into(acc, pair, c * d)
    return acc


def epsilon(P: Operad, x: SElement) -> Fraction:
    """Coefficient of ``1_0`` in ``x|_emptyset``."""
    _check(P, x)
    restricted = restrict_to_set(P, x, ())
    return restricted.terms.get(P.empty(), Fraction(0))


def _subsets(n: int):
    full = range(1, n + 1)
    for size in range(n + 1):
        for S in combinations(full, size):
            T = tuple(j for j in full if j not in S)
            yield S, T


@lru_cache(maxsize=None)
def _delta_label(P: Operad, label, reduced: bool) -> tuple:
    n = P.arity(label)
    out: dict = {}
    for (l1, l2), c in P.coproduct(label).items():
        for S, T in _subsets(n):
            if reduced and (not S or not T):
                continue
            left = P.restrict(l1, S)
            if not left:
                continue
            right = P.restrict(l2, T)
            alpha = perm.invert(perm.sigma_st(S, T))
            for a, ca in left.items():
                for b, cb in right.items():
                    add_into(out, ((a, b), alpha), c * ca * cb)
    return tuple(out.items())


def _delta(P: Operad, x: SElement, reduced: bool) -> HatTensor:
    _check(P, x)
    out: dict = {}
    for label, c in x.terms.items():
        for key, d in _delta_label(P, label, reduced):
            add_into(out, key, c * d)
    return HatTensor((P, P), x.arity, out)


def big_delta(P: Operad, x: SElement) -> HatTensor:
    return _delta(P, x, reduced=False)


def reduced_big_delta(P: Operad, x: SElement) -> HatTensor:
    return _delta(P, x, reduced=True)


def _delta_on_factor(P: Operad, t: HatTensor, j: int, reduced: bool) -> HatTensor:
    return apply_on_factor(t, j, lambda label: _delta(P, P.element(label), reduced), (P, P))


def iterated_reduced(P: Operad, x: SElement, m: int) -> HatTensor:
    """``Delta-bar^[m]``: the reduced coproduct iterated into ``m`` factors (on the last factor)."""
    if m < 2:
        raise InvalidInput("iterated coproduct needs m >= 2")
    t = reduced_big_delta(P, x)
    for _ in range(m - 2):
        t = _delta_on_factor(P, t, len(t.factors) - 1, reduced=True)
    return t


def counit_on_hat(t: HatTensor, side: int) -> SElement:
    """``(eps (x) id)`` for ``side == 0`` or ``(id (x) eps)`` for ``side == 1``.

    The counit of the twisted structure lives in arity 0, so only terms whose
    ``side`` factor is ``1_0`` survive.
    """
    P, other = t.factors[side], t.factors[1 - side]
    out: dict = {}
    for (labels, _alpha), c in t.terms.items():
        if P.arity(labels[side]) == 0:
            add_into(out, labels[1 - side], c * P.counit(labels[side]))
    return SElement(other, t.arity, out)


def _T2(k: int, lengths: Sequence[int]) -> perm.Permutation:
    """Block permutation sending ``(e_1 .. e_k, f_1 .. f_k)`` to ``(e_1, f_1, .., e_k, f_k)``."""
    dest = tuple(2 * j + 1 for j in range(k)) + tuple(2 * j + 2 for j in range(k))
    return perm.block_permutation(dest, lengths)


def hat_algebra_compose(P: Operad, mu: SElement, operands: Sequence[HatTensor]) -> HatTensor:
    """The ``P``-algebra structure on ``P ^ P``: ``mu(t_1, ..., t_k)``.

    ``delta(mu)`` is routed through the operands: the left Sweedler factor is
    composed with the left parts, the right one with the right parts, and the
    interleaving permutation restores the variables of each operand.
    """
    _check(P, mu)
    k = mu.arity
    if len(operands) != k:
        raise InvalidInput(f"{k} operands expected, got {len(operands)}")
    for t in operands:
        if t.factors != (P, P):
            raise InvalidInput("operands must lie in P ^ P")
    n = sum(t.arity for t in operands)
    out: dict = {}
    pairs = delta_small_terms(P, mu)
    for combo in product(*(list(t.terms.items()) for t in operands)):
        coeff = ONE
        lefts, rights, alphas = [], [], []
        for ((e, f), alpha), c in combo:
            coeff *= c
            lefts.append(P.element(e))
            rights.append(P.element(f))
            alphas.append(alpha)
        lengths = [x.arity for x in lefts] + [y.arity for y in rights]
        # interleave (e_1..e_k, f_1..f_k) back into operand order, then apply each operand's shuffle
        pi = perm.multiply(perm.invert(_T2(k, lengths)), perm.multi_direct_sum(alphas)) if k else ()
        for (l1, l2), d in pairs.items():
            left = compose_full(P, P.element(l1), lefts)
            right = compose_full(P, P.element(l2), rights)
            for a, ca in left.terms.items():
                for b, cb in right.terms.items():
                    for key, e in canonicalize_term((P, P), (a, b), pi).items():
                        add_into(out, key, coeff * d * ca * cb * e)
    return HatTensor((P, P), n, out)


# ---------------------------------------------------------------------------
# primitives


@dataclass
class PrimitiveSpace:
    operad: str
    arity: int
    basis: list[SElement]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def reduced_delta_matrix(P: Operad, n: int) -> tuple[exact.RationalMatrix, list]:
    """Matrix of the reduced coproduct: one row per hat-tensor triple, one column per basis label."""
    labels = list(P.basis(n))
    row_index: dict = {}
    rows: list[dict] = []
    for col, label in enumerate(labels):
        for key, c in _delta_label(P, label, True):
            r = row_index.get(key)
            if r is None:
                r = row_index[key] = len(rows)
                rows.append({})
            rows[r][col] = c
    return exact.RationalMatrix(len(rows), len(labels), rows), labels


def primitive_space(P: Operad, n: int) -> PrimitiveSpace:
    if n < 1:
        raise InvalidInput("primitive spaces start in arity 1")
    A, labels = reduced_delta_matrix(P, n)
    basis = []
    for vec in exact.kernel_basis(A):
        basis.append(SElement(P, n, {labels[j]: c for j, c in enumerate(vec) if c}))
    return PrimitiveSpace(P.name, n, basis)


def is_primitive(P: Operad, x: SElement) -> bool:
    return not reduced_big_delta(P, x)


# ---------------------------------------------------------------------------
# law checks

HOPF_LAWS = (
    "coassoc",
    "counit",
    "cocommutative",
    "algebra_morphism",
    "delta_operad_morphism",
    "primitive_closure",
    "reciprocity",
    "connectedness",
)

DEFAULT_MORPHISM_SAMPLES = 100
DEFAULT_RECIPROCITY_SAMPLES = 50


def _all_labels(P: Operad, lo: int, hi: int):
    for n in range(lo, hi + 1):
        yield from P.basis(n)


def _law_coassoc(P, report, n_max, rng):
    for label in _all_labels(P, 0, n_max):
        d = big_delta(P, P.element(label))
        lhs = _delta_on_factor(P, d, 0, reduced=False)
        rhs = _delta_on_factor(P, d, 1, reduced=False)
        report.record(lhs == rhs, {"x": P.format_label(label)}, lhs, rhs)


def _law_counit(P, report, n_max, rng):
    for label in _all_labels(P, 0, n_max):
        x = P.element(label)
        d = big_delta(P, x)
        left, right = counit_on_hat(d, 0), counit_on_hat(d, 1)
        ok = left == x and right == x
        report.record(ok, {"x": P.format_label(label)}, left if left != x else right, x)


def _law_cocommutative(P, report, n_max, rng):
    for label in _all_labels(P, 0, n_max):
        d = big_delta(P, P.element(label))
        swapped = tau_swap(d)
        report.record(swapped == d, {"x": P.format_label(label)}, swapped, d)


def _random_operands(P, rng, total: int, k: int) -> list[int]:
    sizes = [0] * k
    for _ in range(total):
        sizes[rng.randrange(k)] += 1
    return sizes


def _law_algebra_morphism(P, report, n_max, rng, samples=DEFAULT_MORPHISM_SAMPLES):
    for _ in range(samples):
        k = rng.randint(1, min(3, n_max))
        sizes = _random_operands(P, rng, rng.randint(0, n_max), k)
        mu = P.element(P.random_label(k, rng))
        xs = [P.element(P.random_label(s, rng)) for s in sizes]
        lhs = big_delta(P, compose_full(P, mu, xs))
        rhs = hat_algebra_compose(P, mu, [big_delta(P, x) for x in xs])
        inputs = {"mu": P.format_label(next(iter(mu.terms))), "x": [str(x) for x in xs]}
        report.record(lhs == rhs, inputs, lhs, rhs)


def _pair_terms(P, terms: dict) -> str:
    items = sorted(terms.items(), key=lambda kv: (P.sort_key(kv[0][0]), P.sort_key(kv[0][1])))
    if not items:
        return "0"
    return " + ".join(f"{c}*({P.format_label(a)} (x) {P.format_label(b)})" for (a, b), c in items)


def _law_delta_operad_morphism(P, report, n_max, rng):
    for a in range(1, n_max + 1):
        for b in range(0, n_max + 2 - a):
            for p, q in product(P.basis(a), P.basis(b)):
                for i in range(1, a + 1):
                    lhs: dict = {}
                    for label, c in P.compose(p, i, q).items():
                        for pair, d in P.coproduct(label).items():
                            add_into(lhs, pair, c * d)
                    rhs: dict = {}
                    for (p1, p2), c in P.coproduct(p).items():
                        for (q1, q2), d in P.coproduct(q).items():
                            for l1, e1 in P.compose(p1, i, q1).items():
                                for l2, e2 in P.compose(p2, i, q2).items():
                                    add_into(rhs, (l1, l2), c * d * e1 * e2)
                    inputs = {"p": P.format_label(p), "i": i, "q": P.format_label(q)}
                    report.record(lhs == rhs, inputs, _pair_terms(P, lhs), _pair_terms(P, rhs))


def _law_primitive_closure(P, report, n_max, rng):
    spaces = {n: primitive_space(P, n).basis for n in range(1, n_max)}
    for a in range(1, n_max + 1):
        for b in range(1, n_max + 2 - a):
            if a not in spaces or b not in spaces:
                continue
            for x, y in product(spaces[a], spaces[b]):
                for i in range(1, a + 1):
                    z = compose_partial(P, x, i, y)
                    rd = reduced_big_delta(P, z)
                    inputs = {"x": str(x), "i": i, "y": str(y)}
                    report.record(not rd, inputs, rd, "0")


def _law_connectedness(P, report, n_max, rng):
    for label in _all_labels(P, 1, n_max):
        x = P.element(label)
        top = iterated_reduced(P, x, P.arity(label) + 1)
        report.record(not top, {"x": P.format_label(label)}, top, "0")
        # the iterated coproduct does not depend on the bracketing
        if P.arity(label) >= 3:
            first = _delta_on_factor(P, reduced_big_delta(P, x), 0, reduced=True)
            last = iterated_reduced(P, x, 3)
            report.record(first == last, {"x": P.format_label(label), "m": 3}, first, last)


def reciprocity_rhs(P: Operad, mu: SElement, hs: Sequence[SElement]) -> HatTensor:
    """Right side of the reciprocity identity for primitive ``h_i``.

    ``sum_{S,T} (mu'|_S (h_S) (x) mu''|_T (h_T)) . sigma(S*, T*)^-1`` where
    ``S*`` collects the variable blocks of the ``h_i`` with ``i`` in ``S``.
    """
    k = mu.arity
    blocks, offset = [], 0
    for h in hs:
        blocks.append(tuple(range(offset + 1, offset + h.arity + 1)))
        offset += h.arity
    n = offset
    out: dict = {}
    for (l1, l2), c in delta_small_terms(P, mu).items():
        for S, T in _subsets(k):
            left = compose_full(P, restrict_to_set(P, P.element(l1), S), [hs[i - 1] for i in S])
            if not left:
                continue
            right = compose_full(P, restrict_to_set(P, P.element(l2), T), [hs[i - 1] for i in T])
            s_star = tuple(p for i in S for p in blocks[i - 1])
            t_star = tuple(p for i in T for p in blocks[i - 1])
            alpha = perm.invert(perm.sigma_st(s_star, t_star))
            for a, ca in left.terms.items():
                for b, cb in right.terms.items():
                    add_into(out, ((a, b), alpha), c * ca * cb)
    return HatTensor((P, P), n, out)


def random_primitive(P: Operad, n: int, rng) -> SElement:
    """A random small-integer combination of the primitive basis in arity ``n``."""
    basis = primitive_space(P, n).basis
    x = SElement(P, n)
    while not x:
        for v in basis:
            x = x + rng.randint(-2, 2) * v
    return x


def _law_reciprocity(P, report, n_max, rng, samples=DEFAULT_RECIPROCITY_SAMPLES):
    h_max = min(2, n_max)
    for _ in range(samples):
        k = rng.randint(1, min(3, n_max))
        mu = P.element(P.random_label(k, rng))
        hs = [random_primitive(P, rng.randint(1, h_max), rng) for _ in range(k)]
        lhs = big_delta(P, compose_full(P, mu, hs))
        rhs = reciprocity_rhs(P, mu, hs)
        inputs = {"mu": str(mu), "h": [str(h) for h in hs]}
        report.record(lhs == rhs, inputs, lhs, rhs)


_HOPF_CHECKS = {
    "coassoc": _law_coassoc,
    "counit": _law_counit,
    "cocommutative": _law_cocommutative,
    "algebra_morphism": _law_algebra_morphism,
    "delta_operad_morphism": _law_delta_operad_morphism,
    "primitive_closure": _law_primitive_closure,
    "reciprocity": _law_reciprocity,
    "connectedness": _law_connectedness,
}


def check_hopf_laws(P: Operad, law: str, n_max: int = 4, seed: int = 0, samples: int | None = None) -> LawReport:
    """Check one Hopf law up to arity ``n_max``; sampled laws draw from a seeded generator."""
    if law not in _HOPF_CHECKS:
        raise InvalidInput(f"unknown Hopf law {law!r}; expected one of {', '.join(HOPF_LAWS)}")
    if not P.connected:
        raise InvalidInput(f"{P.name} is not a connected Hopf operad")
    report = LawReport(P.name, law, (0 if law in ("coassoc", "counit", "cocommutative") else 1, n_max))
    rng = random.Random(f"{seed}:{P.name}:{law}")
    check = _HOPF_CHECKS[law]
    if samples is not None and law in ("algebra_morphism", "reciprocity"):
        check(P, report, n_max, rng, samples)
    else:
        check(P, report, n_max, rng)
    return report
