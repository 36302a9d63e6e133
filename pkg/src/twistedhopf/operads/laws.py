"""Mechanical checks of the operad axioms.

Every law is checked exhaustively over basis labels whose total arity is at
most ``EXHAUSTIVE_MAX`` and, when ``n_max`` is larger, on seeded random
samples up to ``n_max``.  Counterexamples are reported term by term.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Callable, Iterator

from .. import perm
from ..report import LawReport
from ..smod import InvalidInput, SElement, act_right
from .base import Operad, compose_full, compose_partial, degeneracy, restrict_to_set

EXHAUSTIVE_MAX = 4
DEFAULT_SAMPLES = 200

OPERAD_LAWS = ("assoc1", "assoc2", "unit", "equivariance", "deg1", "deg2", "lemma_restriction")
NEEDS_CONNECTED = frozenset({"deg1", "deg2", "lemma_restriction"})


def applicable_laws(P: Operad) -> tuple[str, ...]:
    return tuple(l for l in OPERAD_LAWS if P.connected or l not in NEEDS_CONNECTED)


def _fmt(P: Operad, label) -> str:
    return P.format_label(label)


def _min_arity(P: Operad) -> int:
    return 0 if P.connected else 1


# each law: enumerate(P, N) yields parameter tuples exhaustively at total arity <= N;
# sample(P, rng, N) draws one; check(P, params) returns (inputs, lhs, rhs)


def _assoc1_enum(P, N):
    lo = _min_arity(P)
    for a in range(1, N + 1):
        for b in range(1, N + 2 - a):
            for c in range(lo, N + 3 - a - b):
                for x, y, z in product(P.basis(a), P.basis(b), P.basis(c)):
                    for i in range(1, a + 1):
                        for j in range(i, i + b):
                            yield x, i, y, j, z


def _assoc1_sample(P, rng, N):
    a = rng.randint(1, N)
    b = rng.randint(1, N + 1 - a)
    c = rng.randint(_min_arity(P), N + 2 - a - b)
    i = rng.randint(1, a)
    return P.random_label(a, rng), i, P.random_label(b, rng), rng.randint(i, i + b - 1), P.random_label(c, rng)


def _assoc1_check(P, params):
    x, i, y, j, z = params
    X, Y, Z = P.element(x), P.element(y), P.element(z)
    lhs = compose_partial(P, compose_partial(P, X, i, Y), j, Z)
    rhs = compose_partial(P, X, i, compose_partial(P, Y, j - i + 1, Z))
    return {"x": _fmt(P, x), "i": i, "y": _fmt(P, y), "j": j, "z": _fmt(P, z)}, lhs, rhs


def _assoc2_enum(P, N):
    lo = _min_arity(P)
    for a in range(2, N + 1):
        for b in range(lo, N + 2 - a):
            for c in range(lo, N + 3 - a - b):
                for x, y, z in product(P.basis(a), P.basis(b), P.basis(c)):
                    for i, j in combinations(range(1, a + 1), 2):
                        yield x, i, y, j, z


def _assoc2_sample(P, rng, N):
    lo = _min_arity(P)
    a = rng.randint(2, max(2, N))
    b = rng.randint(lo, max(lo, N + 1 - a))
    c = rng.randint(lo, max(lo, N + 2 - a - b))
    i, j = sorted(rng.sample(range(1, a + 1), 2))
    return P.random_label(a, rng), i, P.random_label(b, rng), j, P.random_label(c, rng)


def _assoc2_check(P, params):
    x, i, y, j, z = params
    X, Y, Z = P.element(x), P.element(y), P.element(z)
    lhs = compose_partial(P, compose_partial(P, X, i, Y), j + Y.arity - 1, Z)
    rhs = compose_partial(P, compose_partial(P, X, j, Z), i, Y)
    return {"x": _fmt(P, x), "i": i, "y": _fmt(P, y), "j": j, "z": _fmt(P, z)}, lhs, rhs


def _unit_enum(P, N):
    for a in range(_min_arity(P), N + 1):
        for x in P.basis(a):
            yield (x,)


def _unit_sample(P, rng, N):
    return (P.random_label(rng.randint(_min_arity(P), N), rng),)


def _unit_check(P, params):
    (x,) = params
    X, one = P.element(x), P.unit_element()
    lhs = [compose_partial(P, one, 1, X)] + [compose_partial(P, X, i, one) for i in range(1, X.arity + 1)]
    shown = next((v for v in lhs if v != X), X)
    return {"x": _fmt(P, x)}, shown, X


def _equivariance_enum(P, N):
    lo = _min_arity(P)
    for a in range(1, N + 1):
        for b in range(lo, N + 2 - a):
            for x, y in product(P.basis(a), P.basis(b)):
                for s, t in product(permutations(range(1, a + 1)), permutations(range(1, b + 1))):
                    for i in range(1, a + 1):
                        yield x, s, i, y, t


def _equivariance_sample(P, rng, N):
    a = rng.randint(1, N)
    b = rng.randint(_min_arity(P), N + 1 - a)
    s = tuple(rng.sample(range(1, a + 1), a))
    t = tuple(rng.sample(range(1, b + 1), b))
    return P.random_label(a, rng), s, rng.randint(1, a), P.random_label(b, rng), t


def _equivariance_check(P, params):
    x, s, i, y, t = params
    X, Y = P.element(x), P.element(y)
    lhs = compose_partial(P, act_right(X, s), i, act_right(Y, t))
    rhs = act_right(compose_partial(P, X, s[i - 1], Y), perm.partial_compose(s, i, t))
    inputs = {"x": _fmt(P, x), "sigma": perm.format_perm(s), "i": i, "y": _fmt(P, y), "tau": perm.format_perm(t)}
    return inputs, lhs, rhs


def _deg1_enum(P, N):
    for n in range(2, N + 1):
        for x in P.basis(n):
            for i in range(1, n):
                for j in range(i, n):
                    yield x, i, j


def _deg1_sample(P, rng, N):
    n = rng.randint(2, max(2, N))
    i = rng.randint(1, n - 1)
    return P.random_label(n, rng), i, rng.randint(i, n - 1)


def _deg1_check(P, params):
    x, i, j = params
    X = P.element(x)
    lhs = degeneracy(P, degeneracy(P, X, i), j)
    rhs = degeneracy(P, degeneracy(P, X, j + 1), i)
    # d_i is also x o_i 1_0
    via_unit = compose_partial(P, X, i, P.element(P.empty()))
    if via_unit != degeneracy(P, X, i):
        lhs = via_unit
        rhs = degeneracy(P, X, i)
    return {"x": _fmt(P, x), "i": i, "j": j}, lhs, rhs


def _deg2_enum(P, N):
    for n in range(1, N + 1):
        for x in P.basis(n):
            for r in permutations(range(1, n + 1)):
                for i in range(1, n + 1):
                    yield x, r, i


def _deg2_sample(P, rng, N):
    n = rng.randint(1, N)
    return P.random_label(n, rng), tuple(rng.sample(range(1, n + 1), n)), rng.randint(1, n)


def _deg2_check(P, params):
    x, r, i = params
    X = P.element(x)
    lhs = degeneracy(P, act_right(X, r), i)
    rhs = act_right(degeneracy(P, X, r[i - 1]), perm.delta_i(r, i))
    return {"x": _fmt(P, x), "rho": perm.format_perm(r), "i": i}, lhs, rhs


def _compositions_bounded(k: int, total: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``k`` non-negative integers with sum at most ``total``."""
    if k == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _compositions_bounded(k - 1, total - first):
            yield (first,) + rest


def _lemma_enum(P, N):
    # operands equal to 1_0 count towards the arity budget, otherwise they pad without bound
    for k in range(1, N + 1):
        for ls in _compositions_bounded(k, N):
            n = sum(ls)
            if n + ls.count(0) > N:
                continue
            for mu in P.basis(k):
                for nus in product(*(P.basis(l) for l in ls)):
                    for size in range(n + 1):
                        for S in combinations(range(1, n + 1), size):
                            yield mu, nus, S


def _lemma_sample(P, rng, N):
    k = rng.randint(1, N)
    ls = [0] * k
    for _ in range(rng.randint(0, N)):
        ls[rng.randrange(k)] += 1
    n = sum(ls)
    S = tuple(sorted(rng.sample(range(1, n + 1), rng.randint(0, n))))
    return P.random_label(k, rng), tuple(P.random_label(l, rng) for l in ls), S


@lru_cache(maxsize=4096)
def _composite(P, mu, nus) -> SElement:
    return compose_full(P, P.element(mu), [P.element(v) for v in nus])


def _lemma_check(P, params):
    mu, nus, S = params
    M = P.element(mu)
    Ns = [P.element(v) for v in nus]
    lhs = restrict_to_set(P, _composite(P, mu, nus), S)
    chosen = set(S)
    J, parts, scale, offset = [], [], 1, 0
    for idx, v in enumerate(Ns, 1):
        block = [p for p in range(offset + 1, offset + v.arity + 1) if p in chosen]
        local = tuple(p - offset for p in block)
        offset += v.arity
        if block:
            J.append(idx)
            parts.append(restrict_to_set(P, v, local))
        else:
            scale *= sum((c * P.counit(l) for l, c in v.terms.items()), 0)
    rhs = scale * compose_full(P, restrict_to_set(P, M, tuple(J)), parts)
    inputs = {"mu": _fmt(P, mu), "nu": [_fmt(P, v) for v in nus], "S": list(S)}
    return inputs, lhs, rhs


_LAWS: dict[str, tuple[Callable, Callable, Callable]] = {
    "assoc1": (_assoc1_enum, _assoc1_sample, _assoc1_check),
    "assoc2": (_assoc2_enum, _assoc2_sample, _assoc2_check),
    "unit": (_unit_enum, _unit_sample, _unit_check),
    "equivariance": (_equivariance_enum, _equivariance_sample, _equivariance_check),
    "deg1": (_deg1_enum, _deg1_sample, _deg1_check),
    "deg2": (_deg2_enum, _deg2_sample, _deg2_check),
    "lemma_restriction": (_lemma_enum, _lemma_sample, _lemma_check),
}


def check_operad_laws(
    P: Operad, law: str, n_max: int = 4, seed: int = 0, samples: int = DEFAULT_SAMPLES
) -> LawReport:
    """Check one operad axiom; random samples run only when ``n_max`` exceeds the exhaustive bound."""
    if law not in _LAWS:
        raise InvalidInput(f"unknown operad law {law!r}; expected one of {', '.join(OPERAD_LAWS)}")
    if law in NEEDS_CONNECTED and not P.connected:
        raise InvalidInput(f"law {law} needs a connected operad; {P.name} is not")
    enum, sample, check = _LAWS[law]
    report = LawReport(P.name, law, (1, n_max))
    for params in enum(P, min(n_max, EXHAUSTIVE_MAX)):
        inputs, lhs, rhs = check(P, params)
        report.record(lhs == rhs, inputs, lhs, rhs)
    if n_max > EXHAUSTIVE_MAX:
        rng = random.Random(f"{seed}:{P.name}:{law}")
        for _ in range(samples):
            inputs, lhs, rhs = check(P, sample(P, rng, n_max))
            report.record(lhs == rhs, inputs, lhs, rhs)
    return report
