"""Shared operad machinery.

Concrete operads implement basis-level rules (``compose``, ``act``,
``restrict``, ``coproduct``); everything here extends them bilinearly to
:class:`~twistedhopf.smod.SElement` values.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Mapping, Sequence

from .. import perm
from ..perm import Permutation
from ..smod import InvalidInput, Label, SElement, add_into, linear_map

ONE = Fraction(1)


class Operad:
    """Base class for operads given by an explicit basis in every arity."""

    name = "operad"
    connected = True
    cocommutative = True

    def __init__(self):
        self._basis_cache: dict[int, tuple] = {}
        self.compose = lru_cache(maxsize=None)(self.compose)
        self.act = lru_cache(maxsize=None)(self.act)
        self.restrict = lru_cache(maxsize=None)(self.restrict)
        self.coproduct = lru_cache(maxsize=None)(self.coproduct)

    # basis-level rules ----------------------------------------------------

    def basis(self, n: int) -> tuple:
        if n not in self._basis_cache:
            self._basis_cache[n] = tuple(sorted(self._make_basis(n), key=self.sort_key))
        return self._basis_cache[n]

    def _make_basis(self, n: int):
        raise NotImplementedError

    def arity(self, label: Label) -> int:
        raise NotImplementedError

    def unit(self) -> Label:
        raise NotImplementedError

    def empty(self) -> Label:
        """The label ``1_0`` of a connected operad."""
        raise NotImplementedError

    def compose(self, a: Label, i: int, b: Label) -> Mapping[Label, Fraction]:
        raise NotImplementedError

    def act(self, label: Label, sigma: Permutation) -> Mapping[Label, Fraction]:
        raise NotImplementedError

    def restrict(self, label: Label, subset: tuple[int, ...]) -> Mapping[Label, Fraction]:
        raise NotImplementedError

    def coproduct(self, label: Label) -> Mapping[tuple[Label, Label], Fraction]:
        """Arity-preserving ``delta(label)`` as ``{(left, right): coeff}``."""
        return {(label, label): ONE}

    def counit(self, label: Label) -> Fraction:
        return self.restrict(label, ()).get(self.empty(), Fraction(0))

    def sort_key(self, label: Label):
        return label

    def random_label(self, n: int, rng) -> Label:
        """A uniformly random basis label of arity ``n``."""
        return rng.choice(self.basis(n))

    def format_label(self, label: Label) -> str:
        raise NotImplementedError

    def parse_label(self, text: str) -> "SElement":
        raise NotImplementedError

    # conveniences ---------------------------------------------------------

    def element(self, label: Label, coeff=1) -> SElement:
        return SElement(self, self.arity(label), {label: Fraction(coeff)})

    def zero(self, n: int) -> SElement:
        return SElement(self, n)

    def unit_element(self) -> SElement:
        return self.element(self.unit())

    def __repr__(self) -> str:
        return f"<operad {self.name}>"


def _check_family(P: Operad, *xs: SElement) -> None:
    for x in xs:
        if x.family is not P:
            raise InvalidInput(f"element of {x.family.name} used with operad {P.name}")


def compose_partial(P: Operad, x: SElement, i: int, y: SElement) -> SElement:
    """``x o_i y`` extended bilinearly from the basis rule."""
    _check_family(P, x, y)
    if not 1 <= i <= x.arity:
        raise InvalidInput(f"slot {i} out of range 1..{x.arity}")
    out: dict = {}
    for a, c in x.terms.items():
        for b, d in y.terms.items():
            for label, e in P.compose(a, i, b).items():
                add_into(out, label, c * d * e)
    return SElement(P, x.arity + y.arity - 1, out)


def compose_full(P: Operad, x: SElement, ys: Sequence[SElement]) -> SElement:
    """``gamma(x; y_1, ..., y_n)``, composing from the highest slot down."""
    if len(ys) != x.arity:
        raise InvalidInput(f"{x.arity} operands expected, got {len(ys)}")
    result = x
    for i in range(len(ys), 0, -1):
        result = compose_partial(P, result, i, ys[i - 1])
    return result


def compose_full_left_to_right(P: Operad, x: SElement, ys: Sequence[SElement]) -> SElement:
    """Same as :func:`compose_full` but filling slots from the left, tracking the offset."""
    if len(ys) != x.arity:
        raise InvalidInput(f"{x.arity} operands expected, got {len(ys)}")
    result, slot = x, 1
    for y in ys:
        result = compose_partial(P, result, slot, y)
        slot += y.arity
    return result


def restrict_to_set(P: Operad, x: SElement, subset) -> SElement:
    _check_family(P, x)
    members = perm.check_subset(x.arity, subset)
    return SElement(P, len(members), linear_map(x.terms, lambda b: P.restrict(b, members)))


def degeneracy(P: Operad, x: SElement, i: int) -> SElement:
    """``d_i(x) = x o_i 1_0``."""
    if not 1 <= i <= x.arity:
        raise InvalidInput(f"degeneracy index {i} out of range 1..{x.arity}")
    keep = tuple(j for j in range(1, x.arity + 1) if j != i)
    return restrict_to_set(P, x, keep)


def degenerate_label(P: Operad, label: Label, i: int) -> Mapping:
    n = P.arity(label)
    return P.restrict(label, tuple(j for j in range(1, n + 1) if j != i))


def tensor_terms(*term_maps: Mapping) -> dict:
    """Coefficient-multiplied Cartesian product of several term maps."""
    out: dict = {}
    for combo in product(*(list(m.items()) for m in term_maps)):
        coeff = ONE
        for _, c in combo:
            coeff *= c
        add_into(out, tuple(k for k, _ in combo), coeff)
    return out
