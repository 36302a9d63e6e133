"""The associative operad: ``As(n) = k[S_n]`` with the permutation basis.

A label ``s`` is a permutation in one-line form.  Read as a word, ``s`` places
variable ``j`` at position ``s(j)``, so the monomial it denotes is
``x_{s^-1(1)} ... x_{s^-1(n)}``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .. import perm
from ..smod import SElement
from .base import ONE, Operad


class AssociativeOperad(Operad):
    name = "as"

    def _make_basis(self, n):
        return permutations(range(1, n + 1))

    def arity(self, label):
        return len(label)

    def unit(self):
        return (1,)

    def empty(self):
        return ()

    def compose(self, a, i, b):
        return {perm.partial_compose(a, i, b): ONE}

    def act(self, label, sigma):
        return {perm.multiply(label, sigma): ONE}

    def restrict(self, label, subset):
        return {perm.restrict(label, subset): ONE}

    def random_label(self, n, rng):
        return tuple(rng.sample(range(1, n + 1), n))

    def counit(self, label):
        return ONE

    def format_label(self, label):
        if len(label) == 0:
            return "1_0"
        if len(label) == 1:
            return "1_1"
        return perm.format_perm(label)

    def parse_label(self, text):
        text = text.strip()
        if text in ("1_0", "1_1"):
            return self.element(() if text == "1_0" else (1,))
        return self.element(perm.parse_perm(text))


def word_to_perm(word) -> perm.Permutation:
    """The As label of the monomial ``x_{w_1} ... x_{w_n}``."""
    return perm.invert(tuple(word))


def perm_to_word(label) -> tuple[int, ...]:
    return perm.invert(label)


def as_from_words(P: AssociativeOperad, n: int, words: dict) -> SElement:
    return SElement(P, n, {word_to_perm(w): Fraction(c) for w, c in words.items()})
