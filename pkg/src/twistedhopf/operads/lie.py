"""The Lie operad realized inside As.

Basis of ``Lie(n)``: left-normed brackets ``[[...[x_1, x_d1], ...], x_d(n-1)]``
anchored at the smallest letter.  A label is the *anchor word*
``(1, d1, ..., d(n-1))``.  Expanding ``[a, b] = ab - ba`` gives ``2^(n-1)``
signed words; a word ``w`` is the As label ``invert(w)``.

Straightening uses that the expansion of anchor word ``u`` contains exactly
one word beginning with the anchor letter, namely ``u`` itself.  Reading the
coefficients of those words therefore solves the linear system against the
Dynkin images; re-expanding certifies membership in the Lie span.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Mapping

from .. import perm
from ..smod import InvalidInput, SElement, add_into
from .assoc import AssociativeOperad, perm_to_word, word_to_perm
from .base import ONE, Operad


@lru_cache(maxsize=None)
def bracket_words(anchor: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Signed words of the left-normed bracket ``[[a1, a2], ..., ak]``."""
    if not anchor:
        return ()
    terms: dict = {(anchor[0],): 1}
    for x in anchor[1:]:
        nxt: dict = {}
        for w, c in terms.items():
            add_into(nxt, w + (x,), c)
            add_into(nxt, (x,) + w, -c)
        terms = nxt
    return tuple(sorted(terms.items()))


def read_anchor_coordinates(words: Mapping[tuple[int, ...], Fraction]) -> dict:
    """Coefficients of words that start with their smallest letter."""
    return {w: c for w, c in words.items() if w and w[0] == min(w)}


def expand_anchor_words(coords: Mapping[tuple[int, ...], Fraction]) -> dict:
    out: dict = {}
    for anchor, c in coords.items():
        for w, s in bracket_words(anchor):
            add_into(out, w, c * s)
    return out


def lie_dynkin_expand(As: AssociativeOperad, anchor) -> SElement:
    """Image of a Dynkin bracket in As."""
    anchor = tuple(anchor)
    n = len(anchor)
    return SElement(As, n, {word_to_perm(w): Fraction(s) for w, s in bracket_words(anchor)})


def lie_straighten(Lie: "LieOperad", x: SElement) -> SElement | None:
    """Dynkin coordinates of an As element, or ``None`` if it is not a Lie element."""
    if x.family is not Lie.As:
        raise InvalidInput("lie_straighten takes an As element")
    words = {perm_to_word(s): c for s, c in x.terms.items()}
    coords = read_anchor_coordinates(words)
    if expand_anchor_words(coords) != words:
        return None
    return SElement(Lie, x.arity, coords)


class LieOperad(Operad):
    """Lie brackets, with composition and action computed in As."""

    name = "lie"
    connected = False

    def __init__(self, As: AssociativeOperad | None = None):
        self.As = As or AssociativeOperad()
        super().__init__()

    def _make_basis(self, n):
        if n == 0:
            return []
        return [(1,) + rest for rest in permutations(range(2, n + 1))]

    def arity(self, label):
        return len(label)

    def unit(self):
        return (1,)

    def empty(self):
        raise InvalidInput("Lie(0) = 0: the Lie operad is not connected")

    def to_as(self, x: SElement) -> SElement:
        out: dict = {}
        for anchor, c in x.terms.items():
            for w, s in bracket_words(anchor):
                add_into(out, word_to_perm(w), c * s)
        return SElement(self.As, x.arity, out)

    def _straighten_words(self, words: dict) -> dict:
        coords = read_anchor_coordinates(words)
        if expand_anchor_words(coords) != words:
            raise ArithmeticError("result left the Lie span")
        return coords

    def _as_words(self, anchor) -> dict:
        return dict(bracket_words(anchor))

    def compose(self, a, i, b):
        out: dict = {}
        for wa, ca in bracket_words(a):
            for wb, cb in bracket_words(b):
                s = perm.partial_compose(word_to_perm(wa), i, word_to_perm(wb))
                add_into(out, perm_to_word(s), ca * cb)
        return self._straighten_words(out)

    def act(self, label, sigma):
        out: dict = {}
        for w, c in bracket_words(label):
            add_into(out, perm_to_word(perm.multiply(word_to_perm(w), sigma)), c)
        return self._straighten_words(out)

    def restrict(self, label, subset):
        raise InvalidInput("restriction of Lie elements is taken inside As (use to_as)")

    def coproduct(self, label):
        raise InvalidInput("Lie is not a Hopf operad here")

    def format_label(self, label):
        return "1_1" if len(label) == 1 else format_bracket(label)

    def sort_key(self, label):
        return label

    def parse_label(self, text):
        from ..grammar import bracket_letters, bracket_to_words, parse_bracket

        if text.strip() == "1_1":
            return self.element((1,))
        tree = parse_bracket(text)
        letters = sorted(bracket_letters(tree))
        n = len(letters)
        if letters != list(range(1, n + 1)):
            raise InvalidInput(f"letters of {text!r} are not 1..{n}")
        words = bracket_to_words(tree)
        coords = read_anchor_coordinates(words)
        if expand_anchor_words(coords) != words:
            raise InvalidInput(f"{text!r} is not a Lie element")
        return SElement(self, n, coords)


def format_bracket(anchor) -> str:
    if len(anchor) == 1:
        return str(anchor[0])
    text = str(anchor[0])
    for x in anchor[1:]:
        text = f"[{text},{x}]"
    return text
