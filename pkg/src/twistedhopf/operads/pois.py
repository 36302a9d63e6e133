"""The Poisson operad ``Pois = Com o Lie``.

A basis label is a set partition of ``[n]`` whose blocks carry Dynkin
brackets: a tuple of anchor words sorted by their first (smallest) letter.
``((1, 3), (2,))`` is ``[x1, x3] x2``.  The empty tuple is ``1_0``.

Arithmetic happens in the *word form*: commutative products of associative
words, i.e. the image of ``Com o Lie`` inside ``Com o As`` obtained by
expanding every bracket as a commutator.  That map is injective, and a word
form lies in the image iff re-expanding its anchor-word part reproduces it.
Brackets of products follow the biderivation rule ``[f, gh] = [f, g]h + g[f, h]``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Mapping

from .. import perm
from ..smod import InvalidInput, SElement, add_into, set_partitions
from .base import ONE, Operad
from .lie import bracket_words, format_bracket

WordForm = dict  # tuple of words (sorted by min letter) -> Fraction

ONE_FORM = {(): ONE}


def _key(words) -> tuple:
    return tuple(sorted(words, key=min))


def leaf(j: int) -> WordForm:
    return {((j,),): ONE}


def form_mul(a: WordForm, b: WordForm) -> WordForm:
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            add_into(out, _key(ka + kb), ca * cb)
    return out


def form_bracket(a: WordForm, b: WordForm) -> WordForm:
    """Poisson bracket: biderivation in both slots, commutator on words."""
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            c = ca * cb
            for i, u in enumerate(ka):
                rest_a = ka[:i] + ka[i + 1 :]
                for j, v in enumerate(kb):
                    rest = rest_a + kb[:j] + kb[j + 1 :]
                    add_into(out, _key(rest + (u + v,)), c)
                    add_into(out, _key(rest + (v + u,)), -c)
    return out


def form_add(a: WordForm, b: WordForm, scale=ONE) -> WordForm:
    out = dict(a)
    for k, v in b.items():
        add_into(out, k, scale * v)
    return out


@lru_cache(maxsize=None)
def _expand_label_cached(label) -> tuple:
    out: dict = {}
    for combo in product(*(bracket_words(w) for w in label)):
        coeff = 1
        for _, s in combo:
            coeff *= s
        add_into(out, _key(tuple(w for w, _ in combo)), Fraction(coeff))
    return tuple(out.items())


def expand_label(label) -> WordForm:
    return dict(_expand_label_cached(label))


def expand(terms: Mapping) -> WordForm:
    out: dict = {}
    for label, c in terms.items():
        for k, v in _expand_label_cached(label):
            add_into(out, k, c * v)
    return out


def _anchored(key) -> bool:
    return all(w[0] == min(w) for w in key)


def read_labels(form: WordForm) -> dict:
    """Coordinates in the Dynkin product basis (valid on the image of Com o Lie)."""
    return {k: c for k, c in form.items() if _anchored(k)}


class NotPoisson(ArithmeticError):
    """A word form outside the image of Com o Lie."""


def straighten(form: WordForm, check: bool = True) -> dict:
    coords = read_labels(form)
    if check and expand(coords) != form:
        raise NotPoisson("word form is not a Poisson element")
    return coords


def relabel_form(form: WordForm, mapping: Callable[[int], int]) -> WordForm:
    out: dict = {}
    for k, c in form.items():
        add_into(out, _key(tuple(tuple(mapping(x) for x in w) for w in k)), c)
    return out


# expression trees: ("x", j) | ("mul", l, r) | ("br", l, r) | ("one",)


def label_tree(label):
    """Canonical expression: left-normed products of left-normed brackets."""
    if not label:
        return ("one",)
    blocks = []
    for w in label:
        t = ("x", w[0])
        for x in w[1:]:
            t = ("br", t, ("x", x))
        blocks.append(t)
    tree = blocks[0]
    for b in blocks[1:]:
        tree = ("mul", tree, b)
    return tree


def eval_tree(tree, leaf_value: Callable[[int], WordForm]) -> WordForm:
    kind = tree[0]
    if kind == "x":
        return leaf_value(tree[1])
    if kind == "one":
        return dict(ONE_FORM)
    left = eval_tree(tree[1], leaf_value)
    right = eval_tree(tree[2], leaf_value)
    return form_mul(left, right) if kind == "mul" else form_bracket(left, right)


def bracket_nodes(tree, path=()) -> list:
    if tree[0] in ("x", "one"):
        return []
    out = [path] if tree[0] == "br" else []
    return out + bracket_nodes(tree[1], path + (1,)) + bracket_nodes(tree[2], path + (2,))


def retype(tree, as_bracket: frozenset, path=()):
    """Copy of ``tree`` whose binary nodes are brackets exactly at ``as_bracket``."""
    if tree[0] in ("x", "one"):
        return tree
    kind = "br" if path in as_bracket else "mul"
    return (kind, retype(tree[1], as_bracket, path + (1,)), retype(tree[2], as_bracket, path + (2,)))


def tree_coproduct(tree) -> dict:
    """``delta`` of an expression, generator by generator, as word-form pairs.

    ``delta(mu) = mu (x) mu`` and ``delta([,]) = [,] (x) mu + mu (x) [,]``; each
    bracket node goes to exactly one side.
    """
    nodes = bracket_nodes(tree)
    out: dict = {}
    for mask in range(1 << len(nodes)):
        left_set = frozenset(p for b, p in enumerate(nodes) if mask >> b & 1)
        right_set = frozenset(nodes) - left_set
        lf = eval_tree(retype(tree, left_set), leaf)
        rf = eval_tree(retype(tree, right_set), leaf)
        for a, ca in lf.items():
            for b, cb in rf.items():
                add_into(out, (a, b), ca * cb)
    return out


class PoissonOperad(Operad):
    name = "pois"

    def _make_basis(self, n):
        out = []
        for blocks in set_partitions(range(1, n + 1)):
            choices = [[(b[0],) + rest for rest in permutations(b[1:])] for b in blocks]
            out.extend(tuple(c) for c in product(*choices))
        return out

    def sort_key(self, label):
        return (len(label), tuple(sorted(len(w) for w in label)), label)

    def arity(self, label):
        return sum(len(w) for w in label)

    def unit(self):
        return ((1,),)

    def empty(self):
        return ()

    def product_label(self, n: int):
        """``e_n``: the product of ``n`` singletons."""
        return tuple((j,) for j in range(1, n + 1))

    def bracket_label(self):
        return ((1, 2),)

    def to_form(self, x: SElement) -> WordForm:
        return expand(x.terms)

    def from_form(self, n: int, form: WordForm, check: bool = True) -> SElement:
        return SElement(self, n, straighten(form, check))

    def compose(self, a, i, b):
        m = self.arity(b)
        inner = relabel_form(expand_label(b), lambda x: x + i - 1)

        def value(j):
            if j == i:
                return inner
            return leaf(j if j < i else j + m - 1)

        return straighten(eval_tree(label_tree(a), value), check=False)

    def act(self, label, sigma):
        inv = perm.invert(sigma)
        return straighten(relabel_form(expand_label(label), lambda x: inv[x - 1]), check=False)

    def restrict(self, label, subset):
        keep = set(subset)
        kept = []
        for w in label:
            if set(w) <= keep:
                kept.append(w)
            elif len(w) > 1:
                return {}
        rank = {v: r for r, v in enumerate(sorted(keep), 1)}
        return {_key(tuple(tuple(rank[x] for x in w) for w in kept)): ONE}

    def counit(self, label):
        return ONE if all(len(w) == 1 for w in label) else Fraction(0)

    def coproduct(self, label):
        # the tensor square of the anchor-word readout is a left inverse on Pois (x) Pois
        return {
            (a, b): c
            for (a, b), c in tree_coproduct(label_tree(label)).items()
            if _anchored(a) and _anchored(b)
        }

    def format_label(self, label):
        if not label:
            return "1_0"
        if label == ((1,),):
            return "1_1"
        return "".join("{" + format_bracket(w) + "}" for w in label)

    def parse_label(self, text):
        from ..grammar import bracket_letters, parse_bracket

        text = text.strip()
        if text in ("1_0", "1_1"):
            return self.element(() if text == "1_0" else ((1,),))
        groups = re.findall(r"\{([^{}]*)\}", text)
        if not groups or re.sub(r"\s+", "", text) != "".join("{" + g.replace(" ", "") + "}" for g in groups):
            raise InvalidInput(f"bad Poisson label {text!r}")
        trees = [parse_bracket(g) for g in groups]
        letters = sorted(x for t in trees for x in bracket_letters(t))
        n = len(letters)
        if letters != list(range(1, n + 1)):
            raise InvalidInput(f"letters of {text!r} are not 1..{n}")
        form = dict(ONE_FORM)
        for t in trees:
            form = form_mul(form, _bracket_form(t))
        return self.from_form(n, form)


def _bracket_form(tree) -> WordForm:
    if isinstance(tree, int):
        return leaf(tree)
    return form_bracket(_bracket_form(tree[1]), _bracket_form(tree[2]))
