"""Free magmatic operads ``Mag_N`` on one generator ``v^k`` per arity ``2 <= k <= N``.

Labels are planar trees: an ``int`` is a leaf (a variable), a tuple of
subtrees is an internal node of that arity, and ``()`` is ``1_0``.  The
connected structure sets ``v^k o_i 1_0 = v^(k-1)``, so deleting leaves
splices out nodes that drop to one child.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import permutations, product

from ..smod import InvalidInput
from .base import ONE, Operad

EMPTY = ()


def leaves(tree) -> list[int]:
    if isinstance(tree, int):
        return [tree]
    out: list[int] = []
    for child in tree:
        out.extend(leaves(child))
    return out


def relabel(tree, mapping):
    if isinstance(tree, int):
        return mapping(tree)
    return tuple(relabel(c, mapping) for c in tree)


def normalize(tree):
    """Drop empty children and splice nodes left with a single child."""
    if isinstance(tree, int):
        return tree
    kids = [normalize(c) for c in tree]
    kids = [c for c in kids if c != EMPTY]
    if not kids:
        return EMPTY
    if len(kids) == 1:
        return kids[0]
    return tuple(kids)


@lru_cache(maxsize=None)
def tree_shapes(n: int, max_arity: int) -> tuple:
    """Planar trees with ``n`` unlabeled leaves (marked 0) and node arities in ``[2, max_arity]``."""
    if n == 0:
        return (EMPTY,)
    if n == 1:
        return (0,)
    out = []
    for k in range(2, min(max_arity, n) + 1):
        for sizes in _compositions(n, k):
            for kids in product(*(tree_shapes(s, max_arity) for s in sizes)):
                out.append(tuple(kids))
    return tuple(out)


def _compositions(n, k):
    if k == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _fill(shape, word):
    it = iter(word)
    return relabel(shape, lambda _: next(it))


class MagmaticOperad(Operad):
    def __init__(self, max_arity: int):
        if max_arity < 2:
            raise InvalidInput("Mag_N needs N >= 2")
        self.max_arity = max_arity
        self.name = f"mag{max_arity}"
        super().__init__()

    def _make_basis(self, n):
        if n == 0:
            return [EMPTY]
        return [_fill(shape, w) for shape in tree_shapes(n, self.max_arity) for w in permutations(range(1, n + 1))]

    def arity(self, label):
        if label == EMPTY:
            return 0
        return len(leaves(label))

    def unit(self):
        return 1

    def empty(self):
        return EMPTY

    def generator(self, k: int):
        """The corolla ``v^k`` with leaves ``1..k`` in order."""
        if k == 0:
            return EMPTY
        if k == 1:
            return 1
        if k > self.max_arity:
            raise InvalidInput(f"{self.name} has no generator of arity {k}")
        return tuple(range(1, k + 1))

    def compose(self, a, i, b):
        m = self.arity(b)
        shifted = relabel(b, lambda x: x + i - 1) if b != EMPTY else EMPTY

        def sub(x):
            if x == i:
                return shifted
            return x if x < i else x + m - 1

        return {normalize(relabel(a, sub)): ONE}

    def act(self, label, sigma):
        inv = {v: j for j, v in enumerate(sigma, 1)}
        return {relabel(label, lambda x: inv[x]): ONE}

    def restrict(self, label, subset):
        rank = {v: r for r, v in enumerate(subset, 1)}
        cut = relabel(label, lambda x: rank.get(x, EMPTY))
        return {normalize(cut): ONE}

    def random_label(self, n, rng):
        shape = rng.choice(tree_shapes(n, self.max_arity))
        return _fill(shape, rng.sample(range(1, n + 1), n))

    def counit(self, label):
        return ONE

    def sort_key(self, label):
        return (self.arity(label), _shape_key(label), leaves(label) if label != EMPTY else [])

    def format_label(self, label):
        if label == EMPTY:
            return "1_0"
        if isinstance(label, int):
            return "1_1" if label == 1 else str(label)
        return "(v" + str(len(label)) + " " + " ".join(self.format_label_inner(c) for c in label) + ")"

    def format_label_inner(self, tree):
        if isinstance(tree, int):
            return str(tree)
        return self.format_label(tree)

    def parse_label(self, text):
        text = text.strip()
        if text in ("1_0", "1_1"):
            return self.element(EMPTY if text == "1_0" else 1)
        tokens = re.findall(r"\(|\)|v\d+|\d+", text)
        if "".join(tokens) != re.sub(r"\s+", "", text):
            raise InvalidInput(f"bad magmatic tree {text!r}")
        pos = 0

        def parse():
            nonlocal pos
            tok = tokens[pos]
            pos += 1
            if tok == "(":
                head = tokens[pos]
                pos += 1
                if not head.startswith("v"):
                    raise InvalidInput(f"expected vK after '(' in {text!r}")
                kids = []
                while tokens[pos] != ")":
                    kids.append(parse())
                pos += 1
                if len(kids) != int(head[1:]):
                    raise InvalidInput(f"{head} applied to {len(kids)} children")
                return tuple(kids)
            if tok.isdigit():
                return int(tok)
            raise InvalidInput(f"unexpected token {tok!r} in {text!r}")

        try:
            tree = parse()
        except IndexError as exc:
            raise InvalidInput(f"unterminated tree {text!r}") from exc
        if pos != len(tokens):
            raise InvalidInput(f"trailing input in {text!r}")
        if isinstance(tree, tuple) and any(len(t) > self.max_arity for t in _nodes(tree)):
            raise InvalidInput(f"node arity exceeds {self.max_arity}")
        word = leaves(tree)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidInput(f"leaf labels of {text!r} are not a permutation")
        return self.element(tree)


def _nodes(tree):
    if isinstance(tree, int):
        return
    yield tree
    for c in tree:
        yield from _nodes(c)


def _shape_key(tree):
    if isinstance(tree, int):
        return (0,)
    return (len(tree),) + tuple(_shape_key(c) for c in tree)
