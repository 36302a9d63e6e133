"""The commutative operad: one basis vector ``e_n`` per arity, trivial action."""

from __future__ import annotations

import re

from ..smod import InvalidInput
from .base import ONE, Operad


class CommutativeOperad(Operad):
    name = "com"

    def _make_basis(self, n):
        return [n]

    def arity(self, label):
        return label

    def unit(self):
        return 1

    def empty(self):
        return 0

    def compose(self, a, i, b):
        return {a + b - 1: ONE}

    def act(self, label, sigma):
        return {label: ONE}

    def restrict(self, label, subset):
        return {len(subset): ONE}

    def format_label(self, label):
        if label <= 1:
            return f"1_{label}"
        return f"e{label}"

    def parse_label(self, text):
        text = text.strip()
        m = re.fullmatch(r"e(\d+)|1_([01])", text)
        if not m:
            raise InvalidInput(f"bad com label {text!r}")
        return self.element(int(m.group(1) if m.group(1) is not None else m.group(2)))
