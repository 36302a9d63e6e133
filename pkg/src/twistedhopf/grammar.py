"""Text grammar for elements: ``coeff*label +/- coeff*label ...``.

Labels are operad specific (``[2,1,3]``, ``e3``, ``[[1,2],3]``,
``{[1,2]}{3}``, ``(v2 1 2)``); this module splits linear combinations and
parses bracket expressions shared by Lie and Poisson labels.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .smod import InvalidInput, SElement, add_into

Bracket = Union[int, tuple]  # leaf letter or ("br", left, right)

_OPEN = "([{"
_CLOSE = ")]}"


def split_terms(text: str) -> list[tuple[Fraction, str]]:
    """Split a signed sum at top-level ``+``/``-`` into ``(coeff, label text)``."""
    text = text.strip()
    if not text:
        raise InvalidInput("empty element")
    chunks: list[tuple[int, str]] = []
    depth, sign, start = 0, 1, 0
    for i, ch in enumerate(text):
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
            if depth < 0:
                raise InvalidInput(f"unbalanced brackets in {text!r}")
        elif ch in "+-" and depth == 0:
            chunk = text[start:i].strip()
            if chunk:
                chunks.append((sign, chunk))
            elif chunks or text[:i].strip():
                raise InvalidInput(f"dangling operator in {text!r}")
            sign = 1 if ch == "+" else -1
            start = i + 1
    if depth:
        raise InvalidInput(f"unbalanced brackets in {text!r}")
    chunk = text[start:].strip()
    if not chunk:
        raise InvalidInput(f"dangling operator in {text!r}")
    chunks.append((sign, chunk))
    out = []
    for s, chunk in chunks:
        m = re.fullmatch(r"(\d+(?:/\d+)?)\s*\*\s*(.+)", chunk, flags=re.S)
        if m:
            out.append((s * Fraction(m.group(1)), m.group(2).strip()))
        else:
            out.append((Fraction(s), chunk))
    return out


def parse_element(P, text: str) -> SElement:
    """Parse a linear combination of labels of operad ``P``."""
    total: SElement | None = None
    for coeff, label_text in split_terms(text):
        x = coeff * P.parse_label(label_text)
        total = x if total is None else total + x
    return total


def parse_bracket(text: str) -> Bracket:
    """Parse ``[[1,2],3]``-style bracket expressions over integer letters."""
    tokens = re.findall(r"\[|\]|,|\d+", text)
    if "".join(tokens) != re.sub(r"\s+", "", text):
        raise InvalidInput(f"bad bracket expression {text!r}")
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(tokens):
            raise InvalidInput(f"unterminated bracket expression {text!r}")
        tok = tokens[pos]
        pos += 1
        if tok == "[":
            left = parse()
            if tokens[pos : pos + 1] != [","]:
                raise InvalidInput(f"expected ',' in {text!r}")
            pos += 1
            right = parse()
            if tokens[pos : pos + 1] != ["]"]:
                raise InvalidInput(f"expected ']' in {text!r}")
            pos += 1
            return ("br", left, right)
        if tok.isdigit():
            return int(tok)
        raise InvalidInput(f"unexpected {tok!r} in {text!r}")

    tree = parse()
    if pos != len(tokens):
        raise InvalidInput(f"trailing input in {text!r}")
    return tree


def bracket_letters(tree: Bracket) -> list[int]:
    if isinstance(tree, int):
        return [tree]
    return bracket_letters(tree[1]) + bracket_letters(tree[2])


def bracket_to_words(tree: Bracket) -> dict:
    """Commutator expansion of a bracket expression into signed words."""
    if isinstance(tree, int):
        return {(tree,): Fraction(1)}
    left, right = bracket_to_words(tree[1]), bracket_to_words(tree[2])
    out: dict = {}
    for u, a in left.items():
        for v, b in right.items():
            add_into(out, u + v, a * b)
            add_into(out, v + u, -a * b)
    return out
