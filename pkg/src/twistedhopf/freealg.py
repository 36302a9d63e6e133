"""Free twisted algebras ``P o V`` over a finite S-module ``V`` with ``V(0) = 0``.

A basis label is ``(mu, blocks, gens)``: a set partition of ``[n]`` into
``k`` blocks sorted by minimum, a basis label ``mu`` of ``P(k)`` and one
generator of ``V(|B|)`` per block.  Generators carry the trivial action of
the symmetric group on their own arity, so only the block structure moves.

The Hopf structure comes from ``(P ^ P) o V = (P o V) ^ (P o V)``: every
generator stays whole and travels to the side that keeps its block.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Mapping

from . import exact, perm
from .operads.base import Operad
from .smod import HatTensor, InvalidInput, SElement, UnsupportedInput, add_into, plethysm_basis, set_partitions

ONE = Fraction(1)


@dataclass(frozen=True)
class FiniteSModule:
    """Finitely many generators per arity, each with the trivial action."""

    dims: tuple[tuple[int, int], ...]
    names: tuple[tuple[int, tuple[str, ...]], ...] = field(default=())

    @classmethod
    def from_dims(cls, dims: Mapping[int, int], names: Mapping[int, list[str]] | None = None) -> "FiniteSModule":
        if dims.get(0, 0):
            raise UnsupportedInput("free algebras need V(0) = 0")
        clean = tuple(sorted((m, d) for m, d in dims.items() if d))
        if any(m < 0 or d < 0 for m, d in clean):
            raise InvalidInput("dimensions and arities must be non-negative")
        named = dict(names or {})
        pool = iter(string.ascii_lowercase)
        total = sum(d for _, d in clean)
        out = []
        for m, d in clean:
            if m in named:
                given = tuple(named[m])
                if len(given) != d:
                    raise InvalidInput(f"{len(given)} names for {d} generators in arity {m}")
            elif total <= 26:
                given = tuple(next(pool) for _ in range(d))
            else:
                given = tuple(f"g{m}_{i}" for i in range(1, d + 1))
            out.append((m, given))
        return cls(clean, tuple(out))

    def dim(self, m: int) -> int:
        return dict(self.dims).get(m, 0)

    def generators(self, m: int) -> tuple[str, ...]:
        return dict(self.names).get(m, ())

    def arity_of(self, name: str) -> int:
        for m, gens in self.names:
            if name in gens:
                return m
        raise InvalidInput(f"unknown generator {name!r}")

    def __str__(self) -> str:
        return "V{" + ",".join(f"{m}:{d}" for m, d in self.dims) + "}"


IDENTITY_MODULE = FiniteSModule.from_dims({1: 1}, {1: ["x"]})


def lie_dimension_module(n_max: int) -> FiniteSModule:
    """``V(m) = (m-1)!`` for ``1 <= m <= n_max``: the dimensions of ``Lie``."""
    return FiniteSModule.from_dims({m: factorial(m - 1) for m in range(1, n_max + 1)})


def plethysm_dimension(outer_dims: Mapping[int, int], V: FiniteSModule, n: int) -> int:
    """``dim (Q o V)(n)`` from the dimensions of ``Q``: a sum over set partitions."""
    total = 0
    for blocks in set_partitions(range(1, n + 1)):
        total += outer_dims.get(len(blocks), 0) * prod(V.dim(len(b)) for b in blocks)
    return total


class FreeAlgebra:
    """Basis family of ``P o V`` with its induced twisted coproduct."""

    def __init__(self, P: Operad, V: FiniteSModule):
        self.P = P
        self.V = V
        self.name = f"{P.name}o{V}"
        self._basis: dict[int, tuple] = {}
        self.delta_label = lru_cache(maxsize=None)(self.delta_label)

    def basis(self, n: int) -> tuple:
        if n not in self._basis:
            triples = plethysm_basis(self.P.basis, self.V.generators, n)
            self._basis[n] = tuple(sorted(((mu, blocks, gens) for blocks, mu, gens in triples), key=self.sort_key))
        return self._basis[n]

    def arity(self, label) -> int:
        return sum(len(b) for b in label[1])

    def sort_key(self, label):
        mu, blocks, gens = label
        return (len(blocks), blocks, self.P.sort_key(mu), gens)

    def counit(self, label) -> Fraction:
        mu, blocks, _ = label
        return self.P.counit(mu) if not blocks else Fraction(0)

    def element(self, label, coeff=1) -> SElement:
        return SElement(self, self.arity(label), {label: Fraction(coeff)})

    def act(self, label, sigma) -> dict:
        """Right action: block ``I`` moves to ``sigma^-1(I)``; ``mu`` absorbs the reordering."""
        mu, blocks, gens = label
        inv = perm.invert(sigma)
        moved = [tuple(sorted(inv[p - 1] for p in b)) for b in blocks]
        order = sorted(range(len(moved)), key=lambda j: moved[j][0])
        pi = tuple(j + 1 for j in order)
        new_blocks = tuple(moved[j] for j in order)
        new_gens = tuple(gens[j] for j in order)
        return {(m, new_blocks, new_gens): c for m, c in self.P.act(mu, pi).items()}

    def delta_label(self, label, reduced: bool) -> tuple:
        mu, blocks, gens = label
        k = len(blocks)
        out: dict = {}
        for (l1, l2), c in self.P.coproduct(mu).items():
            for size in range(k + 1):
                if reduced and size in (0, k):
                    continue
                for S in combinations(range(1, k + 1), size):
                    T = tuple(j for j in range(1, k + 1) if j not in S)
                    left = self.P.restrict(l1, S)
                    if not left:
                        continue
                    right = self.P.restrict(l2, T)
                    u_s = sorted(p for j in S for p in blocks[j - 1])
                    u_t = sorted(p for j in T for p in blocks[j - 1])
                    side_s = _standard_blocks(blocks, S, u_s)
                    side_t = _standard_blocks(blocks, T, u_t)
                    g_s = tuple(gens[j - 1] for j in S)
                    g_t = tuple(gens[j - 1] for j in T)
                    alpha = perm.invert(perm.sigma_st(u_s, u_t))
                    for a, ca in left.items():
                        for b, cb in right.items():
                            add_into(out, (((a, side_s, g_s), (b, side_t, g_t)), alpha), c * ca * cb)
        return tuple(out.items())

    def format_label(self, label) -> str:
        mu, blocks, gens = label
        body = ", ".join("".join(str(p) for p in b) + ":" + g for b, g in zip(blocks, gens))
        return f"{self.P.format_label(mu)} @ {{{body}}}"

    def parse_label(self, text: str) -> SElement:
        """Parse ``P-label @ {12:a, 3:b}``; block letters are single digits."""
        m = re.fullmatch(r"\s*(.+?)\s*@\s*\{(.*)\}\s*", text)
        if not m:
            raise InvalidInput(f"bad free-algebra label {text!r}")
        mu_elt = self.P.parse_label(m.group(1))
        pairs = [p.strip() for p in m.group(2).split(",") if p.strip()]
        blocks, gens = [], []
        for p in pairs:
            bm = re.fullmatch(r"(\d+)\s*:\s*(\w+)", p)
            if not bm:
                raise InvalidInput(f"bad block {p!r}")
            block = tuple(sorted(int(ch) for ch in bm.group(1)))
            if self.V.arity_of(bm.group(2)) != len(block):
                raise InvalidInput(f"generator {bm.group(2)} does not have arity {len(block)}")
            blocks.append(block)
            gens.append(bm.group(2))
        order = sorted(range(len(blocks)), key=lambda j: blocks[j][0])
        if order != list(range(len(blocks))):
            raise InvalidInput("blocks must be listed by increasing minimum")
        letters = sorted(p for b in blocks for p in b)
        if letters != list(range(1, len(letters) + 1)):
            raise InvalidInput(f"blocks of {text!r} do not partition 1..{len(letters)}")
        if mu_elt.arity != len(blocks):
            raise InvalidInput(f"operation of arity {mu_elt.arity} applied to {len(blocks)} blocks")
        terms = {(mu, tuple(blocks), tuple(gens)): c for mu, c in mu_elt.terms.items()}
        return SElement(self, len(letters), terms)


def _standard_blocks(blocks, chosen, union) -> tuple:
    rank = {p: r for r, p in enumerate(union, 1)}
    return tuple(tuple(rank[p] for p in blocks[j - 1]) for j in chosen)


def free_basis(P: Operad, V: FiniteSModule, n: int) -> tuple:
    return FreeAlgebra(P, V).basis(n)


def free_big_delta(A: FreeAlgebra, x: SElement, reduced: bool = False) -> HatTensor:
    if x.family is not A:
        raise InvalidInput("element does not belong to this free algebra")
    out: dict = {}
    for label, c in x.terms.items():
        for key, d in A.delta_label(label, reduced):
            add_into(out, key, c * d)
    return HatTensor((A, A), x.arity, out)


def free_primitive_dimension(A: FreeAlgebra, n: int) -> int:
    """``dim ker`` of the reduced coproduct on ``(P o V)(n)``."""
    labels = A.basis(n)
    row_index: dict = {}
    rows: list[dict] = []
    for col, label in enumerate(labels):
        for key, c in A.delta_label(label, True):
            r = row_index.setdefault(key, len(rows))
            if r == len(rows):
                rows.append({})
            rows[r][col] = c
    return len(labels) - exact.rank(exact.RationalMatrix(len(rows), len(labels), rows))


def free_primitive_dimensions(P: Operad, V: FiniteSModule, n_max: int) -> list[int]:
    A = FreeAlgebra(P, V)
    return [free_primitive_dimension(A, n) for n in range(1, n_max + 1)]
