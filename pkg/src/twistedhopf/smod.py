"""Elements of S-modules, the hat-tensor product and plethysm bases.

An S-module here is a *basis family*: an object that enumerates basis labels
per arity and knows how ``S_n`` acts on them on the right.  Operads and free
algebras both implement the protocol below.

Hat-tensor elements live in ``M_1 ^ ... ^ M_k`` and are stored in canonical
form: each term is ``(labels, alpha)`` meaning ``(x_1 (x) ... (x) x_k) . alpha``
with ``alpha`` a multi-shuffle of the factor arities.  There are no signs
anywhere; the symmetric structure on S-modules is unsigned.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Protocol, Sequence

from . import perm
from .perm import Permutation

Label = Hashable
Terms = dict  # label -> Fraction


class InvalidInput(ValueError):
    """Operands of the wrong arity, operad or shape."""


class UnsupportedInput(ValueError):
    """Inputs outside the supported finite setting (e.g. N(0) != 0)."""


class BasisFamily(Protocol):
    name: str

    def basis(self, n: int) -> Sequence[Label]: ...

    def arity(self, label: Label) -> int: ...

    def act(self, label: Label, sigma: Permutation) -> Mapping[Label, Fraction]: ...

    def format_label(self, label: Label) -> str: ...

    def sort_key(self, label: Label): ...


def add_into(acc: dict, key, coeff) -> None:
    value = acc.get(key, 0) + coeff
    if value:
        acc[key] = value
    else:
        acc.pop(key, None)


def linear_map(terms: Mapping, fn: Callable[[Label], Mapping]) -> dict:
    out: dict = {}
    for label, c in terms.items():
        for image, d in fn(label).items():
            add_into(out, image, c * d)
    return out


class SElement:
    """A finite linear combination of basis labels of ``family`` in one arity."""

    __slots__ = ("family", "arity", "terms")

    def __init__(self, family: BasisFamily, arity: int, terms: Mapping[Label, Fraction] | None = None):
        self.family = family
        self.arity = arity
        self.terms: dict = {}
        for label, c in (terms or {}).items():
            if family.arity(label) != arity:
                raise InvalidInput(
                    f"label {family.format_label(label)} has arity {family.arity(label)}, expected {arity}"
                )
            if c:
                add_into(self.terms, label, Fraction(c))

    @classmethod
    def basis_element(cls, family: BasisFamily, label: Label) -> "SElement":
        return cls(family, family.arity(label), {label: Fraction(1)})

    def _check(self, other: "SElement") -> None:
        if other.family is not self.family or other.arity != self.arity:
            raise InvalidInput(
                f"cannot combine {self.family.name}({self.arity}) with {other.family.name}({other.arity})"
            )

    def __add__(self, other: "SElement") -> "SElement":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            add_into(out, k, v)
        return SElement(self.family, self.arity, out)

    def __neg__(self) -> "SElement":
        return SElement(self.family, self.arity, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SElement") -> "SElement":
        return self + (-other)

    def __rmul__(self, scalar) -> "SElement":
        s = Fraction(scalar)
        return SElement(self.family, self.arity, {k: s * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SElement):
            return NotImplemented
        return self.family is other.family and self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.family.name, self.arity, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[Label, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda kv: self.family.sort_key(kv[0])))

    def __repr__(self) -> str:
        return f"<{self.family.name}({self.arity}): {format_terms(self.family, self.terms)}>"

    def __str__(self) -> str:
        return format_terms(self.family, self.terms)


def format_coeff_term(coeff: Fraction, body: str, first: bool) -> str:
    sign = "-" if coeff < 0 else "+"
    mag = abs(coeff)
    text = body if mag == 1 else f"{mag}*{body}"
    if first:
        return text if sign == "+" else f"-{text}"
    return f" {sign} {text}"


def format_terms(family: BasisFamily, terms: Mapping) -> str:
    if not terms:
        return "0"
    items = sorted(terms.items(), key=lambda kv: family.sort_key(kv[0]))
    return "".join(
        format_coeff_term(c, family.format_label(label), i == 0) for i, (label, c) in enumerate(items)
    )


def act_right(x: SElement, sigma: Permutation) -> SElement:
    """Right action of ``sigma`` on ``x``, renormalized into the canonical basis."""
    if len(sigma) != x.arity:
        raise InvalidInput(f"permutation of length {len(sigma)} acting on arity {x.arity}")
    return SElement(x.family, x.arity, linear_map(x.terms, lambda b: x.family.act(b, sigma)))


# ---------------------------------------------------------------------------
# hat tensors


class HatTensor:
    """Element of ``(M_1 ^ ... ^ M_k)(n)`` in shuffle-canonical form."""

    __slots__ = ("factors", "arity", "terms")

    def __init__(self, factors: Sequence[BasisFamily], arity: int, terms: Mapping | None = None):
        self.factors = tuple(factors)
        self.arity = arity
        self.terms: dict = {}
        for key, c in (terms or {}).items():
            if c:
                add_into(self.terms, key, Fraction(c))

    def __add__(self, other: "HatTensor") -> "HatTensor":
        if other.factors != self.factors or other.arity != self.arity:
            raise InvalidInput("hat tensors of different shapes")
        out = dict(self.terms)
        for k, v in other.terms.items():
            add_into(out, k, v)
        return HatTensor(self.factors, self.arity, out)

    def __neg__(self) -> "HatTensor":
        return HatTensor(self.factors, self.arity, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "HatTensor") -> "HatTensor":
        return self + (-other)

    def __rmul__(self, scalar) -> "HatTensor":
        s = Fraction(scalar)
        return HatTensor(self.factors, self.arity, {k: s * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, HatTensor):
            return NotImplemented
        return self.factors == other.factors and self.arity == other.arity and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _term_key(self, key):
        labels, alpha = key
        arities = [f.arity(l) for f, l in zip(self.factors, labels)]
        return ([-a for a in arities], [f.sort_key(l) for f, l in zip(self.factors, labels)], alpha)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: self._term_key(kv[0]))

    def format_term(self, key) -> str:
        labels, alpha = key
        shuffle = "[]" if alpha == perm.identity(len(alpha)) else perm.format_perm(alpha)
        parts = [f.format_label(l) for f, l in zip(self.factors, labels)]
        return "(" + "|".join(parts + [shuffle]) + ")"

    def __str__(self) -> str:
        items = self.sorted_terms()
        if not items:
            return "0"
        return "".join(format_coeff_term(c, self.format_term(k), i == 0) for i, (k, c) in enumerate(items))

    def __repr__(self) -> str:
        names = " ^ ".join(f.name for f in self.factors)
        return f"<HatTensor[{names}]({self.arity}): {self}>"


def label_arities(factors: Sequence[BasisFamily], labels: Sequence[Label]) -> tuple[int, ...]:
    return tuple(f.arity(l) for f, l in zip(factors, labels))


def canonicalize_term(
    factors: Sequence[BasisFamily], labels: Sequence[Label], pi: Permutation
) -> dict:
    """Terms of ``(x_1 (x) ... (x) x_k) . pi`` in canonical form.

    ``pi = (pi_1 x ... x pi_k) . alpha``; the factors ``pi_j`` are pushed onto the labels.
    """
    arities = label_arities(factors, labels)
    parts, alpha = perm.multi_shuffle_decompose(pi, arities)
    pieces = []
    for f, l, p in zip(factors, labels, parts):
        if p == perm.identity(len(p)):
            pieces.append({l: Fraction(1)})
        else:
            pieces.append(f.act(l, p))
    out: dict = {}
    for combo in product(*(list(p.items()) for p in pieces)):
        coeff = Fraction(1)
        for _, c in combo:
            coeff *= c
        add_into(out, (tuple(l for l, _ in combo), alpha), coeff)
    return out


def hat_canonicalize(
    factors: Sequence[BasisFamily], labels: Sequence[Label], pi: Permutation, coeff=1
) -> HatTensor:
    n = len(pi)
    terms = canonicalize_term(factors, labels, pi)
    return HatTensor(factors, n, {k: coeff * v for k, v in terms.items()})


def hat_from_pure(factors: Sequence[BasisFamily], elements: Sequence[SElement]) -> HatTensor:
    """The pure tensor ``x_1 (x) ... (x) x_k`` with identity shuffle."""
    n = sum(e.arity for e in elements)
    ident = perm.identity(n)
    out: dict = {}
    for combo in product(*(list(e.terms.items()) for e in elements)):
        coeff = Fraction(1)
        for _, c in combo:
            coeff *= c
        add_into(out, (tuple(l for l, _ in combo), ident), coeff)
    return HatTensor(factors, n, out)


def hat_act(t: HatTensor, sigma: Permutation) -> HatTensor:
    if len(sigma) != t.arity:
        raise InvalidInput(f"permutation of length {len(sigma)} acting on arity {t.arity}")
    out: dict = {}
    for (labels, alpha), c in t.terms.items():
        for key, d in canonicalize_term(t.factors, labels, perm.multiply(alpha, sigma)).items():
            add_into(out, key, c * d)
    return HatTensor(t.factors, t.arity, out)


def hat_degeneracy(t: HatTensor, i: int, degenerate: Callable[[BasisFamily, Label, int], Mapping]) -> HatTensor:
    """``d_i`` on a hat tensor: move through the shuffle, then hit the right factor.

    ``degenerate(family, label, j)`` must return ``d_j(label)`` as a term map.
    """
    if not 1 <= i <= t.arity:
        raise InvalidInput(f"degeneracy index {i} out of range 1..{t.arity}")
    out: dict = {}
    for (labels, alpha), c in t.terms.items():
        arities = label_arities(t.factors, labels)
        j = alpha[i - 1]
        b, offset = 0, 0
        while j > offset + arities[b]:
            offset += arities[b]
            b += 1
        new_alpha = perm.delta_i(alpha, i)
        for new_label, d in degenerate(t.factors[b], labels[b], j - offset).items():
            new_labels = labels[:b] + (new_label,) + labels[b + 1 :]
            for key, e in canonicalize_term(t.factors, new_labels, new_alpha).items():
                add_into(out, key, c * d * e)
    return HatTensor(t.factors, t.arity - 1, out)


def tau_swap(t: HatTensor) -> HatTensor:
    """Symmetry isomorphism ``M ^ N -> N ^ M``."""
    if len(t.factors) != 2:
        raise InvalidInput("tau_swap needs a binary hat tensor")
    left, right = t.factors
    out: dict = {}
    for ((x, y), alpha), c in t.terms.items():
        p, q = left.arity(x), right.arity(y)
        pi = perm.multiply(perm.zeta(p, q), alpha)
        for key, d in canonicalize_term((right, left), (y, x), pi).items():
            add_into(out, key, c * d)
    return HatTensor((right, left), t.arity, out)


def apply_on_factor(
    t: HatTensor, j: int, fn: Callable[[Label], HatTensor], image_factors: Sequence[BasisFamily]
) -> HatTensor:
    """Apply a map ``M_j -> A ^ B`` to factor ``j``, producing a ``k+1``-fold tensor."""
    new_factors = t.factors[:j] + tuple(image_factors) + t.factors[j + 1 :]
    out: dict = {}
    for (labels, alpha), c in t.terms.items():
        arities = label_arities(t.factors, labels)
        image = fn(labels[j])
        before = sum(arities[:j])
        after = sum(arities[j + 1 :])
        for (sub_labels, beta), d in image.terms.items():
            lifted = perm.multi_direct_sum([perm.identity(before), beta, perm.identity(after)])
            pi = perm.multiply(lifted, alpha)
            new_labels = labels[:j] + sub_labels + labels[j + 1 :]
            for key, e in canonicalize_term(new_factors, new_labels, pi).items():
                add_into(out, key, c * d * e)
    return HatTensor(new_factors, t.arity, out)


# ---------------------------------------------------------------------------
# set partitions and plethysm


def set_partitions(items: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Set partitions of ``items`` with blocks sorted internally and by minimum."""
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for sub in set_partitions(rest):
        yield ((first,),) + sub
        for b in range(len(sub)):
            merged = tuple(sorted((first,) + sub[b]))
            yield tuple(sorted(sub[:b] + (merged,) + sub[b + 1 :]))


def plethysm_basis(
    outer_basis: Callable[[int], Sequence[Label]],
    inner_basis: Callable[[int], Sequence[Label]],
    n: int,
) -> list[tuple[tuple[tuple[int, ...], ...], Label, tuple[Label, ...]]]:
    """Basis of ``(M o N)(n)`` for ``N(0) = 0``.

    Triples ``(blocks, outer label of M(k), inner labels of N(|block|))``; blocks
    are sorted by minimum and inner labels live on ``[|block|]`` via the
    increasing bijection.
    """
    if n > 0 and inner_basis(0):
        raise UnsupportedInput("plethysm needs N(0) = 0")
    out = []
    for blocks in sorted(set_partitions(range(1, n + 1)), key=lambda bs: (len(bs), bs)):
        outers = outer_basis(len(blocks))
        if not outers:
            continue
        inners = [inner_basis(len(b)) for b in blocks]
        for o in outers:
            for choice in product(*inners):
                out.append((blocks, o, tuple(choice)))
    return out
