"""Exact rational linear algebra: rank, null spaces and solves over Q.

Scalars are :class:`fractions.Fraction`.  Elimination runs on ``gmpy2.mpq``
(when importable) for speed and converts back on the way out, so callers only
ever see ``Fraction``.  Rows are kept sparse because every matrix assembled by
the Hopf layer has a handful of nonzeros per row.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

try:
    from gmpy2 import mpq as _field
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _field = Fraction

Rational = Fraction


class DimensionError(ValueError):
    """Incompatible matrix/vector shapes."""


class NoSolution(Exception):
    """Raised by :func:`solve` when ``A x = b`` is inconsistent."""


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(int(x.numerator), int(x.denominator))


class RationalMatrix:
    """A ``rows x cols`` matrix over Q with sparse row storage.

    ``entries[r]`` maps column index to a nonzero ``Fraction``.
    """

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows: int, ncols: int, entries: Sequence[Mapping[int, Fraction]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        if entries is None:
            self.entries = [dict() for _ in range(nrows)]
        else:
            if len(entries) != nrows:
                raise DimensionError(f"expected {nrows} rows, got {len(entries)}")
            self.entries = []
            for row in entries:
                clean = {}
                for c, v in row.items():
                    if not 0 <= c < ncols:
                        raise DimensionError(f"column {c} out of range 0..{ncols - 1}")
                    if v:
                        clean[c] = Fraction(v)
                self.entries.append(clean)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(nrows, ncols, [{c: v for c, v in enumerate(r) if v} for r in rows])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [{i: Fraction(1)} for i in range(n)])

    def to_dense(self) -> list[list[Fraction]]:
        zero = Fraction(0)
        return [[row.get(c, zero) for c in range(self.ncols)] for row in self.entries]

    def transpose(self) -> "RationalMatrix":
        cols: list[dict[int, Fraction]] = [dict() for _ in range(self.ncols)]
        for r, row in enumerate(self.entries):
            for c, v in row.items():
                cols[c][r] = v
        return RationalMatrix(self.ncols, self.nrows, cols)

    def apply(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.ncols:
            raise DimensionError(f"vector of length {len(vec)} for {self.ncols} columns")
        return [sum((v * vec[c] for c, v in row.items()), Fraction(0)) for row in self.entries]

    def __repr__(self) -> str:
        return f"RationalMatrix({self.nrows}x{self.ncols})"


def _rref(rows: Iterable[Mapping[int, object]]) -> dict[int, dict[int, object]]:
    """Reduced row echelon form as ``{pivot column: row}``.

    Rows are inserted one at a time against a fully reduced pivot set, so the
    result is the unique RREF of the row space regardless of input order.
    """
    pivots: dict[int, dict[int, object]] = {}
    for raw in rows:
        row = {c: _field(v) for c, v in raw.items() if v}
        hits = [c for c in row if c in pivots]
        for c in hits:
            f = row.get(c)
            if not f:
                continue
            for cc, vv in pivots[c].items():
                nv = row.get(cc, 0) - f * vv
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        if not row:
            continue
        p = min(row)
        lead = row[p]
        row = {c: v / lead for c, v in row.items()}
        for prow in pivots.values():
            f = prow.get(p)
            if not f:
                continue
            for cc, vv in row.items():
                nv = prow.get(cc, 0) - f * vv
                if nv:
                    prow[cc] = nv
                else:
                    prow.pop(cc, None)
        pivots[p] = row
    return pivots


def rref(A: RationalMatrix) -> dict[int, dict[int, Fraction]]:
    return {
        p: {c: _to_fraction(v) for c, v in row.items()}
        for p, row in sorted(_rref(A.entries).items())
    }


def rank(A: RationalMatrix) -> int:
    return len(_rref(A.entries))


def kernel_basis(A: RationalMatrix) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}``.

    One vector per free column of the RREF (ascending), each scaled so that
    its first nonzero entry is 1.
    """
    pivots = _rref(A.entries)
    free = [c for c in range(A.ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * A.ncols
        vec[f] = Fraction(1)
        for p, row in pivots.items():
            v = row.get(f)
            if v:
                vec[p] = -_to_fraction(v)
        lead = next(x for x in vec if x)
        basis.append([x / lead for x in vec])
    return basis


def solve(A: RationalMatrix, b: Sequence) -> list[Fraction]:
    """One solution of ``A x = b``; raises :class:`NoSolution` if inconsistent.

    Free variables are set to zero.
    """
    if len(b) != A.nrows:
        raise DimensionError(f"right-hand side has length {len(b)}, matrix has {A.nrows} rows")
    n = A.ncols
    augmented = []
    for row, rhs in zip(A.entries, b):
        r = dict(row)
        if rhs:
            r[n] = Fraction(rhs)
        augmented.append(r)
    pivots = _rref(augmented)
    if n in pivots:
        raise NoSolution("inconsistent system")
    x = [Fraction(0)] * n
    for p, row in pivots.items():
        x[p] = _to_fraction(row.get(n, 0))
    return x


def row_space_rank(vectors: Sequence[Mapping[object, Fraction]]) -> int:
    """Rank of a family of sparse vectors keyed by arbitrary hashable coordinates."""
    index: dict[object, int] = {}
    rows = []
    for vec in vectors:
        rows.append({index.setdefault(k, len(index)): v for k, v in vec.items() if v})
    return len(_rref(rows))
