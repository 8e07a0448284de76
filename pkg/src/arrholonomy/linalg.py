"""Exact linear algebra over the rationals.

Vectors are sparse mappings ``column -> value``.  Everything is kept as
primitive integer rows internally (fraction-free elimination with content
removal), so no Fraction arithmetic happens in the inner loop.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


def as_sparse(vec) -> dict[int, Fraction]:
    """Accept a dense sequence or a sparse mapping, drop zeros."""
    if isinstance(vec, Mapping):
        items = vec.items()
    else:
        items = enumerate(vec)
    return {int(c): Fraction(v) for c, v in items if v}


def _integral(vec: Mapping[int, Fraction | int]) -> dict[int, int]:
    denom = 1
    for v in vec.values():
        if isinstance(v, Fraction):
            denom = math.lcm(denom, v.denominator)
    if denom == 1:
        row = {c: int(v) for c, v in vec.items() if v}
    else:
        row = {c: int(v * denom) for c, v in vec.items() if v}
    return _primitive(row)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    if not row:
        return row
    g = math.gcd(*row.values())
    if row[min(row)] < 0:
        g = -g
    if g != 1:
        row = {c: v // g for c, v in row.items()}
    return row


class RowSpace:
    """Incrementally echelonized span of sparse rational vectors.

    Every stored row has a distinct leading column and all its other entries
    sit to the right of that column (semi-echelon form).  That is enough for
    exact rank and membership; ``rref`` gives the canonical representative.
    """

    def __init__(self, rows: Iterable = ()):
        self._pivots: dict[int, dict[int, int]] = {}
        for r in rows:
            self.add(r)

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def __len__(self):
        return len(self._pivots)

    def pivot_columns(self) -> list[int]:
        return sorted(self._pivots)

    def rows(self) -> list[dict[int, int]]:
        """Stored basis rows (primitive integer vectors), by leading column."""
        return [dict(self._pivots[c]) for c in sorted(self._pivots)]

    def _reduce(self, row: dict[int, int]) -> dict[int, int]:
        pivots = self._pivots
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                return row
            a = p[c]
            b = row[c]
            g = math.gcd(a, b)
            a //= g
            b //= g
            out = {k: a * v for k, v in row.items()} if a != 1 else dict(row)
            for k, v in p.items():
                nv = out.get(k, 0) - b * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            row = _primitive(out)
        return row

    def add(self, vec) -> bool:
        """Insert a vector; return True when it enlarged the span."""
        row = self._reduce(_integral(as_sparse(vec)))
        if not row:
            return False
        self._pivots[min(row)] = row
        return True

    def contains(self, vec) -> bool:
        return not self._reduce(_integral(as_sparse(vec)))

    def contains_space(self, other: "RowSpace") -> bool:
        return all(not self._reduce(dict(r)) for r in other._pivots.values())

    def copy(self) -> "RowSpace":
        new = RowSpace()
        new._pivots = dict(self._pivots)
        return new

    def sum(self, other: "RowSpace") -> "RowSpace":
        new = self.copy()
        for r in other._pivots.values():
            row = new._reduce(dict(r))
            if row:
                new._pivots[min(row)] = row
        return new

    def intersection_dim(self, other: "RowSpace") -> int:
        return self.dim + other.dim - self.sum(other).dim

    def __eq__(self, other):
        if not isinstance(other, RowSpace):
            return NotImplemented
        return self.dim == other.dim and self.contains_space(other)

    def rref(self) -> tuple[tuple[tuple[int, Fraction], ...], ...]:
        """Reduced row echelon form: unit pivots, zeros above and below."""
        done: dict[int, dict[int, Fraction]] = {}
        for c in sorted(self._pivots, reverse=True):
            p = self._pivots[c]
            lead = p[c]
            row = {k: Fraction(v, lead) for k, v in p.items()}
            for k in [k for k in row if k != c and k in done]:
                f = row[k]
                for kk, vv in done[k].items():
                    nv = row.get(kk, 0) - f * vv
                    if nv:
                        row[kk] = nv
                    else:
                        row.pop(kk, None)
            done[c] = row
        return tuple(tuple(sorted(done[c].items())) for c in sorted(done))

    def restrict(self, columns: Mapping[int, int]) -> "RowSpace":
        """Image under the coordinate projection ``col -> columns[col]``.

        Columns missing from ``columns`` are dropped (mapped to zero).
        """
        out = RowSpace()
        for r in self._pivots.values():
            out.add({columns[c]: v for c, v in r.items() if c in columns})
        return out


def rank(rows: Iterable) -> int:
    return RowSpace(rows).dim


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : M x = 0}`` for a dense rational matrix ``M``."""
    rref = RowSpace(rows).rref()
    pivot_cols = []
    pivot_rows = []
    for r in rref:
        pivot_cols.append(r[0][0])
        pivot_rows.append(dict(r))
    free = [c for c in range(ncols) if c not in set(pivot_cols)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for pc, pr in zip(pivot_cols, pivot_rows):
            x[pc] = -pr.get(f, Fraction(0))
        basis.append(x)
    return basis


def clear_denominators(vec: Sequence[Fraction]) -> list[int]:
    """Smallest positive multiple of ``vec`` with integer entries, made primitive."""
    row = _integral(as_sparse(vec))
    return [row.get(i, 0) for i in range(len(vec))]
