"""Central hyperplane arrangements over the rationals."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ParseError
from .linalg import RowSpace

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def _rational(token: str) -> Fraction:
    if not _RATIONAL.match(token):
        raise ParseError(f"malformed rational {token!r}")
    if token.partition("/")[2] and int(token.partition("/")[2]) == 0:
        raise ParseError(f"zero denominator in {token!r}")
    return Fraction(token)


@dataclass(frozen=True)
class Hyperplane:
    """Kernel of a linear form; ``coeffs`` is the form itself."""

    coeffs: tuple[Fraction, ...]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if not any(coeffs):
            raise ValueError("zero linear form does not define a hyperplane")
        object.__setattr__(self, "coeffs", coeffs)

    def canonical(self) -> "Hyperplane":
        """Rescale so the first nonzero coefficient is 1."""
        lead = next(c for c in self.coeffs if c)
        return Hyperplane(tuple(c / lead for c in self.coeffs), self.label)

    def key(self) -> tuple[Fraction, ...]:
        return self.canonical().coeffs

    def __len__(self):
        return len(self.coeffs)


@dataclass(frozen=True)
class Arrangement:
    dim: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ambient dimension must be positive")
        hs = tuple(h if isinstance(h, Hyperplane) else Hyperplane(tuple(h)) for h in self.hyperplanes)
        seen = {}
        for i, h in enumerate(hs):
            if len(h) != self.dim:
                raise ValueError(f"hyperplane {i} has {len(h)} coefficients, expected {self.dim}")
            k = h.key()
            if k in seen:
                raise ValueError(f"hyperplanes {seen[k]} and {i} coincide")
            seen[k] = i
        object.__setattr__(self, "hyperplanes", hs)

    @classmethod
    def from_forms(cls, dim: int, forms: Iterable[Sequence]) -> "Arrangement":
        return cls(dim, tuple(Hyperplane(tuple(f)) for f in forms))

    @property
    def n(self) -> int:
        return len(self.hyperplanes)

    @property
    def forms(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(h.coeffs for h in self.hyperplanes)

    def __len__(self):
        return self.n

    def restrict(self, members: Iterable[int]) -> "Arrangement":
        """The subarrangement on ``members`` as a standalone arrangement (order kept)."""
        return Arrangement(self.dim, tuple(self.hyperplanes[i] for i in sorted(members)))

    def permuted(self, perm: Sequence[int]) -> "Arrangement":
        """Hyperplane ``i`` of the result is hyperplane ``perm[i]`` of self."""
        return Arrangement(self.dim, tuple(self.hyperplanes[p] for p in perm))

    def rescaled(self, factors: Sequence) -> "Arrangement":
        return Arrangement(
            self.dim,
            tuple(Hyperplane(tuple(Fraction(f) * c for c in h.coeffs), h.label)
                  for f, h in zip(factors, self.hyperplanes)),
        )

    def to_text(self) -> str:
        lines = [f"dim {self.dim}"]
        for h in self.hyperplanes:
            lines.append(" ".join(str(c) for c in h.coeffs))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Subarrangement:
    parent: Arrangement
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        if members and (members[0] < 0 or members[-1] >= self.parent.n):
            raise ValueError("subarrangement member out of range")
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, i):
        return i in self.members

    @property
    def is_proper(self) -> bool:
        return len(self.members) < self.parent.n

    def complement(self) -> tuple[int, ...]:
        s = set(self.members)
        return tuple(i for i in range(self.parent.n) if i not in s)

    def as_arrangement(self) -> Arrangement:
        return self.parent.restrict(self.members)


def parse_arrangement(text: str) -> Arrangement:
    """Read the ``dim <l>`` + one-form-per-line text format."""
    dim = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if dim is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "dim" or not parts[1].isdigit() or int(parts[1]) < 1:
                raise ParseError(f"line {lineno}: expected header 'dim <l>'")
            dim = int(parts[1])
            continue
        tokens = line.split()
        if len(tokens) != dim:
            raise ParseError(f"line {lineno}: expected {dim} entries, got {len(tokens)}")
        try:
            rows.append(tuple(_rational(t) for t in tokens))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if dim is None:
        raise ParseError("missing 'dim <l>' header")
    try:
        return Arrangement.from_forms(dim, rows)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def read_arrangement(path) -> Arrangement:
    with open(path, encoding="utf-8") as fh:
        return parse_arrangement(fh.read())


@lru_cache(maxsize=1 << 16)
def _rank(forms: tuple, members: frozenset) -> int:
    return RowSpace(forms[i] for i in members).dim


def rank_of(A: Arrangement, S: Iterable[int]) -> int:
    """Codimension of the intersection of the hyperplanes indexed by ``S``."""
    S = frozenset(S)
    if not S:
        return 0
    return _rank(A.forms, S)


def essential_rank(A: Arrangement) -> int:
    return rank_of(A, range(A.n))


def closure(A: Arrangement, S: Iterable[int]) -> frozenset[int]:
    """All hyperplanes containing the intersection of ``S``."""
    S = frozenset(S)
    span = RowSpace(A.forms[i] for i in S)
    return frozenset(i for i in range(A.n) if i in S or span.contains(A.forms[i]))
