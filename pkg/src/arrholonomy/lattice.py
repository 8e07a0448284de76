"""Intersection lattice, modularity and supersolvability.

A flat is stored as its closed set of hyperplane indices (every hyperplane
containing the flat).  Order is reverse inclusion of subspaces, which is
plain inclusion of closures: ``X <= Y`` iff ``X.closure`` is a subset of
``Y.closure``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

from .arrangements import Arrangement, Subarrangement, essential_rank, rank_of
from .errors import LatticeTooLarge, NotModularError, TruncatedLatticeError, WrongRankError
from .linalg import RowSpace

DEFAULT_MAX_FLATS = 100_000


class _AboveTruncation:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ABOVE_TRUNCATION"


ABOVE_TRUNCATION = _AboveTruncation()


@dataclass(frozen=True)
class Flat:
    closure: tuple[int, ...]
    rank: int

    def sort_key(self):
        return (self.rank, self.closure)

    def __le__(self, other: "Flat") -> bool:
        return set(self.closure) <= set(other.closure)

    def __lt__(self, other: "Flat") -> bool:
        return self != other and self <= other

    def __len__(self):
        return len(self.closure)


@dataclass(frozen=True)
class ModularChain:
    flats: tuple[Flat, ...]

    def closures(self) -> list[list[int]]:
        return [list(f.closure) for f in self.flats]


@dataclass(frozen=True)
class Exponents:
    values: tuple[int, ...]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


def _max_flats() -> int:
    try:
        return int(os.environ.get("ARR_MAX_FLATS", DEFAULT_MAX_FLATS))
    except ValueError:
        return DEFAULT_MAX_FLATS


class IntersectionLattice:
    """Flats of an arrangement up to some rank, grouped by rank."""

    def __init__(self, arrangement: Arrangement, flats_by_rank, full: bool):
        self.arrangement = arrangement
        self.flats_by_rank: tuple[tuple[Flat, ...], ...] = tuple(
            tuple(sorted(level, key=Flat.sort_key)) for level in flats_by_rank)
        self.full = full
        self._index = {f.closure: f for level in self.flats_by_rank for f in level}
        self._join_cache: dict = {}
        self._modular_cache: dict = {}

    @property
    def max_rank_computed(self) -> int:
        return len(self.flats_by_rank) - 1

    @property
    def bottom(self) -> Flat:
        return self.flats_by_rank[0][0]

    @property
    def top(self) -> Flat:
        self.require_full()
        return self.flats_by_rank[-1][0]

    def require_full(self):
        if not self.full:
            raise TruncatedLatticeError(
                f"lattice truncated at rank {self.max_rank_computed}")

    def __iter__(self) -> Iterator[Flat]:
        for level in self.flats_by_rank:
            yield from level

    def __len__(self):
        return len(self._index)

    def __contains__(self, flat):
        return isinstance(flat, Flat) and self._index.get(flat.closure) == flat

    def level(self, k: int) -> tuple[Flat, ...]:
        if 0 <= k < len(self.flats_by_rank):
            return self.flats_by_rank[k]
        return ()

    def flat(self, closure) -> Flat:
        """Look up a flat by its (closed) set of hyperplanes."""
        return self._index[tuple(sorted(closure))]

    def below(self, X: Flat) -> list[Flat]:
        """``L(A)_X``: every flat ``Y`` with ``Y <= X``."""
        s = set(X.closure)
        return [Y for Y in self if s.issuperset(Y.closure)]

    def rank_sizes(self) -> list[int]:
        return [len(level) for level in self.flats_by_rank]


def _close(A: Arrangement, members) -> tuple[tuple[int, ...], int]:
    span = RowSpace(A.forms[i] for i in members)
    members = set(members)
    closed = tuple(i for i in range(A.n) if i in members or span.contains(A.forms[i]))
    return closed, span.dim


def build_lattice(A: Arrangement, up_to_rank: int | None = None) -> IntersectionLattice:
    """Enumerate flats of rank <= ``up_to_rank`` (all of them when None)."""
    r = essential_rank(A)
    top = r if up_to_rank is None else up_to_rank
    if not 0 <= top <= r:
        raise ValueError(f"up_to_rank must lie in [0, {r}]")
    cap = _max_flats()
    levels = [[Flat((), 0)]]
    count = 1
    for k in range(top):
        found: dict[tuple[int, ...], Flat] = {}
        for X in levels[k]:
            covered = set(X.closure)
            for h in range(A.n):
                if h in covered:
                    continue
                closed, rk = _close(A, X.closure + (h,))
                covered.update(closed)
                if closed not in found:
                    found[closed] = Flat(closed, rk)
                    count += 1
                    if count > cap:
                        raise LatticeTooLarge(f"more than {cap} flats (ARR_MAX_FLATS)")
        levels.append(list(found.values()))
    return IntersectionLattice(A, levels, full=top == r)


def rank2_flats(A: Arrangement) -> list[Flat]:
    """Rank-2 flats; each closure is the set of hyperplanes through that flat."""
    if essential_rank(A) < 2:
        return []
    return list(build_lattice(A, 2).level(2))


def meet(lat: IntersectionLattice, X: Flat, Y: Flat) -> Flat:
    return lat.flat(set(X.closure) & set(Y.closure))


def join(lat: IntersectionLattice, X: Flat, Y: Flat):
    """Smallest flat above both, or ``ABOVE_TRUNCATION``."""
    key = (X.closure, Y.closure) if X.closure <= Y.closure else (Y.closure, X.closure)
    hit = lat._join_cache.get(key)
    if hit is not None:
        return hit
    union = set(X.closure) | set(Y.closure)
    if rank_of(lat.arrangement, union) > lat.max_rank_computed:
        result = ABOVE_TRUNCATION
    else:
        closed, _ = _close(lat.arrangement, sorted(union))
        result = lat._index[closed]
    lat._join_cache[key] = result
    return result


def is_modular_pair(lat: IntersectionLattice, X: Flat, Y: Flat) -> bool:
    """``Z v (X ^ Y) == (Z v X) ^ Y`` for every ``Z <= Y``, checked directly."""
    lat.require_full()
    xy = meet(lat, X, Y)
    for Z in lat.below(Y):
        if join(lat, Z, xy) != meet(lat, join(lat, Z, X), Y):
            return False
    return True


def is_modular(lat: IntersectionLattice, X: Flat) -> bool:
    lat.require_full()
    hit = lat._modular_cache.get(X.closure)
    if hit is None:
        hit = all(is_modular_pair(lat, X, Y) for Y in lat)
        lat._modular_cache[X.closure] = hit
    return hit


def modular_flats(lat: IntersectionLattice) -> list[Flat]:
    return [X for X in lat if is_modular(lat, X)]


def find_modular_chain(lat: IntersectionLattice) -> ModularChain | None:
    """First maximal chain of modular flats in lexicographic closure order."""
    lat.require_full()
    r = lat.max_rank_computed

    def extend(chain):
        last = chain[-1]
        if last.rank == r:
            return chain
        for Y in lat.level(last.rank + 1):
            if last <= Y and is_modular(lat, Y):
                found = extend(chain + [Y])
                if found:
                    return found
        return None

    chain = extend([lat.bottom])
    return ModularChain(tuple(chain)) if chain else None


def is_supersolvable(lat: IntersectionLattice) -> bool:
    return find_modular_chain(lat) is not None


def exponents_from_chain(lat: IntersectionLattice, chain: ModularChain) -> Exponents:
    sizes = [len(f.closure) for f in chain.flats]
    return Exponents(tuple(b - a for a, b in zip(sizes, sizes[1:])))


def split_by_modular_flat(A: Arrangement, lat: IntersectionLattice, X: Flat):
    """Vertical hyperplanes (those containing ``X``) and the horizontal rest."""
    lat.require_full()
    if X.rank != lat.max_rank_computed - 1:
        raise WrongRankError(f"flat has rank {X.rank}, need {lat.max_rank_computed - 1}")
    if not is_modular(lat, X):
        raise NotModularError(f"flat {X.closure} is not modular")
    vertical = Subarrangement(A, X.closure)
    return vertical, Subarrangement(A, vertical.complement())
