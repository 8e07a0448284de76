"""Closed, complete and solvable subarrangements; composition series; the
vertical deformation of a hypersolvable arrangement to a supersolvable one."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .arrangements import Arrangement, Hyperplane, Subarrangement, essential_rank, rank_of
from .errors import ConsistencyError, DeformationFailed, NotProperError, SizeMismatch
from .lattice import build_lattice, exponents_from_chain, find_modular_chain, rank2_flats
from .linalg import RowSpace, clear_denominators, nullspace

SINGULAR = "SINGULAR"
NONSINGULAR = "NONSINGULAR"

MAX_OFFSET = 64
MAX_RETRIES = 32


@lru_cache(maxsize=256)
def _pair_closures(A: Arrangement) -> dict[tuple[int, int], frozenset[int]]:
    """For each pair ``a < b``: all hyperplanes through ``a`` and ``b``'s intersection."""
    out = {}
    for L in rank2_flats(A):
        members = frozenset(L.closure)
        for a, b in itertools.combinations(L.closure, 2):
            out[(a, b)] = members
    return out


def _through(A, a, b) -> frozenset[int]:
    return _pair_closures(A)[(a, b) if a < b else (b, a)]


def _closed(A, B: frozenset, T: frozenset) -> bool:
    outside = T - B
    for a, b in itertools.combinations(sorted(B), 2):
        if _through(A, a, b) & outside:
            return False
    return True


def _partners(A, B: frozenset, T: frozenset, check_unique: bool):
    """``{(a, b): gamma}`` or None if some pair outside ``B`` has no partner."""
    f = {}
    for a, b in itertools.combinations(sorted(T - B), 2):
        gammas = sorted(_through(A, a, b) & B)
        if not gammas:
            return None
        if check_unique and len(gammas) > 1:
            raise ConsistencyError(
                f"closed and complete but pair ({a}, {b}) has partners {gammas}")
        f[(a, b)] = gammas[0]
    return f


def _solvable(A, B: frozenset, T: frozenset) -> bool:
    if not _closed(A, B, T):
        return False
    f = _partners(A, B, T, check_unique=True)
    if f is None:
        return False
    if rank_of(A, T) - rank_of(A, B) > 1:
        raise ConsistencyError(f"closed and complete pair with rank jump > 1: {sorted(B)} in {sorted(T)}")
    for a, b, c in itertools.combinations(sorted(T - B), 3):
        gs = {f[(a, b)], f[(b, c)], f[(a, c)]}
        if len(gs) > 1 and rank_of(A, gs) != 2:
            return False
    return True


def _proper(A: Arrangement, B: Subarrangement) -> frozenset:
    if B.parent != A:
        raise ValueError("subarrangement belongs to a different arrangement")
    if not B.is_proper:
        raise NotProperError("subarrangement must be proper")
    return frozenset(B.members)


def is_closed(A: Arrangement, B: Subarrangement) -> bool:
    """No hyperplane outside ``B`` passes through the meeting locus of two in ``B``."""
    return _closed(A, _proper(A, B), frozenset(range(A.n)))


@dataclass(frozen=True)
class PartnerMap:
    pairs: dict = field(default_factory=dict)

    def __call__(self, a: int, b: int) -> int:
        return self.pairs[(a, b) if a < b else (b, a)]

    def __len__(self):
        return len(self.pairs)


def is_complete(A: Arrangement, B: Subarrangement) -> tuple[bool, PartnerMap | None]:
    Bs = _proper(A, B)
    T = frozenset(range(A.n))
    f = _partners(A, Bs, T, check_unique=_closed(A, Bs, T))
    if f is None:
        return False, None
    return True, PartnerMap(f)


def is_solvable(A: Arrangement, B: Subarrangement) -> bool:
    return _solvable(A, _proper(A, B), frozenset(range(A.n)))


@dataclass(frozen=True)
class CompositionSeries:
    arrangement: Arrangement
    steps: tuple[tuple[int, ...], ...]
    extension_kinds: tuple[str, ...]
    exponents: tuple[int, ...]

    @property
    def ell(self) -> int:
        return len(self.steps)

    @property
    def s(self) -> int:
        return sum(k == SINGULAR for k in self.extension_kinds)

    def entry_step(self) -> list[int]:
        """1-based step at which each hyperplane joins the series."""
        out = [0] * self.arrangement.n
        prev: set = set()
        for k, step in enumerate(self.steps, 1):
            for h in set(step) - prev:
                out[h] = k
            prev = set(step)
        return out

    def to_dict(self) -> dict:
        return {"hypersolvable": True, "series": [list(s) for s in self.steps],
                "extension_kinds": list(self.extension_kinds),
                "exponents": list(self.exponents), "ell": self.ell,
                "s": self.ell - essential_rank(self.arrangement)}


def series_from_steps(A: Arrangement, steps: Sequence[Iterable[int]]) -> CompositionSeries:
    steps = tuple(tuple(sorted(s)) for s in steps)
    kinds = tuple(NONSINGULAR if rank_of(A, b) == rank_of(A, a) + 1 else SINGULAR
                  for a, b in zip(steps, steps[1:]))
    sizes = [0] + [len(s) for s in steps]
    return CompositionSeries(A, steps, kinds, tuple(b - a for a, b in zip(sizes, sizes[1:])))


def find_composition_series(A: Arrangement) -> CompositionSeries | None:
    """Depth-first search; smaller extensions first, then lexicographic."""
    full = frozenset(range(A.n))
    dead: set[frozenset] = set()

    def search(S: frozenset):
        if S == full:
            return [S]
        if S in dead:
            return None
        rest = full - S
        blocked = set()
        for a, b in itertools.combinations(sorted(S), 2):
            blocked |= _through(A, a, b)
        allowed = sorted(rest - blocked)
        for k in range(1, len(allowed) + 1):
            for D in itertools.combinations(allowed, k):
                T = S | frozenset(D)
                if _solvable(A, S, T):
                    tail = search(T)
                    if tail is not None:
                        return [S] + tail
        dead.add(S)
        return None

    if A.n == 0:
        return None
    for h in range(A.n):
        chain = search(frozenset([h]))
        if chain is not None:
            return series_from_steps(A, chain)
    return None


def hypersolvable_invariants(series: CompositionSeries) -> tuple[int, int]:
    """``(ell, s)``: series length and its excess over the rank."""
    return series.ell, series.ell - essential_rank(series.arrangement)


# -- vertical deformation ---------------------------------------------------

@dataclass(frozen=True)
class DeformedArrangement:
    base: Arrangement
    original_dim: int
    offsets: tuple[tuple[int, ...], ...]
    seed: int | None
    attempts: int = 1

    @property
    def s(self) -> int:
        return self.base.dim - self.original_dim

    def sidecar(self) -> dict:
        return {"seed": self.seed, "offsets": [list(v) for v in self.offsets]}


def deform_with_offsets(A: Arrangement, offsets: Sequence[Sequence[int]], t=1,
                        seed=None) -> DeformedArrangement:
    """Forms ``(alpha_H, t * v_H)`` in ``V x C^s``."""
    if len(offsets) != A.n:
        raise SizeMismatch("need one offset vector per hyperplane")
    s = len(offsets[0]) if offsets else 0
    forms = [tuple(h.coeffs) + tuple(Fraction(t) * x for x in v)
             for h, v in zip(A.hyperplanes, offsets)]
    base = Arrangement(A.dim + s, tuple(Hyperplane(f) for f in forms))
    return DeformedArrangement(base, A.dim, tuple(tuple(v) for v in offsets), seed)


def _rank2_family(A: Arrangement) -> set[tuple[int, ...]]:
    return {L.closure for L in rank2_flats(A)}


def verify_rank2_preserved(A: Arrangement, D) -> bool:
    other = D.base if isinstance(D, DeformedArrangement) else D
    if other.n != A.n:
        raise SizeMismatch(f"{A.n} hyperplanes vs {other.n}")
    return _rank2_family(A) == _rank2_family(other)


def _dependencies(A: Arrangement):
    """Each hyperplane on a rank-2 flat as a combination of the flat's first two."""
    out = []
    for L in rank2_flats(A):
        a, b = L.closure[:2]
        fa, fb = A.forms[a], A.forms[b]
        for c in L.closure[2:]:
            # solve lam * fa + mu * fb = fc over the columns
            basis = nullspace([[fa[i], fb[i], -A.forms[c][i]] for i in range(A.dim)], 3)
            (x,) = basis
            out.append((c, a, b, x[0] / x[2], x[1] / x[2]))
    return out


def _offset_space(A: Arrangement, series: CompositionSeries):
    """Per extra coordinate: integer basis of admissible offset columns."""
    entry = series.entry_step()
    singular_steps = [k + 2 for k, kind in enumerate(series.extension_kinds) if kind == SINGULAR]
    deps = _dependencies(A)
    spaces = []
    for step in singular_steps:
        free = [h for h in range(A.n) if entry[h] >= step]
        col = {h: i for i, h in enumerate(free)}
        rows = []
        for c, a, b, lam, mu in deps:
            row = [Fraction(0)] * len(free)
            for h, coef in ((c, 1), (a, -lam), (b, -mu)):
                if h in col:
                    row[col[h]] += coef
            if any(row):
                rows.append(row)
        basis = nullspace(rows, len(free)) if rows else [
            [Fraction(int(i == j)) for i in range(len(free))] for j in range(len(free))]
        spaces.append((free, [clear_denominators(v) for v in basis]))
    return spaces


def _check_deformation(A, series, D) -> str | None:
    if not verify_rank2_preserved(A, D):
        return "rank2_preserved"
    lat = build_lattice(D.base)
    if lat.max_rank_computed != series.ell:
        return "rank"
    if find_modular_chain(lat) is None:
        return "supersolvable"
    return None


def vertical_deformation(A: Arrangement, series: CompositionSeries, seed: int = 0,
                         max_retries: int = MAX_RETRIES) -> DeformedArrangement:
    """Seeded random offsets satisfying the rank-2 linear constraints, then
    verified (rank-2 lattice kept, supersolvable of rank ``ell``)."""
    ell, s = hypersolvable_invariants(series)
    if s <= 0:
        return deform_with_offsets(A, [()] * A.n, seed=seed)
    rng = random.Random(seed)
    spaces = _offset_space(A, series)
    failure = None
    for attempt in range(1, max_retries + 1):
        offsets = [[0] * s for _ in range(A.n)]
        for j, (free, basis) in enumerate(spaces):
            for vec in basis:
                c = rng.randrange(MAX_OFFSET)
                for h, x in zip(free, vec):
                    offsets[h][j] += c * x
        try:
            D = deform_with_offsets(A, offsets, seed=seed)
        except ValueError:
            failure = "distinct"
            continue
        failure = _check_deformation(A, series, D)
        if failure is None:
            return DeformedArrangement(D.base, D.original_dim, D.offsets, seed, attempt)
    raise DeformationFailed(f"no valid deformation after {max_retries} draws "
                            f"(last failing check: {failure})", failure)


def deformed_exponents(D: DeformedArrangement) -> tuple[int, ...]:
    lat = build_lattice(D.base)
    chain = find_modular_chain(lat)
    return tuple(exponents_from_chain(lat, chain)) if chain else ()
