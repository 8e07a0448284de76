"""Holonomy Lie algebra: free Lie algebra on the hyperplanes modulo the ideal
generated by ``[H, sum(L)]`` over rank-2 flats ``L`` and ``H`` through ``L``.

Everything is computed degree by degree in Lyndon coordinates.  The ideal
is generated in degree 2 and the hyperplanes generate the free Lie algebra,
so ``I_n`` is spanned by ``[x_H, u]`` with ``u`` running over a basis of
``I_{n-1}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .arrangements import Arrangement, Subarrangement, closure, essential_rank
from .errors import NotClosedError, PreconditionError
from .freelie import HallBasis, LieElement, exponent_polynomial, lcs_product, witt_dimension
from .lattice import IntersectionLattice, build_lattice, is_modular, rank2_flats
from .linalg import RowSpace


@dataclass
class HolonomyIdealBasis:
    arrangement: Arrangement
    max_degree: int
    basis: HallBasis
    generators: list[LieElement]
    spaces: dict[int, RowSpace]

    def space(self, n: int) -> RowSpace:
        return self.spaces.get(n, RowSpace())

    def dim(self, n: int) -> int:
        return self.space(n).dim

    def dims(self) -> list[int]:
        return [self.dim(n) for n in range(1, self.max_degree + 1)]

    def rref(self, n: int):
        return self.space(n).rref()


@dataclass
class Verdict:
    name: str
    passed: bool
    first_failure: int | None = None
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"pass": self.passed, "first_failure": self.first_failure}
        out.update(self.detail)
        return out


@dataclass
class GradedQuotientReport:
    n: int
    N: int
    phi: list[int]
    ideal_dims: list[int]
    decomposition: Verdict | None = None
    lcs: Verdict | None = None

    def to_dict(self) -> dict:
        return {"n": self.n, "N": self.N, "phi": self.phi, "ideal_dims": self.ideal_dims}


def ideal_generators(A: Arrangement, basis: HallBasis | None = None) -> list[LieElement]:
    """Normal forms of ``[H, sum(L)]`` for every rank-2 flat ``L`` and ``H`` in ``L``."""
    if basis is None:
        basis = HallBasis(A.n, 2)
    gens = []
    for L in rank2_flats(A):
        for h in L.closure:
            coords = {}
            for k in L.closure:
                if k == h:
                    continue
                w = (h, k) if h < k else (k, h)
                coords[basis.index(w)] = coords.get(basis.index(w), 0) + (1 if h < k else -1)
            gens.append(LieElement(2, coords))
    return gens


def _bracket_rows(basis: HallBasis, space: RowSpace, degree: int) -> Iterable[dict]:
    table = basis.generator_brackets(degree)
    for row in space.rows():
        for g in range(basis.n_generators):
            out: dict[int, int] = {}
            tg = table[g]
            for w, c in row.items():
                for k, v in tg[w].items():
                    nv = out.get(k, 0) + c * v
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
            if out:
                yield out


def graded_ideal(A: Arrangement, N: int, basis: HallBasis | None = None) -> HolonomyIdealBasis:
    if N < 1:
        raise ValueError("N must be >= 1")
    if basis is None or basis.max_degree < N:
        basis = HallBasis(A.n, max(N, 2))
    gens = ideal_generators(A, basis)
    spaces: dict[int, RowSpace] = {}
    if N >= 2:
        spaces[2] = RowSpace(g.coords for g in gens)
    for n in range(3, N + 1):
        spaces[n] = RowSpace(_bracket_rows(basis, spaces[n - 1], n - 1))
    return HolonomyIdealBasis(A, N, basis, gens, spaces)


def phi_series(A: Arrangement, N: int, ideal: HolonomyIdealBasis | None = None) -> GradedQuotientReport:
    """``phi_n = dim L(A)_n - dim I(A)_n`` for ``n <= N``."""
    if ideal is None:
        ideal = graded_ideal(A, N)
    dims = ideal.dims()[:N]
    phi = [witt_dimension(A.n, n) - dims[n - 1] for n in range(1, N + 1)]
    return GradedQuotientReport(A.n, N, phi, dims)


def witt_sums(exponents: Sequence[int], N: int) -> list[int]:
    return [sum(witt_dimension(d, j) for d in exponents) for j in range(1, N + 1)]


def check_decomposition(A: Arrangement, exponents: Sequence[int], N: int,
                        report: GradedQuotientReport | None = None) -> Verdict:
    """Does ``phi_j`` equal the sum of free Lie algebra dimensions of the exponents?"""
    if report is None:
        report = phi_series(A, N)
    expected = witt_sums(list(exponents), N)
    first = next((j for j in range(1, N + 1) if report.phi[j - 1] != expected[j - 1]), None)
    return Verdict("decomposition", first is None, first,
                   {"phi": report.phi[:N], "witt_sums": expected, "exponents": list(exponents)})


def check_lcs_formula(A: Arrangement, exponents: Sequence[int], N: int,
                      report: GradedQuotientReport | None = None) -> Verdict:
    if report is None:
        report = phi_series(A, N)
    lhs = lcs_product(report.phi[:N], N).to_list()
    rhs = exponent_polynomial(list(exponents), N).to_list()
    first = next((j for j in range(N + 1) if lhs[j] != rhs[j]), None)
    return Verdict("lcs", first is None, first, {"lhs": lhs, "rhs": rhs})


# -- closed subarrangements -------------------------------------------------

def _word_map(big: HallBasis, small: HallBasis, members: Sequence[int], n: int) -> dict[int, int]:
    """Column map from big-basis words over ``members`` to the small basis."""
    local = {h: k for k, h in enumerate(members)}
    out = {}
    for i, w in enumerate(big.words(n)):
        if all(x in local for x in w):
            out[i] = small.index(tuple(local[x] for x in w))
    return out


def intersect_coordinates(space: RowSpace, keep: Iterable[int]) -> RowSpace:
    """``space`` intersected with the coordinate subspace on columns ``keep``.

    Columns outside ``keep`` are moved in front so that elimination clears
    them first; rows whose leading column survives are supported on ``keep``.
    """
    keep = sorted(set(keep))
    keep_set = set(keep)
    others = sorted({c for r in space.rows() for c in r} - keep_set)
    order = {c: i for i, c in enumerate(others)}
    base = len(others)
    order.update({c: base + i for i, c in enumerate(keep)})
    back = {v: k for k, v in order.items()}
    relabeled = RowSpace({order[c]: v for c, v in r.items()} for r in space.rows())
    return RowSpace({back[c]: v for c, v in r.items()}
                    for r in relabeled.rows() if min(r) >= base)


def _require_closed(A: Arrangement, B: Subarrangement):
    from .hypersolvable import is_closed
    if not is_closed(A, B):
        raise NotClosedError(f"{list(B.members)} is not closed")


@dataclass
class RestrictionReport:
    passed: bool
    projection_ok: list[bool]
    intersection_ok: list[bool]
    ideal_dims_A: list[int]
    ideal_dims_B: list[int]

    def to_dict(self):
        return {"pass": self.passed, "projection_ok": self.projection_ok,
                "intersection_ok": self.intersection_ok,
                "ideal_dims_A": self.ideal_dims_A, "ideal_dims_B": self.ideal_dims_B}


def restrict_check_closed(A: Arrangement, B: Subarrangement, N: int,
                          ideal_A: HolonomyIdealBasis | None = None) -> RestrictionReport:
    """Killing the hyperplanes outside ``B`` maps ``I(A)`` onto ``I(B)``, and
    ``I(A)`` meets the free Lie algebra on ``B`` exactly in ``I(B)``."""
    _require_closed(A, B)
    if ideal_A is None or ideal_A.max_degree < N:
        ideal_A = graded_ideal(A, N)
    ideal_B = graded_ideal(B.as_arrangement(), N)
    proj, inter = [], []
    for n in range(2, N + 1):
        cols = _word_map(ideal_A.basis, ideal_B.basis, B.members, n)
        IA, IB = ideal_A.space(n), ideal_B.space(n)
        proj.append(IA.restrict(cols) == IB)
        inter.append(intersect_coordinates(IA, cols).restrict(cols) == IB)
    return RestrictionReport(all(proj) and all(inter), proj, inter,
                             ideal_A.dims()[:N], ideal_B.dims()[:N])


@dataclass
class KernelReport:
    horizontal: list[int]
    phi_A: list[int]
    phi_B: list[int]
    kernel_dims: list[int]
    quotient_dims: list[int]
    free_dims: list[int]
    bracket_ok: list[bool]

    @property
    def dims_match(self) -> bool:
        return self.kernel_dims == self.quotient_dims

    @property
    def free(self) -> bool:
        return self.kernel_dims == self.free_dims

    @property
    def almost_direct(self) -> bool:
        return all(self.bracket_ok)

    @property
    def passed(self) -> bool:
        return self.dims_match and self.almost_direct

    def to_dict(self):
        return {"horizontal": self.horizontal, "phi_A": self.phi_A, "phi_B": self.phi_B,
                "kernel_dims": self.kernel_dims, "quotient_dims": self.quotient_dims,
                "free_dims": self.free_dims, "bracket_ok": self.bracket_ok,
                "dims_match": self.dims_match, "free": self.free,
                "almost_direct": self.almost_direct, "pass": self.passed}


def kernel_report(A: Arrangement, B: Subarrangement, N: int,
                  ideal_A: HolonomyIdealBasis | None = None) -> KernelReport:
    """Kernel of ``h(A) -> h(B)`` for closed ``B``.

    Checks that its graded dimension matches the subalgebra generated by the
    hyperplanes outside ``B`` and that bracketing it with ``B`` lands in its
    own derived part modulo ``I(A)``.  Only brackets with the generators of
    ``B`` are tested: the kernel is an ideal, so Jacobi propagates the
    containment to all of ``h(B)``.
    """
    _require_closed(A, B)
    if ideal_A is None or ideal_A.max_degree < N:
        ideal_A = graded_ideal(A, N)
    basis = ideal_A.basis
    rest = B.complement()
    phi_A = phi_series(A, N, ideal_A).phi
    phi_B = phi_series(B.as_arrangement(), N).phi
    kernel = [a - b for a, b in zip(phi_A, phi_B)]
    quotient, bracket_ok = [], []
    for n in range(1, N + 1):
        words = basis.words_over(rest, n)
        K = RowSpace({w: 1} for w in words)
        quotient.append(len(words) - ideal_A.space(n).intersection_dim(K))
        if n >= 2:
            target = ideal_A.space(n).sum(K)
            table = basis.generator_brackets(n - 1)
            ok = all(target.contains(table[b][u])
                     for u in basis.words_over(rest, n - 1) for b in B.members)
            bracket_ok.append(ok)
    free = [witt_dimension(len(rest), n) for n in range(1, N + 1)]
    return KernelReport(list(rest), phi_A, phi_B, kernel, quotient, free, bracket_ok)


def check_lemma_J(A: Arrangement, B: Subarrangement, N: int,
                  lat: IntersectionLattice | None = None,
                  ideal_A: HolonomyIdealBasis | None = None) -> Verdict:
    """Free Lie algebra on the hyperplanes outside ``B`` meets ``I(A)`` in zero."""
    if lat is None:
        lat = build_lattice(A)
    X = lat.flat(closure(A, B.members))
    r = essential_rank(A)
    if X.rank != r - 1 or not is_modular(lat, X):
        raise PreconditionError(
            f"intersection of {list(B.members)} is not a modular flat of rank {r - 1}")
    if ideal_A is None or ideal_A.max_degree < N:
        ideal_A = graded_ideal(A, N)
    rest = B.complement()
    dims = []
    for n in range(1, N + 1):
        K = RowSpace({w: 1} for w in ideal_A.basis.words_over(rest, n))
        dims.append(ideal_A.space(n).intersection_dim(K))
    first = next((n for n, d in enumerate(dims, 1) if d), None)
    return Verdict("horizontal_free", first is None, first, {"intersection_dims": dims})
