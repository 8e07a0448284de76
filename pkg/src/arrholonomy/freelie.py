"""Free Lie algebras over Q in the Lyndon basis, and truncated power series.

Basis convention: the Hall set is the set of Lyndon words over the ordered
alphabet ``0 < 1 < ... < n-1``; the basis element for a Lyndon word ``w`` of
length >= 2 is ``[P(u), P(v)]`` where ``w = uv`` and ``v`` is the longest
proper Lyndon suffix of ``w`` (standard factorization).  Within a degree,
basis elements are ordered lexicographically by word.

Coordinates are computed through the embedding of the free Lie algebra in
the free associative algebra (``[a, b] = ab - ba``): the smallest word in the
expansion of ``P(w)`` is ``w`` itself with coefficient 1, so a Lie polynomial
is reduced by repeatedly cancelling its lexicographically smallest word.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .errors import DegreeExceeded

Word = tuple[int, ...]
# An expression is a generator index, a bracket pair ``(a, b)``, or a
# linear combination ``[(coeff, expr), ...]``.
Expr = Union[int, tuple, list]


def lyndon_words(n: int, max_len: int):
    """Duval's algorithm: all Lyndon words of length <= max_len, in lex order."""
    if n <= 0 or max_len <= 0:
        return
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < max_len:
            w.append(w[-m])
        while w and w[-1] == n - 1:
            w.pop()


def _mobius(k: int) -> int:
    result = 1
    p = 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            result = -result
        p += 1
    if k > 1:
        result = -result
    return result


def witt_dimension(d: int, j: int) -> int:
    """Dimension of the degree-j piece of the free Lie algebra of rank d."""
    if j < 1 or d < 0:
        raise ValueError("need d >= 0 and j >= 1")
    total = sum(_mobius(k) * d ** (j // k) for k in range(1, j + 1) if j % k == 0)
    return total // j


def _mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for a, x in p.items():
        for b, y in q.items():
            w = a + b
            v = out.get(w, 0) + x * y
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return out


def _sub(p: dict, q: dict) -> dict:
    out = dict(p)
    for w, v in q.items():
        nv = out.get(w, 0) - v
        if nv:
            out[w] = nv
        else:
            out.pop(w, None)
    return out


def tensor_bracket(p: dict, q: dict) -> dict:
    """``pq - qp`` for noncommutative polynomials stored as ``{word: coeff}``."""
    return _sub(_mul(p, q), _mul(q, p))


class HallBasis:
    """Lyndon basis of the free Lie algebra on ``n_generators``, degrees 1..N."""

    def __init__(self, n_generators: int, max_degree: int):
        if n_generators < 0 or max_degree < 1:
            raise ValueError("need n >= 0 and N >= 1")
        self.n_generators = n_generators
        self.max_degree = max_degree
        by_degree: list[list[Word]] = [[] for _ in range(max_degree)]
        for w in lyndon_words(n_generators, max_degree):
            by_degree[len(w) - 1].append(w)
        self.words_by_degree: tuple[tuple[Word, ...], ...] = tuple(tuple(ws) for ws in by_degree)
        self._index = {w: i for ws in self.words_by_degree for i, w in enumerate(ws)}
        self._split: dict[Word, tuple[Word, Word]] = {}
        self._expansion: dict[Word, dict] = {}
        for ws in self.words_by_degree:
            for w in ws:
                if len(w) > 1:
                    for k in range(1, len(w)):
                        if w[k:] in self._index:
                            self._split[w] = (w[:k], w[k:])
                            break
                    u, v = self._split[w]
                    self._expansion[w] = tensor_bracket(self._expansion[u], self._expansion[v])
                else:
                    self._expansion[w] = {w: 1}
        self._gen_brackets: dict[int, list[list[dict[int, int]]]] = {}

    def words(self, degree: int) -> tuple[Word, ...]:
        if 1 <= degree <= self.max_degree:
            return self.words_by_degree[degree - 1]
        return ()

    def dim(self, degree: int) -> int:
        return len(self.words(degree))

    def sizes(self) -> list[int]:
        return [len(ws) for ws in self.words_by_degree]

    def index(self, word: Word) -> int:
        return self._index[tuple(word)]

    def tree(self, word: Word):
        """Standard bracketing of a Lyndon word as nested pairs of generators."""
        word = tuple(word)
        if len(word) == 1:
            return word[0]
        u, v = self._split[word]
        return (self.tree(u), self.tree(v))

    def expansion(self, word: Word) -> dict:
        return self._expansion[tuple(word)]

    def words_over(self, letters, degree: int) -> list[int]:
        """Indices of degree-``degree`` basis words using only ``letters``."""
        letters = set(letters)
        return [i for i, w in enumerate(self.words(degree)) if letters.issuperset(w)]

    def reduce_tensor(self, poly: dict, degree: int) -> dict[int, object]:
        """Coordinates of a homogeneous Lie polynomial given in tensor form."""
        poly = dict(poly)
        coords = {}
        index = self._index
        while poly:
            w = min(poly)
            if len(w) != degree:
                raise ValueError("polynomial is not homogeneous")
            if w not in index:
                raise ValueError(f"not a Lie polynomial (leading word {w} is not Lyndon)")
            c = poly[w]
            coords[index[w]] = c
            for u, v in self._expansion[w].items():
                nv = poly.get(u, 0) - c * v
                if nv:
                    poly[u] = nv
                else:
                    poly.pop(u, None)
        return coords

    def generator_brackets(self, degree: int) -> list[list[dict[int, int]]]:
        """``table[g][i]`` = coordinates of ``[x_g, P(w_i)]`` for words of ``degree``.

        The result lives in degree ``degree + 1``.
        """
        if degree + 1 > self.max_degree:
            raise DegreeExceeded(f"degree {degree + 1} exceeds basis cap {self.max_degree}")
        table = self._gen_brackets.get(degree)
        if table is None:
            table = []
            for g in range(self.n_generators):
                xg = {(g,): 1}
                table.append([self.reduce_tensor(tensor_bracket(xg, self._expansion[w]), degree + 1)
                              for w in self.words(degree)])
            self._gen_brackets[degree] = table
        return table


def hall_basis(n: int, N: int) -> HallBasis:
    return HallBasis(n, N)


@dataclass(frozen=True)
class LieElement:
    degree: int
    coords: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coords",
                           {int(k): Fraction(v) for k, v in self.coords.items() if v})

    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other: "LieElement") -> "LieElement":
        if other.degree != self.degree and self.coords and other.coords:
            raise ValueError("adding elements of different degrees")
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, 0) + v
        return LieElement(max(self.degree, other.degree), out)

    def __neg__(self):
        return LieElement(self.degree, {k: -v for k, v in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return LieElement(self.degree, {k: scalar * v for k, v in self.coords.items()})


def expr_degree(expr: Expr) -> int:
    if isinstance(expr, int):
        return 1
    if isinstance(expr, tuple):
        a, b = expr
        return expr_degree(a) + expr_degree(b)
    degrees = {expr_degree(e) for _, e in expr}
    if len(degrees) > 1:
        raise ValueError("expression is not homogeneous")
    return degrees.pop() if degrees else 0


def expand(expr: Expr) -> dict:
    """Image of a bracket expression in the free associative algebra."""
    if isinstance(expr, int):
        return {(expr,): 1}
    if isinstance(expr, tuple):
        a, b = expr
        return tensor_bracket(expand(a), expand(b))
    out: dict = {}
    for c, e in expr:
        for w, v in expand(e).items():
            nv = out.get(w, 0) + Fraction(c) * v
            if nv:
                out[w] = nv
            else:
                out.pop(w, None)
    return out


def normal_form(basis: HallBasis, expr: Expr) -> LieElement:
    """Coordinates of a bracket expression in the Lyndon basis."""
    degree = expr_degree(expr)
    if degree > basis.max_degree:
        raise DegreeExceeded(f"degree {degree} exceeds basis cap {basis.max_degree}")
    if isinstance(expr, int) and not 0 <= expr < basis.n_generators:
        raise ValueError(f"no generator {expr}")
    return LieElement(degree, basis.reduce_tensor(expand(expr), degree))


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer power series ``c_0 + c_1 t + ...`` known modulo ``t^(N+1)``."""

    coeffs: tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, N: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * N)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        N = min(self.N, other.N)
        out = [0] * (N + 1)
        for i, a in enumerate(self.coeffs[:N + 1]):
            if a:
                for j, b in enumerate(other.coeffs[:N + 1 - i]):
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    def times_one_minus(self, c: int, power: int) -> "TruncatedSeries":
        """Multiply by ``1 - c t^power``."""
        out = list(self.coeffs)
        for i in range(len(out) - 1, power - 1, -1):
            out[i] -= c * out[i - power]
        return TruncatedSeries(tuple(out))

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def lcs_product(phis: Sequence[int], N: int | None = None) -> TruncatedSeries:
    """``prod_j (1 - t^j)^phi_j`` modulo ``t^(N+1)``; N defaults to ``len(phis)``."""
    N = len(phis) if N is None else N
    series = TruncatedSeries.one(N)
    for j, phi in enumerate(phis[:N], 1):
        if phi < 0:
            raise ValueError("negative exponent in LCS product")
        for _ in range(phi):
            series = series.times_one_minus(1, j)
    return series


def exponent_polynomial(exponents: Sequence[int], N: int) -> TruncatedSeries:
    """``prod_i (1 - d_i t)`` modulo ``t^(N+1)``."""
    series = TruncatedSeries.one(N)
    for d in exponents:
        if d:
            series = series.times_one_minus(d, 1)
    return series
