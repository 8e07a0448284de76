"""Named example arrangements and seeded random supersolvable ones."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .arrangements import Arrangement
from .linalg import rank


def braid(l: int) -> Arrangement:
    """``z_i - z_j`` for ``i < j`` in ``C^l``."""
    forms = []
    for i, j in itertools.combinations(range(l), 2):
        f = [0] * l
        f[i], f[j] = 1, -1
        forms.append(f)
    return Arrangement.from_forms(l, forms)


def boolean(l: int) -> Arrangement:
    return Arrangement.from_forms(l, [[int(i == j) for j in range(l)] for i in range(l)])


def generic4() -> Arrangement:
    """``x, y, z, x + y + z``: every three of them are independent."""
    return Arrangement.from_forms(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])


def moment_curve(n: int, l: int) -> Arrangement:
    """``n`` generic hyperplanes: forms ``(1, t, ..., t^(l-1))`` for ``t = 1..n``."""
    return Arrangement.from_forms(l, [[t ** k for k in range(l)] for t in range(1, n + 1)])


def pencil(n: int) -> Arrangement:
    """``n`` lines through the origin of ``C^2``."""
    return Arrangement.from_forms(2, [[1, t] for t in range(n - 1)] + [[0, 1]])


def is_generic(A: Arrangement) -> bool:
    k = min(A.dim, A.n)
    return all(rank(A.forms[i] for i in S) == k for S in itertools.combinations(range(A.n), k))


def near_generic5() -> Arrangement:
    """Hypersolvable, not supersolvable: one triple line ``x, y, x - y``."""
    return Arrangement.from_forms(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, -1, 0]])


def non_hypersolvable6() -> Arrangement:
    """``x, y, z, x + y, x + z, y + z``; admits no composition series."""
    return Arrangement.from_forms(
        3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1]])


def random_supersolvable(seed: int, vertices: int | None = None, max_hyperplanes: int = 7):
    """Graphic arrangement of a random chordal graph, in random coordinates.

    Vertex 0 is pinned to the origin, so an edge ``(0, k)`` gives ``x_k``.
    Vertex ``k`` is joined to a nonempty subset of an existing clique, which
    keeps the graph chordal; the attachment sizes are the exponents.
    Returns ``(arrangement, exponents)``.
    """
    rng = random.Random(seed)
    if vertices is None:
        vertices = rng.randint(3, 5)
    cliques = [(0,)]
    edges = []
    exps = []
    for k in range(1, vertices + 1):
        budget = max_hyperplanes - len(edges) - (vertices - k)
        clique = max(rng.sample(cliques, min(2, len(cliques))), key=len)
        cap = max(1, min(len(clique), budget))
        size = max(rng.randint(1, cap), rng.randint(1, cap))
        attach = tuple(sorted(rng.sample(clique, size)))
        cliques.append(attach + (k,))
        edges.extend((s, k) for s in attach)
        exps.append(size)
    l = vertices
    forms = []
    for s, k in edges:
        f = [Fraction(0)] * l
        f[k - 1] = Fraction(1)
        if s:
            f[s - 1] = Fraction(-1)
        forms.append(f)
    while True:
        M = [[Fraction(rng.randint(-3, 3)) for _ in range(l)] for _ in range(l)]
        if rank(M) == l:
            break
    mixed = []
    for f in forms:
        g = [sum(f[i] * M[i][j] for i in range(l)) for j in range(l)]
        scale = Fraction(rng.choice([1, -1, 2, 3]), rng.choice([1, 2, 5]))
        mixed.append([scale * x for x in g])
    return Arrangement.from_forms(l, mixed), tuple(sorted(exps))


def standard_corpus() -> dict[str, Arrangement]:
    corpus = {
        "braid3": braid(3),
        "braid4": braid(4),
        "boolean2": boolean(2),
        "boolean3": boolean(3),
        "generic4": generic4(),
    }
    for seed in range(10):
        corpus[f"random_ss{seed}"] = random_supersolvable(seed)[0]
    return corpus
