"""Shared generators and independent oracles for the test suite."""

from fractions import Fraction
from itertools import product
from math import isqrt

from mmpkit.dualgraph import Boundary, BoundaryComponent, DualGraph, Vertex
from mmpkit.linalg import is_negative_definite


def chain_graph(self_ints, genera=None) -> DualGraph:
    n = len(self_ints)
    genera = genera or [0] * n
    vertices = tuple(Vertex(genus=g, self_int=s) for g, s in zip(genera, self_ints))
    edges = tuple((i, i + 1, 1) for i in range(n - 1))
    return DualGraph(vertices=vertices, edges=edges)


def dynkin_graph(kind: str, n: int) -> DualGraph:
    """Simply-laced Dynkin tree of (-2)-curves."""
    vertices = tuple(Vertex(genus=0, self_int=-2) for _ in range(n))
    if kind == "A":
        edges = tuple((i, i + 1, 1) for i in range(n - 1))
    elif kind == "D":
        assert n >= 4
        # path 0-1-...-(n-2) with the extra leaf n-1 hanging off vertex 1
        edges = tuple((i, i + 1, 1) for i in range(n - 2)) + ((1, n - 1, 1),)
    elif kind == "E":
        assert n in (6, 7, 8)
        # path 0-1-...-(n-2) with the extra leaf n-1 hanging off vertex 2
        edges = tuple((i, i + 1, 1) for i in range(n - 2)) + ((2, n - 1, 1),)
    else:
        raise ValueError(kind)
    return DualGraph(vertices=vertices, edges=edges)


def random_tree_edges(rng, n):
    return [(rng.randrange(i), i, 1) for i in range(1, n)]


def random_negdef_graph(rng, max_vertices=6, minimal=False, allow_genus=True) -> DualGraph:
    """Random connected graph with a negative-definite intersection matrix.

    With minimal=True every vertex satisfies 2g - 2 - E^2 >= 0, so the
    graph is the dual graph of a minimal resolution.
    """
    while True:
        n = rng.randint(1, max_vertices)
        edges = random_tree_edges(rng, n)
        if n >= 2 and rng.random() < 0.3:
            i, j = rng.sample(range(n), 2)
            edges.append((min(i, j), max(i, j), rng.randint(1, 2)))
        vertices = []
        for _ in range(n):
            genus = rng.choice([0, 0, 0, 1, 2]) if allow_genus else 0
            if minimal:
                upper = min(2 * genus - 2, -1)
                self_int = rng.randint(-6, upper)
            else:
                self_int = rng.randint(-6, -1)
            vertices.append(Vertex(genus=genus, self_int=self_int))
        graph = DualGraph(vertices=tuple(vertices), edges=tuple(edges))
        if is_negative_definite(graph.intersection_matrix()):
            return graph


def random_boundary(rng, graph: DualGraph, max_components=2) -> Boundary:
    n = len(graph.vertices)
    comps = []
    for _ in range(rng.randint(0, max_components)):
        q = rng.randint(1, 6)
        coeff = Fraction(rng.randint(0, q), q)
        meets = []
        for _ in range(rng.randint(0, 2)):
            meets.append((rng.randrange(n), rng.randint(1, 2)))
        comps.append(BoundaryComponent(coeff=coeff, meets=tuple(meets)))
    return Boundary(tuple(comps))


def box_negdef_oracle(matrix, box=3) -> bool:
    """Exhaustive sign sampling of the quadratic form on a small box."""
    n = len(matrix)
    for x in product(range(-box, box + 1), repeat=n):
        if all(v == 0 for v in x):
            continue
        value = sum(x[i] * matrix[i][j] * x[j] for i in range(n) for j in range(n))
        if value >= 0:
            return False
    return True


def naive_minus_one_classes(r) -> set:
    """Independent brute-force (-1)-class enumeration on the standard
    blow-up lattice, scanning the full coordinate box allowed by the
    Cauchy-Schwarz degree bound.  Only viable for small r."""
    out = set()
    for a in range(-8, 9):
        if (3 * a - 1) ** 2 > r * (a * a + 1):
            continue
        bmax = isqrt(a * a + 1)
        for b in product(range(-bmax, bmax + 1), repeat=r):
            if sum(b) == 1 - 3 * a and sum(x * x for x in b) == a * a + 1:
                out.add((a,) + b)
    return out


def multiset_minus_one_count(r) -> int:
    """Count (-1)-classes via nonincreasing coefficient multisets."""
    from collections import Counter
    from math import factorial

    total = 0
    for a in range(-8, 9):
        if (3 * a - 1) ** 2 > r * (a * a + 1):
            continue

        def descend(k, s, q, hi):
            nonlocal total
            if k == 0:
                if s == 0 and q == 0:
                    counts = Counter(acc)
                    perms = factorial(r)
                    for v in counts.values():
                        perms //= factorial(v)
                    total += perms
                return
            for b in range(min(hi, isqrt(q)), -isqrt(q) - 1, -1):
                if q - b * b < 0:
                    continue
                acc.append(b)
                descend(k - 1, s - b, q - b * b, b)
                acc.pop()

        acc: list[int] = []
        descend(r, 1 - 3 * a, a * a + 1, isqrt(a * a + 1))
    return total
