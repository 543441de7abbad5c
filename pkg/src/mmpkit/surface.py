"""Intersection-lattice models of smooth projective surfaces and the
classical minimal model program on them.

A surface is modelled extensionally: a rank, an integer Gram matrix for
the intersection pairing, the canonical class, and a list of known curve
classes.  Nef/ample/cone verdicts are always relative to the supplied
curve list.  Contractions of (-1)-classes are computed exactly: the new
lattice is the orthogonal complement of the contracted class in a
canonical integer basis (column Hermite form), so repeated runs produce
identical traces.

(-1)-class enumeration is complete in two regimes: blow-ups of the plane
in at most 8 points (degree bound from Cauchy-Schwarz), and lattices of
signature (1, rank-1) with K^2 > 0 (bounding box derived from the
negative-definite complement of K).  Anything else needs an explicit
search bound; lattices with 9 or more base points have infinitely many
(-1)-classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from math import isqrt

from . import linalg
from .errors import (
    DegenerateConeError,
    EmptyCurveListError,
    NonIntegralGenusError,
    NotMinusOneClassError,
    NotRank2Error,
    NotSymmetricError,
    UnboundedSearchError,
    UndeterminedOutcomeError,
)
from .linalg import IntMatrix, IntVector

_BOX_CELL_LIMIT = 2_000_000


@dataclass(frozen=True)
class SurfaceLattice:
    """Neron-Severi-style lattice: rank, Gram matrix, canonical class, curves."""

    rank: int
    gram: IntMatrix
    K: IntVector
    curves: tuple[IntVector, ...] = ()
    label: str = ""

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "K", tuple(int(x) for x in self.K))
        object.__setattr__(
            self, "curves", tuple(tuple(int(x) for x in c) for c in self.curves)
        )
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if len(gram) != self.rank or any(len(row) != self.rank for row in gram):
            raise ValueError("Gram matrix does not match the rank")
        if not linalg.is_symmetric(gram):
            raise NotSymmetricError("intersection form must be symmetric")
        if len(self.K) != self.rank:
            raise ValueError("canonical class does not match the rank")
        for idx, c in enumerate(self.curves):
            if len(c) != self.rank:
                raise ValueError(f"curve {idx} does not match the rank")
            if (self.pair(c, c) + self.pair(c, self.K)) % 2 != 0:
                raise NonIntegralGenusError(
                    f"curve {idx} violates adjunction parity: C.(C+K) is odd"
                )

    def pair(self, x, y) -> int:
        return sum(
            x[i] * self.gram[i][j] * y[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def warnings(self) -> tuple[str, ...]:
        notes = []
        if linalg.inertia(self.gram) != (1, self.rank - 1, 0):
            notes.append("intersection form does not have signature (1, rank-1)")
        return tuple(notes)


def _pair(gram, x, y) -> int:
    n = len(gram)
    return sum(x[i] * gram[i][j] * y[j] for i in range(n) for j in range(n))


def make_blowup_p2(r: int) -> SurfaceLattice:
    """Blow-up of the plane at r points: basis (H, E_1, ..., E_r)."""
    if r < 0:
        raise ValueError("number of blown-up points must be nonnegative")
    rank = r + 1
    gram = tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(rank))
        for i in range(rank)
    )
    K = tuple([-3] + [1] * r)
    exceptional = [
        tuple(1 if j == i else 0 for j in range(rank)) for i in range(1, rank)
    ]
    hyperplane = tuple([1] + [0] * r)
    return SurfaceLattice(
        rank=rank,
        gram=gram,
        K=K,
        curves=tuple(exceptional + [hyperplane]),
        label=f"blowup_p2({r})",
    )


def make_quadric() -> SurfaceLattice:
    """The quadric surface: two rulings with pairing [[0,1],[1,0]]."""
    return SurfaceLattice(
        rank=2,
        gram=((0, 1), (1, 0)),
        K=(-2, -2),
        curves=((1, 0), (0, 1)),
        label="quadric",
    )


def adjunction_genus(s: SurfaceLattice, c) -> int:
    """Arithmetic genus 1 + C.(C+K)/2; raises on parity violation."""
    c = tuple(int(x) for x in c)
    total = s.pair(c, c) + s.pair(c, s.K)
    if total % 2 != 0:
        raise NonIntegralGenusError("C.(C+K) is odd; no integral genus")
    return 1 + total // 2


def _is_standard_blowup(s: SurfaceLattice) -> bool:
    r = s.rank - 1
    if s.K != tuple([-3] + [1] * r):
        return False
    for i in range(s.rank):
        for j in range(s.rank):
            expected = (1 if i == 0 else -1) if i == j else 0
            if s.gram[i][j] != expected:
                return False
    return True


def _standard_minus_one_classes(r: int) -> list[IntVector]:
    # x = a H + sum b_i E_i with sum b = 1 - 3a and sum b^2 = a^2 + 1
    out: list[IntVector] = []

    def descend(k, target_sum, target_sq, prefix):
        if k == 0:
            if target_sum == 0 and target_sq == 0:
                out.append(prefix)
            return
        bound = isqrt(target_sq)
        for b in range(-bound, bound + 1):
            rest_sq = target_sq - b * b
            if rest_sq < 0:
                continue
            rest_sum = target_sum - b
            if rest_sum * rest_sum > (k - 1) * rest_sq:
                continue
            descend(k - 1, rest_sum, rest_sq, prefix + (b,))

    for a in range(-8, 9):
        if (3 * a - 1) ** 2 > r * (a * a + 1):
            continue
        descend(r, 1 - 3 * a, a * a + 1, (a,))
    return sorted(out)


def _definite_complement_box(s: SurfaceLattice) -> list[int]:
    """Per-coordinate bounds covering every solution of C^2 = K.C = -1.

    Valid when the form has signature (1, rank-1) and K^2 > 0: writing
    C = -K/K^2 + w with w in the K-orthogonal (negative definite) part,
    w lies on the ellipsoid w^T Q w = 1 + 1/K^2 with Q the restricted
    form negated, so |w_i| <= sqrt(R * (B Q^{-1} B^T)_{ii}) for a kernel
    basis B (Cauchy-Schwarz in the Q-inner product).
    """
    k2 = s.pair(s.K, s.K)
    gk = tuple(sum(s.gram[i][j] * s.K[j] for j in range(s.rank)) for i in range(s.rank))
    basis = linalg.integer_kernel((gk,))
    q = [[-_pair(s.gram, bi, bj) for bj in basis] for bi in basis]
    radius = Fraction(k2 + 1, k2)
    box = []
    for i in range(s.rank):
        row = [Fraction(b[i]) for b in basis]
        if any(row):
            y = linalg.solve_exact(q, row)
            gauge = sum(r * v for r, v in zip(row, y))
            wmax = linalg.ceil_sqrt(radius * gauge)
        else:
            wmax = 0
        box.append(int(Fraction(abs(s.K[i]), k2) + wmax))
    return box


def enumerate_minus_one_classes(s: SurfaceLattice, bound: int | None = None) -> list[IntVector]:
    """All classes C with C^2 = -1 and K.C = -1, lexicographically sorted.

    Complete without a bound for standard blow-up lattices with r <= 8 and
    for signature-(1, rank-1) lattices with K^2 > 0; otherwise an explicit
    coordinate bound is required.
    """
    if bound is not None:
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        ranges = [range(-bound, bound + 1)] * s.rank
        return [
            x
            for x in product(*ranges)
            if s.pair(x, x) == -1 and s.pair(s.K, x) == -1
        ]
    if _is_standard_blowup(s):
        r = s.rank - 1
        if r <= 8:
            return _standard_minus_one_classes(r)
        raise UnboundedSearchError(
            "blow-up lattices in 9 or more points have infinitely many (-1)-classes;"
            " pass an explicit search bound"
        )
    k2 = s.pair(s.K, s.K)
    if k2 > 0 and linalg.inertia(s.gram) == (1, s.rank - 1, 0):
        box = _definite_complement_box(s)
        cells = 1
        for b in box:
            cells *= 2 * b + 1
        if cells > _BOX_CELL_LIMIT:
            raise UnboundedSearchError(
                "derived search region is too large; pass an explicit bound"
            )
        return [
            x
            for x in product(*(range(-b, b + 1) for b in box))
            if s.pair(x, x) == -1 and s.pair(s.K, x) == -1
        ]
    raise UnboundedSearchError(
        "cannot certify a finite (-1)-class search on this lattice;"
        " pass an explicit bound"
    )


def _contraction_basis(s: SurfaceLattice, c: IntVector) -> list[IntVector]:
    gc = tuple(sum(s.gram[i][j] * c[j] for j in range(s.rank)) for i in range(s.rank))
    return linalg.integer_kernel((gc,))


def _check_minus_one(s: SurfaceLattice, c: IntVector):
    if s.pair(c, c) != -1 or s.pair(s.K, c) != -1:
        raise NotMinusOneClassError(
            f"class {list(c)} has C^2 = {s.pair(c, c)}, K.C = {s.pair(s.K, c)};"
            " need both equal to -1"
        )


def pushforward_class(s: SurfaceLattice, c, x) -> IntVector:
    """Image of x under contracting the (-1)-class c, in the new basis.

    The projection is x + (x.C) C, expressed in the canonical integer
    basis of the orthogonal complement of C.
    """
    c = tuple(int(v) for v in c)
    x = tuple(int(v) for v in x)
    _check_minus_one(s, c)
    basis = _contraction_basis(s, c)
    xc = s.pair(x, c)
    image = tuple(xi + xc * ci for xi, ci in zip(x, c))
    return linalg.coordinates_in_basis(basis, image)


def castelnuovo_contract(s: SurfaceLattice, c) -> SurfaceLattice:
    """Contract a (-1)-class: rank drops by one, K pulls back to K - C."""
    c = tuple(int(v) for v in c)
    _check_minus_one(s, c)
    basis = _contraction_basis(s, c)
    new_gram = tuple(
        tuple(_pair(s.gram, bi, bj) for bj in basis) for bi in basis
    )
    k_upstairs = tuple(k - ci for k, ci in zip(s.K, c))
    new_k = linalg.coordinates_in_basis(basis, k_upstairs)
    new_curves = []
    for x in s.curves:
        if x == c:
            continue
        xc = s.pair(x, c)
        image = tuple(xi + xc * ci for xi, ci in zip(x, c))
        new_curves.append(linalg.coordinates_in_basis(basis, image))
    return SurfaceLattice(
        rank=s.rank - 1,
        gram=new_gram,
        K=new_k,
        curves=tuple(new_curves),
        label=s.label,
    )


class MmpOutcome(Enum):
    MINIMAL_MODEL = "MinimalModel"
    MORI_FIBRE_P2LIKE = "MoriFibreP2like"
    MORI_FIBRE_RULED = "MoriFibreRuled"


@dataclass(frozen=True)
class MmpStep:
    contracted: IntVector
    rank_before: int
    rank_after: int


@dataclass(frozen=True)
class MmpTrace:
    steps: tuple[MmpStep, ...]
    outcome: MmpOutcome
    fibre: IntVector | None
    final: SurfaceLattice
    notes: tuple[str, ...] = ()


def run_classical_mmp(s: SurfaceLattice, bound: int | None = None) -> MmpTrace:
    """Contract the lex-smallest (-1)-class until none remain, then classify.

    Outcomes: a ruled fibre space when a known class has f^2 = 0 and
    K.f < 0; a plane-like fibre space at rank 1 with K negative on the
    generator; a minimal model when K is nonnegative on every known class.
    """
    steps = []
    cur = s
    while True:
        classes = enumerate_minus_one_classes(cur, bound=bound)
        if not classes:
            break
        chosen = classes[0]
        nxt = castelnuovo_contract(cur, chosen)
        steps.append(
            MmpStep(contracted=chosen, rank_before=cur.rank, rank_after=nxt.rank)
        )
        cur = nxt
    notes = ["verdict relative to the supplied curve classes"]
    fibres = [
        f for f in cur.curves if cur.pair(f, f) == 0 and cur.pair(cur.K, f) < 0
    ]
    if fibres:
        if cur.rank > 2:
            notes.append("fibre extremality not certified above rank 2; heuristic")
        return MmpTrace(
            steps=tuple(steps),
            outcome=MmpOutcome.MORI_FIBRE_RULED,
            fibre=fibres[0],
            final=cur,
            notes=tuple(notes),
        )
    generator = tuple(1 if i == 0 else 0 for i in range(cur.rank))
    if cur.rank == 1 and cur.pair(cur.K, generator) < 0:
        return MmpTrace(
            steps=tuple(steps),
            outcome=MmpOutcome.MORI_FIBRE_P2LIKE,
            fibre=None,
            final=cur,
            notes=tuple(notes),
        )
    if all(cur.pair(cur.K, c) >= 0 for c in cur.curves):
        if not cur.curves:
            notes.append("curve list is empty; minimal-model verdict is conditional")
        return MmpTrace(
            steps=tuple(steps),
            outcome=MmpOutcome.MINIMAL_MODEL,
            fibre=None,
            final=cur,
            notes=tuple(notes),
        )
    raise UndeterminedOutcomeError(
        "no (-1)-classes remain, yet K is negative on a known class that is"
        " not a fibre; outcome not classifiable in this model"
    )


def cone_rays_rank2(s: SurfaceLattice) -> tuple[IntVector, IntVector]:
    """The two boundary rays of the planar cone spanned by the curve list."""
    if s.rank != 2:
        raise NotRank2Error(f"cone rays need rank 2, got rank {s.rank}")
    if not s.curves:
        raise EmptyCurveListError("no curve classes supplied")
    directions = sorted({linalg.primitive(c) for c in s.curves})

    def cross(u, v):
        return u[0] * v[1] - u[1] * v[0]

    for u in directions:
        for v in directions:
            if cross(u, v) == 0 and u[0] * v[0] + u[1] * v[1] < 0:
                raise DegenerateConeError("curve classes span opposite directions")
    boundary = []
    for d in directions:
        signs = [cross(d, c) for c in directions]
        if all(x >= 0 for x in signs) or all(x <= 0 for x in signs):
            boundary.append(d)
    if len(directions) == 1:
        return directions[0], directions[0]
    if len(boundary) != 2:
        raise DegenerateConeError("curve classes span a half-plane or more")
    return boundary[0], boundary[1]


def is_nef(s: SurfaceLattice, d) -> bool:
    """D.C >= 0 for every supplied curve class (relative verdict)."""
    if not s.curves:
        raise EmptyCurveListError("no curve classes supplied")
    d = tuple(int(x) for x in d)
    return all(s.pair(d, c) >= 0 for c in s.curves)


def is_ample_kleiman(s: SurfaceLattice, d) -> bool:
    """D.C > 0 for every supplied curve class and D^2 > 0."""
    if not s.curves:
        raise EmptyCurveListError("no curve classes supplied")
    d = tuple(int(x) for x in d)
    return all(s.pair(d, c) > 0 for c in s.curves) and s.pair(d, d) > 0


def riemann_roch_surface(s: SurfaceLattice, d, chi0: int):
    """Euler characteristic D.(D-K)/2 + chi0; int when integral else Fraction."""
    d = tuple(int(x) for x in d)
    value = Fraction(s.pair(d, d) - s.pair(d, s.K), 2) + chi0
    if value.denominator == 1:
        return int(value)
    return value
