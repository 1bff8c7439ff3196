"""
Exact integer quadratic forms for negative-definite intersection lattices.

Every decision here is made in integer or ``Fraction`` arithmetic.  Vectors of
a prescribed square are enumerated by ellipsoid descent over the exact LDL^T
decomposition of -Q; :func:`box_search_classes` is an independent brute-force
oracle for the same set.
"""

from __future__ import annotations

import enum
import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import NotNegativeDefinite, RankMismatch, ZeroClass

Vector = tuple[int, ...]


@dataclass(frozen=True)
class IntersectionForm:
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        r = len(m)
        if any(len(row) != r for row in m):
            raise ValueError("intersection form must be square")
        if any(m[i][j] != m[j][i] for i in range(r) for j in range(i)):
            raise ValueError("intersection form must be symmetric")
        object.__setattr__(self, "matrix", m)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.matrix]

    def permuted(self, order: Sequence[int]) -> "IntersectionForm":
        return IntersectionForm(tuple(tuple(self.matrix[i][j] for j in order) for i in order))


def _as_form(Q) -> IntersectionForm:
    return Q if isinstance(Q, IntersectionForm) else IntersectionForm(Q)


def _check_rank(Q: IntersectionForm, v: Sequence[int]):
    if len(v) != Q.rank:
        raise RankMismatch(f"vector of length {len(v)} against a rank {Q.rank} form")


def direct_sum(forms: Sequence, chern: Sequence[Sequence[int]]):
    """Block-diagonal sum of the forms together with the concatenated Chern vectors."""
    if len(forms) != len(chern):
        raise RankMismatch(f"{len(forms)} forms but {len(chern)} Chern vectors")
    forms = [_as_form(Q) for Q in forms]
    r = sum(Q.rank for Q in forms)
    rows = [[0] * r for _ in range(r)]
    c1: list[int] = []
    at = 0
    for Q, c in zip(forms, chern):
        if len(c) != Q.rank:
            raise RankMismatch(f"Chern vector of length {len(c)} for a rank {Q.rank} block")
        for i in range(Q.rank):
            rows[at + i][at:at + Q.rank] = Q.matrix[i]
        c1.extend(int(x) for x in c)
        at += Q.rank
    return IntersectionForm(tuple(map(tuple, rows))), tuple(c1)


def evaluate(Q, v: Sequence[int]) -> int:
    Q = _as_form(Q)
    _check_rank(Q, v)
    return sum(v[i] * Q.matrix[i][j] * v[j] for i in range(Q.rank) for j in range(Q.rank))


def pair(c1: Sequence[int], v: Sequence[int]) -> int:
    if len(c1) != len(v):
        raise RankMismatch(f"Chern vector of length {len(c1)} against a class of length {len(v)}")
    return sum(a * b for a, b in zip(c1, v))


def _ldl(M: Sequence[Sequence]) -> tuple[list[Fraction], list[list[Fraction]]] | None:
    """Exact LDL^T without pivoting; None as soon as a pivot is not positive.

    Returns the pivots d and the unit upper-triangular mu with
    x^T M x = sum_i d_i (x_i + sum_{j>i} mu[i][j] x_j)^2.
    """
    r = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    d = []
    mu = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        p = A[i][i]
        if p <= 0:
            return None
        d.append(p)
        for j in range(i + 1, r):
            mu[i][j] = A[i][j] / p
        for j in range(i + 1, r):
            for k in range(i + 1, r):
                A[j][k] -= A[j][i] * A[i][k] / p
    return d, mu


def leading_minors(Q) -> list[int]:
    """Leading principal minors of Q as exact integers."""
    M = _as_form(Q).matrix
    return [_det([row[:k] for row in M[:k]]) for k in range(1, len(M) + 1)]


def _det(M) -> int:
    r = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for i in range(r):
        piv = next((k for k in range(i, r) if A[k][i] != 0), None)
        if piv is None:
            return 0
        if piv != i:
            A[i], A[piv] = A[piv], A[i]
            det = -det
        det *= A[i][i]
        for k in range(i + 1, r):
            f = A[k][i] / A[i][i]
            A[k] = [a - f * b for a, b in zip(A[k], A[i])]
    return int(det)


def is_negative_definite(Q) -> bool:
    """-Q is positive definite iff all its leading principal minors are positive."""
    Q = _as_form(Q)
    neg = [[-x for x in row] for row in Q.matrix]
    return all(m > 0 for m in leading_minors(neg))


def _require_negative_definite(Q: IntersectionForm):
    if not is_negative_definite(Q):
        raise NotNegativeDefinite(f"form {Q.to_json()} is not negative definite")


def canonical_sign(v: Sequence[int]) -> Vector:
    """The member of {v, -v} whose first nonzero coordinate is positive."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def classes_of_square(Q, m: int) -> list[Vector]:
    """All classes v with v.Q.v = m, one per +-pair, in lexicographic order."""
    Q = _as_form(Q)
    if m >= 0:
        raise ValueError("the target square must be negative")
    _require_negative_definite(Q)
    r = Q.rank
    d, mu = _ldl([[-x for x in row] for row in Q.matrix])
    target = -m
    found = set()
    x = [0] * r

    def descend(i: int, remaining: Fraction):
        # coordinate i is chosen after x[i+1:], so its centre is known
        centre = -sum(mu[i][j] * x[j] for j in range(i + 1, r))
        bound = remaining / d[i]
        # superset of the integers within sqrt(bound) of centre, filtered exactly
        slack = math.isqrt(bound.numerator // bound.denominator) + 1
        for t in range(math.floor(centre) - slack, math.ceil(centre) + slack + 1):
            gap = (t - centre) ** 2
            if gap > bound:
                continue
            x[i] = t
            rest = remaining - d[i] * gap
            if i == 0:
                if rest == 0:
                    found.add(canonical_sign(x))
            else:
                descend(i - 1, rest)
        x[i] = 0

    if r:
        descend(r - 1, Fraction(target))
    found.discard((0,) * r)
    return sorted(found)


def eigenvalue_lower_bound(Q, iterations: int = 24) -> Fraction:
    """A positive rational lambda with -Q - lambda*I positive definite.

    Certified by exact LDL^T pivots; bisection tightens it toward the
    smallest eigenvalue of -Q.
    """
    Q = _as_form(Q)
    _require_negative_definite(Q)
    r = Q.rank
    neg = [[-x for x in row] for row in Q.matrix]

    def ok(lam: Fraction) -> bool:
        return _ldl([[neg[i][j] - (lam if i == j else 0) for j in range(r)]
                     for i in range(r)]) is not None

    hi = Fraction(min(neg[i][i] for i in range(r))) if r else Fraction(1)
    lo = Fraction(0)
    for _ in range(iterations):
        mid = (lo + hi) / 2
        if ok(mid):
            lo = mid
        else:
            hi = mid
    if lo == 0:
        raise AssertionError("could not certify a positive eigenvalue bound")
    return lo


def box_search_classes(Q, m: int) -> list[Vector]:
    """Brute-force oracle for :func:`classes_of_square`.

    Every solution has |v|^2 <= |m| / lambda for a certified lower bound
    lambda on the spectrum of -Q, so the box ||v||_inf <= B with
    B = floor(sqrt(|m| / lambda)) is exhaustive.  Evaluation is vectorised
    over the whole box in int64.
    """
    Q = _as_form(Q)
    r = Q.rank
    if r == 0:
        return []
    lam = eigenvalue_lower_bound(Q)
    limit = Fraction(-m) / lam
    B = math.isqrt(limit.numerator // limit.denominator)
    M = np.array(Q.matrix, dtype=np.int64)
    axis = np.arange(-B, B + 1, dtype=np.int64)
    out = set()
    # chunk over the first coordinate to bound memory
    tails = list(itertools.product(axis.tolist(), repeat=r - 1))
    rest = np.array(tails, dtype=np.int64).reshape(len(tails), r - 1)
    for a in axis:
        V = np.hstack([np.full((rest.shape[0], 1), a, dtype=np.int64), rest])
        sq = np.einsum("ij,jk,ik->i", V, M, V)
        for row in V[sq == m]:
            out.add(canonical_sign([int(t) for t in row]))
    out.discard((0,) * r)
    return sorted(out)


class Adjunction(str, enum.Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"


def adjunction_bound(Q, c1: Sequence[int], v: Sequence[int], genus: int) -> Adjunction:
    """Test [S].[S] + |<c1, [S]>| <= 2g - 2 for a nonzero class."""
    Q = _as_form(Q)
    _check_rank(Q, v)
    if len(c1) != Q.rank:
        raise RankMismatch(f"Chern vector of length {len(c1)} for a rank {Q.rank} form")
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    if not any(v):
        raise ZeroClass("the adjunction inequality needs a nonzero class")
    lhs = evaluate(Q, v) + abs(pair(c1, v))
    return Adjunction.SATISFIED if lhs <= 2 * genus - 2 else Adjunction.VIOLATED


class SphereVerdict(str, enum.Enum):
    NO_SPHERE = "no_sphere_in_class_list"
    INCONCLUSIVE = "obstruction_inconclusive"


@dataclass(frozen=True)
class ClassRecord:
    coefficients: Vector
    c1_pairing: int
    adjunction_satisfiable_for_sphere: bool

    def to_json(self) -> dict:
        return {"class": list(self.coefficients), "c1_pairing": self.c1_pairing,
                "adjunction_satisfiable": self.adjunction_satisfiable_for_sphere}


@dataclass(frozen=True)
class SphereObstructionReport:
    square: int
    classes: tuple[ClassRecord, ...]
    verdict: SphereVerdict
    genus: int = 0

    def to_json(self) -> dict:
        return {"square": self.square, "genus": self.genus, "verdict": self.verdict.value,
                "classes": [c.to_json() for c in self.classes]}


def sphere_obstruction_report(Q, c1: Sequence[int], square: int,
                              genus: int = 0) -> SphereObstructionReport:
    """Run the adjunction test over every class of the given square.

    The verdict is NO_SPHERE only when every class violates the inequality
    at this genus (genus 0 for spheres); otherwise the test says nothing.
    """
    Q = _as_form(Q)
    if len(c1) != Q.rank:
        raise RankMismatch(f"Chern vector of length {len(c1)} for a rank {Q.rank} form")
    records = []
    for v in classes_of_square(Q, square):
        ok = adjunction_bound(Q, c1, v, genus) is Adjunction.SATISFIED
        records.append(ClassRecord(v, pair(c1, v), ok))
    blocked = all(not rec.adjunction_satisfiable_for_sphere for rec in records)
    verdict = SphereVerdict.NO_SPHERE if blocked else SphereVerdict.INCONCLUSIVE
    return SphereObstructionReport(square, tuple(records), verdict, genus)


def load_lattice(path) -> tuple[IntersectionForm, tuple[int, ...]]:
    with open(path, encoding="ascii") as fh:
        obj = json.load(fh)
    return lattice_from_json(obj)


def lattice_from_json(obj: dict) -> tuple[IntersectionForm, tuple[int, ...]]:
    if not isinstance(obj, dict) or set(obj) != {"matrix", "c1"}:
        raise ValueError("lattice JSON needs exactly the keys 'matrix' and 'c1'")
    Q = IntersectionForm(obj["matrix"])
    c1 = tuple(int(x) for x in obj["c1"])
    if len(c1) != Q.rank:
        raise RankMismatch(f"c1 of length {len(c1)} for a rank {Q.rank} form")
    return Q, c1


def lattice_to_json(Q: IntersectionForm, c1: Sequence[int]) -> dict:
    return {"matrix": Q.to_json(), "c1": list(c1)}
