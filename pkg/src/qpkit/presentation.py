"""
Finitely presented groups: abelianization, conservative Tietze simplification,
and the proper-subword test for two-generator one-relator groups.

Words are tuples of nonzero signed generator ids (1-based); a negative id is
the inverse generator.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyRelator


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for g in letters:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return tuple(stack)


def _cyclic_reduce(letters: tuple[int, ...]) -> tuple[int, ...]:
    letters = _reduce(letters)
    a, b = 0, len(letters)
    while b - a >= 2 and letters[a] == -letters[b - 1]:
        a += 1
        b -= 1
    return letters[a:b]


def _inverse(letters: Sequence[int]) -> tuple[int, ...]:
    return tuple(-g for g in reversed(letters))


@dataclass(frozen=True)
class GroupWord:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(g) for g in self.letters)
        if any(g == 0 for g in letters):
            raise ValueError("generator id 0 is not allowed")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def reduced(self) -> "GroupWord":
        return GroupWord(_reduce(self.letters))

    def inverse(self) -> "GroupWord":
        return GroupWord(_inverse(self.letters))

    def is_cyclically_reduced(self) -> bool:
        return _cyclic_reduce(self.letters) == self.letters

    def generators(self) -> set[int]:
        return {abs(g) for g in self.letters}


@dataclass(frozen=True)
class GroupPresentation:
    generator_count: int
    relators: tuple[GroupWord, ...] = ()

    def __post_init__(self):
        if self.generator_count < 0:
            raise ValueError("negative generator count")
        rels = []
        for r in self.relators:
            r = r if isinstance(r, GroupWord) else GroupWord(tuple(r))
            if any(abs(g) > self.generator_count for g in r.letters):
                raise ValueError(f"relator {r.letters} uses an undeclared generator")
            rels.append(r.reduced())
        object.__setattr__(self, "relators", tuple(rels))

    @classmethod
    def from_json(cls, obj: dict) -> "GroupPresentation":
        if not isinstance(obj, dict) or set(obj) != {"generators", "relators"}:
            raise ValueError("presentation JSON needs exactly 'generators' and 'relators'")
        g = obj["generators"]
        if not isinstance(g, int) or isinstance(g, bool):
            raise ValueError(f"bad generator count {g!r}")
        rels = []
        for r in obj["relators"]:
            if not isinstance(r, list) or not all(
                    isinstance(x, int) and not isinstance(x, bool) for x in r):
                raise ValueError(f"bad relator {r!r}")
            rels.append(GroupWord(tuple(r)))
        return cls(g, tuple(rels))

    def to_json(self) -> dict:
        return {"generators": self.generator_count,
                "relators": [list(r.letters) for r in self.relators]}

    def relation_matrix(self) -> list[list[int]]:
        rows = []
        for r in self.relators:
            row = [0] * self.generator_count
            for g in r.letters:
                row[abs(g) - 1] += 1 if g > 0 else -1
            rows.append(row)
        return rows


def load_presentation(path) -> GroupPresentation:
    with open(path, encoding="ascii") as fh:
        return GroupPresentation.from_json(json.load(fh))


# -- abelianization ---------------------------------------------------------


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    A = [list(map(int, row)) for row in matrix]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    t = 0
    while t < rows and t < cols:
        nonzero = [(abs(A[i][j]), i, j) for i in range(t, rows) for j in range(t, cols)
                   if A[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    done = False
            if done:
                # the pivot must divide everything left in the lower-right block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if A[i][j] % p), None)
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
                continue
            # a remainder survived; move the smallest entry of row/column t into the pivot
            cands = [(abs(A[i][t]), i, t) for i in range(t, rows) if A[i][t]]
            cands += [(abs(A[t][j]), t, j) for j in range(t, cols) if A[t][j]]
            _, pi, pj = min(cands)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")

    @property
    def is_infinite_cyclic(self) -> bool:
        return self.free_rank == 1 and not self.torsion

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def abelianization(p: GroupPresentation) -> AbelianInvariants:
    diag = smith_diagonal(p.relation_matrix()) if p.relators else []
    return AbelianInvariants(p.generator_count - len(diag), tuple(d for d in diag if d > 1))


# -- Tietze simplification --------------------------------------------------


@dataclass(frozen=True)
class SimplifyResult:
    presentation: GroupPresentation
    steps: int
    exhausted: bool
    eliminated: tuple[int, ...]
    """Original ids of eliminated generators, in elimination order."""
    survivors: tuple[int, ...]
    """Original ids of the generators left, in their new order."""


def _eliminable(r: tuple[int, ...]) -> list[int]:
    """Generator ids occurring exactly once in r."""
    counts: dict[int, int] = {}
    for g in r:
        counts[abs(g)] = counts.get(abs(g), 0) + 1
    return sorted(g for g, c in counts.items() if c == 1)


def _ranked_eliminations(rels: list[tuple[int, ...]]) -> list[tuple[int, int]]:
    """All single-occurrence eliminations, most promising first.

    Ranked by the number of relators left with no single-occurrence generator
    (those can only vanish by cancellation), then total relator length, then
    highest generator id, then earliest relator.  Favouring short results
    unwinds triangular systems (each generator defined by a word in earlier
    ones) from the top.
    """
    ranked = []
    for i, r in enumerate(rels):
        for g in _eliminable(r):
            after = [x for x in _eliminate(rels, i, g) if x]
            stuck = sum(1 for x in after if not _eliminable(_cyclic_reduce(x)))
            ranked.append(((stuck, sum(map(len, after)), -g, i), (i, g)))
    ranked.sort()
    return [move for _, move in ranked]


def _eliminate(rels: list[tuple[int, ...]], idx: int, g: int) -> list[tuple[int, ...]]:
    r = rels[idx]
    pos = next(k for k, x in enumerate(r) if abs(x) == g)
    u, v = r[:pos], r[pos + 1:]
    # u g^e v = 1  =>  g^e = u^-1 v^-1
    value = _inverse(u) + _inverse(v)
    if r[pos] < 0:
        value = _inverse(value)
    inv_value = _inverse(value)
    out = []
    for k, other in enumerate(rels):
        if k == idx:
            continue
        new = []
        for x in other:
            if x == g:
                new.extend(value)
            elif x == -g:
                new.extend(inv_value)
            else:
                new.append(x)
        out.append(_reduce(new))
    return out


def tietze_simplify(p: GroupPresentation, step_budget: int = 100,
                    node_limit: int = 2000) -> SimplifyResult:
    """Simplify by reduction and single-occurrence generator elimination.

    Each step is either one generator elimination or one round of cyclic
    reduction that changed some relator.  Free reduction and deleting empty
    relators are free.  A path stops at a fixpoint or when it has used
    ``step_budget`` steps.

    The order of eliminations matters, so after the ranked greedy path the
    other orders are searched depth first (at most ``node_limit`` states) and
    the best end state wins: fewest generators, then fewest relators, then
    shortest.  ``exhausted`` is set when that end state was cut by the budget.
    """
    if step_budget < 0:
        raise ValueError("step_budget must be nonnegative")
    best = None
    seen = set()

    def score(state):
        rels, live = state[0], state[1]
        return (len(live), len(rels), sum(map(len, rels)))

    def visit(rels, live, eliminated, steps):
        nonlocal best
        rels = [r for r in (_reduce(r) for r in rels) if r]
        key = (tuple(rels), tuple(live))
        if key in seen or len(seen) >= node_limit:
            return
        seen.add(key)
        moves = _ranked_eliminations(rels)
        cyc = None if moves else [_cyclic_reduce(r) for r in rels]
        fixpoint = not moves and cyc == rels
        if fixpoint or steps >= step_budget:
            state = (rels, live, eliminated, steps, not fixpoint)
            if best is None or score(state) < score(best):
                best = state
            return
        if cyc is not None:
            visit(cyc, live, eliminated, steps + 1)
        for i, g in moves:
            nxt = _drop_generator(_eliminate(rels, i, g), g)
            visit(nxt, live[:g - 1] + live[g:], eliminated + [live[g - 1]], steps + 1)
            if best is not None and not best[0] and len(best[1]) <= 1:
                return

    visit([r.letters for r in p.relators], list(range(1, p.generator_count + 1)), [], 0)
    rels, live, eliminated, steps, exhausted = best
    result = GroupPresentation(len(live), tuple(GroupWord(r) for r in rels))
    return SimplifyResult(result, steps, exhausted, tuple(eliminated), tuple(live))


def _drop_generator(rels: list[tuple[int, ...]], g: int) -> list[tuple[int, ...]]:
    def renum(x):
        return x - 1 if x > g else x + 1 if x < -g else x

    return [tuple(renum(x) for x in r) for r in rels]


class Pi1Verdict(str, enum.Enum):
    CERTIFIED_Z = "certified_Z"
    NOT_Z = "not_Z"
    INCONCLUSIVE = "inconclusive"


def is_infinite_cyclic_certificate(p: GroupPresentation, step_budget: int = 100) -> Pi1Verdict:
    if not abelianization(p).is_infinite_cyclic:
        return Pi1Verdict.NOT_Z
    q = tietze_simplify(p, step_budget).presentation
    if q.generator_count == 1 and not q.relators:
        return Pi1Verdict.CERTIFIED_Z
    return Pi1Verdict.INCONCLUSIVE


# -- one-relator subword test -----------------------------------------------


class SubwordVerdict(str, enum.Enum):
    NONTRIVIAL = "nontrivial"
    INAPPLICABLE = "inapplicable"


def _contains(hay: tuple[int, ...], needle: tuple[int, ...]) -> bool:
    m = len(needle)
    return any(hay[i:i + m] == needle for i in range(len(hay) - m + 1))


def weinbaum_subword_test(relator: GroupWord, candidate: GroupWord) -> SubwordVerdict:
    """Certify a word nontrivial as a proper subword of a cyclically reduced relator.

    In a two-generator group with one nonempty cyclically reduced relator, no
    proper subword of the relator is trivial.  The caller is responsible for
    the two-generator one-relator hypothesis; every syntactic hypothesis is
    checked here and any failure gives INAPPLICABLE.
    """
    r = relator.letters
    if not r:
        raise EmptyRelator("the relator is empty")
    c = candidate.letters
    if _reduce(r) != r or not relator.is_cyclically_reduced():
        return SubwordVerdict.INAPPLICABLE
    if not c or len(c) >= len(r) or not _contains(r, c):
        return SubwordVerdict.INAPPLICABLE
    return SubwordVerdict.NONTRIVIAL
