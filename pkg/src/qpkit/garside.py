"""
Left-greedy Garside normal form for B_n.

Every braid is written uniquely as Delta^p s_1 ... s_k where Delta is the
positive half twist, each s_i is a permutation braid other than 1 and Delta,
and every adjacent pair (s_i, s_{i+1}) is left-weighted.  Two words are equal
in B_n exactly when their normal forms coincide.

Permutation braids are handled as 0-based tuples ``p`` with ``p[j]`` the final
position of the strand starting at position ``j``; the product "a then b" is
``b[a[j]]``, matching the reading order used in :mod:`qpkit.braid`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, StrandPermutation, _check_same_group

Perm = tuple[int, ...]


def _identity(n: int) -> Perm:
    return tuple(range(n))


def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for j, q in enumerate(p):
        inv[q] = j
    return tuple(inv)


def _tau(p: Perm) -> Perm:
    """Conjugation by Delta; on generators sigma_i -> sigma_{n-i}."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - j] for j in range(n))


def _times_gen(p: Perm, i: int) -> Perm:
    """p followed by the transposition of positions i, i+1 (0-based i)."""
    return tuple(i + 1 if q == i else i if q == i + 1 else q for q in p)


def _gen_times(i: int, p: Perm) -> Perm:
    """The transposition of positions i, i+1 followed by p."""
    lst = list(p)
    lst[i], lst[i + 1] = lst[i + 1], lst[i]
    return tuple(lst)


def _starting_set(p: Perm) -> set[int]:
    return {i for i in range(len(p) - 1) if p[i] > p[i + 1]}


def _finishing_set(p: Perm) -> set[int]:
    inv = _inverse(p)
    return {i for i in range(len(p) - 1) if inv[i] > inv[i + 1]}


def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Rewrite the simple pair (a, b) as the left-weighted pair with the same product.

    Moves one generator at a time from the front of b to the end of a while
    some starting generator of b is not already a finishing generator of a.
    """
    while True:
        moved = False
        fin = _finishing_set(a)
        for i in sorted(_starting_set(b)):
            if i not in fin:
                a = _times_gen(a, i)
                b = _gen_times(i, b)
                moved = True
                break
        if not moved:
            return a, b


def _simple_to_word(p: Perm) -> list[int]:
    """A positive word (1-based generators) for the permutation braid p."""
    out = []
    p = tuple(p)
    while True:
        s = _starting_set(p)
        if not s:
            return out
        i = min(s)
        out.append(i + 1)
        p = _gen_times(i, p)


@dataclass(frozen=True)
class PermutationFactor:
    permutation: StrandPermutation

    @classmethod
    def _from_perm(cls, p: Perm) -> "PermutationFactor":
        return cls(StrandPermutation(tuple(q + 1 for q in p)))

    def _perm(self) -> Perm:
        return tuple(q - 1 for q in self.permutation.images)

    def to_word(self) -> tuple[int, ...]:
        return tuple(_simple_to_word(self._perm()))


@dataclass(frozen=True)
class CanonicalForm:
    strands: int
    delta_power: int
    factors: tuple[PermutationFactor, ...]

    def to_word(self) -> BraidWord:
        """Expand back to a braid word: Delta^p followed by each factor's positive word."""
        delta_word = _simple_to_word(_delta(self.strands))
        if self.delta_power >= 0:
            letters = delta_word * self.delta_power
        else:
            letters = [-k for k in reversed(delta_word)] * (-self.delta_power)
        for f in self.factors:
            letters.extend(f.to_word())
        return BraidWord(self.strands, tuple(letters))

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "delta_power": self.delta_power,
            "factors": [list(f.permutation.images) for f in self.factors],
        }

    @property
    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.factors


class _NormalFormBuilder:
    """Accumulates Delta^power * factors, keeping the factor list left-normal."""

    def __init__(self, n: int):
        self.n = n
        self.power = 0
        self.factors: list[Perm] = []
        self.one = _identity(n)
        self.delta = _delta(n)

    def append_delta_inverse(self):
        # x Delta^-1 = Delta^-1 tau(x)
        self.power -= 1
        self.factors = [_tau(f) for f in self.factors]

    def append_simple(self, s: Perm):
        fs = self.factors
        fs.append(s)
        k = len(fs) - 1
        while k > 0:
            a, b = _left_weight(fs[k - 1], fs[k])
            if (a, b) == (fs[k - 1], fs[k]):
                break
            fs[k - 1], fs[k] = a, b
            k -= 1
        while fs and fs[-1] == self.one:
            fs.pop()
        while fs and fs[0] == self.delta:
            fs.pop(0)
            # Delta^p Delta = Delta^(p+1); the remaining factors stay put
            self.power += 1


def canonical_form(w: BraidWord) -> CanonicalForm:
    n = w.strands
    nf = _NormalFormBuilder(n)
    if n > 1:
        delta = _delta(n)
        for k in w.letters:
            i = abs(k) - 1
            if k > 0:
                nf.append_simple(_times_gen(nf.one, i))
            else:
                # sigma_i^-1 = Delta^-1 * (Delta sigma_i^-1), and Delta sigma_i^-1 is simple
                nf.append_delta_inverse()
                nf.append_simple(_times_gen(delta, i))
    return CanonicalForm(n, nf.power, tuple(PermutationFactor._from_perm(f) for f in nf.factors))


def words_equal(u: BraidWord, v: BraidWord) -> bool:
    _check_same_group((u, v))
    return canonical_form(u) == canonical_form(v)


def is_trivial(w: BraidWord) -> bool:
    return canonical_form(w).is_identity
