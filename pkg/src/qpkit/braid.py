"""
Words in the Artin generators of the braid group B_n.

A word is stored as a tuple of nonzero signed integers: ``k`` stands for
sigma_|k| raised to sign(k).  Generators are 1-based, so B_n uses indices
1..n-1.

CONVENTION: the leftmost letter acts first.  ``closure_permutation`` sends
the strand starting at position j to the position where it ends after all
letters have been applied in reading order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import GroupMismatch, IndexOutOfRange, MalformedToken

_COMMENT = re.compile(r"#[^\n]*")
_POWER = re.compile(r"^([+-]?\d+)\^([+-]?\d+)$")


class BraidLetter(NamedTuple):
    index: int
    sign: int

    @classmethod
    def from_int(cls, k: int) -> "BraidLetter":
        if k == 0:
            raise MalformedToken("0 is not a braid generator")
        return cls(abs(k), 1 if k > 0 else -1)

    def __int__(self) -> int:
        return self.index * self.sign


@dataclass(frozen=True)
class StrandPermutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "StrandPermutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.images)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, fixed points included, each starting at its least element."""
        seen = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start - 1]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j - 1]
            out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        letters = tuple(int(k) for k in self.letters)
        for k in letters:
            if k == 0:
                raise MalformedToken("0 is not a braid generator")
            if abs(k) >= self.strands:
                raise IndexOutOfRange(
                    f"generator {abs(k)} does not exist in B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[BraidLetter]:
        return (BraidLetter.from_int(k) for k in self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concatenate(self, other)

    def __str__(self) -> str:
        return " ".join(str(k) for k in self.letters)

    def to_text(self) -> str:
        return str(self)


def expand_powers(text: str) -> str:
    """Rewrite ``i^k`` tokens as |k| copies of ``±i``; other tokens pass through.

    >>> expand_powers("1^-2 3 4^2")
    '-1 -1 3 4 4'
    """
    text = _COMMENT.sub("", text)
    out = []
    for tok in text.split():
        m = _POWER.match(tok)
        if m is None:
            out.append(tok)
            continue
        gen, power = int(m.group(1)), int(m.group(2))
        if gen == 0:
            raise MalformedToken(f"bad generator in {tok!r}")
        letter = gen if power > 0 else -gen
        out.extend([str(letter)] * abs(power))
    return " ".join(out)


def parse_word(text: str, strands: int | None = None) -> BraidWord:
    """Parse the braid-word text format.

    Tokens are nonzero decimal integers separated by whitespace; ``#`` starts a
    comment running to the end of the line.  When ``strands`` is omitted it is
    inferred as max|k| + 1 (or 1 for the empty word).
    """
    text = _COMMENT.sub("", text)
    letters = []
    for tok in text.split():
        try:
            k = int(tok, 10)
        except ValueError:
            raise MalformedToken(f"not an integer token: {tok!r}") from None
        if k == 0:
            raise MalformedToken("0 is not a braid generator")
        letters.append(k)
    if strands is None:
        strands = max((abs(k) for k in letters), default=0) + 1
    return BraidWord(strands, tuple(letters))


def word(strands: int, letters: Iterable[int] = ()) -> BraidWord:
    return BraidWord(strands, tuple(letters))


def _check_same_group(words: Sequence[BraidWord]) -> int:
    counts = {w.strands for w in words}
    if len(counts) > 1:
        raise GroupMismatch(f"strand counts differ: {sorted(counts)}")
    return counts.pop()


def concatenate(*words: BraidWord) -> BraidWord:
    if not words:
        raise ValueError("concatenate needs at least one word")
    n = _check_same_group(words)
    return BraidWord(n, tuple(k for w in words for k in w.letters))


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for k in w.letters:
        if stack and stack[-1] == -k:
            stack.pop()
        else:
            stack.append(k)
    return BraidWord(w.strands, tuple(stack))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-k for k in reversed(w.letters)))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if k > 0 else -1 for k in w.letters)


def closure_permutation(w: BraidWord) -> StrandPermutation:
    n = w.strands
    at = list(range(n))  # at[p] = strand currently at position p
    for k in w.letters:
        i = abs(k) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    images = [0] * n
    for p, strand in enumerate(at):
        images[strand] = p + 1
    return StrandPermutation(tuple(images))


def closure_components(w: BraidWord) -> int:
    return closure_permutation(w).cycle_count()
