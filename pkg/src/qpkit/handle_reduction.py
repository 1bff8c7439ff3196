"""
Dehornoy handle reduction, a second word-problem engine.

This never touches permutation braids, so it is used as an independent
cross-check on :mod:`qpkit.garside`.  A sigma_i-handle is a subword
sigma_i^e v sigma_i^-e whose interior v uses only generators of index > i.
Reducing the leftmost-ending handle removes its ends and replaces each
sigma_{i+1}^d in v by sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e.  The process
terminates, and the word is trivial iff it reduces to the empty word.
"""

from __future__ import annotations

from .braid import BraidWord


class ReductionLimit(RuntimeError):
    pass


def _find_handle(letters: list[int]) -> tuple[int, int] | None:
    # open_at[i] = position of the latest sigma_i^{+-1} not yet blocked
    open_at: dict[int, int] = {}
    for j, k in enumerate(letters):
        i = abs(k)
        start = open_at.get(i)
        if start is not None and letters[start] == -k:
            return start, j
        # a letter of index i blocks every pending handle of index >= i
        for idx in [g for g in open_at if g >= i]:
            del open_at[idx]
        open_at[i] = j
    return None


def reduce_word(w: BraidWord, max_steps: int = 1_000_000) -> BraidWord:
    letters = list(w.letters)
    for _ in range(max_steps):
        h = _find_handle(letters)
        if h is None:
            return BraidWord(w.strands, tuple(letters))
        a, b = h
        e = 1 if letters[a] > 0 else -1
        i = abs(letters[a])
        middle = []
        for k in letters[a + 1:b]:
            if abs(k) == i + 1:
                d = 1 if k > 0 else -1
                middle.extend([-e * (i + 1), d * i, e * (i + 1)])
            else:
                middle.append(k)
        letters[a:b + 1] = middle
    raise ReductionLimit(f"handle reduction did not finish in {max_steps} steps")


def is_trivial(w: BraidWord, max_steps: int = 1_000_000) -> bool:
    return len(reduce_word(w, max_steps)) == 0
