"""Random braid words and random relation-preserving rewrites, for property tests."""

import random

from qpkit.braid import BraidWord


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    if n < 2:
        return BraidWord(n, ())
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def _templates(i: int, j: int):
    """Relator-equivalent (lhs, rhs) pairs for adjacent generators i, j = i +- 1."""
    return [
        ((i, j, i), (j, i, j)),
        ((-i, -j, -i), (-j, -i, -j)),
        ((i, j, -i), (-j, i, j)),
        ((i, -j, -i), (-j, -i, j)),
    ]


def random_rewrite(rng: random.Random, w: BraidWord, max_len: int = 60) -> BraidWord:
    """Apply one Artin move, commutation, or free insertion/deletion somewhere in w."""
    n = w.strands
    L = list(w.letters)
    for _ in range(20):
        move = rng.randrange(4)
        if move == 0 and len(L) + 2 <= max_len and n > 1:
            k = rng.choice((1, -1)) * rng.randint(1, n - 1)
            p = rng.randint(0, len(L))
            return BraidWord(n, tuple(L[:p] + [k, -k] + L[p:]))
        if move == 1:
            spots = [p for p in range(len(L) - 1) if L[p] == -L[p + 1]]
            if spots:
                p = rng.choice(spots)
                return BraidWord(n, tuple(L[:p] + L[p + 2:]))
        if move == 2:
            spots = [p for p in range(len(L) - 1) if abs(abs(L[p]) - abs(L[p + 1])) >= 2]
            if spots:
                p = rng.choice(spots)
                L[p], L[p + 1] = L[p + 1], L[p]
                return BraidWord(n, tuple(L))
        if move == 3:
            hits = []
            for p in range(len(L) - 2):
                a, b = abs(L[p]), abs(L[p + 1])
                if abs(a - b) != 1:
                    continue
                for lhs, rhs in _templates(a, b):
                    for x, y in ((lhs, rhs), (rhs, lhs)):
                        if tuple(L[p:p + 3]) == x:
                            hits.append((p, y))
            if hits:
                p, y = rng.choice(hits)
                return BraidWord(n, tuple(L[:p] + list(y) + L[p + 3:]))
    return w


def random_equivalent(rng: random.Random, w: BraidWord, moves: int, max_len: int = 60) -> BraidWord:
    for _ in range(moves):
        w = random_rewrite(rng, w, max_len)
    return w


def track_strands(n: int, letters) -> tuple:
    """Independent closure permutation: follow each strand through the word one at a time."""
    images = []
    for start in range(1, n + 1):
        pos = start
        for k in letters:
            i = abs(k)
            if pos == i:
                pos = i + 1
            elif pos == i + 1:
                pos = i
        images.append(pos)
    return tuple(images)
