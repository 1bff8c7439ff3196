"""
Quasipositive factorizations and the positively braided surfaces they bound.

A factorization over n strands is an ordered list of bands w sigma_j w^-1.
Its surface is n disks joined by one positively twisted band per factor, so

    chi      = n - (number of bands)
    boundary = number of components of the braid closure
    genus    = (2 * pieces - chi - boundary) / 2

where ``pieces`` counts connected components (disks joined by bands), so a
disconnected surface gets the sum of the genera of its pieces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .braid import (BraidWord, closure_components, closure_permutation, concatenate,
                    exponent_sum, free_reduce, invert, parse_word)
from .errors import GroupMismatch, IndexOutOfRange


@dataclass(frozen=True)
class QPBand:
    conjugator: BraidWord
    generator_index: int

    def __post_init__(self):
        if not 1 <= self.generator_index < self.conjugator.strands:
            raise IndexOutOfRange(
                f"generator {self.generator_index} does not exist in B_{self.conjugator.strands}")

    @property
    def strands(self) -> int:
        return self.conjugator.strands

    def to_word(self) -> BraidWord:
        n = self.strands
        return concatenate(self.conjugator, BraidWord(n, (self.generator_index,)),
                           invert(self.conjugator))


@dataclass(frozen=True)
class QuasipositiveFactorization:
    strands: int
    bands: tuple[QPBand, ...] = ()

    def __post_init__(self):
        bands = tuple(self.bands)
        for b in bands:
            if b.strands != self.strands:
                raise GroupMismatch(
                    f"band on {b.strands} strands in a factorization on {self.strands}")
        object.__setattr__(self, "bands", bands)

    @classmethod
    def from_pairs(cls, strands: int, pairs: Iterable[tuple[Iterable[int], int]]):
        """Build from ``(conjugator letters, generator index)`` pairs."""
        return cls(strands, tuple(QPBand(BraidWord(strands, tuple(c)), j) for c, j in pairs))

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "bands": [{"conjugator": b.conjugator.to_text(), "generator": b.generator_index}
                      for b in self.bands],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QuasipositiveFactorization":
        if not isinstance(obj, dict) or set(obj) != {"strands", "bands"}:
            raise ValueError("factorization JSON needs exactly the keys 'strands' and 'bands'")
        n = obj["strands"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"bad strand count: {n!r}")
        bands = []
        for entry in obj["bands"]:
            if not isinstance(entry, dict) or set(entry) != {"conjugator", "generator"}:
                raise ValueError(f"bad band entry: {entry!r}")
            j = entry["generator"]
            if not isinstance(j, int) or isinstance(j, bool):
                raise ValueError(f"bad generator index: {j!r}")
            bands.append(QPBand(parse_word(entry["conjugator"], n), j))
        return cls(n, tuple(bands))


@dataclass(frozen=True)
class SurfaceType:
    euler_characteristic: int
    boundary_components: int
    connected_components: int = 1
    genus: int = field(init=False)

    def __post_init__(self):
        twice_genus = (2 * self.connected_components - self.euler_characteristic
                       - self.boundary_components)
        if (self.boundary_components < self.connected_components
                or self.connected_components < 1 or twice_genus < 0 or twice_genus % 2):
            raise AssertionError(
                f"inconsistent surface: chi={self.euler_characteristic}, "
                f"boundary={self.boundary_components}, pieces={self.connected_components}")
        object.__setattr__(self, "genus", twice_genus // 2)

    def to_json(self) -> dict:
        return {"chi": self.euler_characteristic, "boundary": self.boundary_components,
                "genus": self.genus}


def _pieces(f: "QuasipositiveFactorization") -> int:
    """Connected components of the surface: disks joined by the bands' endpoints."""
    parent = list(range(f.strands + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for b in f.bands:
        # the band sits at positions j, j+1 after the conjugator; pull back to the disks
        images = closure_permutation(b.conjugator).images
        start = {pos: s for s, pos in enumerate(images, 1)}
        j = b.generator_index
        parent[find(start[j])] = find(start[j + 1])
    return len({find(a) for a in range(1, f.strands + 1)})


def expand(f: QuasipositiveFactorization) -> BraidWord:
    if not f.bands:
        return BraidWord.identity(f.strands)
    return free_reduce(concatenate(*(b.to_word() for b in f.bands)))


def surface_type(f: QuasipositiveFactorization) -> SurfaceType:
    w = expand(f)
    assert exponent_sum(w) == len(f.bands)
    return SurfaceType(f.strands - len(f.bands), closure_components(w), _pieces(f))


def prepend_band(f: QuasipositiveFactorization, b: QPBand) -> QuasipositiveFactorization:
    if b.strands != f.strands:
        raise GroupMismatch(f"band on {b.strands} strands, factorization on {f.strands}")
    return QuasipositiveFactorization(f.strands, (b,) + f.bands)


def _shift(b: QPBand, offset: int, strands: int) -> QPBand:
    conj = tuple(k + offset if k > 0 else k - offset for k in b.conjugator.letters)
    return QPBand(BraidWord(strands, conj), b.generator_index + offset)


def boundary_sum(f: QuasipositiveFactorization,
                 g: QuasipositiveFactorization) -> QuasipositiveFactorization:
    """Stack f above g and join the bottom disk of f to the top disk of g by one band."""
    n = f.strands + g.strands
    bands = [_shift(b, 0, n) for b in f.bands]
    bands += [_shift(b, f.strands, n) for b in g.bands]
    bands.append(QPBand(BraidWord.identity(n), f.strands))
    return QuasipositiveFactorization(n, tuple(bands))


def load_factorization(path) -> QuasipositiveFactorization:
    with open(path, encoding="ascii") as fh:
        return QuasipositiveFactorization.from_json(json.load(fh))


# conjugator w shared by the last three bands of D'
_W = (3, -4, -1, -3, -3, -2, -1, -3)

_D = ((2,), 3), ((-1, -1, 2, 3, 4, 4, -3), 2), ((-3, 2), 1), ((-4,), 3)
_D_PRIME = ((), 2), (_W + (-2,), 1), (_W + (-2, 3, 1), 2), (_W + (3, 3), 4)

_CATALOG_NOTES = {
    "D": "slice disk D: four bands, closure is the knot K",
    "D'": "slice disk D': band sigma_2 followed by three bands conjugated by w",
    "A": "annulus A: band c = sigma_2 prepended to D",
    "A'": "annulus A': band c = sigma_2 prepended to D'",
    "A0": "accessory annulus: sigma_1 on 2 strands plus a 3-half-twisted band, "
          "rewritten as an extra disk and two bands",
    "T0": "accessory torus: A0 with a second twisted band on the other side, "
          "rewritten as a fourth disk and two bands",
}


def builtin_factorizations() -> dict[str, QuasipositiveFactorization]:
    """The named factorizations shipped with the toolkit.

    A0 and T0 have no printed braid words; their encodings here are one valid
    choice, pinned by the surface types they must produce (annulus and
    once-punctured torus).
    """
    qp = QuasipositiveFactorization.from_pairs
    D = qp(5, _D)
    Dp = qp(5, _D_PRIME)
    c = QPBand(BraidWord.identity(5), 2)
    return {
        "D": D,
        "D'": Dp,
        "A": prepend_band(D, c),
        "A'": prepend_band(Dp, c),
        "A0": qp(3, [((), 1), ((), 2), ((2,), 1)]),
        "T0": qp(4, [((), 1), ((), 2), ((2,), 1), ((), 3), ((3,), 1)]),
    }


def catalog_notes() -> dict[str, str]:
    return dict(_CATALOG_NOTES)
