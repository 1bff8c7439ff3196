"""
Numerical bookkeeping for Stein handle diagrams.

Each 2-handle is attached along a Legendrian knot described only by four
counts read off its front projection.  From those:

    tb       = writhe - right cusps
    rotation = (left cusps oriented down) - (right cusps oriented up)

A diagram is Stein when every framing equals tb - 1.  Its intersection form is
the linking matrix and c1 pairs with the i-th handle class as rotation(K_i).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import NotStein
from .lattice import IntersectionForm

_COUNT_KEYS = ("writhe", "right_cusps", "left_cusps_down", "right_cusps_up")


@dataclass(frozen=True)
class LegendrianCounts:
    writhe: int
    right_cusps: int
    left_cusps_down: int = 0
    right_cusps_up: int = 0

    def __post_init__(self):
        if min(self.right_cusps, self.left_cusps_down, self.right_cusps_up) < 0:
            raise ValueError("cusp counts must be nonnegative")
        if self.right_cusps_up > self.right_cusps:
            raise ValueError("more upward right cusps than right cusps")


def tb(counts: LegendrianCounts) -> int:
    return counts.writhe - counts.right_cusps


def rotation(counts: LegendrianCounts) -> int:
    return counts.left_cusps_down - counts.right_cusps_up


def parity_ok(counts: LegendrianCounts) -> bool:
    """Front diagrams always have rotation = tb + 1 (mod 2)."""
    return (rotation(counts) - tb(counts) - 1) % 2 == 0


@dataclass(frozen=True)
class HandleComponent:
    counts: LegendrianCounts
    framing: int


@dataclass(frozen=True)
class SteinHandleDiagram:
    components: tuple[HandleComponent, ...]
    linking: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        comps = tuple(self.components)
        lk = tuple(tuple(int(x) for x in row) for row in self.linking)
        r = len(comps)
        if len(lk) != r or any(len(row) != r for row in lk):
            raise ValueError(f"linking matrix must be {r}x{r}")
        if any(lk[i][j] != lk[j][i] for i in range(r) for j in range(i)):
            raise ValueError("linking matrix must be symmetric")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "linking", lk)

    @classmethod
    def from_json(cls, obj: dict) -> "SteinHandleDiagram":
        if not isinstance(obj, dict) or set(obj) != {"components", "linking"}:
            raise ValueError("Stein JSON needs exactly the keys 'components' and 'linking'")
        comps = []
        for entry in obj["components"]:
            if not isinstance(entry, dict) or set(entry) != set(_COUNT_KEYS) | {"framing"}:
                raise ValueError(f"bad component entry: {entry!r}")
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in entry.values()):
                raise ValueError(f"non-integer field in {entry!r}")
            counts = LegendrianCounts(*(entry[k] for k in _COUNT_KEYS))
            comps.append(HandleComponent(counts, entry["framing"]))
        return cls(tuple(comps), obj["linking"])

    def to_json(self) -> dict:
        comps = []
        for c in self.components:
            entry = {k: getattr(c.counts, k) for k in _COUNT_KEYS}
            entry["framing"] = c.framing
            comps.append(entry)
        return {"components": comps, "linking": [list(row) for row in self.linking]}


def load_stein(path) -> SteinHandleDiagram:
    with open(path, encoding="ascii") as fh:
        return SteinHandleDiagram.from_json(json.load(fh))


@dataclass(frozen=True)
class Violation:
    component: int
    reason: str

    def to_json(self) -> dict:
        return {"component": self.component, "reason": self.reason}


@dataclass(frozen=True)
class SteinCheck:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "stein_ok" if self.ok else "violation"


def validate_stein(d: SteinHandleDiagram) -> SteinCheck:
    """Check framing = tb - 1 and that the linking diagonal carries the framings.

    Components are numbered from 1 in the violation list.
    """
    bad = []
    for i, c in enumerate(d.components):
        want = tb(c.counts) - 1
        if c.framing != want:
            bad.append(Violation(i + 1, f"framing {c.framing} but tb - 1 = {want}"))
        if d.linking[i][i] != c.framing:
            bad.append(Violation(
                i + 1, f"linking diagonal {d.linking[i][i]} differs from framing {c.framing}"))
    return SteinCheck(tuple(bad))


def to_lattice(d: SteinHandleDiagram) -> tuple[IntersectionForm, tuple[int, ...]]:
    check = validate_stein(d)
    if not check.ok:
        raise NotStein("; ".join(f"component {v.component}: {v.reason}"
                                 for v in check.violations), check.violations)
    return IntersectionForm(d.linking), tuple(rotation(c.counts) for c in d.components)


def diagram(rows: Sequence[tuple[int, int, int, int, int]], linking) -> SteinHandleDiagram:
    """Shorthand: rows of (writhe, right_cusps, left_cusps_down, right_cusps_up, framing)."""
    return SteinHandleDiagram(
        tuple(HandleComponent(LegendrianCounts(*r[:4]), r[4]) for r in rows), linking)
