"""Data files shipped with qpkit (braid words, factorizations, presentations, Stein data)."""

from importlib import resources
from pathlib import Path


def path(name: str) -> Path:
    p = Path(str(resources.files(__name__).joinpath(name)))
    if not p.is_file():
        raise FileNotFoundError(f"no shipped data file named {name!r}")
    return p


def names() -> list[str]:
    root = Path(str(resources.files(__name__)))
    return sorted(p.name for p in root.iterdir() if p.is_file() and p.suffix != ".py")
