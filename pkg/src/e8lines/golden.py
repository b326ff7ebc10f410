"""Reference values shipped with the package."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources


@lru_cache(maxsize=None)
def load() -> dict:
    text = resources.files("e8lines").joinpath("data/golden.json").read_text(encoding="utf-8")
    return json.loads(text)


def lattice_rows() -> list[tuple]:
    return [tuple(r) for r in load()["lattice"]["rows"]]


def nk(mode: str) -> dict[int, int]:
    return {int(k): v for k, v in load()["nk"].get(mode, {}).items()}


def nk_lower_bounds(mode: str) -> dict[int, float]:
    return {int(k): float(v) for k, v in load()["nk_lower_bounds"].get(mode, {}).items()}


def orbit_sizes(mode: str, k: int) -> dict[tuple, int] | None:
    rows = load()["orbits"].get(mode, {}).get(str(k))
    if rows is None:
        return None
    return {tuple(inv): size for inv, size in rows}
