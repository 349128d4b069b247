"""Corpus configuration and the builtin ring corpus."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .rings import DEFAULT_SIZE_CAP, Ring
from .specs import parse_ring_spec


@dataclass(frozen=True)
class CorpusConfig:
    """A list of ring specs plus the caps applied when building them."""

    specs: tuple[str, ...]
    max_order: Optional[int] = None
    max_lattice: Optional[int] = None
    predicates: Optional[tuple[str, ...]] = None
    format: str = "text"


def builtin_specs() -> tuple[str, ...]:
    """Deterministic default corpus covering the key example rings."""
    specs = [f"Zn:{n}" for n in range(1, 31)]
    specs += [f"dsum(Zn:{a},Zn:{b})" for a in range(1, 7) for b in range(1, 7)]
    specs += [f"zmul:{n}" for n in range(1, 9)]
    specs += [
        "M:2:Zn:2",
        "T:2:Zn:2",
        "T:2:Zn:3",
        "quot(Zn:12,gen(4))",
        "quot(Zn:12,gen(6))",
    ]
    return tuple(specs)


def build_builtin_corpus(max_order: Optional[int] = None) -> CorpusConfig:
    return CorpusConfig(specs=builtin_specs(), max_order=max_order)


def load_corpus_file(path: str | Path) -> CorpusConfig:
    """Read a corpus file: a JSON list of specs, or an object with caps."""
    data = json.loads(Path(path).read_text())
    if isinstance(data, list):
        data = {"specs": data}
    if not isinstance(data, dict) or "specs" not in data:
        raise ValueError(f"{path}: expected a JSON list of specs or an object with 'specs'")
    specs = data["specs"]
    if not isinstance(specs, list) or not all(isinstance(s, str) for s in specs):
        raise ValueError(f"{path}: 'specs' must be a list of strings")
    return CorpusConfig(
        specs=tuple(specs),
        max_order=data.get("max_order"),
        max_lattice=data.get("max_lattice"),
        predicates=tuple(data["predicates"]) if "predicates" in data else None,
        format=data.get("format", "text"),
    )


def build_rings(config: CorpusConfig, size_cap: int = DEFAULT_SIZE_CAP) -> list[Ring]:
    """Parse every spec up front, then drop rings above the order cap."""
    rings = [parse_ring_spec(s, size_cap=size_cap) for s in config.specs]
    if config.max_order is not None:
        rings = [r for r in rings if r.order <= config.max_order]
    return rings


__all__ = [
    "CorpusConfig",
    "build_builtin_corpus",
    "build_rings",
    "builtin_specs",
    "load_corpus_file",
]
