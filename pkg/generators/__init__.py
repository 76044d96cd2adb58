"""Planar-by-construction graph families and the default corpus."""

from typing import Dict, List, Optional, Sequence

from config import (
    COMPLETE_SIZES,
    CORPUS_SEEDS,
    CYCLE_SIZES,
    GRID_SIZES,
    PRISM_SIZES,
    STACKED_SIZES,
    SUBDIVIDED_ICOSAHEDRON_EDGES,
    SUBDIVIDED_PRISM_SIZES,
    SUBDIVIDED_WHEEL_SIZES,
    WHEEL_SIZES,
)
from models.errors import GeneratorParameterError

from .base import BaseGenerator, CorpusSpec, GeneratedGraph, assemble
from .families import (
    CompleteGenerator,
    CycleGenerator,
    GridGenerator,
    IcosahedronGenerator,
    PrismGenerator,
    StackedTriangulationGenerator,
    SubdividedGenerator,
    WheelGenerator,
    subdivide,
)

GENERATORS: Dict[str, BaseGenerator] = {
    g.family: g
    for g in (
        WheelGenerator(),
        GridGenerator(),
        CycleGenerator(),
        CompleteGenerator(),
        PrismGenerator(),
        IcosahedronGenerator(),
        StackedTriangulationGenerator(),
        SubdividedGenerator(),
    )
}

# Family aliases for command line convenience
FAMILY_ALIASES = {
    "stacked": "stacked_triangulation",
    "triangulation": "stacked_triangulation",
    "ico": "icosahedron",
    "k": "complete",
    "subdivide": "subdivided",
}


def normalize_family(name: str) -> Optional[str]:
    """Resolve a family name or alias to its canonical name."""
    lowered = name.strip().lower().replace("-", "_")
    if lowered in GENERATORS:
        return lowered
    return FAMILY_ALIASES.get(lowered)


def get_generator(name: str) -> BaseGenerator:
    family = normalize_family(name)
    if family is None:
        raise GeneratorParameterError(f"unknown graph family: {name}")
    return GENERATORS[family]


def generate(spec: CorpusSpec) -> GeneratedGraph:
    """Deterministic family member for ``spec``."""
    return get_generator(spec.family).generate(spec.parameters, seed=spec.seed)


def default_corpus(seeds: Optional[Sequence[int]] = None) -> List[CorpusSpec]:
    """Deterministic families once, randomized families once per seed."""
    seeds = list(CORPUS_SEEDS if seeds is None else seeds)
    specs: List[CorpusSpec] = []
    specs += [CorpusSpec("wheel", (k,)) for k in WHEEL_SIZES]
    specs += [CorpusSpec("grid", (r, c)) for r, c in GRID_SIZES]
    specs += [CorpusSpec("prism", (k,)) for k in PRISM_SIZES]
    specs += [CorpusSpec("cycle", (n,)) for n in CYCLE_SIZES]
    specs += [CorpusSpec("complete", (n,)) for n in COMPLETE_SIZES]
    specs.append(CorpusSpec("icosahedron"))
    for seed in seeds:
        specs += [CorpusSpec("stacked_triangulation", (n,), seed) for n in STACKED_SIZES]
        specs += [CorpusSpec("subdivided", ("stacked_triangulation", n, max(1, n // 10)), seed) for n in STACKED_SIZES[::2]]
        specs += [CorpusSpec("subdivided", ("icosahedron", e), seed) for e in SUBDIVIDED_ICOSAHEDRON_EDGES]
        specs += [CorpusSpec("subdivided", ("prism", k, 2), seed) for k in SUBDIVIDED_PRISM_SIZES]
        specs += [CorpusSpec("subdivided", ("wheel", k, k // 4 + 1), seed) for k in SUBDIVIDED_WHEEL_SIZES]
    return specs


__all__ = [
    "BaseGenerator",
    "CorpusSpec",
    "GeneratedGraph",
    "GENERATORS",
    "FAMILY_ALIASES",
    "assemble",
    "default_corpus",
    "generate",
    "get_generator",
    "normalize_family",
    "subdivide",
]
