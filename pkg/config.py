"""Configuration for the coloring pipeline, searches and the corpus runner."""

import os
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

# Palette: K = max degree of the input + PALETTE_SLACK
PALETTE_SLACK = 7

# Graphs with max degree at most this are colored by exact search first
SMALL_DEGREE_BOUND = 4
SMALL_DEGREE_COLORS = 7

# Node cap for exact search on small-degree pieces (retry with K colors on hit)
EXACT_NODE_LIMIT = 200_000

# Oracle: documented soft cap on edges and a hard node cap per palette size
ORACLE_EDGE_SOFT_CAP = 16
ORACLE_NODE_LIMIT = 2_000_000
ORACLE_K_MAX = 12

# Extension: attempt budget for configuration moves before falling back
EXTENSION_ATTEMPT_BUDGET = 20_000

# Fallback search: recolor at most this many edges near the removed edge
FALLBACK_RADIUS = 6
FALLBACK_NODE_LIMIT = 50_000

# Corpus defaults
CORPUS_SEEDS = [1, 2, 3, 4, 5]
STACKED_SIZES = list(range(10, 301, 4))
SUBDIVIDED_ICOSAHEDRON_EDGES = list(range(1, 11))
SUBDIVIDED_PRISM_SIZES = list(range(5, 20))
SUBDIVIDED_WHEEL_SIZES = list(range(5, 51, 2))
WHEEL_SIZES = list(range(3, 51))
GRID_SIZES = [(r, c) for r in range(2, 13) for c in range(2, 13)]
PRISM_SIZES = list(range(3, 31))
CYCLE_SIZES = list(range(3, 21))
COMPLETE_SIZES = [1, 2, 3, 4]

# Corpus instances up to this many edges also get an oracle run
CORPUS_ORACLE_EDGES = 12

# Environment variable holding the default worker count
JOBS_ENV_VAR = "ACYCLIC_JOBS"

# File conventions
ROTATIONS_MARKER = "rotations"
REPORT_NAME = "corpus-report.jsonl"


def default_jobs() -> int:
    """Worker count from the environment, else 1."""
    raw = os.environ.get(JOBS_ENV_VAR, "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass
class RunConfig:
    """Flags of one command invocation, after validation."""

    command: str
    inputs: Tuple[str, ...] = ()
    output: Optional[str] = None
    trace_path: Optional[str] = None
    report_path: Optional[str] = None
    dot_path: Optional[str] = None
    seeds: List[int] = field(default_factory=lambda: list(CORPUS_SEEDS))
    palette: Optional[int] = None
    k_max: int = ORACLE_K_MAX
    fallback_radius: int = FALLBACK_RADIUS
    oracle_edges: int = CORPUS_ORACLE_EDGES
    jobs: int = 1
    strict: bool = False
    verbosity: int = 0

    @classmethod
    def from_env(cls, command: str, **overrides) -> "RunConfig":
        """Defaults for ``command`` with ``jobs`` read from JOBS_ENV_VAR."""
        settings = {"jobs": default_jobs()}
        settings.update({k: v for k, v in overrides.items() if v is not None})
        return cls(command=command, **settings)

    def palette_size(self, max_degree: int) -> int:
        """The palette given with ``--k``, else max degree + PALETTE_SLACK."""
        return self.palette if self.palette is not None else max_degree + PALETTE_SLACK
