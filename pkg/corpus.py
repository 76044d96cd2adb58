"""Corpus runner: color, verify and cross-check every generated instance."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from analysis.acyclic import verify_acyclic
from analysis.discharging import discharge
from analysis.structure import is_biconnected_block
from config import CORPUS_ORACLE_EDGES, FALLBACK_RADIUS, PALETTE_SLACK
from detectors import check_configuration, find_configuration
from generators import CorpusSpec, generate
from models.errors import AcyclicToolkitError, SearchLimitExceeded
from models.graph import Graph
from solver import Colorizer, exact_acyclic_index

logger = logging.getLogger(__name__)


@dataclass
class InstanceResult:
    """Outcome of one corpus instance. Optional checks are None when not applicable."""

    index: int
    name: str
    family: str
    seed: int
    n: int
    m: int
    max_degree: int
    palette: int
    colors_used: int = 0
    max_color: int = 0
    verified: bool = False
    error: Optional[str] = None
    steps: int = 0
    fallback_incidents: int = 0
    configuration_found: Optional[bool] = None
    conserved: Optional[bool] = None
    oracle_index: Optional[int] = None
    within_delta_plus_2: Optional[bool] = None

    @property
    def margin(self) -> int:
        return self.palette - self.max_color

    def to_dict(self) -> dict:
        data = asdict(self)
        data["margin"] = self.margin
        return data


def configuration_check(g: Graph) -> Optional[bool]:
    """Whether a 2-connected graph with max degree 5 or more holds a valid configuration.

    None when the structural claim does not apply to ``g``.
    """
    if g.max_degree < 5 or not g.is_connected() or not is_biconnected_block(g):
        return None
    cfg = find_configuration(g)
    return cfg is not None and check_configuration(g, cfg)


def run_instance(index: int, spec: CorpusSpec, fallback_radius: int = FALLBACK_RADIUS, oracle_edges: int = CORPUS_ORACLE_EDGES) -> InstanceResult:
    """Color and verify one instance, then run the structural cross-checks."""
    generated = generate(spec)
    g = generated.graph
    colorizer = Colorizer(g, fallback_radius=fallback_radius)
    result = InstanceResult(
        index=index,
        name=spec.name,
        family=spec.family,
        seed=spec.seed,
        n=g.n,
        m=g.m,
        max_degree=g.max_degree,
        palette=colorizer.palette_size,
    )

    try:
        coloring = colorizer.run()
        result.verified = verify_acyclic(g, coloring, colorizer.palette_size).accepted
        result.colors_used = len(coloring.colors_used())
        result.max_color = coloring.max_color
    except AcyclicToolkitError as exc:
        result.error = f"{type(exc).__name__}: {exc}"
        logger.error("%s: %s", spec.name, result.error)
    result.steps = len(colorizer.state.trace)
    result.fallback_incidents = colorizer.state.fallback_incidents

    result.configuration_found = configuration_check(g)

    report = discharge(g, generated.embedding)
    result.conserved = report.conserved and report.initial.total == Fraction(-12 * report.components)

    if 0 < g.m <= oracle_edges:
        try:
            exact = exact_acyclic_index(g, g.max_degree + PALETTE_SLACK)
        except SearchLimitExceeded:
            logger.warning("%s: oracle gave up", spec.name)
            return result
        result.oracle_index = exact
        result.within_delta_plus_2 = exact is not None and exact <= g.max_degree + 2
    return result


def _run_indexed(job: Tuple[int, CorpusSpec, int, int]) -> InstanceResult:
    return run_instance(*job)


class CorpusRunner:
    """Run a list of corpus instances, optionally across worker processes."""

    def __init__(
        self,
        specs: Sequence[CorpusSpec],
        jobs: int = 1,
        fallback_radius: int = FALLBACK_RADIUS,
        oracle_edges: int = CORPUS_ORACLE_EDGES,
    ):
        self.specs = list(specs)
        self.jobs = max(1, jobs)
        self.fallback_radius = fallback_radius
        self.oracle_edges = oracle_edges

    def run(self) -> List[InstanceResult]:
        """Results in instance order, whatever the worker count."""
        jobs = [(i, spec, self.fallback_radius, self.oracle_edges) for i, spec in enumerate(self.specs)]
        logger.info("running %d instances on %d workers", len(jobs), self.jobs)
        if self.jobs == 1:
            results = [_run_indexed(job) for job in jobs]
        else:
            with ProcessPoolExecutor(max_workers=self.jobs) as pool:
                results = list(pool.map(_run_indexed, jobs, chunksize=8))
        return sorted(results, key=lambda r: r.index)

    @staticmethod
    def frame(results: Sequence[InstanceResult]) -> pd.DataFrame:
        return pd.DataFrame([r.to_dict() for r in results])

    @classmethod
    def summary(cls, results: Sequence[InstanceResult]) -> pd.DataFrame:
        """Per-family counts, largest colors and smallest margins."""
        df = cls.frame(results)
        if df.empty:
            return pd.DataFrame()
        grouped = df.groupby("family", sort=True)
        return pd.DataFrame(
            {
                "instances": grouped.size(),
                "verified": grouped["verified"].sum().astype(int),
                "max_degree": grouped["max_degree"].max(),
                "max_color": grouped["max_color"].max(),
                "min_margin": grouped["margin"].min(),
                "fallback": grouped["fallback_incidents"].sum().astype(int),
            }
        )

    @classmethod
    def histogram(cls, results: Sequence[InstanceResult]) -> Dict[int, int]:
        """Number of instances per count of colors used."""
        df = cls.frame(results)
        if df.empty:
            return {}
        counts = df[df["verified"]]["colors_used"].value_counts()
        return {int(k): int(v) for k, v in sorted(counts.items())}

    @classmethod
    def totals(cls, results: Sequence[InstanceResult]) -> Dict[str, object]:
        df = cls.frame(results)
        if df.empty:
            return {"instances": 0, "verified": 0, "failed": 0, "fallback_incidents": 0}
        verified = int(df["verified"].sum())
        oracle = df[df["oracle_index"].notna()]
        configs = df[df["configuration_found"].notna()]
        conserved = df[df["conserved"].notna()]
        return {
            "instances": int(len(df)),
            "verified": verified,
            "failed": int(len(df)) - verified,
            "fallback_incidents": int(df["fallback_incidents"].sum()),
            "min_margin": int(df[df["verified"]]["margin"].min()) if verified else None,
            "configurations_missing": int((~configs["configuration_found"].astype(bool)).sum()),
            "not_conserved": int((~conserved["conserved"].astype(bool)).sum()),
            "oracle_instances": int(len(oracle)),
            "within_delta_plus_2": f"{int(oracle['within_delta_plus_2'].astype(bool).sum())}/{len(oracle)}",
        }

    @classmethod
    def report_lines(cls, results: Sequence[InstanceResult]) -> List[dict]:
        """One record per instance followed by one summary record."""
        lines = [r.to_dict() for r in results]
        lines.append({"summary": cls.totals(results), "colors_used": {str(k): v for k, v in cls.histogram(results).items()}})
        return lines
