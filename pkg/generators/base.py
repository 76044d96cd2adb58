"""Base generator class and the corpus instance description."""

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from models.embedding import PlaneEmbedding
from models.errors import GeneratorParameterError
from models.graph import Graph, normalize_edge

Parameter = Union[int, str]
FaceList = List[Tuple[int, ...]]


@dataclass(frozen=True)
class CorpusSpec:
    """One corpus instance: a family, its parameters and an RNG seed."""

    family: str
    parameters: Tuple[Parameter, ...] = ()
    seed: int = 0

    @property
    def name(self) -> str:
        args = ",".join(str(p) for p in self.parameters)
        return f"{self.family}({args})#{self.seed}"

    def to_dict(self) -> dict:
        return {"family": self.family, "parameters": list(self.parameters), "seed": self.seed}

    @classmethod
    def from_dict(cls, data: dict) -> "CorpusSpec":
        return cls(family=data["family"], parameters=tuple(data.get("parameters", ())), seed=data.get("seed", 0))


@dataclass
class GeneratedGraph:
    """A generated graph with the rotation system it was built from."""

    graph: Graph
    embedding: PlaneEmbedding
    spec: CorpusSpec
    faces: FaceList = field(default_factory=list)


class BaseGenerator(ABC):
    """Abstract base class for planar graph families.

    Families describe their graphs as oriented face walks (every edge
    traversed once in each direction); the graph and its rotation system
    are both read off the walks.
    """

    family: str = ""
    parameter_names: Tuple[str, ...] = ()

    def generate(self, parameters: Sequence[Parameter] = (), seed: int = 0) -> GeneratedGraph:
        """Build the family member for ``parameters``.

        Raises:
            GeneratorParameterError: wrong number or range of parameters.
        """
        params = self._coerce(parameters)
        n, faces = self._faces(params, random.Random(seed))
        spec = CorpusSpec(family=self.family, parameters=tuple(parameters), seed=seed)
        return assemble(n, faces, spec)

    def _coerce(self, parameters: Sequence[Parameter]) -> Tuple[int, ...]:
        if len(parameters) != len(self.parameter_names):
            expected = ", ".join(self.parameter_names) or "no parameters"
            raise GeneratorParameterError(f"{self.family} takes {expected}; got {len(parameters)} values")
        try:
            return tuple(int(p) for p in parameters)
        except (TypeError, ValueError) as exc:
            raise GeneratorParameterError(f"{self.family} parameters must be integers: {exc}") from exc

    @staticmethod
    def _require(condition: bool, message: str) -> None:
        if not condition:
            raise GeneratorParameterError(message)

    @abstractmethod
    def _faces(self, params: Tuple[int, ...], rng: random.Random) -> Tuple[int, FaceList]:
        """Vertex count and oriented face walks."""
        pass


def assemble(n: int, faces: FaceList, spec: Optional[CorpusSpec] = None) -> GeneratedGraph:
    """Graph and embedding from oriented face walks."""
    edges = set()
    for walk in faces:
        k = len(walk)
        for idx in range(k):
            a, b = walk[idx], walk[(idx + 1) % k]
            if a != b:
                edges.add(normalize_edge(a, b))
    graph = Graph(n=n, edges=tuple(sorted(edges)))
    embedding = PlaneEmbedding.from_faces(n, faces)
    return GeneratedGraph(graph=graph, embedding=embedding, spec=spec or CorpusSpec(family="faces"), faces=list(faces))
