"""Planar graph families described by oriented face walks."""

import random
from typing import Dict, List, Sequence, Tuple

from models.errors import GeneratorParameterError
from models.graph import Edge, normalize_edge

from .base import BaseGenerator, CorpusSpec, FaceList, GeneratedGraph, Parameter, assemble

K4_FACES: FaceList = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]


class WheelGenerator(BaseGenerator):
    """Hub 0 joined to a rim cycle 1..k."""

    family = "wheel"
    parameter_names = ("k",)

    def _faces(self, params, rng):
        (k,) = params
        self._require(k >= 3, f"wheel needs k >= 3, got {k}")
        rim = [1 + i for i in range(k)]
        faces = [(0, rim[i], rim[(i + 1) % k]) for i in range(k)]
        faces.append(tuple(reversed(rim)))
        return k + 1, faces


class GridGenerator(BaseGenerator):
    """r x c grid; vertex (i, j) has id i * c + j."""

    family = "grid"
    parameter_names = ("rows", "cols")

    def _faces(self, params, rng):
        r, c = params
        self._require(r >= 2 and c >= 2, f"grid needs at least 2 x 2, got {r} x {c}")

        def at(i: int, j: int) -> int:
            return i * c + j

        faces = [
            (at(i, j), at(i, j + 1), at(i + 1, j + 1), at(i + 1, j))
            for i in range(r - 1)
            for j in range(c - 1)
        ]
        outer = [at(0, j) for j in range(c - 1, -1, -1)]
        outer += [at(i, 0) for i in range(1, r)]
        outer += [at(r - 1, j) for j in range(1, c)]
        outer += [at(i, c - 1) for i in range(r - 2, 0, -1)]
        faces.append(tuple(outer))
        return r * c, faces


class CycleGenerator(BaseGenerator):
    family = "cycle"
    parameter_names = ("n",)

    def _faces(self, params, rng):
        (n,) = params
        self._require(n >= 3, f"cycle needs n >= 3, got {n}")
        ring = tuple(range(n))
        return n, [ring, tuple(reversed(ring))]


class CompleteGenerator(BaseGenerator):
    """K_n; only the planar members n <= 4."""

    family = "complete"
    parameter_names = ("n",)

    def _faces(self, params, rng):
        (n,) = params
        self._require(1 <= n <= 4, f"complete graphs are planar only for n <= 4, got {n}")
        if n == 1:
            return 1, []
        if n == 2:
            return 2, [(0, 1)]
        if n == 3:
            return 3, [(0, 1, 2), (2, 1, 0)]
        return 4, list(K4_FACES)


class PrismGenerator(BaseGenerator):
    """Two k-cycles 0..k-1 and k..2k-1 joined by spokes i ~ k+i."""

    family = "prism"
    parameter_names = ("k",)

    def _faces(self, params, rng):
        (k,) = params
        self._require(k >= 3, f"prism needs k >= 3, got {k}")
        faces = [(i, (i + 1) % k, k + (i + 1) % k, k + i) for i in range(k)]
        faces.append(tuple(k + i for i in range(k)))
        faces.append(tuple(range(k - 1, -1, -1)))
        return 2 * k, faces


class IcosahedronGenerator(BaseGenerator):
    """Top 0, upper ring 1..5, lower ring 6..10, bottom 11."""

    family = "icosahedron"

    def _faces(self, params, rng):
        upper = [1 + i for i in range(5)]
        lower = [6 + i for i in range(5)]
        faces: FaceList = []
        for i in range(5):
            j = (i + 1) % 5
            faces.append((0, upper[i], upper[j]))
            faces.append((upper[i], lower[i], upper[j]))
            faces.append((upper[j], lower[i], lower[j]))
            faces.append((11, lower[j], lower[i]))
        return 12, faces


class StackedTriangulationGenerator(BaseGenerator):
    """Maximal planar graph grown from K4 by inserting a vertex into a random face."""

    family = "stacked_triangulation"
    parameter_names = ("n",)

    def _faces(self, params, rng):
        (n,) = params
        self._require(n >= 4, f"stacked triangulations need n >= 4, got {n}")
        faces = list(K4_FACES)
        for x in range(4, n):
            index = rng.randrange(len(faces))
            a, b, c = faces[index]
            faces[index] = (a, b, x)
            faces.append((b, c, x))
            faces.append((c, a, x))
        return n, faces


class SubdividedGenerator(BaseGenerator):
    """A base family member with ``e`` random edges subdivided once.

    Parameters are the base family name, its parameters, then ``e``.
    """

    family = "subdivided"

    def generate(self, parameters: Sequence[Parameter] = (), seed: int = 0) -> GeneratedGraph:
        from . import get_generator

        if len(parameters) < 2:
            raise GeneratorParameterError("subdivided takes a base family, its parameters and an edge count")
        base_family, *base_params, count = parameters
        try:
            e = int(count)
        except (TypeError, ValueError) as exc:
            raise GeneratorParameterError(f"edge count must be an integer, got {count!r}") from exc
        base = get_generator(str(base_family)).generate(base_params, seed=seed)
        self._require(0 <= e <= base.graph.m, f"cannot subdivide {e} of {base.graph.m} edges")

        chosen = random.Random(seed).sample(list(base.graph.edges), e)
        n, faces = subdivide(base.graph.n, base.faces, chosen)
        spec = CorpusSpec(family=self.family, parameters=tuple(parameters), seed=seed)
        return assemble(n, faces, spec)

    def _faces(self, params, rng):
        raise NotImplementedError


def subdivide(n: int, faces: FaceList, edges: Sequence[Edge]) -> Tuple[int, FaceList]:
    """Insert a new vertex on each of ``edges`` in every face walk using it."""
    middle: Dict[Edge, int] = {}
    for offset, (a, b) in enumerate(edges):
        middle[normalize_edge(a, b)] = n + offset
    walks: FaceList = []
    for walk in faces:
        k = len(walk)
        out: List[int] = []
        for idx, x in enumerate(walk):
            out.append(x)
            s = middle.get(normalize_edge(x, walk[(idx + 1) % k]))
            if s is not None:
                out.append(s)
        walks.append(tuple(out))
    return n + len(middle), walks
