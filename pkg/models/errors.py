"""Exception hierarchy for the acyclic coloring toolkit."""

from typing import Optional, Sequence, Tuple


class AcyclicToolkitError(Exception):
    """Base class for every error raised by the toolkit."""


class GraphFormatError(AcyclicToolkitError):
    """A graph, coloring or trace file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        self.line = line
        self.path = path
        location = ""
        if path is not None:
            location = f"{path}:"
        if line is not None:
            location += f"{line}:"
        super().__init__(f"{location} {message}".strip())


class InvalidGraphError(AcyclicToolkitError):
    """An edge list violates the simple-graph invariants."""


class SelfLoopError(InvalidGraphError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"self-loop at vertex {vertex}")


class ParallelEdgeError(InvalidGraphError):
    def __init__(self, u: int, v: int):
        self.edge = (u, v)
        super().__init__(f"parallel edge {u}-{v}")


class VertexRangeError(InvalidGraphError):
    def __init__(self, vertex: int, n: Optional[int] = None):
        self.vertex = vertex
        bound = f" (n={n})" if n is not None else ""
        super().__init__(f"vertex index {vertex} out of range{bound}")


class EmbeddingError(AcyclicToolkitError):
    """A rotation system is inconsistent with its graph or not of genus 0."""

    def __init__(self, message: str, component: Optional[Sequence[int]] = None):
        self.component = tuple(component) if component is not None else None
        if self.component:
            preview = ", ".join(str(v) for v in self.component[:8])
            more = ", ..." if len(self.component) > 8 else ""
            message = f"{message} (component {{{preview}{more}}})"
        super().__init__(message)


class DisconnectedGraphError(AcyclicToolkitError):
    """An operation that needs one connected component got several."""


class ConservationError(AcyclicToolkitError):
    """Total weight changed while discharging."""


class ImproperColoringError(AcyclicToolkitError):
    """Two adjacent edges share a color."""

    def __init__(self, vertex: int, first: Tuple[int, int], second: Tuple[int, int], color: int):
        self.vertex = vertex
        self.edges = (first, second)
        self.color = color
        super().__init__(
            f"edges {first[0]}-{first[1]} and {second[0]}-{second[1]} "
            f"share color {color} at vertex {vertex}"
        )


class MalformedWitnessError(AcyclicToolkitError):
    """A configuration witness is missing fields or names absent vertices."""


class NoConfigurationError(AcyclicToolkitError):
    """A 2-connected graph with maximum degree at least 5 has no reducible configuration."""

    def __init__(self, n: int, m: int, max_degree: int):
        self.n = n
        self.m = m
        self.max_degree = max_degree
        super().__init__(
            f"no reducible configuration in a 2-connected graph with "
            f"n={n}, m={m}, max degree {max_degree} (input is probably not planar)"
        )


class BranchMismatchError(AcyclicToolkitError):
    """Extension guards ran out of moves for a configuration."""

    def __init__(self, kind: str, label: str = ""):
        self.kind = kind
        self.label = label
        super().__init__(f"no extension move applied for {kind}" + (f" after {label}" if label else ""))


class ExtensionFailedError(AcyclicToolkitError):
    """Both the configuration moves and the fallback search failed."""

    def __init__(self, message: str, trace=None):
        self.trace = trace
        super().__init__(message)


class SearchLimitExceeded(AcyclicToolkitError):
    """An exhaustive search hit its node limit before deciding."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"search node limit of {nodes} exceeded")


class PaletteTooSmallError(AcyclicToolkitError):
    """Block colorings cannot be merged within the palette."""


class GeneratorParameterError(AcyclicToolkitError):
    """A graph family received invalid parameters."""
