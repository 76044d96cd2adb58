"""Snapshot of the color sets around an uncolored edge."""

from typing import Dict, FrozenSet, Optional

from analysis.acyclic import alternating_path
from models.coloring import EdgeColoring
from models.extension import ExtensionContext, MultiSet
from models.graph import Graph


def build_context(
    graph: Graph,
    coloring: EdgeColoring,
    u: int,
    v: int,
    palette_size: int,
    w: Optional[int] = None,
) -> ExtensionContext:
    """Compute C(.), the free set, C_i, T_i, T'_i, T_0, kappa_i and S_v for edge ``uv``.

    Shared colors ``i`` index the neighbor w_i of ``v`` along color ``i``
    and the neighbor u_i of ``u`` along the same color.
    """
    palette = frozenset(range(1, palette_size + 1))
    cu, cv = coloring.colors_at(u), coloring.colors_at(v)
    shared = cu & cv
    free = palette - cu - cv

    u_neighbors = tuple(sorted((x for x in graph.neighbors(u) if x != v), key=lambda x: (-graph.degree(x), x)))
    v_others = [x for x in graph.neighbors(v) if x != u]

    def v_key(x: int):
        color = coloring.color(v, x)
        return (color not in shared, color if color is not None else palette_size + 1, x)

    w_neighbors = tuple(sorted(v_others, key=v_key))

    around = {u, v} | set(graph.neighbors(u)) | set(graph.neighbors(v))
    color_sets: Dict[int, FrozenSet[int]] = {x: coloring.colors_at(x) for x in around}
    degrees = {x: graph.degree(x) for x in around}
    u_edge_colors = {x: coloring.color(u, x) for x in u_neighbors if coloring.color(u, x) is not None}

    s_v = MultiSet()
    for x in v_others:
        s_v = s_v + MultiSet(color_sets[x] - {coloring.color(v, x)})

    c_paths: Dict[int, FrozenSet[int]] = {}
    t_sets: Dict[int, FrozenSet[int]] = {}
    kappa: Dict[int, int] = {}
    for i in sorted(shared):
        ui = coloring.neighbor_via(u, i)
        wi = coloring.neighbor_via(v, i)
        c_paths[i] = frozenset(j for j in free if alternating_path(coloring, ui, v, i, j) is not None)
        t_sets[i] = free - color_sets[wi]
        kappa[i] = len(color_sets[wi] & (cu | cv))

    t_prime = {i: frozenset(x for x in t if s_v.mult(x) == 2) for i, t in t_sets.items()}
    t_zero = frozenset(x for t in t_sets.values() for x in t if s_v.mult(x) >= 3)

    return ExtensionContext(
        u=u,
        v=v,
        w=w,
        palette=palette,
        u_neighbors=u_neighbors,
        w_neighbors=w_neighbors,
        color_sets=color_sets,
        degrees=degrees,
        shared=shared,
        free=free,
        c_paths=c_paths,
        t_sets=t_sets,
        t_prime=t_prime,
        t_zero=t_zero,
        kappa=kappa,
        s_v=s_v,
        u_edge_colors=u_edge_colors,
    )
