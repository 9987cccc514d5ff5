"""Edge colorings keyed by canonical edges."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graph import Edge, Graph, GraphError, canonical_edge


@dataclass(frozen=True)
class EdgeColoring:
    """Assignment of a non-negative integer color to each edge.

    Colorings produced by this package use the dense range
    ``0..color_count-1``; colorings read from files or built by hand need
    not be dense (see :attr:`is_dense`).
    """

    colors: Mapping[Edge, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        norm: dict[Edge, int] = {}
        for (u, v), c in self.colors.items():
            if c < 0:
                raise GraphError(f"negative color {c} on edge ({u}, {v})")
            norm[canonical_edge(u, v)] = int(c)
        object.__setattr__(self, "colors", norm)

    @classmethod
    def from_list(cls, g: Graph, colors: Sequence[int]) -> "EdgeColoring":
        """Build from colors listed in ``g.edges`` order."""
        if len(colors) != g.m:
            raise GraphError(f"expected {g.m} colors, got {len(colors)}")
        return cls(dict(zip(g.edges, colors)))

    @property
    def color_count(self) -> int:
        return len(set(self.colors.values()))

    @property
    def is_dense(self) -> bool:
        used = set(self.colors.values())
        return used == set(range(len(used)))

    def __getitem__(self, edge: Edge) -> int:
        return self.colors[canonical_edge(*edge)]

    def __len__(self) -> int:
        return len(self.colors)

    def items(self) -> Iterable[tuple[Edge, int]]:
        return sorted(self.colors.items())

    def as_list(self, g: Graph) -> list[int]:
        """Colors in ``g.edges`` order; raises if the coloring is not total on ``g``."""
        out = []
        for e in g.edges:
            try:
                out.append(self.colors[e])
            except KeyError:
                raise GraphError(f"coloring is partial: edge {e} has no color") from None
        if len(self.colors) != g.m:
            extra = sorted(set(self.colors) - set(g.edges))[0]
            raise GraphError(f"coloring names edge {extra} which is not in the graph")
        return out
