"""Yoke graphs, dYoke graphs and their distance, symmetry and flip-graph theory."""

from .core import (
    DYokeVertex,
    Direction,
    GraphParams,
    Kind,
    Move,
    Neighbor,
    YokeVertex,
    dyoke_neighbors,
    enumerate_vertices,
    is_adjacent,
    make_dyoke_vertex,
    make_vertex,
    make_yoke_vertex,
    neighbors,
    parse_vertex,
    shift,
    vertex_difference,
    yoke_neighbors,
    zero,
)
from .errors import YokeError
from .search import DistanceTable, bfs_diameter, bfs_distance, bfs_from

__version__ = "0.1.0"
