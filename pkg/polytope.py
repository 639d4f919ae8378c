"""Vertices of the parking function polytope and the permutahedron

Everything here works on integer points; vertexhood is decided by the
rearrangement characterization, so no convex hull is ever computed.
"""
from __future__ import annotations # To make type hinting work when using classes within this file
import dataclasses
import itertools
import logging
import math
import operator
import typing
import networkx as nx
from sympy.utilities.iterables import multiset_permutations
from errors import InputDomainError, IsVertexError, NotParkingFunctionError
from parking import PreferenceList, is_parking_function

logger = logging.getLogger(__name__)

@dataclasses.dataclass(frozen=True)
class LatticePoint:
    """An integer point (v_1, ..., v_n)"""
    coords: tuple[int, ...]

    def __post_init__(self):
        try:
            object.__setattr__(self, 'coords', tuple(operator.index(c) for c in self.coords))
        except TypeError as e:
            raise InputDomainError(f'Coordinates must be integers, got {self.coords!r}',
                                   str(self.coords)) from e
        if len(self.coords) == 0:
            raise InputDomainError('A lattice point needs at least one coordinate', [])

    @staticmethod
    def coerce(p: LatticePoint|PreferenceList|typing.Iterable[int]) -> LatticePoint:
        """Accept a LatticePoint, a PreferenceList or any list of integers"""
        if isinstance(p, LatticePoint):
            return p
        return LatticePoint(tuple(p))

    @property
    def n(self) -> int:
        """Dimension of the ambient space"""
        return len(self.coords)

    def replace(self, index: int, value: int) -> LatticePoint:
        """Copy with coordinate index (0-indexed) set to value"""
        coords = list(self.coords)
        coords[index] = value
        return LatticePoint(tuple(coords))

    def __iter__(self) -> typing.Iterator[int]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __str__(self) -> str:
        return ','.join(str(c) for c in self.coords)

    def serialize(self) -> list[int]:
        """Serialize as a plain list"""
        return list(self.coords)


def _is_pf(p: LatticePoint) -> bool:
    if min(p.coords) < 1 or max(p.coords) > p.n:
        return False
    return is_parking_function(p.coords)


def _require_parking(p: LatticePoint|PreferenceList|typing.Iterable[int]) -> LatticePoint:
    p = LatticePoint.coerce(p)
    if not _is_pf(p):
        raise NotParkingFunctionError(f'{p} is not a parking function', p)
    return p


def vertex_pattern(n: int, k: int) -> tuple[int, ...]:
    """The sorted vertex (1, ..., 1, k+1, k+2, ..., n) with k ones"""
    return (1,) * k + tuple(range(k + 1, n + 1))


def is_vertex(p: LatticePoint|PreferenceList|typing.Iterable[int]) -> bool:
    """True if the parking function p is a vertex of the parking function polytope

    p is a vertex exactly when its sorted coordinates read (1^k, k+1, ..., n)
    for some 1 <= k <= n.

    Raises
    ------
    NotParkingFunctionError
        When p is not a parking function
    """
    p = _require_parking(p)
    ones = p.coords.count(1)
    return tuple(sorted(p.coords)) == vertex_pattern(p.n, ones)


def vertex_count(n: int) -> int:
    """n! (1/1! + 1/2! + ... + 1/n!) as the integer sum of n!/k!"""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputDomainError(f'n must be a positive integer, got {n!r}', n)
    return sum(math.factorial(n) // math.factorial(k) for k in range(1, n + 1))


def enumerate_vertices(n: int) -> list[LatticePoint]:
    """Every vertex of the parking function polytope in dimension n, lexicographic"""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputDomainError(f'n must be a positive integer, got {n!r}', n)
    coords = []
    for k in range(1, n + 1):
        coords.extend(tuple(c) for c in multiset_permutations(list(vertex_pattern(n, k))))
    vertices = [LatticePoint(c) for c in sorted(coords)]
    logger.debug('enumerate_vertices: n=%s count=%s', n, len(vertices))
    return vertices


def midpoint_witness(p: LatticePoint|PreferenceList|typing.Iterable[int]
                     ) -> tuple[LatticePoint, LatticePoint]:
    """Two parking functions whose midpoint is p, showing p is not a vertex

    Steps the first coordinate greater than 1 that can be raised by one
    without leaving the parking functions; lowering it by one always stays inside.

    Returns
    -------
    tuple[LatticePoint, LatticePoint]
        (p with p_i + 1, p with p_i - 1)

    Raises
    ------
    NotParkingFunctionError
        When p is not a parking function
    IsVertexError
        When no coordinate can be raised, p is a vertex
    """
    p = _require_parking(p)
    for i, value in enumerate(p.coords):
        if value <= 1:
            continue
        up = p.replace(i, value + 1)
        if _is_pf(up):
            return up, p.replace(i, value - 1)
    raise IsVertexError(f'{p} is a vertex, it is not the midpoint of two parking functions', p)


def max_sum_face(n: int) -> list[LatticePoint]:
    """Parking functions of length n with the largest coordinate sum n(n+1)/2

    These are the permutations of (1, ..., n), the permutahedron face.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputDomainError(f'n must be a positive integer, got {n!r}', n)
    top = n * (n + 1) // 2
    # any point with that sum and sorted entries beta_i <= i must be beta_i = i
    return [v for v in enumerate_vertices(n) if sum(v.coords) == top]


def permutahedron_vertices(n: int) -> list[LatticePoint]:
    """The n! permutations of (1, ..., n), lexicographic"""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputDomainError(f'n must be a positive integer, got {n!r}', n)
    return [LatticePoint(c) for c in itertools.permutations(range(1, n + 1))]


def permutahedron_adjacent(p: LatticePoint, q: LatticePoint) -> bool:
    """Two permutahedron vertices share an edge

    Reading a vertex x as the permutation i -> x_i, neighbours differ by an
    adjacent transposition of values: the coordinates holding j and j+1 trade places.
    """
    p, q = LatticePoint.coerce(p), LatticePoint.coerce(q)
    if p.n != q.n:
        return False
    diff = [i for i in range(p.n) if p.coords[i] != q.coords[i]]
    if len(diff) != 2:
        return False
    i, j = diff
    return (p.coords[i] == q.coords[j] and p.coords[j] == q.coords[i]
            and abs(p.coords[i] - p.coords[j]) == 1)


def permutahedron_graph(n: int) -> nx.Graph:
    """Vertex-edge graph of the permutahedron, nodes in lexicographic order

    Every vertex has degree n-1.
    """
    graph = nx.Graph(dimension=n)
    vertices = permutahedron_vertices(n)
    for v in vertices:
        graph.add_node(v, label=''.join(str(c) for c in v.coords))
    for v in vertices:
        position = {value: i for i, value in enumerate(v.coords)}
        for value in range(1, n):
            w = v.replace(position[value], value + 1).replace(position[value + 1], value)
            graph.add_edge(v, w)
    logger.debug('permutahedron_graph: n=%s edges=%s', n, graph.number_of_edges())
    return graph
