import itertools
import networkx as nx
import pytest
from errors import InputDomainError, IsVertexError, NotParkingFunctionError
from parking import enumerate_parking_functions, is_parking_function
from polytope import (LatticePoint, enumerate_vertices, is_vertex, max_sum_face,
                      midpoint_witness, permutahedron_adjacent, permutahedron_graph,
                      permutahedron_vertices, vertex_count, vertex_pattern)

VERTICES_3 = [(1, 1, 1), (1, 1, 3), (1, 3, 1), (3, 1, 1), (1, 2, 3), (1, 3, 2),
              (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]


def coords(points):
    return [p.coords for p in points]


@pytest.mark.parametrize(
    'point, expected',
    (
        ((1, 1, 1), True),
        ((1, 1, 3), True),
        ((3, 2, 1), True),
        ((1, 1, 2), False),
        ((1, 2, 2), False),
        ((1, 2, 4, 1), False),
        ((1, 1, 3, 4), True),
        ((1,), True),
    ),
)
def test_is_vertex(point, expected):
    assert is_vertex(point) is expected


@pytest.mark.parametrize('point', ((2, 2, 3), (0, 1), (4, 1, 1)))
def test_is_vertex_needs_a_parking_function(point):
    with pytest.raises(NotParkingFunctionError):
        is_vertex(point)


@pytest.mark.parametrize('point', ((1.7, 2.2), (1.0, 2), ('1', '1')))
def test_is_vertex_needs_integer_coordinates(point):
    with pytest.raises(InputDomainError):
        is_vertex(point)
    with pytest.raises(InputDomainError):
        LatticePoint(point)


@pytest.mark.parametrize('n', (True, 2.0))
def test_sizes_must_be_integers(n):
    with pytest.raises(InputDomainError):
        vertex_count(n)
    with pytest.raises(InputDomainError):
        enumerate_vertices(n)


def test_vertex_pattern():
    assert vertex_pattern(4, 1) == (1, 2, 3, 4)
    assert vertex_pattern(4, 2) == (1, 1, 3, 4)
    assert vertex_pattern(4, 4) == (1, 1, 1, 1)


def test_vertices_three():
    assert coords(enumerate_vertices(3)) == sorted(VERTICES_3)


def test_vertices_small():
    assert coords(enumerate_vertices(1)) == [(1,)]
    assert coords(enumerate_vertices(2)) == [(1, 1), (1, 2), (2, 1)]
    assert len(enumerate_vertices(4)) == 41


@pytest.mark.parametrize('n, expected', ((1, 1), (2, 3), (3, 10), (4, 41), (5, 206), (6, 1237),
                                         (10, 6235301)))
def test_vertex_count(n, expected):
    assert vertex_count(n) == expected


def test_vertex_count_rejects_zero():
    with pytest.raises(InputDomainError):
        vertex_count(0)
    with pytest.raises(InputDomainError):
        enumerate_vertices(0)


@pytest.mark.parametrize('n', range(1, 7))
def test_vertices_are_the_filtered_parking_functions(n):
    filtered = [p.entries for p in enumerate_parking_functions(n) if is_vertex(p)]
    assert coords(enumerate_vertices(n)) == filtered
    assert len(filtered) == vertex_count(n)


@pytest.mark.parametrize('n', range(1, 7))
def test_vertices_are_closed_under_rearrangement(n):
    vertices = set(coords(enumerate_vertices(n)))
    for v in vertices:
        assert set(itertools.permutations(v)) <= vertices


@pytest.mark.parametrize(
    'point, up, down',
    (
        ((1, 2, 2), (1, 3, 2), (1, 1, 2)),
        ((1, 1, 2), (1, 1, 3), (1, 1, 1)),
        ((2, 1, 2), (3, 1, 2), (1, 1, 2)),
    ),
)
def test_midpoint_witness(point, up, down):
    a, b = midpoint_witness(point)
    assert (a.coords, b.coords) == (up, down)
    assert all((x + y) / 2 == z for x, y, z in zip(a, b, point))


def test_midpoint_witness_of_a_vertex():
    with pytest.raises(IsVertexError):
        midpoint_witness((1, 3, 2))
    with pytest.raises(IsVertexError):
        midpoint_witness((1, 1, 1))
    with pytest.raises(NotParkingFunctionError):
        midpoint_witness((3, 3, 3))


@pytest.mark.parametrize('n', range(1, 7))
def test_exactly_the_non_vertices_have_a_witness(n):
    for prefs in enumerate_parking_functions(n):
        if is_vertex(prefs):
            with pytest.raises(IsVertexError):
                midpoint_witness(prefs)
            continue
        up, down = midpoint_witness(prefs)
        assert is_parking_function(up.coords) and is_parking_function(down.coords)
        assert up != down
        assert [x + y for x, y in zip(up, down)] == [2 * z for z in prefs]
        changed = [i for i in range(n) if up.coords[i] != prefs[i]]
        assert len(changed) == 1


def test_max_sum_face():
    assert coords(max_sum_face(3)) == list(itertools.permutations((1, 2, 3)))
    assert len(max_sum_face(4)) == 24
    assert coords(max_sum_face(4)) == coords(permutahedron_vertices(4))


def test_lattice_point():
    p = LatticePoint.coerce([2, 1, 3])
    assert p.n == 3
    assert str(p) == '2,1,3'
    assert p.replace(0, 1).coords == (1, 1, 3)
    assert p.serialize() == [2, 1, 3]
    with pytest.raises(InputDomainError):
        LatticePoint(())


def test_permutahedron_three_is_a_hexagon():
    graph = permutahedron_graph(3)
    assert graph.number_of_nodes() == 6
    assert graph.number_of_edges() == 6
    cycle = ['213', '312', '321', '231', '132', '123']
    labels = {data['label']: node for node, data in graph.nodes(data=True)}
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert graph.has_edge(labels[a], labels[b]), (a, b)
    assert not graph.has_edge(labels['123'], labels['321'])
    assert not graph.has_edge(labels['213'], labels['231'])


@pytest.mark.parametrize('n', range(1, 6))
def test_permutahedron_graph(n):
    graph = permutahedron_graph(n)
    assert list(graph.nodes) == permutahedron_vertices(n)
    assert all(degree == n - 1 for _, degree in graph.degree)
    assert nx.is_connected(graph)
    for p, q in itertools.combinations(graph.nodes, 2):
        assert permutahedron_adjacent(p, q) is graph.has_edge(p, q)


def test_permutahedron_adjacent():
    assert permutahedron_adjacent((1, 2, 3), (1, 3, 2))
    assert permutahedron_adjacent((2, 1, 3), (3, 1, 2))
    assert not permutahedron_adjacent((1, 2, 3), (3, 2, 1))
    assert not permutahedron_adjacent((1, 2, 3), (1, 2, 3, 4))
    assert not permutahedron_adjacent((1, 2, 3), (2, 1, 4))
