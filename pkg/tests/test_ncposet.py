import collections
import pytest
from hypothesis import given, settings, strategies as st
from conftest import all_set_partitions, pairwise_covers, quadruple_crossing
from dyck import catalan
from errors import (CrossingPartitionError, GroundSizeMismatchError, InvalidChainError,
                    InvalidPartitionError, NotCoverError, NotParkingFunctionError)
from ncposet import (MaximalChain, SetPartition, chain_label, chain_to_pf, covers,
                     enumerate_maximal_chains, enumerate_noncrossing, hasse_diagram,
                     is_noncrossing, merged_blocks, pf_to_chain, refines, upper_covers)
from parking import PreferenceList, enumerate_parking_functions, is_parking_function


def part(*blocks, n=None):
    return SetPartition.from_blocks(blocks, n)


CHAIN_2211 = (
    part((1,), (2,), (3,), (4,), (5,)),
    part((1,), (2, 4), (3,), (5,)),
    part((1,), (2, 3, 4), (5,)),
    part((1, 5), (2, 3, 4)),
    part((1, 2, 3, 4, 5)),
)


def test_partition_is_canonical():
    p = part((3, 1), (2,))
    assert p.blocks == ((1, 3), (2,))
    assert p == part((2,), (1, 3))
    assert p.notation == '{1,3}{2}'
    assert p.rank == 1
    assert p.serialize() == {'n': 3, 'blocks': [[1, 3], [2]]}


@pytest.mark.parametrize('blocks, n', ((((1, 2), (2, 3)), 3), (((1,), (3,)), 3),
                                       (((1,), ()), 1), (((1, 2),), 3),
                                       (((1.9,), (2,)), 2), (((1,), ('2',)), 2),
                                       (((1,), (2,)), 2.0)))
def test_invalid_partitions(blocks, n):
    with pytest.raises(InvalidPartitionError):
        SetPartition.from_blocks(blocks, n)


@pytest.mark.parametrize(
    'blocks, expected',
    (
        (((1, 3), (2, 4)), False),
        (((1, 4), (2, 3)), True),
        (((1, 2, 3, 4),), True),
        (((1, 3, 5), (2,), (4,)), True),
        (((1, 3, 5), (2, 6), (4,)), False),
        (((1, 5), (2, 3, 4)), True),
        (((1,),), True),
    ),
)
def test_is_noncrossing(blocks, expected):
    assert is_noncrossing(part(*blocks)) is expected


@pytest.mark.parametrize('n', range(1, 7))
def test_noncrossing_agrees_with_quadruple_definition(n):
    for p in all_set_partitions(n):
        assert is_noncrossing(p) is not quadruple_crossing(p), p.notation


def test_noncrossing_three():
    assert [p.notation for p in enumerate_noncrossing(3)] == [
        '{1}{2}{3}', '{1}{2,3}', '{1,2}{3}', '{1,3}{2}', '{1,2,3}']


def test_noncrossing_one():
    assert enumerate_noncrossing(1) == [SetPartition.singletons(1)]


@pytest.mark.parametrize('n', [*range(1, 10), pytest.param(10, marks=pytest.mark.slow)])
def test_noncrossing_count_is_catalan(n):
    partitions = enumerate_noncrossing(n)
    assert len(partitions) == catalan(n)
    assert len(set(partitions)) == len(partitions)
    assert all(is_noncrossing(p) for p in partitions)


@pytest.mark.parametrize('n', range(1, 6))
def test_noncrossing_is_the_filter_of_all_partitions(n):
    filtered = {p for p in all_set_partitions(n) if not quadruple_crossing(p)}
    assert set(enumerate_noncrossing(n)) == filtered


def test_refines():
    assert refines(part((1,), (2, 3), (4,)), part((1, 4), (2, 3)))
    assert not refines(part((1, 4), (2, 3)), part((1,), (2, 3), (4,)))
    assert refines(SetPartition.singletons(4), SetPartition.full(4))
    with pytest.raises(GroundSizeMismatchError):
        refines(SetPartition.singletons(3), SetPartition.singletons(4))


@pytest.mark.parametrize('n', range(1, 7))
def test_refinement_is_a_partial_order(n):
    partitions = enumerate_noncrossing(n)
    le = {(p, q): refines(p, q) for p in partitions for q in partitions}
    for p in partitions:
        assert le[p, p]
        for q in partitions:
            if p != q and le[p, q]:
                assert not le[q, p]
                for r in partitions:
                    if le[q, r]:
                        assert le[p, r]


@pytest.mark.parametrize('n', range(2, 7))
def test_same_level_partitions_are_incomparable(n):
    levels = collections.defaultdict(list)
    for p in enumerate_noncrossing(n):
        levels[p.rank].append(p)
    for members in levels.values():
        for p in members:
            for q in members:
                assert refines(p, q) is (p == q)


def test_covers():
    p = part((1,), (2, 3), (4,))
    assert covers(p, part((1, 4), (2, 3)))
    assert covers(p, part((1,), (2, 3, 4)))
    assert not covers(p, SetPartition.full(4))
    assert not covers(p, p)
    with pytest.raises(CrossingPartitionError):
        covers(SetPartition.singletons(4), part((1, 3), (2,), (4,)).merge(1, 2))
    with pytest.raises(GroundSizeMismatchError):
        covers(SetPartition.singletons(2), SetPartition.full(3))


def test_upper_covers():
    ups = upper_covers(SetPartition.singletons(3))
    assert [q.notation for q in ups] == ['{1}{2,3}', '{1,2}{3}', '{1,3}{2}']
    assert upper_covers(SetPartition.full(3)) == []


def test_hasse_small():
    graph = hasse_diagram(1)
    assert graph.number_of_nodes() == 1
    assert graph.number_of_edges() == 0
    graph = hasse_diagram(3)
    assert graph.number_of_nodes() == 5
    assert graph.number_of_edges() == 6
    assert graph.nodes[SetPartition.full(3)]['rank'] == 2
    assert graph.nodes[part((1, 3), (2,))]['label'] == '{1,3}{2}'


@pytest.mark.parametrize('n', range(1, 6))
def test_hasse_edges_are_the_covers(n):
    graph = hasse_diagram(n)
    partitions = list(graph.nodes)
    assert partitions == enumerate_noncrossing(n)
    assert set(graph.edges) == pairwise_covers(partitions)
    for p, q in graph.edges:
        assert q.rank == p.rank + 1


def test_hasse_four():
    graph = hasse_diagram(4)
    assert graph.number_of_nodes() == 14
    sizes = collections.Counter(data['rank'] for _, data in graph.nodes(data=True))
    assert sizes == {0: 1, 1: 6, 2: 6, 3: 1}


def test_merged_blocks_and_label():
    p, q = CHAIN_2211[2], CHAIN_2211[3]
    assert merged_blocks(p, q) == ((1,), (5,))
    assert chain_label(p, q) == 1
    assert chain_label(part((1,), (2,), (3,)), part((1, 3), (2,))) == 1
    assert chain_label(part((1,), (2, 3)), part((1, 2, 3))) == 1
    assert chain_label(part((1, 3), (2,)), part((1, 2, 3))) == 1
    assert chain_label(part((1,), (2,), (3,)), part((1,), (2, 3))) == 2
    with pytest.raises(NotCoverError):
        chain_label(SetPartition.singletons(3), SetPartition.full(3))


def test_chain_labelled_2211():
    chain = MaximalChain(CHAIN_2211)
    assert chain.labels == (2, 2, 1, 1)
    assert chain_to_pf(chain) == PreferenceList((2, 2, 1, 1))
    assert pf_to_chain((2, 2, 1, 1)) == chain
    assert chain.serialize()['labels'] == [2, 2, 1, 1]
    assert chain.serialize()['ground'] == 5


@pytest.mark.parametrize('m', range(1, 7))
def test_chain_count(m):
    chains = enumerate_maximal_chains(m)
    assert len(chains) == (m ** (m - 2) if m > 1 else 1)
    assert all(len(c.partitions) == m for c in chains)


def test_chain_of_nc_one_has_no_labels():
    (chain,) = enumerate_maximal_chains(1)
    assert chain.labels == ()
    with pytest.raises(InvalidChainError):
        chain_to_pf(chain)


@pytest.mark.parametrize('n', range(1, 6))
def test_chain_labels_are_exactly_the_parking_functions(n):
    labels = [chain_to_pf(c) for c in enumerate_maximal_chains(n + 1)]
    assert len(set(labels)) == len(labels)
    assert sorted(labels, key=lambda p: p.entries) == enumerate_parking_functions(n)


@pytest.mark.parametrize('n', range(1, 6))
def test_each_label_value_occurs_at_most_m_minus_value_times(n):
    m = n + 1
    for chain in enumerate_maximal_chains(m):
        counts = collections.Counter(chain.labels)
        assert all(counts[i] <= m - i for i in counts)


@pytest.mark.parametrize('n', range(1, 5))
def test_chain_round_trip(n):
    for prefs in enumerate_parking_functions(n):
        assert chain_to_pf(pf_to_chain(prefs)) == prefs
    for chain in enumerate_maximal_chains(n + 1):
        assert pf_to_chain(chain_to_pf(chain)) == chain


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.lists(st.integers(min_value=1, max_value=n), min_size=n, max_size=n)))
def test_chain_round_trip_random(prefs):
    if not is_parking_function(prefs):
        with pytest.raises(NotParkingFunctionError):
            pf_to_chain(prefs)
        return
    chain = pf_to_chain(prefs)
    assert chain.ground_size == len(prefs) + 1
    assert list(chain_to_pf(chain)) == prefs


@pytest.mark.parametrize(
    'partitions',
    (
        (),
        (part((1,), (2,), (3,)), part((1, 2, 3))),
        (part((1,), (2,), (3,)), part((1, 2), (3,)), part((1,), (2, 3))),
        (part((1, 2), (3,)), part((1,), (2, 3)), part((1, 2, 3))),
        (part((1,), (2,), (3,), (4,)), part((1, 3), (2,), (4,)),
         part((1, 3), (2, 4)), part((1, 2, 3, 4))),
    ),
)
def test_invalid_chains(partitions):
    with pytest.raises(InvalidChainError):
        MaximalChain(partitions)
