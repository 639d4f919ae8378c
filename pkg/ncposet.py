"""Noncrossing partitions of [n], the refinement order, maximal chains and the
chain labeling bijection with parking functions
"""
from __future__ import annotations # To make type hinting work when using classes within this file
import dataclasses
import itertools
import logging
import operator
import typing
import networkx as nx
from errors import (CrossingPartitionError, GroundSizeMismatchError, InputDomainError,
                    InvalidChainError, InvalidPartitionError, NotCoverError,
                    NotParkingFunctionError)
from parking import PreferenceList, is_parking_function

logger = logging.getLogger(__name__)

@dataclasses.dataclass(frozen=True)
class SetPartition:
    """A set partition of [n]

    Blocks are stored sorted and ordered by their minimum element, so two
    partitions with the same blocks compare equal and serialize the same way.

    Parameters
    ----------
    ground_size : int
        n, the partition covers {1, ..., n}
    blocks : Iterable[Iterable[int]]
        The blocks, in any order

    Raises
    ------
    InvalidPartitionError
        If a block is empty, blocks overlap, or they do not cover [n]
    """
    ground_size: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        try:
            object.__setattr__(self, 'ground_size', operator.index(self.ground_size))
            blocks = (tuple(sorted(operator.index(e) for e in b)) for b in self.blocks)
            blocks = tuple(sorted(blocks, key=lambda b: b[0] if b else 0))
        except TypeError as e:
            raise InvalidPartitionError(
                f'Ground size and block elements must be integers, got {self.blocks!r}',
                str(self.blocks)) from e
        offending = [list(b) for b in blocks]
        if any(len(b) == 0 for b in blocks):
            raise InvalidPartitionError('Blocks must be nonempty', offending)
        elements = [e for b in blocks for e in b]
        if sorted(elements) != list(range(1, self.ground_size + 1)):
            raise InvalidPartitionError(
                f'Blocks must be disjoint and cover [{self.ground_size}]', offending)
        object.__setattr__(self, 'blocks', blocks)

    @staticmethod
    def from_blocks(blocks: typing.Iterable[typing.Iterable[int]],
                    n: int|None=None) -> SetPartition:
        """Create a partition, taking n as the largest element when not given"""
        blocks = [tuple(b) for b in blocks]
        if n is None:
            n = max((max(b) for b in blocks if b), default=0)
        return SetPartition(n, tuple(blocks))

    @staticmethod
    def singletons(n: int) -> SetPartition:
        """The finest partition {1}, {2}, ..., {n}"""
        return SetPartition(n, tuple((i,) for i in range(1, n + 1)))

    @staticmethod
    def full(n: int) -> SetPartition:
        """The single block partition {1, ..., n}"""
        return SetPartition(n, (tuple(range(1, n + 1)),))

    @property
    def rank(self) -> int:
        """Level in the Hasse diagram, n minus the number of blocks"""
        return self.ground_size - len(self.blocks)

    @property
    def notation(self) -> str:
        """Block notation, e.g. {1,3}{2}"""
        return ''.join('{' + ','.join(str(e) for e in b) + '}' for b in self.blocks)

    def block_of(self, element: int) -> tuple[int, ...]:
        """The block holding element"""
        for b in self.blocks:
            if element in b:
                return b
        raise InvalidPartitionError(f'{element} is not in [{self.ground_size}]', element)

    def merge(self, i: int, j: int) -> SetPartition:
        """Partition obtained by joining blocks i and j (0-indexed, canonical order)"""
        joined = self.blocks[i] + self.blocks[j]
        rest = [b for k, b in enumerate(self.blocks) if k not in (i, j)]
        return SetPartition(self.ground_size, tuple(rest) + (joined,))

    def __str__(self) -> str:
        return self.notation

    def serialize(self) -> dict:
        """Serialize as {'n': n, 'blocks': [[...], ...]}"""
        return {'n': self.ground_size, 'blocks': [list(b) for b in self.blocks]}


def _blocks_cross(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """True if b has an element strictly inside a gap of a and another outside that gap"""
    for lo, hi in zip(a, a[1:]):
        if any(lo < x < hi for x in b):
            return any(x < lo or x > hi for x in b)
    return False


def is_noncrossing(p: SetPartition) -> bool:
    """No a < b < c < d with a, c in one block and b, d in another

    Each pair of blocks is checked once: two blocks cross exactly when one of them
    has elements both inside and outside the same gap between consecutive
    elements of the other.
    """
    for a, b in itertools.combinations(p.blocks, 2):
        if _blocks_cross(a, b) or _blocks_cross(b, a):
            return False
    return True


def _sort_key(p: SetPartition) -> tuple:
    return (-len(p.blocks), p.blocks)


def enumerate_noncrossing(n: int) -> list[SetPartition]:
    """All noncrossing partitions of [n], catalan(n) of them

    Ordered by number of blocks, most first, then by canonical blocks.
    Elements are placed one at a time; restricting a noncrossing partition to
    [k] keeps it noncrossing, so crossing prefixes are dropped straight away.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputDomainError(f'n must be a positive integer, got {n!r}', n)
    found = []

    def place(k: int, blocks: list[list[int]]):
        if k > n:
            found.append(SetPartition(n, tuple(tuple(b) for b in blocks)))
            return
        for b in blocks:
            b.append(k)
            if is_noncrossing(SetPartition(k, tuple(tuple(c) for c in blocks))):
                place(k + 1, blocks)
            b.pop()
        blocks.append([k])
        place(k + 1, blocks)
        blocks.pop()

    place(1, [])
    found.sort(key=_sort_key)
    logger.debug('enumerate_noncrossing: n=%s count=%s', n, len(found))
    return found


def _require_same_ground(p: SetPartition, q: SetPartition):
    if p.ground_size != q.ground_size:
        raise GroundSizeMismatchError(
            f'Ground sizes differ, {p.ground_size} and {q.ground_size}', [p, q])


def refines(p: SetPartition, q: SetPartition) -> bool:
    """p <= q, every block of p sits inside a block of q

    Raises
    ------
    GroundSizeMismatchError
        When p and q partition different sets
    """
    _require_same_ground(p, q)
    return all(set(b) <= set(q.block_of(b[0])) for b in p.blocks)


def covers(p: SetPartition, q: SetPartition) -> bool:
    """p is covered by q in NC_n, q joins exactly two blocks of p

    Raises
    ------
    CrossingPartitionError
        When either partition is crossing
    GroundSizeMismatchError
        When p and q partition different sets
    """
    _require_same_ground(p, q)
    for r in (p, q):
        if not is_noncrossing(r):
            raise CrossingPartitionError(f'{r.notation} is not noncrossing', r)
    return len(q.blocks) == len(p.blocks) - 1 and refines(p, q)


def upper_covers(p: SetPartition) -> list[SetPartition]:
    """Every noncrossing partition covering p, in canonical order"""
    ups = []
    for i, j in itertools.combinations(range(len(p.blocks)), 2):
        merged = p.merge(i, j)
        if is_noncrossing(merged):
            ups.append(merged)
    ups.sort(key=_sort_key)
    return ups


def hasse_diagram(n: int) -> nx.DiGraph:
    """Hasse diagram of NC_n

    Nodes are the SetPartitions of enumerate_noncrossing(n), in that order, each
    with a 'rank' and 'label' attribute. Edges point up, from p to every q covering p.
    """
    graph = nx.DiGraph(ground_size=n)
    partitions = enumerate_noncrossing(n)
    for p in partitions:
        graph.add_node(p, rank=p.rank, label=p.notation)
    for p in partitions:
        for q in upper_covers(p):
            graph.add_edge(p, q)
    logger.debug('hasse_diagram: n=%s nodes=%s edges=%s', n, graph.number_of_nodes(),
                 graph.number_of_edges())
    return graph


def merged_blocks(p: SetPartition, q: SetPartition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The blocks A, B of p joined to get q, with min A < min B

    Raises
    ------
    NotCoverError
        When q does not cover p
    """
    if not covers(p, q):
        raise NotCoverError(f'{q.notation} does not cover {p.notation}', [p, q])
    a, b = (blk for blk in p.blocks if blk not in q.blocks)
    return (a, b) if a[0] < b[0] else (b, a)


def chain_label(p: SetPartition, q: SetPartition) -> int:
    """Label of the cover step p to q, max{i in A : i < min B}

    Raises
    ------
    NotCoverError
        When q does not cover p
    """
    a, b = merged_blocks(p, q)
    return max(i for i in a if i < b[0])


@dataclasses.dataclass(frozen=True)
class MaximalChain:
    """A maximal chain of NC_m, from the m singletons up to the single block

    Holds m partitions and has m-1 labels.

    Raises
    ------
    InvalidChainError
        When the sequence does not start at the singletons, end at the full block,
        or some step is not a cover in NC_m
    """
    partitions: tuple[SetPartition, ...]

    def __post_init__(self):
        parts = tuple(self.partitions)
        object.__setattr__(self, 'partitions', parts)
        if len(parts) == 0:
            raise InvalidChainError('A chain needs at least one partition', [])
        m = parts[0].ground_size
        if len(parts) != m:
            raise InvalidChainError(f'A maximal chain of NC_{m} has {m} partitions, '
                                    f'got {len(parts)}', list(parts))
        if parts[0] != SetPartition.singletons(m) or parts[-1] != SetPartition.full(m):
            raise InvalidChainError('A maximal chain runs from the singletons to the full block',
                                    list(parts))
        try:
            for p, q in zip(parts, parts[1:]):
                if not covers(p, q):
                    raise InvalidChainError(f'{q.notation} does not cover {p.notation}',
                                            list(parts))
        except (CrossingPartitionError, GroundSizeMismatchError) as e:
            raise InvalidChainError(e.message, list(parts)) from e

    @property
    def ground_size(self) -> int:
        """m, the chain lives in NC_m"""
        return self.partitions[0].ground_size

    @property
    def labels(self) -> tuple[int, ...]:
        """Label of every step, chain_label of each consecutive pair"""
        return tuple(chain_label(p, q) for p, q in zip(self.partitions, self.partitions[1:]))

    def serialize(self) -> dict:
        """Serialize as {'ground', 'partitions', 'labels'}"""
        return {
            'ground': self.ground_size,
            'partitions': [[list(b) for b in p.blocks] for p in self.partitions],
            'labels': list(self.labels),
        }


def iter_maximal_chains(m: int) -> typing.Iterator[MaximalChain]:
    """Depth first walk up the cover relations of NC_m, yielding every maximal chain"""
    if not isinstance(m, int) or m < 1:
        raise InputDomainError(f'm must be a positive integer, got {m!r}', m)
    path = [SetPartition.singletons(m)]

    def climb():
        if len(path[-1].blocks) == 1:
            yield MaximalChain(tuple(path))
            return
        for q in upper_covers(path[-1]):
            path.append(q)
            yield from climb()
            path.pop()

    yield from climb()


def enumerate_maximal_chains(m: int) -> list[MaximalChain]:
    """All maximal chains of NC_m in depth first order, m^(m-2) of them

    Parameters
    ----------
    m : int
        Ground set size. m = 7 gives 16807 chains and is the practical ceiling.
    """
    chains = list(iter_maximal_chains(m))
    logger.debug('enumerate_maximal_chains: m=%s count=%s', m, len(chains))
    return chains


def chain_to_pf(chain: MaximalChain) -> PreferenceList:
    """Parking function of length m-1 read off the step labels of a chain of NC_m

    Raises
    ------
    InvalidChainError
        For NC_1, whose only chain has no steps
    """
    labels = chain.labels
    if not labels:
        raise InvalidChainError('The chain of NC_1 has no labels', chain)
    return PreferenceList(labels)


def pf_to_chain(prefs: PreferenceList|typing.Iterable[int]) -> MaximalChain:
    """The maximal chain of NC_{n+1} whose labels are prefs

    Searches depth first from the singletons, only following covers whose label
    is the next entry. Every parking function labels exactly one chain, so the
    search always completes; dead branches are abandoned.

    Raises
    ------
    NotParkingFunctionError
        When prefs is not a parking function
    """
    prefs = PreferenceList.coerce(prefs)
    if not is_parking_function(prefs):
        raise NotParkingFunctionError(f'{prefs} is not a parking function', prefs)
    path = [SetPartition.singletons(prefs.n + 1)]

    def climb(step: int) -> bool:
        if step == prefs.n:
            return True
        for q in upper_covers(path[-1]):
            if chain_label(path[-1], q) != prefs[step]:
                continue
            path.append(q)
            if climb(step + 1):
                return True
            path.pop()
        return False

    if not climb(0):
        raise InvalidChainError(f'No chain carries the labels {prefs}', prefs)
    return MaximalChain(tuple(path))
