"""Shared fixtures and the slow, obviously correct oracles the fast code is checked against
"""
import itertools
import pytest
from sympy.utilities.iterables import multiset_partitions
from app import App
from ncposet import SetPartition
from parking import simulate_parking


@pytest.fixture(autouse=True)
def reset_app():
    """Every test starts from the default config"""
    App.reset()
    yield
    App.reset()


def naive_parking_functions(n: int) -> list[tuple[int, ...]]:
    """Filter all of [n]^n through the simulation"""
    return [w for w in itertools.product(range(1, n + 1), repeat=n)
            if simulate_parking(w).parks]


def quadruple_crossing(p: SetPartition) -> bool:
    """Crossing by the definition: a < b < c < d, a and c in one block, b and d in another"""
    block = {e: i for i, b in enumerate(p.blocks) for e in b}
    for a, b, c, d in itertools.combinations(range(1, p.ground_size + 1), 4):
        if block[a] == block[c] and block[b] == block[d] and block[a] != block[b]:
            return True
    return False


def all_set_partitions(n: int) -> list[SetPartition]:
    """Every set partition of [n], Bell(n) of them"""
    return [SetPartition(n, tuple(tuple(b) for b in blocks))
            for blocks in multiset_partitions(list(range(1, n + 1)))]


def pairwise_covers(partitions: list[SetPartition]) -> set[tuple[SetPartition, SetPartition]]:
    """Cover pairs by the definition: p < q with nothing strictly between"""
    def below(x, y):
        return x != y and all(set(b) <= set(y.block_of(b[0])) for b in x.blocks)

    pairs = set()
    for p, q in itertools.permutations(partitions, 2):
        if below(p, q) and not any(below(p, z) and below(z, q) for z in partitions):
            pairs.add((p, q))
    return pairs
