"""Parking simulation, membership testing, circular reduction and enumeration

Cars and spots are 1-indexed everywhere. Car ``i`` prefers spot ``entries[i-1]``
and, if it is taken, drives forward to the next free spot. It never reverses.
"""
from __future__ import annotations # To make type hinting work when using classes within this file
import dataclasses
import heapq
import itertools
import logging
import operator
import typing
from sympy.utilities.iterables import multiset_permutations
from errors import InputDomainError

logger = logging.getLogger(__name__)

@dataclasses.dataclass(frozen=True)
class PreferenceList:
    """A preference list alpha = (alpha_1, ..., alpha_n)

    Parameters
    ----------
    entries : tuple[int, ...]
        Preferred spot of each car, in arrival order
    circular : bool, optional
        If the list is for n+1 spots arranged in a circle, which allows the entry n+1,
        by default False

    Raises
    ------
    InputDomainError
        When the list is empty or an entry is not an integer in [1, n] ([1, n+1] if circular)
    """
    entries: tuple[int, ...]
    circular: bool = False

    def __post_init__(self):
        try:
            entries = tuple(operator.index(e) for e in self.entries)
        except TypeError as e:
            raise InputDomainError(f'Preferences must be integers, got {self.entries!r}',
                                   self.entries) from e
        object.__setattr__(self, 'entries', entries)
        if len(entries) == 0:
            raise InputDomainError('A preference list needs at least one car', list(entries))
        top = self.spots
        for car, pref in enumerate(entries, start=1):
            if pref < 1 or pref > top:
                raise InputDomainError(f'Car {car} prefers spot {pref}, outside [1, {top}]',
                                       list(entries))

    @staticmethod
    def trusted(entries: tuple[int, ...], circular: bool=False) -> PreferenceList:
        """Wrap entries already known to be in range, skipping validation"""
        prefs = object.__new__(PreferenceList)
        object.__setattr__(prefs, 'entries', entries)
        object.__setattr__(prefs, 'circular', circular)
        return prefs

    @staticmethod
    def coerce(prefs: PreferenceList|typing.Iterable[int], circular: bool=False) -> PreferenceList:
        """Build a PreferenceList with the requested range from a list or another PreferenceList

        Parameters
        ----------
        prefs : PreferenceList | Iterable[int]
            Preferences to check
        circular : bool, optional
            Range to check the entries against, by default False

        Returns
        -------
        PreferenceList
            prefs itself if it already has the right range, otherwise a new validated list
        """
        if isinstance(prefs, PreferenceList):
            if prefs.circular == circular:
                return prefs
            return PreferenceList(prefs.entries, circular)
        return PreferenceList(tuple(prefs), circular)

    @property
    def n(self) -> int:
        """Number of cars"""
        return len(self.entries)

    @property
    def spots(self) -> int:
        """Number of spots, n or n+1 for a circular list"""
        return self.n + 1 if self.circular else self.n

    @property
    def sorted(self) -> tuple[int, ...]:
        """The weakly increasing rearrangement beta"""
        return tuple(sorted(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> typing.Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __str__(self) -> str:
        return ','.join(str(e) for e in self.entries)

    def serialize(self) -> list[int]:
        """Serialize as a plain list of 1-indexed spots"""
        return list(self.entries)


@dataclasses.dataclass(frozen=True)
class ParkingOutcome:
    """Result of running the one way street

    assignment holds the spot of every car that parked, in car order. It is total
    when the list is a parking function, otherwise it stops before failed_car.
    """
    assignment: tuple[int, ...]
    failed_car: int|None
    empty_spots: frozenset[int]

    @property
    def parks(self) -> bool:
        """True when every car found a spot"""
        return self.failed_car is None

    def serialize(self) -> dict:
        """Serialize the outcome

        Returns
        -------
        dict
            {'parks', 'assignment', 'failed_car', 'empty_spots'}
        """
        return {
            'parks': self.parks,
            'assignment': list(self.assignment),
            'failed_car': self.failed_car,
            'empty_spots': sorted(self.empty_spots),
        }


@dataclasses.dataclass(frozen=True)
class CircularOutcome:
    """Result of parking on n+1 spots arranged in a circle"""
    assignment: tuple[int, ...]
    empty_spot: int

    def serialize(self) -> dict:
        """Serialize the outcome as {'assignment', 'empty_spot'}"""
        return {'assignment': list(self.assignment), 'empty_spot': self.empty_spot}


def _check_size(n: int, name: str='n') -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputDomainError(f'{name} must be a positive integer, got {n!r}', n)
    return n


def simulate_parking(prefs: PreferenceList|typing.Iterable[int]) -> ParkingOutcome:
    """Park the cars one at a time on a dead end street of n spots

    Parameters
    ----------
    prefs : PreferenceList | Iterable[int]
        Ordinary preference list, entries in [1, n]

    Returns
    -------
    ParkingOutcome
        Spots taken by each car, or the first car that drove off the end together
        with the spots still empty at that moment

    Raises
    ------
    InputDomainError
        When an entry is outside [1, n]. Failing to park is not an error.
    """
    prefs = PreferenceList.coerce(prefs)
    occupied = [False] * (prefs.n + 1)
    assignment = []
    for car, pref in enumerate(prefs, start=1):
        spot = pref
        while spot <= prefs.n and occupied[spot]:
            spot += 1
        if spot > prefs.n:
            empty = frozenset(s for s in range(1, prefs.n + 1) if not occupied[s])
            logger.debug('simulate_parking: car %s failed, empty=%s', car, sorted(empty))
            return ParkingOutcome(tuple(assignment), car, empty)
        occupied[spot] = True
        assignment.append(spot)
    return ParkingOutcome(tuple(assignment), None, frozenset())


def is_parking_function(prefs: PreferenceList|typing.Iterable[int]) -> bool:
    """Membership by the sorted criterion beta_i <= i

    Does not run the simulation, the two are checked against each other in the tests.

    Raises
    ------
    InputDomainError
        When an entry is outside [1, n]
    """
    prefs = PreferenceList.coerce(prefs)
    return all(b <= i for i, b in enumerate(prefs.sorted, start=1))


def is_primitive(prefs: PreferenceList|typing.Iterable[int]) -> bool:
    """A parking function whose entries are already weakly increasing"""
    prefs = PreferenceList.coerce(prefs)
    return prefs.entries == prefs.sorted and is_parking_function(prefs)


def count_parking_functions(n: int) -> int:
    """(n+1)^(n-1), exact"""
    _check_size(n)
    return (n + 1) ** (n - 1)


def _primitive_entries(n: int) -> typing.Iterator[tuple[int, ...]]:
    """Weakly increasing tuples with beta_i <= i, lexicographic"""
    beta = [1] * n

    def extend(i: int, low: int):
        if i == n:
            yield tuple(beta)
            return
        # position i (0-indexed) may hold at most i+1
        for value in range(low, i + 2):
            beta[i] = value
            yield from extend(i + 1, value)

    yield from extend(0, 1)


def enumerate_primitive(n: int) -> list[PreferenceList]:
    """All primitive parking functions of length n, lexicographic

    There are catalan(n) of them.

    Raises
    ------
    InputDomainError
        When n < 1
    """
    _check_size(n)
    primitive = [PreferenceList.trusted(beta) for beta in _primitive_entries(n)]
    logger.debug('enumerate_primitive: n=%s count=%s', n, len(primitive))
    return primitive


def iter_parking_functions(n: int) -> typing.Iterator[PreferenceList]:
    """Lazily yield every parking function of length n in lexicographic order

    Each primitive skeleton contributes its distinct permutations, which
    multiset_permutations yields in lexicographic order when given a sorted
    skeleton. The streams are disjoint, so merging them keeps the global order.
    """
    _check_size(n)
    streams = (map(tuple, multiset_permutations(list(beta))) for beta in _primitive_entries(n))
    for entries in heapq.merge(*streams):
        yield PreferenceList.trusted(entries)


def enumerate_parking_functions(n: int) -> list[PreferenceList]:
    """All parking functions of length n, lexicographic

    Parameters
    ----------
    n : int
        Length, n >= 1. n = 8 (4782969 lists) is the practical ceiling.

    Returns
    -------
    list[PreferenceList]
        (n+1)^(n-1) preference lists

    Raises
    ------
    InputDomainError
        When n < 1
    """
    pfs = list(iter_parking_functions(n))
    logger.debug('enumerate_parking_functions: n=%s count=%s', n, len(pfs))
    return pfs


def simulate_circular(prefs: PreferenceList|typing.Iterable[int]) -> CircularOutcome:
    """Park n cars on n+1 spots arranged in a circle

    Cars circle round until a free spot turns up, so every car parks and
    exactly one spot is left over.

    Raises
    ------
    InputDomainError
        When an entry is outside [1, n+1]
    """
    prefs = PreferenceList.coerce(prefs, circular=True)
    spots = prefs.spots
    occupied = [False] * (spots + 1)
    assignment = []
    for pref in prefs:
        spot = pref
        while occupied[spot]:
            spot = spot % spots + 1
        occupied[spot] = True
        assignment.append(spot)
    empty_spot = next(s for s in range(1, spots + 1) if not occupied[s])
    return CircularOutcome(tuple(assignment), empty_spot)


def _wrap(value: int, spots: int) -> int:
    """Reduce value mod spots into [1, spots]"""
    return (value - 1) % spots + 1


def unwrap_circular(prefs: PreferenceList|typing.Iterable[int]) -> PreferenceList:
    """Shift a circular list down by its empty spot k to get a parking function

    alpha_i = gamma_i - k (mod n+1), representatives taken in [1, n+1]. An ordinary
    parking function leaves spot n+1 empty and comes back unchanged.

    Raises
    ------
    InputDomainError
        When an entry is outside [1, n+1]
    """
    prefs = PreferenceList.coerce(prefs, circular=True)
    k = simulate_circular(prefs).empty_spot
    # the empty spot is never anyone's preference, so nothing lands on n+1
    return PreferenceList(tuple(_wrap(g - k, prefs.spots) for g in prefs))


def rotate_circular(prefs: PreferenceList|typing.Iterable[int], k: int) -> PreferenceList:
    """Turn the circle by k spots, gamma_i + k reduced into [1, n+1]"""
    prefs = PreferenceList.coerce(prefs, circular=True)
    return PreferenceList(tuple(_wrap(g + k, prefs.spots) for g in prefs), circular=True)


def circular_class(prefs: PreferenceList|typing.Iterable[int]) -> list[PreferenceList]:
    """The n+1 rotations of a circular list, shift 0 first

    All of them unwrap to the same parking function.
    """
    prefs = PreferenceList.coerce(prefs, circular=True)
    return [rotate_circular(prefs, k) for k in range(prefs.spots)]


def iter_circular(n: int) -> typing.Iterator[PreferenceList]:
    """Every circular list of length n, lexicographic, (n+1)^n of them"""
    _check_size(n)
    for entries in itertools.product(range(1, n + 2), repeat=n):
        yield PreferenceList.trusted(entries, circular=True)
