"""Dyck paths, Catalan numbers, the reflection argument and the labeled Dyck path bijection
"""
from __future__ import annotations # To make type hinting work when using classes within this file
import dataclasses
import enum
import logging
import math
import operator
import typing
from errors import (InputDomainError, InvalidLabelingError, InvalidPathError,
                    NotBadPathError, NotParkingFunctionError)
from parking import PreferenceList, is_parking_function

logger = logging.getLogger(__name__)

class Step(str, enum.Enum):
    """A unit step, north (0,1) or east (1,0)"""
    NORTH = 'N'
    EAST = 'E'

    def swapped(self) -> Step:
        """The other direction"""
        return Step.EAST if self is Step.NORTH else Step.NORTH


@dataclasses.dataclass(frozen=True)
class LatticePath:
    """A north/east lattice path starting at (0,0), stored as its step sequence

    Coordinates are derived from the steps when needed.
    """
    steps: tuple[Step, ...]

    def __post_init__(self):
        try:
            steps = tuple(Step(s) for s in self.steps)
        except ValueError as e:
            raise InvalidPathError(f'Steps must be N or E, got {self.steps!r}',
                                   ''.join(map(str, self.steps))) from e
        object.__setattr__(self, 'steps', steps)

    @staticmethod
    def from_word(word: str) -> LatticePath:
        """Create a path from a word over {N, E}, e.g. 'NNEE'"""
        return LatticePath(tuple(word.strip().upper()))

    @property
    def word(self) -> str:
        """The path as a string over {N, E}"""
        return ''.join(s.value for s in self.steps)

    @property
    def n_east(self) -> int:
        """Number of east steps"""
        return sum(1 for s in self.steps if s is Step.EAST)

    @property
    def n_north(self) -> int:
        """Number of north steps"""
        return len(self.steps) - self.n_east

    @property
    def endpoint(self) -> tuple[int, int]:
        """Where the path ends"""
        return (self.n_east, self.n_north)

    def points(self) -> list[tuple[int, int]]:
        """Every lattice point visited, (0,0) included"""
        x, y = 0, 0
        pts = [(x, y)]
        for s in self.steps:
            if s is Step.EAST:
                x += 1
            else:
                y += 1
            pts.append((x, y))
        return pts

    def first_crossing(self) -> int|None:
        """Number of steps taken when the path first reaches a point (i+1, i) below y = x

        Returns
        -------
        int | None
            Length of the prefix ending at the crossing point, None if the path
            never goes below the diagonal
        """
        height = 0
        for taken, s in enumerate(self.steps, start=1):
            height += 1 if s is Step.NORTH else -1
            if height < 0:
                return taken
        return None

    @property
    def is_dyck(self) -> bool:
        """Ends on the diagonal and no prefix has more east than north steps"""
        return self.n_east == self.n_north and self.first_crossing() is None

    def __str__(self) -> str:
        return self.word

    def serialize(self) -> str:
        """Serialize as the word over {N, E}"""
        return self.word


@dataclasses.dataclass(frozen=True)
class LabeledDyckPath:
    """A Dyck path with a label on every north step

    labels are listed in path order, so within a column they read bottom to top.

    Raises
    ------
    InvalidLabelingError
        When the path is not Dyck, the labels are not a permutation of [n], or
        labels in a column do not strictly increase upwards
    """
    path: LatticePath
    labels: tuple[int, ...]

    def __post_init__(self):
        try:
            labels = tuple(operator.index(label) for label in self.labels)
        except TypeError as e:
            raise InvalidLabelingError(f'Labels must be integers, got {self.labels!r}',
                                       str(self.labels)) from e
        object.__setattr__(self, 'labels', labels)
        if not self.path.is_dyck:
            raise InvalidLabelingError(f'{self.path.word} is not a Dyck path', self.path.word)
        n = self.path.n_north
        if sorted(self.labels) != list(range(1, n + 1)):
            raise InvalidLabelingError(f'Labels {list(self.labels)} are not a permutation of [{n}]',
                                       list(self.labels))
        for column in self.columns:
            if any(lo >= hi for lo, hi in zip(column, column[1:])):
                raise InvalidLabelingError(f'Column labels {list(column)} must increase upwards',
                                           list(self.labels))

    @staticmethod
    def from_word(word: str, labels: typing.Iterable[int]) -> LabeledDyckPath:
        """Create from a Dyck word and the north step labels in path order"""
        return LabeledDyckPath(LatticePath.from_word(word), tuple(labels))

    @property
    def n(self) -> int:
        """Semilength of the path"""
        return self.path.n_north

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        """Labels grouped by column, column 1 first, each bottom to top"""
        cols = [[] for _ in range(self.path.n_east + 1)]
        x = 0
        labels = iter(self.labels)
        for s in self.path.steps:
            if s is Step.EAST:
                x += 1
            else:
                cols[x].append(next(labels))
        # the column after the last east step is always empty for a Dyck path
        return tuple(tuple(c) for c in cols[:self.n])

    def serialize(self) -> dict:
        """Serialize as {'word', 'labels'}"""
        return {'word': self.path.word, 'labels': list(self.labels)}


def catalan(n: int) -> int:
    """The n-th Catalan number binom(2n, n) / (n+1), exact

    >>> [catalan(n) for n in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputDomainError(f'n must be a nonnegative integer, got {n!r}', n)
    return math.comb(2 * n, n) // (n + 1)


def enumerate_lattice_paths(n_east: int, n_north: int) -> list[LatticePath]:
    """Every path with the given step counts, lexicographic with North before East"""
    paths = []
    steps = []

    def extend(east: int, north: int):
        if east == n_east and north == n_north:
            paths.append(LatticePath(tuple(steps)))
            return
        if north < n_north:
            steps.append(Step.NORTH)
            extend(east, north + 1)
            steps.pop()
        if east < n_east:
            steps.append(Step.EAST)
            extend(east + 1, north)
            steps.pop()

    extend(0, 0)
    return paths


def enumerate_dyck_paths(n: int) -> list[LatticePath]:
    """All Dyck paths of semilength n, lexicographic with North before East

    There are catalan(n) of them. Branches that would dip below the diagonal are
    never entered.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputDomainError(f'n must be a nonnegative integer, got {n!r}', n)
    paths = []
    steps = []

    def extend(east: int, north: int):
        if east == n and north == n:
            paths.append(LatticePath(tuple(steps)))
            return
        if north < n:
            steps.append(Step.NORTH)
            extend(east, north + 1)
            steps.pop()
        if east < north:
            steps.append(Step.EAST)
            extend(east + 1, north)
            steps.pop()

    extend(0, 0)
    logger.debug('enumerate_dyck_paths: n=%s count=%s', n, len(paths))
    return paths


def enumerate_bad_paths(n: int) -> list[LatticePath]:
    """(0,0) to (n,n) paths that go below y = x somewhere, binom(2n, n+1) of them"""
    return [p for p in enumerate_lattice_paths(n, n) if p.first_crossing() is not None]


def _reflect(path: LatticePath) -> LatticePath:
    """Swap N and E after the first point below the diagonal"""
    cut = path.first_crossing()
    return LatticePath(path.steps[:cut] + tuple(s.swapped() for s in path.steps[cut:]))


def reflect_bad_path(path: LatticePath) -> LatticePath:
    """Reflect the part of a bad path after its first crossing point P = (i+1, i)

    Parameters
    ----------
    path : LatticePath
        A path from (0,0) to (n,n) that goes below the diagonal

    Returns
    -------
    LatticePath
        A path from (0,0) to (n+1, n-1) sharing the prefix up to P

    Raises
    ------
    InvalidPathError
        When the path does not end on the diagonal
    NotBadPathError
        When the path never goes below the diagonal
    """
    if path.n_east != path.n_north:
        raise InvalidPathError(f'{path.word} does not end on the diagonal', path.word)
    if path.first_crossing() is None:
        raise NotBadPathError(f'{path.word} never goes below the diagonal', path.word)
    return _reflect(path)


def unreflect_path(path: LatticePath) -> LatticePath:
    """Inverse of reflect_bad_path, from a (0,0) to (n+1, n-1) path back to a bad path

    Raises
    ------
    InvalidPathError
        When the path does not end two steps below the diagonal
    """
    if path.n_east != path.n_north + 2:
        raise InvalidPathError(f'{path.word} does not end at (n+1, n-1)', path.word)
    # ending below the diagonal means it crossed at some point
    return _reflect(path)


def _require_parking(prefs: PreferenceList|typing.Iterable[int]) -> PreferenceList:
    prefs = PreferenceList.coerce(prefs)
    if not is_parking_function(prefs):
        raise NotParkingFunctionError(f'{prefs} is not a parking function', prefs)
    return prefs


def pf_to_labeled_dyck(prefs: PreferenceList|typing.Iterable[int]) -> LabeledDyckPath:
    """Labeled Dyck path of a parking function

    Column i gets one north step per occurrence of i, labeled with the positions
    of i in prefs from bottom to top, then one east step.

    Raises
    ------
    NotParkingFunctionError
        When prefs is not a parking function
    """
    prefs = _require_parking(prefs)
    steps = []
    labels = []
    for column in range(1, prefs.n + 1):
        positions = [j for j, pref in enumerate(prefs, start=1) if pref == column]
        steps.extend([Step.NORTH] * len(positions))
        labels.extend(positions)
        steps.append(Step.EAST)
    return LabeledDyckPath(LatticePath(tuple(steps)), tuple(labels))


def labeled_dyck_to_pf(ld: LabeledDyckPath) -> PreferenceList:
    """Read the parking function back off a labeled Dyck path

    Position j gets the column that holds label j.
    """
    entries = [0] * ld.n
    for column, labels in enumerate(ld.columns, start=1):
        for label in labels:
            entries[label - 1] = column
    return PreferenceList(tuple(entries))


def primitive_to_dyck(prefs: PreferenceList|typing.Iterable[int]) -> LatticePath:
    """Unlabeled Dyck path of a primitive parking function"""
    prefs = _require_parking(prefs)
    if prefs.entries != prefs.sorted:
        raise NotParkingFunctionError(f'{prefs} is not weakly increasing', prefs)
    return pf_to_labeled_dyck(prefs).path


def dyck_to_primitive(path: LatticePath) -> PreferenceList:
    """Primitive parking function of a Dyck path, each north step reads off its column"""
    if not path.is_dyck:
        raise InvalidPathError(f'{path.word} is not a Dyck path', path.word)
    entries = []
    column = 1
    for s in path.steps:
        if s is Step.EAST:
            column += 1
        else:
            entries.append(column)
    return PreferenceList(tuple(entries))
