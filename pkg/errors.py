"""Exceptions raised by the park modules

Every exception carries a machine readable ``code`` which the command line
surfaces next to the message, plus the offending input so it can be echoed back.
"""
import typing


class ParkError(ValueError):
    """Base class for all domain errors

    Parameters
    ----------
    message : str
        Human readable description of the problem
    offending : typing.Any, optional
        The input that caused the error, by default None
    """
    code = 'domain'

    def __init__(self, message: str, offending: typing.Any=None):
        super().__init__(message)
        self.message = message
        self.offending = offending

    def serialize(self) -> dict:
        """Serialize the error for the command line envelope

        Returns
        -------
        dict
            dict with the code, the message and the offending input
        """
        return {'code': self.code, 'message': self.message, 'input': _echo(self.offending)}


def _echo(value: typing.Any) -> typing.Any:
    """Turn the offending input into something json can carry"""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if hasattr(value, 'serialize'):
        return value.serialize()
    if isinstance(value, (list, tuple)):
        return [_echo(v) for v in value]
    return str(value)


class InputDomainError(ParkError):
    """Raised when a preference list or size argument is out of range"""
    code = 'input-domain'


class NotParkingFunctionError(ParkError):
    """Raised when an operation needs a parking function and got something else"""
    code = 'not-parking-function'


class InvalidPathError(ParkError):
    """Raised for malformed lattice paths or Dyck words"""
    code = 'invalid-path'


class NotBadPathError(ParkError):
    """Raised when reflecting a path that never dips below the diagonal"""
    code = 'not-bad-path'


class InvalidLabelingError(ParkError):
    """Raised when labels are not a permutation or break column order"""
    code = 'invalid-labeling'


class InvalidPartitionError(ParkError):
    """Raised when blocks do not form a set partition of [n]"""
    code = 'invalid-partition'


class GroundSizeMismatchError(ParkError):
    """Raised when two partitions live on different ground sets"""
    code = 'ground-mismatch'


class CrossingPartitionError(ParkError):
    """Raised when a noncrossing partition was required"""
    code = 'crossing-partition'


class NotCoverError(ParkError):
    """Raised when a pair of partitions is not a cover relation"""
    code = 'not-cover'


class InvalidChainError(ParkError):
    """Raised when a sequence of partitions is not a maximal chain"""
    code = 'invalid-chain'


class IsVertexError(ParkError):
    """Raised when asking for a midpoint witness of a polytope vertex"""
    code = 'is-vertex'


class LimitExceededError(ParkError):
    """Raised by the command line when n is above the configured limit"""
    code = 'limit-exceeded'


class UsageError(ParkError):
    """Raised for command lines that do not match the grammar"""
    code = 'usage'
