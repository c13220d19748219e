"""Exception hierarchy.

Every error carries an ``exit_code`` so the command-line front end can map
it to a distinct process status without a lookup table.
"""


class BeliefError(ValueError):
    exit_code = 1


class ParseError(BeliefError):
    exit_code = 3

    def __init__(self, message, location=None):
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
        self.location = location


class InvalidElement(BeliefError):
    exit_code = 4


class UnknownElement(InvalidElement):
    """An element that is well formed but does not fit the frame."""

    exit_code = 4


class NotNormalized(BeliefError):
    exit_code = 5


class NegativeMass(BeliefError):
    exit_code = 6


class FrameMismatch(BeliefError):
    exit_code = 7


class TotalConflict(BeliefError):
    exit_code = 8


class EmptyElement(BeliefError):
    exit_code = 9


class InvalidDelta(BeliefError):
    exit_code = 10


class NegativeQuadraticForm(BeliefError):
    exit_code = 11


class EmptyCandidates(BeliefError):
    exit_code = 12


class InvalidParameter(BeliefError):
    exit_code = 14
