"""Exception types shared across the package."""


class UnimapError(Exception):
    """Base class for all errors raised by this package."""


class NonIntegerResult(UnimapError):
    """An exact-rational computation that must yield an integer did not.

    This always signals an implementation bug or corrupted input, never a
    legitimate mathematical outcome.
    """


class ParityViolation(UnimapError):
    """A quantity violated a parity constraint it must satisfy."""


class SizeMismatch(UnimapError):
    """Two permutations of different sizes were combined."""


class OddSize(UnimapError):
    """An operation requiring an even ground set received an odd one."""


class BoundExceeded(UnimapError):
    """An exhaustive enumeration was requested above its configured cap."""


class DegenerateOperator(UnimapError):
    """A shift-operator polynomial with vanishing end coefficients."""


class PremiseViolation(UnimapError):
    """Preconditions of a conditional identity do not hold."""


class NotAnchored(UnimapError):
    """A pair outside the anchored class was passed to the cycle toggle."""
