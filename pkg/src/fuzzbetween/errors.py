"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class FuzzBetweenError(Exception):
    """Base class for all errors raised by fuzzbetween."""


class ValidationError(FuzzBetweenError, ValueError):
    """An input violates a type invariant (range, length, uniqueness...)."""


class UniverseMismatchError(FuzzBetweenError, ValueError):
    """Two operands are defined on different universes."""


class GuardExceededError(FuzzBetweenError, ValueError):
    """A size guard on an enumeration was exceeded."""


class NullConeError(FuzzBetweenError, ZeroDivisionError):
    """A hyperbolic number on the null cone (a^2 == b^2) has no inverse."""


class DegenerateLevelMeasureWarning(UserWarning):
    """A discrete level measure gave distance 0 between distinct functions."""


class MissingValueWarning(UserWarning):
    """An input omitted a membership value; 0.0 was used instead."""


# Errors surfaced by the command-line front end.  ``exit_code`` is part of
# the CLI contract.


class UnknownNameError(FuzzBetweenError, KeyError):
    exit_code = 2

    def __str__(self) -> str:  # KeyError would quote the message
        return str(self.args[0]) if self.args else ""


class KindMismatchError(FuzzBetweenError, TypeError):
    exit_code = 3


class InputError(FuzzBetweenError, ValueError):
    exit_code = 4


class TheoremMismatchError(FuzzBetweenError, AssertionError):
    """Two characterizations that must agree did not; always a bug."""

    exit_code = 5
