"""Exception types shared across the package."""

from __future__ import annotations


class CapExceeded(ValueError):
    """A configured size cap was exceeded.

    ``cap_name`` identifies which cap ("ring order cap" or "ideal
    enumeration cap"), so callers can report the right knob.
    """

    def __init__(self, cap_name: str, cap: int, requested: int):
        self.cap_name = cap_name
        self.cap = cap
        self.requested = requested
        super().__init__(f"{cap_name} exceeded: requested {requested}, cap {cap}")


class MapValidationError(ValueError):
    """A candidate ring map failed validation; ``witness`` shows where."""

    def __init__(self, message: str, witness: tuple):
        self.witness = witness
        super().__init__(f"{message} (witness {witness})")


class NotAdditiveError(MapValidationError):
    pass


class NotMultiplicativeError(MapValidationError):
    pass


class UnitNotFixedError(MapValidationError):
    pass


class LeibnizFailsError(MapValidationError):
    pass


class SpecValidationError(ValueError):
    """Defining data for a skew extension is malformed."""


class InvalidSigmaError(SpecValidationError):
    pass


class InvalidDeltaError(SpecValidationError):
    pass


class ZeroQError(SpecValidationError):
    pass


class AssociativityFailError(SpecValidationError):
    def __init__(self, message: str, witness: tuple):
        self.witness = witness
        super().__init__(f"{message} (witness {witness})")


class DegreeCapExceeded(ValueError):
    """A polynomial operation would exceed the spec's degree cap."""

    def __init__(self, degree: int, cap: int, context: str = ""):
        self.degree = degree
        self.cap = cap
        suffix = f" during {context}" if context else ""
        super().__init__(f"degree {degree} exceeds degree cap {cap}{suffix}")


class PreconditionUnverified(RuntimeError):
    """An operation requires base-ring hypotheses that are absent or false."""


class PolyParseError(ValueError):
    """Polynomial text did not parse; records position and expectation."""

    def __init__(self, position: int, expected: str, found: str):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(f"parse error at position {position}: expected {expected}, found {found}")


class ConfigError(ValueError):
    """A CLI configuration file is invalid; ``location`` points inside it."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{message}" + (f" (at {location})" if location else ""))


class UnknownVertexError(ValueError):
    pass
