"""Exception hierarchy shared by all lieword modules."""


class LiewordError(Exception):
    """Base class for all library-specific errors."""


class EmptyWord(LiewordError):
    """An operation that needs at least one symbol was given the empty word."""


class EmptyRoot(LiewordError):
    """A fractional power was requested of an empty root word."""


class LengthExceedsPrefix(LiewordError):
    """A factor length larger than the available prefix was requested."""


class RequestedBeyondFiniteWord(LiewordError):
    """A prefix longer than a finite word was requested."""


class HorizonTooSmall(LiewordError):
    """The horizon prefix is too short to answer the query."""


class UnstableHorizon(LiewordError):
    """A value changed when recomputed at a doubled heuristic horizon."""


class NotACircuit(LiewordError):
    """The given vertex/edge sequence is not an elementary circuit."""


class CircuitExplosion(LiewordError):
    """Elementary-circuit enumeration exceeded the configured cap."""


class ParseError(LiewordError):
    """Malformed textual input (word spec or automaton file)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PartialTransition(ParseError):
    """An automaton file leaves some (state, digit) transition undefined."""
