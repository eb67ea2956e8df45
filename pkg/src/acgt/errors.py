"""Exception hierarchy shared by the engine and the command line."""


class GameError(Exception):
    """Base class for everything raised by :mod:`acgt`."""


class StructuralError(GameError, ValueError):
    """A literal form refers to ids the store does not know, or is malformed."""


class ArgumentError(GameError, ValueError):
    """An operation was called with an argument outside its domain."""


class UnsupportedUniverseError(GameError):
    """The requested operation is not available for the given universe."""


class ResourceError(GameError):
    """An enumeration would exceed its size guard."""

    def __init__(self, message, count):
        super().__init__(message)
        self.count = count


class ParseError(GameError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
