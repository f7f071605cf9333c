"""Exception hierarchy shared by every package."""


class LadderError(Exception):
    """Base class for errors raised by the splitting laboratory."""


class MalformedMachineError(LadderError, ValueError):
    """A machine description references a state it does not have, or cannot be parsed."""


class CircularityError(LadderError, RuntimeError):
    """An oracle query reached a length whose r value is not yet determined."""


class ConfigError(LadderError, ValueError):
    """The engine configuration, or a request against it, is invalid."""
