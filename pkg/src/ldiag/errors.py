"""Exception hierarchy shared by every module."""


class LdiagError(Exception):
    """Base class for all input/validation errors raised by the library."""


class ParseError(LdiagError, ValueError):
    def __init__(self, message, position=None, text=None):
        self.message = message
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class GapError(LdiagError, ValueError):
    pass


class ZeroWeightError(LdiagError, ValueError):
    pass


class NotACodeError(LdiagError, ValueError):
    pass


class NotOntoError(LdiagError, ValueError):
    pass


class TooLargeError(LdiagError, ValueError):
    pass


class BoundError(LdiagError, ValueError):
    pass


class NotLetterWordError(LdiagError, ValueError):
    pass


class EmptyWordError(LdiagError, ValueError):
    pass


class UnknownSuiteError(LdiagError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown suite"
