"""Exception types shared across the package."""


class EffdomError(Exception):
    pass


class InputError(EffdomError, ValueError):
    """Malformed instance: bad vertex, self-loop, broken file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MethodNotApplicable(EffdomError):
    """A forced solver method cannot run on the given input."""


class GateExceeded(EffdomError):
    """A brute-force oracle refused an instance larger than its gate."""


class NotChordal(EffdomError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAlphaAcyclic(EffdomError):
    def __init__(self, message, residue=None):
        super().__init__(message)
        self.residue = residue
