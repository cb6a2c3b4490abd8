"""Exception types raised across the package."""


class PadicError(ValueError):
    pass


class ConfigurationError(PadicError):
    """Invalid ambient context, e.g. a non-prime modulus."""


class RangeError(PadicError):
    pass


class DegenerateNodesError(PadicError):
    pass


class DomainError(PadicError):
    """An evaluator was called outside the ball on which it is defined."""


class ReconstructionFailed(PadicError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionViolated(PadicError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(PadicError):
    def __init__(self, message, location=None):
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)
        self.location = location
