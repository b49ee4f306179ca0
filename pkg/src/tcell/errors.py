"""Exception types shared across the package."""


class TcellError(Exception):
    """Base class for every error raised by tcell."""


class AlgebraError(TcellError, ValueError):
    """A table or map fails a structural law; ``witness`` holds the offending indices."""

    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class OutOfRange(AlgebraError):
    pass


class NotAssociative(AlgebraError):
    pass


class BadIdentity(AlgebraError):
    pass


class EndpointMismatch(TcellError, ValueError):
    pass


class NotAGroup(TcellError, ValueError):
    pass


class NotChained(TcellError, ValueError):
    pass


class NotComposable(TcellError):
    """Horizontal composition is undefined: the two candidate composites differ."""

    def __init__(self, message, candidates):
        super().__init__(message)
        self.candidates = candidates


class InvariantBroken(TcellError, AssertionError):
    pass


class BlaError(AlgebraError):
    pass


class Cond1Violated(BlaError):
    pass


class Cond2Violated(BlaError):
    pass


class UnknownCase(TcellError, KeyError):
    pass


class SemibimoduleError(AlgebraError):
    def __init__(self, law, witness=()):
        super().__init__(f"law {law!r} fails at {tuple(witness)}", witness)
        self.law = law


class SplittingInvalid(SemibimoduleError):
    pass


class NotBijective(SemibimoduleError):
    pass


class LawViolated(SemibimoduleError):
    pass


class TooLarge(TcellError, ValueError):
    pass
