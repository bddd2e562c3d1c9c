"""Exception hierarchy shared by every engine module."""


class EngineError(Exception):
    """Base class for all engine failures."""


class UsageError(EngineError, ValueError):
    """Invalid arguments: mismatched rings, bad sizes, unsupported paths."""


class InversionError(EngineError, ArithmeticError):
    """A truncated series could not be inverted."""


class EvaluationError(EngineError, ZeroDivisionError):
    """A specialization or power would divide by zero."""


class StructureError(EngineError):
    """A combinatorial construction does not have the expected shape."""


class ExponentError(EngineError):
    """An exponent of q that must be half-integral is not."""


class InternalCheckError(EngineError, AssertionError):
    """A per-summand invariant of an evaluator was violated."""

    def __init__(self, message: str, case: str = ""):
        super().__init__(f"{message} [{case}]" if case else message)
        self.case = case
