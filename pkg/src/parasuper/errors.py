class ParasuperError(Exception):
    """Base class for library errors."""


class GradingMismatchError(ParasuperError, ValueError):
    """Operands live on different index-grading schemes."""


class PreconditionError(ParasuperError, ValueError):
    """An operation was called outside its documented domain."""


class EmptyAlgebraError(ParasuperError, ValueError):
    """All dimension parameters are zero."""
