"""Exception hierarchy shared across the package.

Every failure mode the command line distinguishes by exit code has its own
exception class, so callers can map errors without string matching.
"""


class QAffineError(Exception):
    """Base class for all errors raised by this package."""


class ModuleFormatError(QAffineError):
    """A module or report file is malformed, or its parameters are invalid
    (bad JSON, unknown presentation tag, q equal to 0 or a unit, session-q
    mismatch, wrong matrix shapes)."""


class RelationError(QAffineError):
    """A defining relation of a presentation fails on the given matrices.

    The first failing relation name is stored in ``relation``.
    """

    def __init__(self, relation: str, message: str = ""):
        self.relation = relation
        super().__init__(message or f"relation failed: {relation}")


class WeightLadderError(QAffineError):
    """The spectrum of the K-type generator does not form a single rational
    q^2-ladder, or the generator does not act semisimply."""


class IrreducibilityError(QAffineError):
    """An operation that requires an irreducible module received a reducible
    one. Carries the word-span dimension found by the Burnside test."""

    def __init__(self, message: str, span_dim: int | None = None):
        self.span_dim = span_dim
        super().__init__(message)


class CheckFailedError(QAffineError):
    """A named internal verification produced a nonzero residual or a false
    containment. ``check`` identifies which one."""

    def __init__(self, check: str, message: str = ""):
        self.check = check
        super().__init__(message or f"verification failed: {check}")
