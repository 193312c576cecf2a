"""Exception types shared across the engine."""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(EngineError):
    """A structural invariant failed (simplicial identity, functor law, ...)."""


class TruncationMismatch(EngineError):
    """Two objects with different dimension bounds were combined."""


class BudgetExceeded(EngineError):
    """A backtracking search visited more partial assignments than allowed."""

    def __init__(self, budget, context=""):
        self.budget = budget
        self.context = context
        msg = f"search budget of {budget} exceeded"
        if context:
            msg += f" while {context}"
        super().__init__(msg)


class DocumentError(EngineError):
    """A document file could not be parsed or resolved."""
