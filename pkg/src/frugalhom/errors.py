"""Exception types shared across the package."""


class FrugalhomError(Exception):
    """Base class for all library errors."""


class ContractError(FrugalhomError, ValueError):
    """An argument violates an operation's contract or precondition."""


class ParseError(FrugalhomError, ValueError):
    """Malformed input text; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class CertificateError(FrugalhomError, ValueError):
    """A supplied certificate fails verification."""


class ConsistencyError(FrugalhomError, RuntimeError):
    """A construction contradicted a property it is guaranteed to have."""


class BudgetExceededError(FrugalhomError, RuntimeError):
    """Search aborted after exceeding its node budget."""
