"""Exception types shared across the solvers."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class UndefinedThresholdError(DomainError):
    """The scanner indifference threshold is undefined (reward-related probability is zero)."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed; carries the values that were being compared."""

    def __init__(self, message, **context):
        super().__init__(message)
        self.context = context

    def __str__(self):
        base = super().__str__()
        if not self.context:
            return base
        details = ", ".join(f"{k}={v!r}" for k, v in sorted(self.context.items()))
        return f"{base} ({details})"


class ConfigError(ValueError):
    """A scenario configuration is malformed; ``field`` names the offending key."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
