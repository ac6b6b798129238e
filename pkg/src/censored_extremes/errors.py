"""
Exception hierarchy for censored-extremes
"""

from typing import Optional


class CensoredExtremesError(Exception):
    """Base class for every error raised by the toolkit"""


class DomainError(CensoredExtremesError, ValueError):
    """Argument outside the domain of an operation"""


class UnsupportedPairError(CensoredExtremesError):
    """Lifetime/censoring pair without an analytic balance parameter"""

    def __init__(self, lifetime: str, censoring: str):
        self.lifetime = lifetime
        self.censoring = censoring
        super().__init__(
            f"No balance parameter for lifetime {lifetime} with censoring {censoring}"
        )


class QuadratureError(CensoredExtremesError):
    """Numerical integral that did not reach the requested accuracy"""

    def __init__(
        self,
        message: str,
        value: Optional[float] = None,
        abserr: Optional[float] = None,
    ):
        self.value = value
        self.abserr = abserr
        if abserr is not None:
            message = f"{message} (estimate={value!r}, abserr={abserr:.3g})"
        super().__init__(message)


class BracketError(CensoredExtremesError):
    """Root could not be bracketed or the bisection did not converge"""


class InsufficientReplicationsError(CensoredExtremesError):
    """Too few replications for a goodness-of-fit statistic"""

    def __init__(self, what: str, available: int, required: int):
        self.available = available
        self.required = required
        super().__init__(
            f"{what} needs at least {required} replications, got {available}"
        )


class ConfigError(CensoredExtremesError, ValueError):
    """Invalid configuration key, flag or value"""

    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(f"{key}: {message}")
