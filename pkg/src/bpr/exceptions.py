"""Custom exceptions for Bayesian Policy Reuse."""


class BPRError(Exception):
    """Base exception for all Bayesian Policy Reuse errors."""

    def __init__(self, message: str, details: dict | None = None):
        """
        Initialize error.

        Args:
            message: Error message
            details: Additional error details
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}


class ConfigError(BPRError):
    """Raised when an experiment configuration is invalid."""

    def __init__(self, source: str, reason: str | None = None, details: dict | None = None):
        """
        Initialize error.

        Args:
            source: Config file or section that failed
            reason: Reason for the failure
            details: Additional error details
        """
        message = f"Invalid configuration in {source}"
        if reason:
            message += f": {reason}"
        super().__init__(message, details)
        self.source = source
        self.reason = reason


class UnknownNameError(ConfigError):
    """Raised when a domain, strategy or signal kind name cannot be resolved."""

    def __init__(self, kind: str, name: str, known: list[str] | None = None):
        """
        Initialize error.

        Args:
            kind: What was being looked up (e.g. "domain")
            name: The name that was not found
            known: Names that would have been accepted
        """
        reason = f"unknown {kind} '{name}'"
        if known:
            reason += f" (expected one of: {', '.join(known)})"
        super().__init__(kind, reason, details={"name": name, "known": known or []})
        self.name = name


class DimensionMismatchError(BPRError):
    """Raised when two vectors that must align have different lengths."""

    def __init__(self, what: str, expected: int, actual: int):
        """
        Initialize error.

        Args:
            what: Name of the mismatching quantity
            expected: Expected length
            actual: Actual length
        """
        message = f"Dimension mismatch for {what}: expected {expected}, got {actual}"
        super().__init__(message, {"expected": expected, "actual": actual})
        self.expected = expected
        self.actual = actual


class InvalidBeliefError(BPRError):
    """Raised when a weight vector is not a probability distribution."""


class AllLikelihoodsZeroError(BPRError):
    """Raised when a signal has zero posterior mass under every type."""

    def __init__(self, policy: int, signal: str | None = None):
        """
        Initialize error.

        Args:
            policy: Policy that produced the signal
            signal: Short description of the signal
        """
        message = f"Signal has zero likelihood under every type with prior mass (policy {policy})"
        if signal:
            message += f": {signal}"
        super().__init__(message, {"policy": policy, "signal": signal})
        self.policy = policy


class EmptySequenceError(BPRError):
    """Raised when an aggregate is requested over an empty sequence."""


class FamilyMismatchError(BPRError):
    """Raised when a signal does not belong to a model's family."""

    def __init__(self, model: str, signal: str):
        """
        Initialize error.

        Args:
            model: Model family name
            signal: Signal class name
        """
        super().__init__(
            f"Model family '{model}' cannot score a {signal} signal",
            {"model": model, "signal": signal},
        )
        self.model = model
        self.signal = signal


class KnowledgeBaseIOError(BPRError):
    """Raised when a knowledge-base file cannot be read or written."""

    def __init__(self, path: str, reason: str | None = None):
        """
        Initialize error.

        Args:
            path: File path
            reason: Underlying OS error text
        """
        message = f"Cannot access knowledge base at '{path}'"
        if reason:
            message += f": {reason}"
        super().__init__(message, {"path": path})
        self.path = path


class SchemaVersionMismatchError(BPRError):
    """Raised when a knowledge-base document is corrupt or has an unknown schema."""

    def __init__(self, path: str, found: str | None, reason: str | None = None):
        """
        Initialize error.

        Args:
            path: File path
            found: Schema version found in the file (None if unreadable)
            reason: Parse or validation failure text
        """
        message = f"Knowledge base '{path}' has unsupported schema '{found}'"
        if reason:
            message += f": {reason}"
        super().__init__(message, {"path": path, "found": found})
        self.found = found


class DomainFailureError(BPRError):
    """Raised when a simulated domain fails while executing an episode."""

    def __init__(self, domain: str, reason: str | None = None, details: dict | None = None):
        """
        Initialize error.

        Args:
            domain: Domain name
            reason: Reason for the failure
            details: Additional error details
        """
        message = f"Domain '{domain}' failed"
        if reason:
            message += f": {reason}"
        super().__init__(message, details)
        self.domain = domain


class SingularKernelError(BPRError):
    """Raised when the GP kernel matrix cannot be factorised even after jitter."""

    def __init__(self, size: int, jitter: float):
        """
        Initialize error.

        Args:
            size: Number of observations in the kernel matrix
            jitter: Diagonal jitter that was tried
        """
        super().__init__(
            f"Kernel matrix of size {size} is singular (jitter {jitter:g})",
            {"size": size, "jitter": jitter},
        )
