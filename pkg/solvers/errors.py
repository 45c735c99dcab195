"""
Exceptions raised by the solvers.
"""


class UnsupportedSpecError(ValueError):
    """No theorem covers the equation; distinct from an empty solution set."""

    def __init__(self, spec, reason: str):
        self.spec = spec
        self.reason = reason
        super().__init__(f"No theorem applies to {spec}: {reason}")


class VerificationError(AssertionError):
    """A closed form, table point or reduction failed exact re-verification."""


__all__ = ["UnsupportedSpecError", "VerificationError"]
