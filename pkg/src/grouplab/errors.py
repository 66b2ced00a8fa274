"""Exception hierarchy for the group engine."""

from __future__ import annotations


class GroupLabError(Exception):
    """Base class for all engine errors."""


class InvalidSpec(GroupLabError):
    """A group specification is malformed (bad parameters, bad Cayley data)."""


class ParseError(InvalidSpec):
    """A textual group expression failed to parse."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InvalidAction(InvalidSpec):
    """A semidirect-product action does not define a valid automorphism homomorphism."""


class CapExceeded(GroupLabError):
    """Group enumeration grew past the configured element cap."""


class LatticeCapExceeded(GroupLabError):
    """Subgroup enumeration grew past the configured lattice cap."""


class NotNormal(GroupLabError):
    """Quotient requested by a subgroup that is not normal."""


class NotSchmidt(GroupLabError):
    """Certificate requested for a group that is not minimal non-nilpotent."""


class CertificateFailure(GroupLabError):
    """A structure-certificate check failed on a detected minimal non-nilpotent group.

    Signals either an implementation bug or a genuinely non-conforming
    group; both must surface, never be swallowed.
    """

    def __init__(self, entry: str, detail: str) -> None:
        super().__init__(f"certificate check ({entry}) failed: {detail}")
        self.entry = entry
        self.detail = detail


class NilpotencyTestDisagreement(GroupLabError):
    """The two independent nilpotency tests returned different verdicts (implementation bug)."""
