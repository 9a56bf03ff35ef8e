"""Shared exception types."""


class VerificationError(Exception):
    """An internal cross-check failed; the message carries the witness."""


class OutsideValidityError(Exception):
    """A table was queried at a degree where its formula is not claimed."""
