"""Exact arithmetic for Pell-family recurrences, their generator matrices and identities."""

from .sequences import DomainError, EmptyRangeError, SequenceId, term, terms
from .zsqrt2 import Zsqrt2

__all__ = ["DomainError", "EmptyRangeError", "SequenceId", "Zsqrt2", "term", "terms"]
__version__ = "0.1.0"
