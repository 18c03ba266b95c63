"""Exception types shared across the package."""

from __future__ import annotations


class PosetError(Exception):
    """Base class for all posetc errors."""


class DuplicateElement(PosetError):
    """An element name was declared more than once."""


class UnknownElement(PosetError):
    """A name or index does not refer to an element of the poset."""


class CycleDetected(PosetError):
    """The generating relation is cyclic, so no partial order exists.

    ``cycle`` holds one shortest offending cycle as a tuple of element
    names (x0, x1, ..., xk) meaning x0 < x1 < ... < xk < x0.
    """

    def __init__(self, message: str, cycle: tuple[str, ...]):
        super().__init__(message)
        self.cycle = cycle


class PosetFormatError(PosetError):
    """The poset text format could not be parsed."""


class TooLarge(PosetError):
    """Input exceeds a configured or hard size cap."""


class NotALattice(PosetError):
    """Operation requires the base poset to be a lattice."""


class AntichainOrderNotLattice(PosetError):
    """Operation requires the antichain order to be a lattice."""


class BaseMismatch(PosetError):
    """Two values built over different base posets were combined."""
