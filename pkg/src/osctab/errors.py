"""Exception types shared across the package."""


class OsctabError(Exception):
    """Base class for all package-specific errors."""


class PartitionParseError(OsctabError, ValueError):
    """Input text does not describe a weakly decreasing positive sequence."""


class BoundExceededError(OsctabError):
    """A configurable enumeration or table bound would be exceeded."""


class EmptyEnumerationError(OsctabError):
    """An average was requested over an empty set of objects."""


class ShapeMismatchError(OsctabError, ValueError):
    """An object does not have the start/end shape the operation requires."""


class InvalidDyckWordError(OsctabError, ValueError):
    """A binary word is not a balanced Dyck word."""


class NotDivisibleByThreeError(OsctabError, ValueError):
    """An item set cannot be partitioned into triples."""


class CoverageError(OsctabError, ValueError):
    """A proposed triple partition does not cover the item set exactly."""
