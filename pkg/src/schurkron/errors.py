"""Exception types shared across the package."""


class NegativePartError(ValueError):
    """A partition was built from a sequence containing a negative entry."""


class EmptyPartitionError(ValueError):
    """An operation that needs at least one part was given the empty partition."""


class DegreeMismatchError(ValueError):
    """Two objects that must have equal degree do not."""


class BadDegreeError(ValueError):
    """A partition argument does not have the degree the parameters require."""


class BadKError(ValueError):
    """The column/shift parameter k is outside its documented range."""


class NotTwoRowError(ValueError):
    """The first factor of a hook-case coefficient must have at most two rows."""


class BadHeightError(ValueError):
    """Bounded-height counts are only available for heights 2 through 5."""


class NonUnitConstantTermError(ValueError):
    """Series expansion needs a denominator with constant term +-1."""


class CacheFormatError(ValueError):
    """A character-cache file has a bad header or a malformed record."""


class CacheIntegrityError(ValueError):
    """A character-cache record contradicts a freshly computed value."""
