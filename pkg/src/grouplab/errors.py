"""Exception types and default size caps shared across the library.

Every cap is an explicit, overridable number.  Operations that would blow
past a cap raise instead of silently degrading; callers that can degrade
(e.g. the verification runner) catch ``CapExceededError`` and record a skip.
"""

DEFAULT_ENUM_CAP = 10_000
"""Largest group order for which elements are listed one by one."""

DEFAULT_LATTICE_CAP = 400
"""Largest group order for which the full subgroup lattice is built."""

DEFAULT_TABLE_CAP = 2048
"""Largest group order for which a dense multiplication table is built."""

DEFAULT_FAMILY_LIMIT = 100_000
"""Most maximal-subgroup families enumerated per p-group."""


class GroupError(Exception):
    """Base class for all errors raised by grouplab."""


class DegreeMismatchError(GroupError):
    """Permutations of different degrees were combined."""


class InvalidPermutationError(GroupError):
    """Image array is not a bijection of the point set."""


class NotASubgroupError(GroupError):
    """An operand was required to be a subgroup (or member) and is not."""


class NotNormalError(GroupError):
    """A quotient was requested by a non-normal subgroup."""


class NotAPGroupError(GroupError):
    """A p-group-only operation was applied to a group of mixed order."""


class CapExceededError(GroupError):
    """A size cap would be exceeded.

    Attributes:
        cap: the configured limit.
        size: the offending size, when known.
    """

    def __init__(self, message: str, cap: int, size: int | None = None):
        super().__init__(message)
        self.cap = cap
        self.size = size


class EnumerationCapError(CapExceededError):
    """Group too large to enumerate element by element."""


class LatticeCapError(CapExceededError):
    """Group too large for full subgroup-lattice construction."""


class CycleFormatError(GroupError, ValueError):
    """Malformed cycle notation or group file."""
