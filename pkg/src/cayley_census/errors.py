"""Exception hierarchy shared by every module."""


class CayleyCensusError(Exception):
    """Base class for all errors raised by this package."""


class GroupSpecError(CayleyCensusError, ValueError):
    """A group specification string could not be parsed."""


class GroupValidationError(CayleyCensusError, ValueError):
    """A supplied multiplication table does not define a group."""


class ScaleError(CayleyCensusError):
    """The group is larger than the configured scale bound."""


class InvalidConnectionSetError(CayleyCensusError, ValueError):
    """A subset is not inverse-closed or contains the identity."""


class DegreeMismatchError(CayleyCensusError, ValueError):
    """Two connection sets of different sizes were compared."""


class InvariantSubgroupError(CayleyCensusError, ValueError):
    """A subgroup is not mapped onto itself by the given automorphism."""


class MissingTopError(CayleyCensusError, ValueError):
    """A subgroup poset has no top element (the full group)."""


class InconsistencyError(CayleyCensusError, ArithmeticError):
    """An exact division left a remainder: an internal bug, never a user error."""
