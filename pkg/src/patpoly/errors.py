"""Exception types shared across the package."""


class PatPolyError(Exception):
    """Base class for all package-specific errors."""


class ParseError(PatPolyError):
    """Malformed construction spec, permutation string, or serialized object."""


class EmptyClass(PatPolyError):
    """The requested avoidance class contains no permutations."""


class BudgetExceeded(PatPolyError):
    """An enumeration passed its configured visit budget.

    Counts are never approximated; callers must raise the budget instead.
    """


class NotInSpan(PatPolyError):
    """Point lies outside the affine hull."""


class NotInLattice(PatPolyError):
    """Point lies in the affine hull but not on the affine lattice."""


class DegenerateInput(PatPolyError):
    """Input fails a nondegeneracy precondition (e.g. affinely dependent)."""


class DependentColumns(PatPolyError):
    """Matrix columns are linearly dependent where independence is required."""


class NegativeEntry(PatPolyError):
    """An h*-vector entry came out negative; signals an upstream bug."""


class NotLattice(PatPolyError):
    """Poset is not a lattice."""


class NotDistributive(PatPolyError):
    """Lattice is not distributive."""


class VerificationFailure(PatPolyError):
    """A triangulation/verification report check failed."""


class MismatchAgainstEhrhart(PatPolyError):
    """Shelling h-vector disagrees with the h*-vector from Ehrhart counting."""


class UnknownId(PatPolyError):
    """Unregistered closed-form or formula identifier."""
