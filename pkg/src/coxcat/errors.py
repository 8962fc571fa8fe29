"""Shared exception vocabulary.

Every guard in the package raises one of these so callers (and the CLI) can
tell a violated precondition apart from a genuine bug.
"""


class CoxcatError(Exception):
    """Base class for all package-specific errors."""


class RootCountExceeded(CoxcatError):
    """Root enumeration passed the configured safety bound."""


class InvalidBipartition(CoxcatError):
    """The Coxeter graph admits no two-coloring (odd cycle)."""


class FlatNotInLattice(CoxcatError):
    """A subspace was looked up that is not an intersection of reflection hyperplanes."""


class NotCoxeterElement(CoxcatError):
    """Element's reflection length differs from the rank."""


class NotInNC(CoxcatError):
    """Element lies outside the noncrossing partition lattice at hand."""


class IdentityElement(CoxcatError):
    """The identity was passed where a nonidentity element is required."""


class NotBipartiteCoxeter(CoxcatError):
    """Operation needs the bipartite Coxeter element of the datum."""


class RotationBudgetExceeded(CoxcatError):
    """Compatibility co-rotation failed to reach a negated simple within the rotation order."""


class ProductNotFound(CoxcatError):
    """No ordering of a face's reflections multiplies into the expected lattice stratum."""


class ProductNotUnique(CoxcatError):
    """Different orderings of a face's reflections give different admissible products."""


class NotAnAutomorphism(CoxcatError):
    """The supplied map does not preserve the order relation."""


class NotPure(CoxcatError):
    """Complex is not pure of the expected dimension."""


class NotComparable(CoxcatError):
    """Interval endpoints are not comparable."""


class NotRanked(CoxcatError):
    """Poset has a cover relation that jumps more than one rank."""


class ReducibleGroup(CoxcatError):
    """Operation is defined for irreducible data only (needs a single Coxeter number)."""


class FussParameterUnsupported(CoxcatError):
    """Operation is implemented for m = 1 only."""


class NonCrystallographic(CoxcatError):
    """Operation needs a crystallographic datum (integer root coordinates)."""


class NonIntegerRoots(CoxcatError):
    """A characteristic polynomial failed to split over the nonnegative integers."""


class NotAdmissible(CoxcatError):
    """Group element does not act admissibly (fixed faces not closed under subfaces)."""
