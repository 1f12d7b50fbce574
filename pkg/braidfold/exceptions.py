"""Exceptions raised by braidfold.

Input problems derive from InvalidInputError (also a ValueError), so callers
that only care about bad input can catch ValueError.  The command-line tools
map these classes onto exit codes.

"""


class BraidfoldError(Exception):
    """Base class for all braidfold errors."""
    pass


class InvalidInputError(BraidfoldError, ValueError):
    """Input data violates a documented precondition."""
    pass


class NotGCM(InvalidInputError):
    """Matrix is not a generalized Cartan matrix."""
    pass


class NotSymmetrizable(InvalidInputError):
    """Symmetrizers do not make D*A symmetric."""
    pass


class NotCompatible(InvalidInputError):
    """Vertex and arrow permutations are not compatible with source/target."""
    pass


class NotAdmissible(InvalidInputError):
    """An arrow joins two vertices of the same automorphism orbit."""
    pass


class RankMismatch(InvalidInputError):
    """Weight length differs from the rank of the Cartan datum."""
    pass


class DatumMismatch(InvalidInputError):
    """Two elements live over different Cartan data."""
    pass


class NotHomogeneous(InvalidInputError):
    """Operation needs a weight-homogeneous element."""
    pass


class NotInSubalgebra(BraidfoldError):
    """Element is not in the subalgebra a symmetry is defined on."""
    pass


class ResourceLimit(BraidfoldError):
    """Weight height exceeds the configured bound."""
    pass


class VerificationFailure(BraidfoldError):
    """A verification check failed.

    Args:
        check: Name of the failing check.
        witness: JSON-serializable description of the counterexample.

    """

    def __init__(self, check: str, witness=None):
        super(VerificationFailure, self).__init__(f"Check '{check}' failed.")
        self.check = check
        self.witness = witness
