"""Exception hierarchy shared by the whole toolkit.

Exit-code mapping used by the CLI:
  ParameterError        -> 2 (bad user input)
  ConsistencyError      -> 3 (internal algebra/spectral inconsistency)
  VerificationFailure   -> 1 (a designed plan failed its dynamics check)
"""


class PstnetError(Exception):
    pass


class ParameterError(PstnetError):
    """A user-supplied parameter violates a family constraint."""


class ConsistencyError(PstnetError):
    """Two internally computed quantities disagree beyond tolerance."""


class AlgebraError(ConsistencyError):
    """Bose-Mesner closure or scheme axiom failure."""


class CentralityError(ParameterError):
    """The transfer target is not a central singleton class."""


class UnsupportedAnalyticError(ParameterError):
    """No analytic character table for this family/parameter; use the numeric backend."""


class CapacityError(ParameterError):
    """A Fock basis would exceed the configured size cap."""


class ResolutionError(ConsistencyError):
    """The numeric backend could not separate the joint eigenspaces."""


class VerificationFailure(PstnetError):
    """A plan did not pass its dynamics verification."""
