"""
Exception hierarchy for hfs-entangle.

Everything numeric raises a subclass of HfsEntangleError so the command line
can map it to exit code 2. The ValueError/RuntimeError bases keep the errors
catchable by callers that do not know about this package.
"""


class HfsEntangleError(Exception):
    """Base class for all numeric and domain errors raised by the library"""


class NotHermitianError(HfsEntangleError, ValueError):
    """Matrix is not Hermitian within tolerance, has the wrong shape, or is not finite"""


class NotPositiveSemidefiniteError(HfsEntangleError, ValueError):
    """Matrix has an eigenvalue below the PSD clamp tolerance"""


class InvalidDensityMatrixError(HfsEntangleError, ValueError):
    """Matrix is Hermitian but its trace is not 1"""


class ConvergenceError(HfsEntangleError, RuntimeError):
    """Iterative eigensolver hit its sweep cap"""


class DomainError(HfsEntangleError, ValueError):
    """Argument lies outside the documented domain of an operation"""


class ConfigurationError(ValueError):
    """
    Bad user-supplied configuration (constants file, sweep flags).

    Not an HfsEntangleError: the command line reports it as a usage error.
    """
