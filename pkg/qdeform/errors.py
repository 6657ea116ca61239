"""
exceptions raised by qdeform

All of them are ValueErrors, so callers that only care about bad input can
catch that.
"""


class QDeformError(ValueError):
    pass


class NoConvergence(QDeformError):
    """
    the Jacobi eigensolver ran out of sweeps
    """
    pass


class InvalidDensityMatrix(QDeformError):
    """
    a matrix failed one or more of the density matrix conditions

    Parameters
    ----------
    message: str
        Description of the failure
    violations: list of InvalidDensityMatrix, optional
        The individual failures.  Defaults to [self], which is what the
        specific subclasses use.
    """
    def __init__(self, message, violations=None):
        super().__init__(message)
        if violations is None:
            violations = [self]
        self.violations = list(violations)

    @property
    def names(self):
        """
        class names of the individual violations, e.g. ['TraceNotOne']
        """
        return [type(v).__name__ for v in self.violations]


class NotHermitian(InvalidDensityMatrix):
    pass


class TraceNotOne(InvalidDensityMatrix):
    pass


class NotPSD(InvalidDensityMatrix):
    pass


class SingularLog(QDeformError):
    """
    log or a negative power of a zero eigenvalue was requested
    """
    pass


class DimensionMismatch(QDeformError):
    pass


class InvalidXParams(QDeformError):
    pass


class ParamOutOfRange(QDeformError):
    pass


class InvalidDeformation(QDeformError):
    """
    the deformation parameter q must be a finite real > 0
    """
    pass


class KindMismatch(QDeformError):
    pass


class DomainError(QDeformError):
    pass


class MatrixParseError(QDeformError):
    """
    a matrix file could not be parsed

    Parameters
    ----------
    message: str
        What went wrong
    line: int
        1-based line number
    column: int, optional
        1-based character column, when the problem is a single entry
    """
    def __init__(self, message, line, column=None):
        if column is None:
            where = 'line %d' % line
        else:
            where = 'line %d, column %d' % (line, column)

        super().__init__('%s: %s' % (where, message))
        self.line = line
        self.column = column
