"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class for all errors raised by quantump2."""


# fields and scalars
class NonPrimeCharacteristic(AlgebraError):
    pass


class ReducibleMinpoly(AlgebraError):
    pass


class UnverifiableMinpoly(AlgebraError):
    pass


class DivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class FieldMismatch(AlgebraError):
    pass


class NeedsExtension(AlgebraError):
    """A computation needs roots outside the single-step extension policy."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


# noncommutative polynomials and Groebner bases
class ContextMismatch(AlgebraError):
    pass


class InhomogeneousInput(AlgebraError):
    pass


class DimensionMismatch(AlgebraError):
    pass


class WrongDegreeForMode(AlgebraError):
    pass


class DegreeExceedsBound(AlgebraError):
    pass


class ZeroInAlgebra(AlgebraError):
    pass


# commutative geometry
class WrongDegree(AlgebraError):
    pass


class SingularMatrix(AlgebraError):
    pass


class BothZero(AlgebraError):
    pass


# point schemes
class NotSquare(AlgebraError):
    pass


class RankDeficient(AlgebraError):
    pass


class NotOnScheme(AlgebraError):
    pass


class DegenerateSampleSet(AlgebraError):
    pass


# constructions
class InvalidOreData(AlgebraError):
    pass


class CharTwoUnsupported(AlgebraError):
    pass


class DiagonalSystemSingular(AlgebraError):
    pass


class InvalidMuMatrix(AlgebraError):
    pass


class NotMuSymmetric(AlgebraError):
    pass


class ConstraintViolation(AlgebraError):
    def __init__(self, constraint, message=None):
        super().__init__(message or f"constraint violated: {constraint}")
        self.constraint = constraint


# parsing
class ParseError(AlgebraError):
    pass


class ExprSyntaxError(ParseError):
    def __init__(self, message, position=None, expected=()):
        if position is not None:
            message = f"{message} at position {position}"
        if expected:
            message = f"{message} (expected {', '.join(expected)})"
        super().__init__(message)
        self.position = position
        self.expected = tuple(expected)


class UnknownGenerator(ParseError):
    pass


class BadScalarLiteral(ParseError):
    pass
