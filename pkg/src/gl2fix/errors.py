"""Exception hierarchy.

Every error carries a short stable ``code`` that the command line reports
and maps to an exit status.
"""


class Gl2FixError(Exception):
    code = "error"
    exit_status = 2


class NotPrime(Gl2FixError, ValueError):
    code = "not-prime"


class ReducibleModulus(Gl2FixError, ValueError):
    code = "reducible-modulus"


class DegreeMismatch(Gl2FixError, ValueError):
    code = "degree-mismatch"


class FieldTooLarge(Gl2FixError, ValueError):
    code = "field-too-large"


class FieldMismatch(Gl2FixError, TypeError):
    code = "field-mismatch"


class DivisionByZero(Gl2FixError, ZeroDivisionError):
    code = "division-by-zero"


class ZeroElement(Gl2FixError, ValueError):
    code = "zero-element"


class ZeroScalar(Gl2FixError, ValueError):
    code = "zero-scalar"


class DegenerateScalar(Gl2FixError, ValueError):
    code = "degenerate-scalar"


class ZeroPolynomial(Gl2FixError, ValueError):
    code = "zero-polynomial"


class ConstantPolynomial(Gl2FixError, ValueError):
    code = "constant-polynomial"


class NotMonic(Gl2FixError, ValueError):
    code = "not-monic"


class ReducibleInput(Gl2FixError, ValueError):
    code = "reducible-input"


class NotInvariant(Gl2FixError, ValueError):
    code = "not-invariant"


class NotFixed(Gl2FixError, ValueError):
    code = "not-fixed"


class ZeroSpan(Gl2FixError, ValueError):
    code = "zero-span"


class SingularMatrix(Gl2FixError, ValueError):
    code = "singular-matrix"


class NotPGroup(Gl2FixError, ValueError):
    code = "not-p-group"


class NoCommonFixedLine(Gl2FixError, ValueError):
    code = "no-common-fixed-line"


class CapExceeded(Gl2FixError, ValueError):
    code = "cap-exceeded"


class ExprSyntaxError(Gl2FixError, ValueError):
    """Malformed object text; ``position`` is a 0-based column."""

    code = "syntax-error"

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class MissingArgument(Gl2FixError, ValueError):
    code = "missing-argument"
