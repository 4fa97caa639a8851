"""Exception hierarchy shared by every layer of the package.

The CLI maps these onto exit statuses, so each class carries an
``exit_code`` attribute: 2 for malformed input or validation failures,
3 for mathematical hypotheses that do not hold, 4 for internal
inconsistencies (which always indicate a bug).
"""


class KNormalError(Exception):
    exit_code = 2


class ValidationError(KNormalError, ValueError):
    exit_code = 2


class ParseError(ValidationError):
    pass


class NonPrimeCharacteristic(ValidationError):
    pass


class ReducibleModulus(ValidationError):
    pass


class MismatchedFields(ValidationError):
    pass


class DivisionByZero(KNormalError, ZeroDivisionError):
    pass


class BothZero(ValidationError):
    pass


class ZeroConstantTerm(ValidationError):
    pass


class DegreeMismatch(ValidationError):
    pass


class KOutOfRange(ValidationError):
    pass


class BudgetExceeded(ValidationError):
    """A size cap was hit.

    ``partial`` holds whatever results were produced before the cap.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = list(partial or [])


class ReducibleInput(KNormalError, ValueError):
    exit_code = 3


class HypothesisViolation(KNormalError, ValueError):
    """A theorem or proposition gate failed; ``gate`` names which one."""

    exit_code = 3
    gate = "hypothesis"

    def __init__(self, message, gate=None):
        super().__init__(message)
        if gate is not None:
            self.gate = gate


class UnsupportedDegreeShape(HypothesisViolation):
    gate = "degree-shape"


class NotPrimitiveModR(HypothesisViolation):
    gate = "q-primitive-mod-r"


class KTooLarge(HypothesisViolation):
    gate = "k-bound"


class TraceGateFailed(HypothesisViolation):
    gate = "trace-condition"


class InvalidDeltas(HypothesisViolation):
    gate = "deltas"


class ZeroDeltaPair(InvalidDeltas):
    pass


class NonCoprimePair(InvalidDeltas):
    pass


class NoRootA(InvalidDeltas):
    gate = "delta2-power"


class ImproperGamma(HypothesisViolation):
    gate = "gamma-proper"


class ZeroTheta(HypothesisViolation):
    gate = "theta"


class MethodDisagreement(KNormalError, RuntimeError):
    exit_code = 4


class VerificationFailed(MethodDisagreement):
    """A constructed polynomial failed the oracle check its theorem promises."""
