"""Exception types shared across the package."""


class RadiiLabError(Exception):
    """Base class for every error this package raises deliberately."""


class ArgumentOutOfRange(RadiiLabError, ValueError):
    """An argument lies outside the documented domain."""


class NearZeroConstantTerm(RadiiLabError):
    """Reciprocal requested for a series whose constant term is numerically zero."""


class TailBoundUnavailable(RadiiLabError):
    """No coefficient majorant is registered, so no certified tail bound exists."""


class NotSchwarzBounded(RadiiLabError):
    """Generator input fails the sampled Schwarz-type bound on the disk."""


class UnsupportedClass(RadiiLabError):
    """The requested operation is not defined for this function class."""


class DegenerateTransform(RadiiLabError):
    """A transform produced (or would produce) an unnormalized representation."""


class ZeroDenominator(RadiiLabError):
    """The excluded-point formula has a vanishing denominator."""


class UnknownEquation(RadiiLabError, KeyError):
    """No equation with this identifier is registered."""


class ParamOutOfRange(RadiiLabError, ValueError):
    """An equation or class parameter lies outside its valid range."""


class NoBracketFound(RadiiLabError):
    """The sign-change scan found no root bracket in (0, 1)."""


class NoClosedForm(RadiiLabError):
    """The equation has no registered closed-form root."""


class NoWitness(RadiiLabError):
    """The equation has no registered sharpness witness."""


class NotCertifiedOmegaA(RadiiLabError):
    """The coefficient-sum certificate required for Bohr quantities does not hold."""


class ParseError(RadiiLabError, ValueError):
    """A function-spec string failed to parse; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
