class CoalgebraError(ValueError):
    """Base class of every input or precondition error raised by the toolkit."""


class ParseError(CoalgebraError):
    pass


class RingMismatch(CoalgebraError):
    pass


class BadParameter(CoalgebraError):
    pass


class NotInvertible(CoalgebraError):
    pass


class DescriptorMismatch(CoalgebraError):
    pass


class TruncationExceeded(CoalgebraError):
    pass


class SourceMismatch(CoalgebraError):
    pass


class NotAnAlgebra(CoalgebraError):
    pass


class NotAssociative(CoalgebraError):
    pass


class NotUnital(CoalgebraError):
    pass


class LengthMismatch(CoalgebraError):
    pass


class NotGrouplike(CoalgebraError):
    def __init__(self, index):
        super().__init__(f"element {index} is not grouplike")
        self.index = index


class HypothesisFails(CoalgebraError):
    pass


class NotAField(CoalgebraError):
    pass


class NotCommutativeFamily(CoalgebraError):
    pass


class UnknownLetter(CoalgebraError):
    pass


class MonoidMismatch(CoalgebraError):
    pass


class NotProper(CoalgebraError):
    pass


class NotGradedFamily(CoalgebraError):
    pass


class NotInAugmentationIdeal(CoalgebraError):
    pass


class NotIntegralDomain(CoalgebraError):
    pass
