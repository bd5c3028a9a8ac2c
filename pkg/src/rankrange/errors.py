"""Exception hierarchy.

Every error carries an ``exit_code`` so the CLI can map failures onto its
contract: 1 usage/parse, 2 mathematical rejection, 3 internal invariant
violation.
"""


class RankRangeError(Exception):
    exit_code = 1


class MathRejection(RankRangeError):
    """Input is well-formed but mathematically rejected."""
    exit_code = 2


class InternalInvariantError(RankRangeError):
    """A self-check failed; indicates a bug, not a bad input."""
    exit_code = 3


class NotUnitary(MathRejection):
    pass


class EigensolveFailed(MathRejection):
    pass


class EmptySpectrum(MathRejection):
    pass


class InvalidRank(MathRejection):
    pass


class TooLarge(MathRejection):
    pass


class EmptyRegion(MathRejection):
    pass


class NoConvexSolution(MathRejection):
    pass


class DegenerateDenominator(MathRejection):
    pass


class BothHeavy(MathRejection):
    pass


class LambdaOutsideRegion(MathRejection):
    pass


class UnsupportedDimension(MathRejection):
    pass


class ShapeMismatch(MathRejection):
    pass


class GramFailure(InternalInvariantError):
    pass


class NoSolution(InternalInvariantError):
    pass
