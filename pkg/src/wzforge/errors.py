"""Exception hierarchy shared by all wzforge modules."""


class WZForgeError(Exception):
    """Base class for all wzforge errors."""


class NotLinearSplit(WZForgeError):
    """A polynomial has an irreducible factor of degree >= 2 in the
    requested variable, so it does not split into linear factors with
    roots rational in the remaining parameters."""


class NotAffineRoot(WZForgeError):
    """A root produced by linear factorization is not an affine
    combination of symbols, so it cannot become a Gamma argument."""


class NonIntegerShift(WZForgeError):
    """A Gamma argument or base exponent has a non-integer coefficient
    on the shifted variable; the shift quotient is not rational."""


class ArgumentNotPresent(WZForgeError):
    """reflect_gamma was asked to rewrite a Gamma factor that does not
    occur in the term."""


class DivisionByZeroTerm(WZForgeError):
    """Division by the zero hypergeometric term."""


class UndefinedEvaluation(WZForgeError):
    """Exact evaluation hit a pole of the term."""


class IndeterminateLimit(WZForgeError):
    """The limit classifier cannot decide: a formal base of unknown
    magnitude, an oscillating unit-modulus base, or unmatched Gamma
    factors with negative coefficient on the limit variable."""


class NoMate(WZForgeError):
    """Gosper found no hypergeometric antidifference; the term has no
    WZ mate in the requested direction."""


class IncompatibleRatio(WZForgeError):
    """G/F is not a rational function of the two variables, so the pair
    cannot be verified as a WZ pair."""


class RatioNotParamFree(WZForgeError):
    """During seed growth the ratio p0/pr of a new two-term recurrence
    still involves an already-processed parameter."""

    def __init__(self, param, offending):
        self.param = param
        self.offending = offending
        super().__init__(
            f"recurrence ratio for {param} depends on processed parameter(s) {offending}"
        )


class CertificationFailure(WZForgeError):
    """A candidate term failed per-parameter certification."""

    def __init__(self, param, detail=""):
        self.param = param
        super().__init__(f"certification failed for parameter {param}: {detail}")


class HypothesisViolation(WZForgeError):
    """A precondition of the seed-swap theorem does not hold."""


class NoConvergenceCertificate(WZForgeError):
    """The ratio test on a series was inconclusive; no certified tail
    bound is available."""


class PoleError(WZForgeError):
    """Gamma evaluated at a nonpositive integer."""


class SymbolicResidue(WZForgeError):
    """Exact evaluation produced a value that is not rational; the
    symbolic expression is carried on the exception."""

    def __init__(self, expr):
        self.expr = expr
        super().__init__(f"value is not rational: {expr}")


class UnknownSeed(WZForgeError):
    """Catalog lookup with an id that does not exist."""


class MalformedAST(WZForgeError):
    """A term AST file could not be parsed against the schema."""
