"""Exception types shared across the package."""


class HadmorphError(Exception):
    """Base class for all package-specific errors."""


class SingularMatrixError(HadmorphError):
    """A GF(2) matrix required to be invertible is not."""


class NonExactDivisionError(HadmorphError):
    """Polynomial division produced a non-integer quotient coefficient."""


class UnsupportedRootOrderError(HadmorphError):
    """Operation requires scalars in {+1, -1} but the root order exceeds 2."""


class NotScalarActionError(HadmorphError):
    """A monomial pair does not act on the target matrix as a +-1 scalar."""


class EvenPowerError(HadmorphError):
    """Hadamard powering is only exact for odd exponents."""


class SizeCapError(HadmorphError):
    """Input exceeds the size cap of a desk-scale exact routine."""


class IrrationalScalingError(HadmorphError):
    """A required scaling factor sqrt(m)^(1-j) is irrational."""


class UnsoundPairError(HadmorphError):
    """Plug-in construction attempted on a pair that failed the soundness check."""


class NonOddExponentError(HadmorphError):
    """Plug-in construction requires every entry exponent to be odd."""


class BadRootOrderError(HadmorphError):
    """Butson root order does not match what the morphism expects."""


class ParseError(HadmorphError):
    """A matrix or certificate file could not be parsed."""


class CertificateFailure(HadmorphError):
    """A spectral-certificate check failed; `check` names the first failure."""

    def __init__(self, check: str, detail: str = ""):
        self.check = check
        self.detail = detail
        msg = f"certificate check failed: {check}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
