"""Exception hierarchy shared across the package."""


class BchCertError(Exception):
    """Base class for all package errors."""


# --- field construction ---

class NotPrime(BchCertError):
    """The characteristic passed to a field constructor is not prime."""


class NotPrimePower(BchCertError):
    """A field size (or code alphabet size) is not a prime power."""


class FieldTooLarge(BchCertError):
    """Requested field exceeds the table-size cap (see BCH_FIELD_CAP)."""


class NotADivisor(BchCertError):
    """A divisibility precondition failed (n | q^m - 1, h | m, ...)."""


class NotASubfield(BchCertError):
    """The named subfield does not embed in the given field."""


class FieldMismatch(BchCertError):
    """Operands live in incompatible fields."""


# --- polynomials ---

class ZeroPolynomial(BchCertError):
    """Operation undefined for the zero polynomial."""


class DivisionByZeroPolynomial(BchCertError):
    pass


class NotSeparable(BchCertError):
    """The polynomial has a repeated root."""


# --- BCH codes ---

class NotCoprime(BchCertError):
    """gcd(n, q) != 1, so no BCH code of length n over GF(q) exists."""


class InvalidDelta(BchCertError):
    """Designed distance outside 2 <= delta <= n."""


class NotNarrowSense(BchCertError):
    """The operation requires a narrow-sense (b = 1) code."""


class LengthMismatch(BchCertError):
    """Word length differs from the code length."""


class OutOfLemmaRange(BchCertError):
    """Parameters fall outside the closed-form dimension lemma's range."""


# --- locator certificates ---

class DuplicatePoint(BchCertError):
    pass


class ZeroPoint(BchCertError):
    pass


class PointIsOne(BchCertError):
    pass


class DuplicateLocator(BchCertError):
    pass


class CriterionFailed(BchCertError):
    """Some S_j landed outside GF(q)^*; carries the failing index j (1-based)."""

    def __init__(self, j, message=""):
        self.j = j
        super().__init__(message or f"S_{j} is not in the base field's unit group")


class DeltaOutOfRange(BchCertError):
    """delta outside the range a constructor supports."""


class BadModulus(BchCertError):
    """Extension degree m violates a constructor's divisibility requirement."""


class BadParameters(BchCertError):
    """Constructor parameters fail a structural precondition."""


class NormCheckFailed(BchCertError):
    """A located root's exponent is not divisible by q - 1."""


class CertificateError(BchCertError):
    """Internal consistency failure while materializing a certificate."""


class BudgetExceeded(BchCertError):
    """Search or enumeration hit its work budget before finishing."""

    def __init__(self, tested, message=""):
        self.tested = tested
        super().__init__(message or f"budget exceeded after {tested} units of work")


# --- oracles ---

class TooLarge(BchCertError):
    """Enumeration space exceeds the oracle's hard cap."""


class DegenerateCode(BchCertError):
    """The code has dimension zero; minimum distance is undefined."""


# --- tables ---

class RowMismatch(BchCertError):
    """Regenerated table rows diverge from the stored golden rows."""

    def __init__(self, mismatches):
        self.mismatches = list(mismatches)
        lines = "; ".join(self.mismatches[:12])
        more = "" if len(self.mismatches) <= 12 else f" (+{len(self.mismatches) - 12} more)"
        super().__init__(f"table rows diverge: {lines}{more}")
