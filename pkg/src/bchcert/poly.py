"""Dense univariate polynomials over a Field, plus the handful of
predicates the code constructions need: separability, irreducibility,
root finding, and splitting-field degree.

Coefficients are stored little-endian (index = degree) with trailing
zeros trimmed; the zero polynomial has an empty coefficient tuple and
degree -1.
"""

from __future__ import annotations

from math import gcd as int_gcd

from .errors import (
    DivisionByZeroPolynomial,
    FieldMismatch,
    NotSeparable,
    ZeroPolynomial,
)
from .gf import Field, FieldElement, factorize

# Root finding scans the whole field below this size; above it, the
# polynomial is first reduced by gcd with x^|F| - x so each of the |F|
# evaluations touches only the root factors.
SCAN_THRESHOLD = 1 << 16


class Polynomial:

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_zero:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Polynomial":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Polynomial":
        return cls(field, (field.one(),))

    @classmethod
    def x(cls, field: Field) -> "Polynomial":
        return cls(field, (field.zero(), field.one()))

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: FieldElement | None = None) -> "Polynomial":
        if coeff is None:
            coeff = field.one()
        return cls(field, [field.zero()] * degree + [coeff])

    @classmethod
    def from_int_coeffs(cls, field: Field, ints) -> "Polynomial":
        """Coefficients given as plain integers (canonical images of Z)."""
        return cls(field, [field.from_int(c) for c in ints])

    @classmethod
    def from_logs(cls, field: Field, logs) -> "Polynomial":
        return cls(field, [field.element(lg) for lg in logs])

    # -- structure -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> FieldElement:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> FieldElement:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero()

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lead = self.coeffs[-1]
        if lead == self.field.one():
            return self
        inv = lead.inverse()
        return Polynomial(self.field, [c * inv for c in self.coeffs])

    def to_int_coeffs(self) -> list[int]:
        """Integer coefficients; requires all of them in the prime subfield."""
        return [c.as_int() for c in self.coeffs]

    def logs(self) -> list[int]:
        return [c.log for c in self.coeffs]

    def map_to(self, field: Field) -> "Polynomial":
        """Transport to another field.

        Same field: identity.  Otherwise every coefficient must lie in the
        prime subfield, where the integer values give the one canonical
        embedding; anything else would depend on a choice of isomorphism.
        """
        if field is self.field or field.same_field(self.field):
            return self
        if field.p != self.field.p:
            raise FieldMismatch(f"cannot map from {self.field!r} to {field!r}")
        try:
            ints = self.to_int_coeffs()
        except Exception as exc:
            raise FieldMismatch(
                "coefficients outside the prime subfield have no canonical image"
            ) from exc
        return Polynomial.from_int_coeffs(field, ints)

    # -- ring operations --------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if other.field is not self.field and not self.field.same_field(other.field):
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(self.field, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return Polynomial(self.field, [c * other for c in self.coeffs])
        self._check(other)
        if self.is_zero or other.is_zero:
            return Polynomial.zero(self.field)
        zero = self.field.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial"):
        self._check(other)
        if other.is_zero:
            raise DivisionByZeroPolynomial("polynomial division by zero")
        if self.degree < other.degree:
            return Polynomial.zero(self.field), self
        rem = list(self.coeffs)
        dd = other.degree
        inv_lead = other.coeffs[-1].inverse()
        quot = [self.field.zero()] * (len(rem) - dd)
        for top in range(len(rem) - 1, dd - 1, -1):
            c = rem[top]
            if c.is_zero:
                continue
            factor = c * inv_lead
            quot[top - dd] = factor
            for i in range(dd + 1):
                rem[top - dd + i] = rem[top - dd + i] - factor * other.coeffs[i]
        return Polynomial(self.field, quot), Polynomial(self.field, rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field.same_field(other.field) and self.logs() == other.logs()

    def __hash__(self):
        return hash((self.field.p, self.field.e, tuple(self.logs())))

    # -- evaluation and helpers -------------------------------------------

    def __call__(self, x: FieldElement) -> FieldElement:
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """self(inner(x)) by Horner's rule."""
        self._check(inner)
        acc = Polynomial.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + Polynomial(self.field, (c,))
        return acc

    def reciprocal(self) -> "Polynomial":
        """x^deg * f(1/x): the coefficient vector reversed."""
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no reciprocal")
        return Polynomial(self.field, tuple(reversed(self.coeffs)))

    def derivative(self) -> "Polynomial":
        field = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i] * field.from_int(i))
        return Polynomial(field, out)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    def pow_mod(self, k: int, modulus: "Polynomial") -> "Polynomial":
        """self^k mod modulus by square and multiply."""
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial.one(self.field) % modulus
        base = self % modulus
        while k:
            if k & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            k >>= 1
        return result

    def __repr__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero:
                continue
            if i == 0:
                terms.append(repr(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                terms.append(xs if c.log == 0 else f"{c!r}*{xs}")
        return " + ".join(terms)


def is_separable(f: Polynomial) -> bool:
    """True iff f has no repeated root, i.e. gcd(f, f') is constant."""
    if f.is_zero:
        raise ZeroPolynomial("separability undefined for the zero polynomial")
    if f.degree == 0:
        return True
    d = f.derivative()
    if d.is_zero:
        return False
    return f.gcd(d).degree == 0


def is_irreducible(f: Polynomial) -> bool:
    """Deterministic Rabin test over f's own coefficient field GF(q).

    f is irreducible of degree d iff x^(q^d) = x (mod f) and, for every
    prime r | d, gcd(x^(q^(d/r)) - x, f) is constant.
    """
    if f.is_zero:
        raise ZeroPolynomial("irreducibility undefined for the zero polynomial")
    d = f.degree
    if d == 0:
        return False
    q = f.field.order
    f = f.monic()
    x = Polynomial.x(f.field)
    if x.pow_mod(q**d, f) != x % f:
        return False
    for r in factorize(d):
        h = x.pow_mod(q ** (d // r), f) - x
        if f.gcd(h).degree != 0:
            return False
    return True


def roots_in_field(f: Polynomial, field: Field) -> list[FieldElement]:
    """All roots of f in the given field, sorted by log (zero root first).

    f is transported via its canonical prime-subfield coefficients when
    field differs from f.field.  Small fields are scanned directly; larger
    ones first reduce f to gcd(f, x^|F| - x) so that the scan evaluates
    only the product of root factors.
    """
    if f.is_zero:
        raise ZeroPolynomial("every point is a root of the zero polynomial")
    g = f.map_to(field)
    if field.order > SCAN_THRESHOLD:
        x = Polynomial.x(field)
        g = g.gcd(x.pow_mod(field.order, g) - x)
        if g.degree == 0:
            return []
    roots = []
    for y in field.elements():
        if g(y).is_zero:
            roots.append(y)
    roots.sort(key=lambda r: r.log)
    return roots


def splitting_field_degree(f: Polynomial) -> int:
    """Smallest k with f | x^(q^k) - x, for separable f over GF(q).

    Equals the lcm of the degrees of f's irreducible factors; the loop is
    bounded by lcm(1..deg f), which that lcm can never exceed.
    """
    if f.is_zero:
        raise ZeroPolynomial("splitting degree undefined for the zero polynomial")
    if not is_separable(f):
        raise NotSeparable("polynomial has repeated roots")
    if f.degree == 0:
        return 1
    f = f.monic()
    q = f.field.order
    x = Polynomial.x(f.field)
    bound = 1
    for i in range(1, f.degree + 1):
        bound = bound * i // int_gcd(bound, i)
    h = x % f
    for k in range(1, bound + 1):
        h = h.pow_mod(q, f)
        if h == x % f:
            return k
    raise AssertionError("splitting degree exceeded lcm bound (unreachable)")
