"""Weight-delta codeword certificates via locator interpolation.

A narrow-sense BCH code C(q, n, delta, 1) meets its designed distance
exactly when some weight-delta codeword exists.  Fix a support
{0, i_1, ..., i_{delta-1}} and put x_j = beta^{i_j}.  The delta - 1
parity checks at beta, ..., beta^{delta-2+1} form a modified Vandermonde
system in the nonzero-position coefficients, so the coefficient vector
is forced, up to the scalar c_0 sitting at position 0, to

    c_{i_j} = -c_0 * S_j,
    S_j = prod_{k != j} (1 - x_k) / (x_j * prod_{k != j} (x_j - x_k)),

with both products over k in 1..delta-1.  Conjugacy closes the
remaining checks for free once the coefficients lie in GF(q), so a
weight-delta codeword with this support exists if and only if every S_j
lands in GF(q); the S_j are automatically nonzero.  Everything here is
a corollary of that one sentence: `certify` checks a proposed support,
the `construct_*` functions produce supports with known-good S values,
`search_certificate` enumerates supports, and `lift_certificate`
transports a certificate up a tower of splitting fields.
"""

from __future__ import annotations

import hashlib
import json
from itertools import combinations

from .bch import BchCode, Codeword, build_code, is_codeword
from .errors import (
    BadParameters,
    BudgetExceeded,
    CertificateError,
    CriterionFailed,
    DeltaOutOfRange,
    DuplicateLocator,
    DuplicatePoint,
    NormCheckFailed,
    NotADivisor,
    NotNarrowSense,
    PointIsOne,
    ZeroPoint,
)
from .gf import is_prime, norm_to_subfield, prime_power
from .poly import Polynomial, roots_in_field


def _check_points(points):
    if not points:
        raise BadParameters("at least one interpolation point is required")
    field = points[0].field
    one = field.one()
    seen = set()
    for x in points:
        if x.is_zero:
            raise ZeroPoint("interpolation points must be nonzero")
        if x == one:
            raise PointIsOne("the point 1 is reserved for the implicit final locator")
        if x.log in seen:
            raise DuplicatePoint(f"repeated point with log {x.log}")
        seen.add(x.log)
    return field


def vandermonde_inverse(points):
    """Inverse of V with V[i][j] = x_j^i, i = 0..r-1, as a list of rows.

    Row j of the inverse holds the coefficients of the Lagrange basis
    polynomial through x_j, so only distinctness of the points is
    needed; zero points are rejected anyway to match the modified
    variant below.
    """
    field = _check_points(points)
    r = len(points)
    x = Polynomial.x(field)
    master = Polynomial.one(field)
    for xk in points:
        master = master * (x - Polynomial(field, (xk,)))
    rows = []
    for xj in points:
        quotient, rem = divmod(master, x - Polynomial(field, (xj,)))
        if not rem.is_zero:
            raise AssertionError("synthetic division left a remainder")
        scale = quotient(xj)
        rows.append([quotient.coeff(i) / scale for i in range(r)])
    return rows


def modified_vandermonde_inverse(points):
    """Inverse of M with M[i][j] = x_j^i, i = 1..r: row j is the plain
    inverse row divided by x_j."""
    rows = vandermonde_inverse(points)
    return [[c / xj for c in row] for row, xj in zip(rows, points)]


def s_values(points):
    """Row sums of the modified Vandermonde inverse, in product form.

    S_j = prod_{k != j}(1 - x_k) / (x_j * prod_{k != j}(x_j - x_k)).
    """
    field = _check_points(points)
    one = field.one()
    out = []
    for j, xj in enumerate(points):
        num = one
        den = xj
        for k, xk in enumerate(points):
            if k != j:
                num = num * (one - xk)
                den = den * (xj - xk)
        out.append(num / den)
    return out


class Certificate:
    """A verified weight-delta codeword exhibiting d = delta."""

    __slots__ = ("code", "locator_exponents", "s_values", "coefficients",
                 "unit_coefficient", "codeword")

    def __init__(self, code, locator_exponents, s_vals, coefficients,
                 unit_coefficient, codeword):
        self.code = code
        self.locator_exponents = locator_exponents
        self.s_values = s_vals
        self.coefficients = coefficients
        self.unit_coefficient = unit_coefficient
        self.codeword = codeword

    def verify(self) -> bool:
        """Recheck every claim from scratch; raises CertificateError."""
        code = self.code
        points = [code.beta_pow(e) for e in self.locator_exponents]
        svals = s_values(points)
        step = code.subfield_step
        for j, sv in enumerate(svals):
            if sv.log % step != 0:
                raise CertificateError(f"S_{j+1} is outside the code alphabet")
        if [e.log for e in svals] != [e.log for e in self.s_values]:
            raise CertificateError("stored S values do not match recomputation")
        c0 = code.field.from_int(self.unit_coefficient)
        if c0.is_zero:
            raise CertificateError("unit coefficient vanishes in this characteristic")
        expect = [-(c0 * sv) for sv in svals]
        if [e.log for e in expect] != [e.log for e in self.coefficients]:
            raise CertificateError("stored coefficients do not match recomputation")
        if self.codeword.weight() != code.delta:
            raise CertificateError("certificate weight differs from the designed distance")
        support_positions = [pos for pos, _ in self.codeword.support()]
        if support_positions != sorted((0, *self.locator_exponents)):
            raise CertificateError("codeword support does not match the locators")
        if not is_codeword(self.codeword):
            raise CertificateError("certificate word is not in the code")
        return True

    def to_json_dict(self) -> dict:
        return {
            "code": self.code.to_json_dict(),
            "locator_exponents": list(self.locator_exponents),
            "s_values": [e.log for e in self.s_values],
            "coefficients": [e.log for e in self.coefficients],
            "unit_coefficient": self.unit_coefficient,
            "codeword_support": [[pos, c.log] for pos, c in self.codeword.support()],
            "weight": self.code.delta,
        }

    def digest(self) -> str:
        blob = json.dumps(self.to_json_dict(), sort_keys=True,
                          separators=(",", ":")).encode()
        return hashlib.sha256(blob).hexdigest()

    def __repr__(self):
        return (f"Certificate({self.code.params_str()}, "
                f"locators={list(self.locator_exponents)})")


def certify(code: BchCode, exponents, unit_coefficient: int = 1) -> Certificate:
    """Check the S-value criterion for the support {0} | {exponents}.

    Returns a Certificate on success; raises CriterionFailed(j) with the
    1-based index of the first S value that leaves GF(q).
    """
    if code.b != 1:
        raise NotNarrowSense("certification applies to narrow-sense codes")
    n = code.n
    exps = [e % n for e in exponents]
    if len(exps) != code.delta - 1:
        raise BadParameters(
            f"need {code.delta - 1} locator exponents, got {len(exps)}")
    if any(e == 0 for e in exps):
        raise PointIsOne("exponent 0 is the implicit final locator")
    if len(set(exps)) != len(exps):
        raise DuplicateLocator("locator exponents must be distinct mod n")
    exps = tuple(sorted(exps))

    field = code.field
    points = [code.beta_pow(e) for e in exps]
    svals = s_values(points)
    step = code.subfield_step
    for j, sv in enumerate(svals):
        if sv.log % step != 0:
            raise CriterionFailed(
                j + 1, f"S_{j+1} = a^{sv.log} lies outside GF({code.q})")

    c0 = field.from_int(unit_coefficient)
    if c0.is_zero:
        raise BadParameters("unit coefficient must be nonzero in GF(q)")
    coeffs = [-(c0 * sv) for sv in svals]
    word = Codeword.from_support(code, [*zip(exps, coeffs), (0, c0)])
    if word.weight() != code.delta:
        raise CertificateError("constructed word does not have weight delta")
    if not is_codeword(word):
        raise CertificateError("constructed word failed the membership check")
    return Certificate(code, exps, tuple(svals), tuple(coeffs),
                       unit_coefficient, word)


def construct_small_delta(q: int, m: int, delta: int) -> Certificate:
    """Certificate for C(q, q^m - 1, delta) with 2 <= delta <= q - 1.

    The locators are the first delta - 1 powers of the GF(q)* generator
    inside the ambient field, so every S value is a ratio of GF(q)
    quantities and the criterion holds identically.
    """
    prime_power(q)
    if m < 1:
        raise BadParameters(f"extension degree must be positive, got {m}")
    if not 2 <= delta <= q - 1:
        raise DeltaOutOfRange(
            f"family requires 2 <= delta <= q - 1 = {q - 1}, got {delta}")
    n = q**m - 1
    code = build_code(q, n, delta, 1)
    exps = tuple(j * code.subfield_step for j in range(1, delta))
    return certify(code, exps, unit_coefficient=1)


def construct_qt_family(q: int, t: int, m: int) -> Certificate:
    """Certificate for C(q, q^m - 1, q^t + 1) from the trinomial
    x^(q^t) - x^(q^t - 1) + 1.

    The trinomial splits in GF(q^(pt)), p the characteristic, so m must
    be a multiple of p*t.  Its q^t roots together with position 0 form
    the support; all S values equal 1 and the word is the root-locator
    sum minus one.
    """
    p, _ = prime_power(q)
    if t < 1:
        raise BadParameters(f"t must be positive, got {t}")
    if m % (p * t) != 0:
        raise BadParameters(
            f"m = {m} is not a multiple of p*t = {p * t}, so the "
            f"trinomial does not split in GF({q}^{m})")
    d = q**t
    code = build_code(q, q**m - 1, d + 1, 1)
    tri = Polynomial.from_int_coeffs(code.field, [1] + [0] * (d - 2) + [-1, 1])
    roots = roots_in_field(tri, code.field)
    if len(roots) != d:
        raise CertificateError(
            f"trinomial produced {len(roots)} roots, expected {d}")
    exps = tuple(sorted(r.log for r in roots))
    return certify(code, exps, unit_coefficient=-1)


def construct_nonprimitive_family(p: int, e: int, lam: int) -> Certificate:
    """Certificate for C(q, (q^p - 1)/lam, p + 1) with q = p^e, p odd.

    The polynomial x^p + ... + x - 1 over GF(q) has p simple roots in
    GF(q^p), each of norm 1 over GF(q), hence of log divisible by q - 1
    and in particular by lam; dividing the logs by lam gives locators
    for the length-(q^p - 1)/lam code.  All S values equal -1.
    """
    if not is_prime(p) or p == 2:
        raise BadParameters(f"characteristic must be an odd prime, got {p}")
    if e < 1 or e % p == 0:
        raise BadParameters(
            f"extension degree must be positive and prime to {p}, got {e}")
    q = p**e
    if lam < 1 or (q - 1) % lam != 0:
        raise BadParameters(f"{lam} does not divide q - 1 = {q - 1}")
    n = (q**p - 1) // lam
    code = build_code(q, n, p + 1, 1)
    if code.m != p:
        raise AssertionError("splitting degree drifted from p")
    poly = Polynomial.from_int_coeffs(code.field, [-1] + [1] * p)
    roots = roots_in_field(poly, code.field)
    if len(roots) != p:
        raise CertificateError(f"expected {p} simple roots, found {len(roots)}")
    one = code.field.one()
    for r in roots:
        if norm_to_subfield(r, q) != one:
            raise NormCheckFailed(
                f"root a^{r.log} has norm != 1 over GF({q})")
    exps = tuple(sorted(r.log // lam for r in roots))
    return certify(code, exps, unit_coefficient=1)


def lift_certificate(cert: Certificate, m: int) -> Certificate:
    """Transport a primitive-length certificate up to GF(q^m).

    The small ambient field embeds in the large one by sending its
    primitive element to a root of its own minimal polynomial over the
    prime field; taking the root of smallest log makes the map
    deterministic and the h = m case the identity.  Locator exponents
    are multiplied by that root's log and the result re-certified.
    """
    code = cert.code
    q = code.q
    h = code.m
    if code.n != q**h - 1:
        raise BadParameters("only primitive-length certificates lift")
    if m % h != 0:
        raise NotADivisor(f"base degree {h} does not divide {m}")
    big = build_code(q, q**m - 1, code.delta, 1)

    small = code.field
    alpha = small.element(1)
    minpoly = Polynomial.one(small)
    x = Polynomial.x(small)
    conj = alpha
    for _ in range(small.e):
        minpoly = minpoly * (x - Polynomial(small, (conj,)))
        conj = conj**small.p
    images = roots_in_field(
        Polynomial.from_int_coeffs(big.field, minpoly.to_int_coeffs()),
        big.field)
    if not images:
        raise CertificateError("primitive element has no image in the lift")
    u = images[0].log
    big_n = big.field.order - 1
    exps = tuple(sorted(u * e % big_n for e in cert.locator_exponents))
    return certify(big, exps, cert.unit_coefficient)


def load_certificate(data: dict) -> Certificate:
    """Rebuild a certificate from its JSON dictionary and re-verify it.

    The code is reconstructed from scratch and the criterion re-run;
    every stored field must match the recomputation exactly.
    """
    params = data["code"]
    code = build_code(params["q"], params["n"], params["delta"], params["b"])
    cert = certify(code, data["locator_exponents"], data["unit_coefficient"])
    if cert.to_json_dict() != data:
        raise CertificateError("stored certificate does not match recomputation")
    return cert


def _criterion_tester(code: BchCode):
    """Integer-only S-value test over supports {0} | {i_1..i_{delta-1}}.

    Precomputes discrete logs of 1 - beta^i and beta^i - 1 so each
    support costs a handful of table lookups; returns a predicate on
    tuples of distinct nonzero exponents.
    """
    field = code.field
    N = field.order - 1
    n = code.n
    s = code.beta_exponent
    step = code.subfield_step
    neg = field.neg_log
    one = field.one()
    log_one_minus = [0] * n
    log_minus_one = [0] * n
    log_beta = [0] * n
    for i in range(1, n):
        a = (one - field.element(i * s % N)).log
        log_one_minus[i] = a
        log_minus_one[i] = (a + neg) % N
        log_beta[i] = i * s % N

    def test(support) -> bool:
        p1 = 0
        tb = 0
        for i in support:
            p1 += log_one_minus[i]
            tb += log_beta[i]
        base = p1 - tb
        for ij in support:
            t = base - log_one_minus[ij]
            for ik in support:
                if ik != ij:
                    d = ij - ik
                    t -= log_minus_one[d if d > 0 else d + n]
            if t % step:
                return False
        return True

    return test


def search_certificate(code: BchCode, budget: int | None = None,
                       unit_coefficient: int = 1) -> Certificate | None:
    """Exhaust supports containing position 0 in lexicographic order.

    Cyclic shifting puts 0 in the support of some minimum-weight word,
    so a full pass with no hit proves d > delta and returns None.  A
    budget caps the number of supports tested; exceeding it raises
    BudgetExceeded carrying the count.
    """
    if code.b != 1:
        raise NotNarrowSense("search applies to narrow-sense codes")
    test = _criterion_tester(code)
    r = code.delta - 1
    tested = 0
    for support in combinations(range(1, code.n), r):
        if budget is not None and tested >= budget:
            raise BudgetExceeded(
                tested, f"no certificate within {budget} supports")
        tested += 1
        if test(support):
            return certify(code, support, unit_coefficient)
    return None
