"""Narrow-sense and general BCH codes over GF(q).

A BCH code C(q, n, delta, b) of length n (gcd(n, q) = 1) is the cyclic
code whose generator is the least common multiple of the minimal
polynomials of beta^b, ..., beta^(b+delta-2), where beta is a fixed
primitive n-th root of unity in GF(q^m) and m is the multiplicative
order of q mod n.  Equivalently the defining set T is the union of the
q-cyclotomic cosets of b, ..., b+delta-2 mod n, the generator is
prod_{i in T} (x - beta^i), and the dimension is n - |T|.

All computation happens inside the single ambient field GF(q^m); the
alphabet GF(q) is the order-(q - 1) power subgroup, membership being a
divisibility condition on logs.
"""

from __future__ import annotations

from math import gcd

from .errors import (
    InvalidDelta,
    LengthMismatch,
    NotCoprime,
    NotNarrowSense,
    OutOfLemmaRange,
)
from .gf import Field, FieldElement, build_field, nth_root_of_unity, prime_power
from .poly import Polynomial


def ord_mod(n: int, q: int) -> int:
    """Multiplicative order of q modulo n (the extension degree m)."""
    if n < 2:
        raise ValueError(f"modulus must be at least 2, got {n}")
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    m = 1
    acc = q % n
    while acc != 1:
        acc = (acc * q) % n
        m += 1
    return m


def cyclotomic_coset(i: int, n: int, q: int) -> tuple[int, ...]:
    """The q-cyclotomic coset of i mod n, sorted ascending."""
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    i %= n
    members = {i}
    j = (i * q) % n
    while j != i:
        members.add(j)
        j = (j * q) % n
    return tuple(sorted(members))


def all_cosets(n: int, q: int) -> list[tuple[int, ...]]:
    """The full coset partition of Z_n, sorted by leader."""
    seen = set()
    cosets = []
    for i in range(n):
        if i not in seen:
            c = cyclotomic_coset(i, n, q)
            seen.update(c)
            cosets.append(c)
    return cosets


class BchCode:
    """An immutable BCH code instance with its ambient field baked in."""

    __slots__ = (
        "q", "p", "eq", "n", "delta", "b", "m", "field", "beta_exponent",
        "defining_set", "defining_set_sorted", "generator", "dimension",
        "subfield_step",
    )

    def __init__(self, q, p, eq, n, delta, b, m, field, beta_exponent,
                 defining_set, generator, dimension):
        self.q = q
        self.p = p
        self.eq = eq
        self.n = n
        self.delta = delta
        self.b = b
        self.m = m
        self.field = field
        self.beta_exponent = beta_exponent
        self.defining_set = frozenset(defining_set)
        self.defining_set_sorted = tuple(sorted(defining_set))
        self.generator = generator
        self.dimension = dimension
        self.subfield_step = (field.order - 1) // (q - 1)

    def beta(self) -> FieldElement:
        return self.field.element(self.beta_exponent)

    def beta_pow(self, i: int) -> FieldElement:
        return self.field.element((self.beta_exponent * i) % (self.field.order - 1))

    def alphabet_element(self, j: int) -> FieldElement:
        """The j-th power of the canonical GF(q) subgroup generator."""
        return self.field.element((j % (self.q - 1)) * self.subfield_step)

    def __repr__(self):
        return f"C(q={self.q}, n={self.n}, delta={self.delta}, b={self.b})"

    def params_str(self) -> str:
        return f"[{self.n},{self.dimension},{self.delta}]_{self.q}"

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "delta": self.delta,
            "b": self.b,
            "m": self.m,
            "k": self.dimension,
            "defining_set_size": len(self.defining_set),
            "generator": self.generator.logs(),
            "field": self.field.describe(),
        }


class Codeword:
    """A length-n word over GF(q), stored as ambient field elements."""

    __slots__ = ("code", "coeffs")

    def __init__(self, code: BchCode, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != code.n:
            raise LengthMismatch(f"expected length {code.n}, got {len(coeffs)}")
        step = code.subfield_step
        for c in coeffs:
            if not c.is_zero and c.log % step != 0:
                raise ValueError("coefficient outside the code alphabet GF(q)")
        self.code = code
        self.coeffs = coeffs

    @classmethod
    def from_support(cls, code: BchCode, pairs) -> "Codeword":
        coeffs = [code.field.zero()] * code.n
        for pos, val in pairs:
            coeffs[pos] = val
        return cls(code, coeffs)

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if not c.is_zero)

    def support(self) -> list[tuple[int, FieldElement]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if not c.is_zero]

    def polynomial(self) -> Polynomial:
        return Polynomial(self.code.field, self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Codeword):
            return NotImplemented
        return self.code is other.code and [c.log for c in self.coeffs] == [c.log for c in other.coeffs]

    def __repr__(self):
        return f"Codeword({self.code.params_str()}, weight={self.weight()})"


def build_code(q: int, n: int, delta: int, b: int = 1) -> BchCode:
    """Construct C(q, n, delta, b).

    Builds the ambient field GF(q^m), assembles the defining set, and
    multiplies out the generator, verifying its coefficients land in
    GF(q).  Raises NotCoprime, InvalidDelta, or field construction errors.
    """
    p, eq = prime_power(q)
    if n < 2:
        raise InvalidDelta(f"code length must be at least 2, got {n}")
    if gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")
    if not 2 <= delta <= n:
        raise InvalidDelta(f"designed distance {delta} outside 2..{n}")
    m = ord_mod(n, q)
    field = build_field(p, eq * m)
    beta = nth_root_of_unity(field, n)

    b %= n
    defining = set()
    for i in range(delta - 1):
        defining.update(cyclotomic_coset(b + i, n, q))

    gen = Polynomial.one(field)
    x = Polynomial.x(field)
    for i in sorted(defining):
        gen = gen * (x - Polynomial(field, (beta**i,)))
    step = (field.order - 1) // (q - 1)
    for c in gen.coeffs:
        if not c.is_zero and c.log % step != 0:
            raise AssertionError("generator coefficient escaped GF(q)")

    return BchCode(q, p, eq, n, delta, b, m, field, beta.log,
                   defining, gen, n - len(defining))


def minimal_polynomial(code: BchCode, i: int) -> Polynomial:
    """Minimal polynomial of beta^i over GF(q): prod over the coset of i."""
    x = Polynomial.x(code.field)
    out = Polynomial.one(code.field)
    for j in cyclotomic_coset(i, code.n, code.q):
        out = out * (x - Polynomial(code.field, (code.beta_pow(j),)))
    return out


def is_codeword(word: Codeword) -> bool:
    """Membership via both defining routes, which must agree.

    Route one evaluates the word at beta^i for every i in the defining
    set (sparse evaluation over the support); route two checks that the
    generator divides the word polynomial.
    """
    code = word.code
    support = word.support()
    by_eval = True
    for i in code.defining_set_sorted:
        acc = code.field.zero()
        for pos, c in support:
            acc = acc + c * code.beta_pow(i * pos)
        if not acc.is_zero:
            by_eval = False
            break
    by_division = (word.polynomial() % code.generator).is_zero
    if by_eval != by_division:
        raise AssertionError(
            f"membership routes disagree on {word!r}: eval={by_eval} division={by_division}")
    return by_eval


def dimension_closed_form(q: int, n: int, delta: int) -> int:
    """Closed-form dimension n - m * ceil((delta-1)(1-1/q)).

    Valid when q^ceil(m/2) < n <= q^m - 1 and
    2 <= delta <= min(floor(n * q^ceil(m/2) / (q^m - 1)), n); outside
    that range OutOfLemmaRange is raised and callers should fall back to
    build_code's exact count.
    """
    m = ord_mod(n, q)
    half = -(-m // 2)
    if not q**half < n <= q**m - 1:
        raise OutOfLemmaRange(f"n={n} outside (q^ceil(m/2), q^m - 1] for q={q}, m={m}")
    delta_max = min(n * q**half // (q**m - 1), n)
    if not 2 <= delta <= delta_max:
        raise OutOfLemmaRange(f"delta={delta} outside 2..{delta_max} for q={q}, n={n}")
    return n - m * (-(-((delta - 1) * (q - 1)) // q))


def bose_distance(code: BchCode) -> int:
    """Largest delta' with {1, ..., delta'-1} inside the defining set."""
    if code.b != 1:
        raise NotNarrowSense("Bose distance is defined for narrow-sense codes")
    t = code.defining_set
    j = 1
    while j < code.n and j in t:
        j += 1
    return j


def bch_bound(code: BchCode) -> int:
    """One plus the longest run of cyclically consecutive defining-set
    elements, maximized over all starting offsets."""
    t = code.defining_set
    n = code.n
    if len(t) == n:
        return n + 1
    best = 0
    for start in t:
        if (start - 1) % n in t:
            continue  # not the head of a run
        length = 1
        j = (start + 1) % n
        while j in t:
            length += 1
            j = (j + 1) % n
        best = max(best, length)
    return best + 1
