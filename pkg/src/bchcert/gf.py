"""Exact arithmetic in small finite fields GF(p^e).

Elements are stored in exponent (log) form relative to a fixed primitive
element alpha: a nonzero element is the integer k with value alpha^k, and
zero is a distinguished sentinel.  Multiplication and division are then
integer addition modulo p^e - 1, and addition uses a Zech-logarithm table
built once at field construction:

    alpha^i + alpha^j = alpha^i * (1 + alpha^(j-i)) = alpha^(i + zech[j-i])

Construction is deterministic so that serialized output is reproducible
run over run:

* the modulus is the first irreducible monic polynomial of degree e over
  GF(p) when coefficient vectors (c_{e-1}, ..., c_1, c_0) are scanned in
  ascending lexicographic order (constant term varying fastest);
* the primitive element is the first field element, in ascending order of
  its base-p integer encoding, whose multiplicative order is p^e - 1.

Table size is capped (default 2^22 entries) because three full-size
integer tables are materialized per field; the environment variable
BCH_FIELD_CAP overrides the cap.  Fields are cached and immutable, so a
single instance may be shared freely across threads.
"""

from __future__ import annotations

import functools
import os

from .errors import (
    FieldMismatch,
    FieldTooLarge,
    NotADivisor,
    NotASubfield,
    NotPrime,
    NotPrimePower,
)

DEFAULT_FIELD_CAP = 1 << 22
CAP_ENV_VAR = "BCH_FIELD_CAP"


def field_cap() -> int:
    """Current table-size cap, honoring the BCH_FIELD_CAP override."""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_FIELD_CAP
    cap = int(raw)
    if cap < 2:
        raise ValueError(f"{CAP_ENV_VAR} must be at least 2, got {cap}")
    return cap


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (fine for table-sized inputs)."""
    factors: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def prime_power(q: int) -> tuple[int, int]:
    """Write q = p^e with p prime, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    factors = factorize(q)
    if len(factors) != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    [(p, e)] = factors.items()
    return p, e


# --------------------------------------------------------------------------
# Bare-coefficient polynomial arithmetic over GF(p), used only while
# constructing a field (modulus scan, primitivity checks).  Polynomials are
# trimmed little-endian lists of ints in [0, p).
# --------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    # f must be monic
    a = list(a)
    df = len(f) - 1
    while len(a) - 1 >= df:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - df
            for i, fi in enumerate(f):
                a[shift + i] = (a[shift + i] - lead * fi) % p
        a.pop()
    return _trim(a)


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    return _pmod(_pmul(a, b, p), f, p)


def _ppowmod(a: list[int], k: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while k:
        if k & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        k >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        # reduce a mod b after making b monic
        inv = pow(b[-1], p - 2, p)
        b = [(c * inv) % p for c in b]
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _irreducible(f: list[int], p: int) -> bool:
    """Deterministic Rabin irreducibility test for monic f over GF(p)."""
    d = len(f) - 1
    if d < 1:
        return False
    x = [0, 1]
    if _ppowmod(x, p**d, f, p) != _pmod(x, f, p):
        return False
    for r in factorize(d):
        h = _ppowmod(x, p ** (d // r), f, p)
        diff = _trim([(h[i] if i < len(h) else 0) - (1 if i == 1 else 0) for i in range(max(len(h), 2))])
        diff = [c % p for c in diff]
        if len(_pgcd(f, _trim(diff), p)) != 1:
            return False
    return True


def _encode(a: list[int], p: int) -> int:
    enc = 0
    for c in reversed(a):
        enc = enc * p + c
    return enc


def _decode(enc: int, p: int, e: int) -> list[int]:
    digits = []
    for _ in range(e):
        digits.append(enc % p)
        enc //= p
    return _trim(digits)


def _first_irreducible(p: int, e: int) -> list[int]:
    # Ascending integer scan equals lexicographic order on the coefficient
    # vector (c_{e-1}, ..., c_0) with the constant term varying fastest.
    for body in range(p**e):
        coeffs = []
        tmp = body
        for _ in range(e):
            coeffs.append(tmp % p)
            tmp //= p
        f = coeffs + [1]
        if f[0] == 0:
            continue  # divisible by x
        if _irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found (unreachable)")


class Field:
    """An immutable GF(p^e) instance with exp/log/Zech tables."""

    __slots__ = (
        "p", "e", "order", "modulus", "generator_encoding",
        "exp", "log", "zech", "neg_log", "_prime_logs", "_int_by_log",
    )

    def __init__(self, p: int, e: int, modulus: tuple[int, ...] | None,
                 generator_encoding: int, exp: list[int], log: list[int],
                 zech: list[int], neg_log: int, prime_logs: list[int]):
        self.p = p
        self.e = e
        self.order = p**e
        self.modulus = modulus
        self.generator_encoding = generator_encoding
        self.exp = exp
        self.log = log
        self.zech = zech
        self.neg_log = neg_log
        self._prime_logs = prime_logs
        self._int_by_log = {lg: c for c, lg in enumerate(prime_logs) if lg >= 0}

    # -- construction helpers -------------------------------------------

    def element(self, log: int) -> "FieldElement":
        """The element alpha^log (log = -1 denotes zero)."""
        if log != -1:
            log %= self.order - 1 if self.order > 2 else 1
        return FieldElement(self, log)

    def zero(self) -> "FieldElement":
        return FieldElement(self, -1)

    def one(self) -> "FieldElement":
        return FieldElement(self, 0)

    def from_int(self, c: int) -> "FieldElement":
        """Canonical image of the integer c (i.e. c copies of 1)."""
        return FieldElement(self, self._prime_logs[c % self.p])

    def from_encoding(self, enc: int) -> "FieldElement":
        if not 0 <= enc < self.order:
            raise ValueError(f"encoding {enc} out of range for {self!r}")
        return FieldElement(self, self.log[enc])

    def elements(self):
        """All field elements: zero first, then alpha^0, alpha^1, ..."""
        yield self.zero()
        for k in range(self.order - 1):
            yield FieldElement(self, k)

    def nonzero_elements(self):
        for k in range(self.order - 1):
            yield FieldElement(self, k)

    def subfield_step(self, sub_order: int) -> int:
        """Exponent stride of the order-(sub_order - 1) subgroup.

        A nonzero element lies in the subfield of size sub_order exactly
        when its log is a multiple of the returned stride.
        """
        p, h = prime_power(sub_order)
        if p != self.p or self.e % h != 0:
            raise NotASubfield(f"GF({sub_order}) is not a subfield of {self!r}")
        return (self.order - 1) // (sub_order - 1)

    def same_field(self, other: "Field") -> bool:
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"

    def describe(self) -> dict:
        """Construction parameters, enough to rebuild the same tables."""
        return {
            "p": self.p,
            "e": self.e,
            "modulus": list(self.modulus) if self.modulus is not None else None,
            "primitive_element": self.generator_encoding,
        }


class FieldElement:
    """A single value of a Field, stored as log (or -1 for zero)."""

    __slots__ = ("field", "log")

    def __init__(self, field: Field, log: int):
        self.field = field
        self.log = log

    @property
    def is_zero(self) -> bool:
        return self.log == -1

    def encoding(self) -> int:
        """Base-p integer encoding of the polynomial representation."""
        return 0 if self.log == -1 else self.field.exp[self.log]

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and not self.field.same_field(other.field):
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.log, other.log
        if a == -1:
            return other
        if b == -1:
            return self
        field = self.field
        n = field.order - 1
        z = field.zech[(b - a) % n]
        if z == -1:
            return FieldElement(field, -1)
        return FieldElement(field, (a + z) % n)

    __radd__ = __add__

    def __neg__(self):
        if self.log == -1:
            return self
        field = self.field
        return FieldElement(field, (self.log + field.neg_log) % (field.order - 1))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.log == -1 or other.log == -1:
            return FieldElement(self.field, -1)
        return FieldElement(self.field, (self.log + other.log) % (self.field.order - 1))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.log == -1:
            raise ZeroDivisionError("inverting zero field element")
        n = self.field.order - 1
        return FieldElement(self.field, (-self.log) % n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if self.log == -1:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return self if k else self.field.one()
        n = self.field.order - 1
        return FieldElement(self.field, (self.log * k) % n)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field.same_field(other.field) and self.log == other.log

    def __hash__(self):
        return hash((self.field.p, self.field.e, self.log))

    def __bool__(self):
        return self.log != -1

    def multiplicative_order(self) -> int:
        if self.log == -1:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.field.order - 1
        if n == 0:
            return 1
        from math import gcd
        return n // gcd(n, self.log) if self.log else 1

    def in_subfield(self, sub_order: int) -> bool:
        if self.log == -1:
            return True
        return self.log % self.field.subfield_step(sub_order) == 0

    def as_int(self) -> int:
        """Integer value, defined only for prime-subfield elements."""
        if self.log == -1:
            return 0
        try:
            return self.field._int_by_log[self.log]
        except KeyError:
            raise NotASubfield(f"{self!r} is not in the prime subfield") from None

    def __repr__(self):
        if self.log == -1:
            return "0"
        if self.log == 0:
            return "1"
        if self.log in self.field._int_by_log:
            return str(self.field._int_by_log[self.log])
        return f"a^{self.log}"


@functools.lru_cache(maxsize=None)
def _build_field_cached(p: int, e: int) -> Field:
    order = p**e
    n = order - 1

    if e == 1:
        modulus = None
        # smallest primitive root
        if n <= 1:
            gen_enc = 1
        else:
            gen_enc = None
            prime_divs = list(factorize(n))
            for g in range(2, p):
                if all(pow(g, n // r, p) != 1 for r in prime_divs):
                    gen_enc = g
                    break
            assert gen_enc is not None
        exp = [1] * max(n, 1)
        cur = 1
        for i in range(n):
            exp[i] = cur
            cur = (cur * gen_enc) % p
        assert cur == 1
    else:
        f = _first_irreducible(p, e)
        modulus = tuple(f)
        gen_enc = None
        prime_divs = list(factorize(n))
        for enc in range(2, order):
            cand = _decode(enc, p, e)
            ok = True
            for r in prime_divs:
                if _ppowmod(cand, n // r, f, p) == [1]:
                    ok = False
                    break
            if ok:
                gen_enc = enc
                break
        assert gen_enc is not None
        gen_poly = _decode(gen_enc, p, e)
        exp = [0] * n
        cur = [1]
        for i in range(n):
            exp[i] = _encode(cur, p)
            cur = _pmulmod(cur, gen_poly, f, p)
        assert cur == [1], "generator order mismatch"
        assert len(set(exp)) == n, "exp table is not a bijection"

    log = [-1] * order
    for i, enc in enumerate(exp):
        log[enc] = i

    zech = [0] * max(n, 1)
    for i in range(n):
        enc = exp[i]
        c0 = enc % p
        enc1 = enc - c0 + (c0 + 1) % p
        zech[i] = log[enc1] if enc1 else -1

    neg_log = 0 if p == 2 else n // 2

    prime_logs = [-1] * p
    for c in range(1, p):
        prime_logs[c] = log[c]

    return Field(p, e, modulus, gen_enc, exp, log, zech, neg_log, prime_logs)


def build_field(p: int, e: int = 1) -> Field:
    """Construct (or fetch from cache) GF(p^e).

    Raises NotPrime if p is composite, FieldTooLarge if p^e exceeds the
    table cap.  The cap is re-checked on every call, so lowering
    BCH_FIELD_CAP makes previously buildable fields unavailable.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError(f"extension degree must be positive, got {e}")
    if p**e > field_cap():
        raise FieldTooLarge(f"GF({p}^{e}) exceeds the field cap {field_cap()}")
    return _build_field_cached(p, e)


def nth_root_of_unity(field: Field, n: int) -> FieldElement:
    """A fixed primitive n-th root of unity: alpha^((|F|-1)/n).

    Requires n to divide |F| - 1; the result has multiplicative order
    exactly n because alpha is primitive.
    """
    size = field.order - 1
    if n < 1 or size % n != 0:
        raise NotADivisor(f"{n} does not divide {field!r} group order {size}")
    return field.element(size // n)


def norm_to_subfield(x: FieldElement, q: int) -> FieldElement:
    """Field norm of x down to GF(q): x^(1 + q + ... + q^(h-1)).

    GF(q) must be a subfield of x's field, |F| = q^h.  The norm of zero is
    zero; nonzero norms land in GF(q)^*.
    """
    field = x.field
    h = 0
    size = 1
    while size < field.order:
        size *= q
        h += 1
    if size != field.order or h < 1:
        raise NotASubfield(f"{field!r} is not an extension of GF({q})")
    field.subfield_step(q)  # validates GF(q) really is a subfield
    if x.is_zero:
        return x
    return x ** ((field.order - 1) // (q - 1))


def trace_to_prime_field(x: FieldElement) -> FieldElement:
    """Absolute trace x + x^p + ... + x^(p^(e-1)); lands in GF(p)."""
    field = x.field
    acc = field.zero()
    y = x
    for _ in range(field.e):
        acc = acc + y
        y = y**field.p
    return acc


def embed_exponent(i: int, q: int, h: int, m: int) -> int:
    """Map an exponent in GF(q^h)^* into GF(q^m)^* along the subgroup.

    With beta_h := beta_m^((q^m-1)/(q^h-1)) the canonical generator of the
    order-(q^h - 1) subgroup of the big field, beta_h^i = beta_m^(i * stride).
    Pure exponent bookkeeping; requires h | m.
    """
    if h < 1 or m < 1 or m % h != 0:
        raise NotADivisor(f"{h} does not divide {m}")
    big = q**m - 1
    small = q**h - 1
    if not 0 <= i < small:
        raise ValueError(f"exponent {i} out of range for GF({q}^{h})")
    return i * (big // small)
