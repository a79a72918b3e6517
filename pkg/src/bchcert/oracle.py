"""Brute-force minimum distance for desk-scale codes.

Two independent routes.  Full enumeration walks every one of the q^k
codewords and is the ground truth; it sees nothing but the generator
polynomial and the field tables.  Support enumeration scans supports by
weight level starting at the BCH bound, deciding each level exactly,
and is feasible on somewhat larger codes as long as C(n-1, w-1) stays
small; at the level w = delta it reuses the interpolation criterion
(the parity system has a one-dimensional kernel there), elsewhere it
enumerates the (q-1)^(w-1) normalized coefficient patterns directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .bch import BchCode, Codeword, bch_bound, is_codeword
from .errors import BudgetExceeded, DegenerateCode, TooLarge
from .locator import _criterion_tester, certify

FULL_ENUM_CAP = 1 << 24


@dataclass(frozen=True)
class OracleResult:
    d: int
    witness: Codeword
    method: str
    enumerated: int

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "witness_support": [pos for pos, _ in self.witness.support()],
            "method": self.method,
            "enumerated": self.enumerated,
        }


@dataclass(frozen=True)
class LowerBoundOnly:
    """Exhausted every support up to w_max without finding a codeword:
    the minimum distance is at least lower_bound."""

    lower_bound: int
    enumerated: int
    method: str = "support-enumeration"

    def to_json_dict(self) -> dict:
        return {
            "d": None,
            "lower_bound": self.lower_bound,
            "method": self.method,
            "enumerated": self.enumerated,
        }


def _gray_steps(radix, ndigits):
    """Loopless reflected Gray generation over fixed-radix digit vectors.

    Yields (digit index, +1 or -1) so that applying each change visits
    all radix^ndigits vectors exactly once, one unit step at a time.
    """
    a = [0] * ndigits
    f = list(range(ndigits + 1))
    o = [1] * ndigits
    while True:
        j = f[0]
        f[0] = 0
        if j == ndigits:
            return
        yield j, o[j]
        a[j] += o[j]
        if a[j] == 0 or a[j] == radix - 1:
            o[j] = -o[j]
            f[j] = f[j + 1]
            f[j + 1] = j + 1


def min_distance_full(code: BchCode) -> OracleResult:
    """Exact minimum distance by enumerating all q^k codewords.

    Messages run in Gray order over their prime-field digit vectors, so
    each step adds or subtracts a single shifted-and-scaled copy of the
    generator; the codeword and its weight are updated incrementally.
    """
    k = code.dimension
    if k == 0:
        raise DegenerateCode("the zero code has no minimum distance")
    total = code.q**k
    if total > FULL_ENUM_CAP:
        raise TooLarge(
            f"{code.q}^{k} codewords exceed the enumeration cap {FULL_ENUM_CAP}")

    field = code.field
    n = code.n
    N = field.order - 1
    zech = field.zech
    neg = field.neg_log
    step = code.subfield_step
    g_sparse = [(i, c.log) for i, c in enumerate(code.generator.coeffs)
                if not c.is_zero]
    rows = []
    negrows = []
    for i in range(k):
        for b in range(code.eq):
            shift = b * step
            row = [(i + pos, (lg + shift) % N) for pos, lg in g_sparse]
            rows.append(row)
            negrows.append([(pos, (lg + neg) % N) for pos, lg in row])

    cur = [-1] * n
    weight = 0
    best = n + 1
    best_logs = None
    count = 1  # the zero word
    for j, o in _gray_steps(code.p, k * code.eq):
        for pos, lg in (rows[j] if o > 0 else negrows[j]):
            a = cur[pos]
            if a < 0:
                cur[pos] = lg
                weight += 1
            else:
                z = zech[lg - a if lg >= a else lg - a + N]
                if z < 0:
                    cur[pos] = -1
                    weight -= 1
                else:
                    v = a + z
                    cur[pos] = v if v < N else v - N
        count += 1
        if 0 < weight < best:
            best = weight
            best_logs = cur.copy()

    zero = field.zero()
    witness = Codeword(code, [zero if lg < 0 else field.element(lg)
                              for lg in best_logs])
    if witness.weight() != best or not is_codeword(witness):
        raise AssertionError("incremental enumeration lost consistency")
    return OracleResult(best, witness, "full-enumeration", count)


def min_distance_support(code: BchCode, w_max: int | None = None,
                         budget: int | None = None):
    """Decide d by scanning support sizes from the BCH bound upward.

    Supports are normalized to contain position 0 (cyclic shifts) with
    unit coefficient there (scaling).  Returns an OracleResult on the
    first weight level admitting a codeword, else LowerBoundOnly with
    the best bound proved.  A budget caps the total number of supports
    examined across levels.
    """
    if code.dimension == 0:
        raise DegenerateCode("the zero code has no minimum distance")
    n = code.n
    floor = bch_bound(code)
    if w_max is None:
        w_max = code.delta
    field = code.field
    N = field.order - 1
    zech = field.zech
    bs = code.beta_exponent
    step = code.subfield_step
    defining = code.defining_set_sorted
    nonzero_logs = tuple(t * step for t in range(code.q - 1))
    checked = 0

    for w in range(floor, min(w_max, n) + 1):
        if w == code.delta and code.b == 1:
            test = _criterion_tester(code)
            for sub in combinations(range(1, n), w - 1):
                if budget is not None and checked >= budget:
                    raise BudgetExceeded(checked, "support budget exhausted")
                checked += 1
                if test(sub):
                    cert = certify(code, sub)
                    return OracleResult(w, cert.codeword,
                                        "support-enumeration", checked)
        else:
            for sub in combinations(range(1, n), w - 1):
                if budget is not None and checked >= budget:
                    raise BudgetExceeded(checked, "support budget exhausted")
                checked += 1
                for coeff_logs in product(nonzero_logs, repeat=w - 1):
                    ok = True
                    for s in defining:
                        acc = 0  # unit coefficient at position 0
                        for cl, pos in zip(coeff_logs, sub):
                            lg = (cl + s * pos * bs) % N
                            if acc < 0:
                                acc = lg
                            else:
                                z = zech[lg - acc if lg >= acc else lg - acc + N]
                                if z < 0:
                                    acc = -1
                                else:
                                    acc = acc + z
                                    if acc >= N:
                                        acc -= N
                        if acc >= 0:
                            ok = False
                            break
                    if ok:
                        pairs = [(0, field.one())]
                        pairs += [(pos, field.element(cl))
                                  for pos, cl in zip(sub, coeff_logs)]
                        word = Codeword.from_support(code, pairs)
                        if not is_codeword(word):
                            raise AssertionError(
                                "support scan accepted a non-codeword")
                        return OracleResult(w, word, "support-enumeration",
                                            checked)
    return LowerBoundOnly(max(floor, min(w_max, n) + 1), checked)
