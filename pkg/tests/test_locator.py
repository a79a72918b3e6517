"""Certificate machinery tested against independent linear algebra.

The library computes S values by a closed product formula.  The oracle
here instead solves the defining parity-check system by Gaussian
elimination on field elements, so the two agree only if the formula is
actually the solution of the system.
"""

import itertools
import random

import pytest

from bchcert.bch import build_code, is_codeword
from bchcert.errors import (
    BadParameters,
    BudgetExceeded,
    CertificateError,
    CriterionFailed,
    DeltaOutOfRange,
    DuplicateLocator,
    DuplicatePoint,
    NotADivisor,
    NotNarrowSense,
    PointIsOne,
    ZeroPoint,
)
from bchcert.gf import build_field
from bchcert.locator import (
    certify,
    construct_nonprimitive_family,
    construct_qt_family,
    construct_small_delta,
    lift_certificate,
    load_certificate,
    modified_vandermonde_inverse,
    s_values,
    search_certificate,
    vandermonde_inverse,
)


def gauss_solve(rows):
    """Solve an augmented system over a finite field, or return None.

    rows: list of lists of field elements, each [a_1 ... a_r | rhs].
    Plain row reduction; requires a unique solution.
    """
    r = len(rows)
    rows = [list(row) for row in rows]
    for col in range(r):
        pivot = next((i for i in range(col, r) if not rows[i][col].is_zero),
                     None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [c * inv for c in rows[col]]
        for i in range(r):
            if i != col and not rows[i][col].is_zero:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[col])]
    return [rows[i][r] for i in range(r)]


def solve_parity_system(code, exponents, c0):
    """Coefficients forced by the checks at beta^1 .. beta^(delta-1)."""
    field = code.field
    r = len(exponents)
    rows = []
    for s in range(1, r + 1):
        row = [code.beta_pow(s * e) for e in exponents]
        row.append(-(field.one() * c0))
        rows.append(row)
    return gauss_solve(rows)


def random_points(field, r, rng):
    logs = rng.sample(range(1, field.order - 1), r)
    return [field.element(lg) for lg in logs]


def matmul_is_identity(inverse_rows, points, powers):
    field = points[0].field
    r = len(points)
    for j in range(r):
        for jp in range(r):
            acc = field.zero()
            for i in range(r):
                acc = acc + inverse_rows[j][i] * points[jp] ** powers[i]
            expect = field.one() if j == jp else field.zero()
            if acc != expect:
                return False
    return True


def test_vandermonde_inverse_times_matrix():
    rng = random.Random(2024)
    for p, e in [(2, 4), (3, 3), (5, 2), (3, 6)]:
        field = build_field(p, e)
        for _ in range(25):
            r = rng.randrange(2, 9)
            points = random_points(field, r, rng)
            inv = vandermonde_inverse(points)
            assert matmul_is_identity(inv, points, list(range(r)))


def test_modified_vandermonde_inverse_times_matrix():
    rng = random.Random(777)
    field = build_field(3, 4)
    for _ in range(30):
        r = rng.randrange(2, 7)
        points = random_points(field, r, rng)
        inv = modified_vandermonde_inverse(points)
        assert matmul_is_identity(inv, points, list(range(1, r + 1)))


def test_s_values_are_modified_inverse_row_sums():
    rng = random.Random(31337)
    for p, e in [(2, 6), (3, 4), (7, 2)]:
        field = build_field(p, e)
        for _ in range(40):
            r = rng.randrange(1, 8)
            points = random_points(field, r, rng)
            rows = modified_vandermonde_inverse(points)
            sums = [sum(row[1:], row[0]) for row in rows]
            assert [x.log for x in s_values(points)] == [x.log for x in sums]


def test_point_validation():
    field = build_field(3, 3)
    with pytest.raises(ZeroPoint):
        vandermonde_inverse([field.element(2), field.zero()])
    with pytest.raises(PointIsOne):
        s_values([field.one(), field.element(2)])
    with pytest.raises(DuplicatePoint):
        s_values([field.element(3), field.element(3)])
    with pytest.raises(BadParameters):
        s_values([])


def test_certify_matches_gaussian_elimination():
    """Certified coefficients must solve the parity-check system, and
    certification must succeed exactly when the solved coefficients all
    lie in the small alphabet."""
    rng = random.Random(60)
    for q, n, delta in [(3, 26, 5), (4, 15, 5), (2, 15, 5), (3, 13, 4)]:
        code = build_code(q, n, delta)
        step = code.subfield_step
        for _ in range(40):
            exps = sorted(rng.sample(range(1, n), delta - 1))
            solved = solve_parity_system(code, exps, 1)
            solvable = solved is not None and all(
                c.is_zero or c.log % step == 0 for c in solved)
            try:
                cert = certify(code, exps)
            except CriterionFailed:
                assert not solvable, (q, n, delta, exps)
                continue
            assert solvable, (q, n, delta, exps)
            assert [c.log for c in cert.coefficients] == \
                   [c.log for c in solved]
            assert cert.codeword.weight() == delta
            assert is_codeword(cert.codeword)


def test_criterion_failed_reports_first_bad_index():
    code = build_code(3, 26, 5)
    rng = random.Random(4096)
    seen = set()
    hits = 0
    while hits < 25:
        exps = sorted(rng.sample(range(1, 26), 4))
        key = tuple(exps)
        if key in seen:
            continue
        seen.add(key)
        svals = s_values([code.beta_pow(e) for e in exps])
        bad = [j + 1 for j, sv in enumerate(svals)
               if sv.log % code.subfield_step != 0]
        if not bad:
            continue
        hits += 1
        with pytest.raises(CriterionFailed) as exc:
            certify(code, exps)
        assert exc.value.j == bad[0]


def test_certify_argument_checks():
    code = build_code(3, 26, 5)
    with pytest.raises(BadParameters):
        certify(code, [1, 2, 3])  # needs 4 exponents
    with pytest.raises(PointIsOne):
        certify(code, [0, 1, 2, 3])
    with pytest.raises(DuplicateLocator):
        certify(code, [1, 2, 3, 27])  # 27 == 1 mod 26
    shifted = build_code(3, 26, 5, b=2)
    with pytest.raises(NotNarrowSense):
        certify(shifted, [1, 2, 3, 4])
    with pytest.raises(BadParameters):
        certify(code, [1, 3, 9, 13], unit_coefficient=3)  # 3 == 0 in GF(3)


def test_certificate_exponents_are_reduced_and_sorted():
    code = build_code(3, 26, 5)
    cert = certify(code, [29, 1, 13, 9])  # 29 == 3 mod 26
    assert cert.locator_exponents == (1, 3, 9, 13)


def test_search_is_exhaustive_up_to_first_hit():
    """Everything lexicographically before the hit must fail certify."""
    code = build_code(3, 26, 5)
    cert = search_certificate(code)
    assert cert is not None
    hit = cert.locator_exponents
    checked = 0
    for support in itertools.combinations(range(1, 26), 4):
        if tuple(support) >= hit:
            break
        checked += 1
        with pytest.raises(CriterionFailed):
            certify(code, support)
    assert checked > 0


def test_search_none_when_no_weight_delta_word():
    code = build_code(3, 13, 3)
    assert search_certificate(code) is None


def test_search_budget():
    code = build_code(3, 26, 5)
    with pytest.raises(BudgetExceeded) as exc:
        search_certificate(code, budget=10)
    assert exc.value.tested == 10
    # generous budget lets the search finish normally
    assert search_certificate(code, budget=10**6) is not None


def test_search_rejects_shifted_codes():
    with pytest.raises(NotNarrowSense):
        search_certificate(build_code(2, 15, 5, b=2))


def test_small_delta_family():
    cert = construct_small_delta(4, 2, 3)
    assert cert.code.params_str() == "[15,11,3]_4"
    step = cert.code.subfield_step
    assert cert.locator_exponents == (step, 2 * step)
    for sv in cert.s_values:
        assert sv.log % step == 0
    with pytest.raises(DeltaOutOfRange):
        construct_small_delta(4, 2, 4)
    with pytest.raises(DeltaOutOfRange):
        construct_small_delta(3, 3, 1)


@pytest.mark.parametrize("q,t,m", [(2, 1, 4), (2, 2, 4), (3, 1, 3),
                                   (4, 1, 2), (2, 1, 6), (3, 1, 6)])
def test_qt_family_s_values_are_one(q, t, m):
    cert = construct_qt_family(q, t, m)
    code = cert.code
    assert code.n == q**m - 1
    assert code.delta == q**t + 1
    for sv in cert.s_values:
        assert sv.log == 0
    assert cert.unit_coefficient == -1
    # every nonzero coefficient of the word is a GF(q) unit
    assert all(not c.is_zero for c in cert.coefficients)


def test_qt_family_requires_splitting():
    with pytest.raises(BadParameters):
        construct_qt_family(2, 1, 3)  # needs 2 | m
    with pytest.raises(BadParameters):
        construct_qt_family(3, 2, 3)  # needs 6 | m
    with pytest.raises(BadParameters):
        construct_qt_family(2, 0, 4)


@pytest.mark.parametrize("p,e,lam", [(3, 1, 1), (3, 1, 2), (3, 2, 8),
                                     (3, 2, 4), (3, 2, 2), (3, 2, 1)])
def test_nonprimitive_family_s_values_are_minus_one(p, e, lam):
    cert = construct_nonprimitive_family(p, e, lam)
    code = cert.code
    q = p**e
    assert code.n == (q**p - 1) // lam
    assert code.delta == p + 1
    assert code.m == p
    neg = code.field.neg_log
    for sv in cert.s_values:
        assert sv.log == neg
    assert cert.unit_coefficient == 1


def test_nonprimitive_family_validation():
    with pytest.raises(BadParameters):
        construct_nonprimitive_family(2, 1, 1)  # even characteristic
    with pytest.raises(BadParameters):
        construct_nonprimitive_family(3, 3, 1)  # p | e
    with pytest.raises(BadParameters):
        construct_nonprimitive_family(3, 1, 5)  # lam must divide q - 1
    with pytest.raises(BadParameters):
        construct_nonprimitive_family(9, 1, 2)  # p must be prime


def test_lift_identity():
    cert = construct_nonprimitive_family(3, 1, 1)  # [26,20,4]_3, m = 3
    same = lift_certificate(cert, 3)
    assert same.locator_exponents == cert.locator_exponents
    assert same.code.n == cert.code.n


@pytest.mark.parametrize("q,base_delta,h,m", [(3, 5, 3, 6), (4, 5, 2, 4)])
def test_lift_to_bigger_field(q, base_delta, h, m):
    base = search_certificate(build_code(q, q**h - 1, base_delta))
    assert base is not None
    lifted = lift_certificate(base, m)
    assert lifted.code.n == q**m - 1
    assert lifted.code.delta == base_delta
    assert lifted.codeword.weight() == base_delta
    # exponent images all share the stride (q^m-1)/(q^h-1) only when the
    # embedding is trivial on exponents; the lift must stay valid anyway
    assert is_codeword(lifted.codeword)


def test_lift_rejects_bad_degrees():
    cert = search_certificate(build_code(3, 26, 5))
    with pytest.raises(NotADivisor):
        lift_certificate(cert, 7)
    nonprim = construct_nonprimitive_family(3, 1, 2)  # n = 13, not primitive
    with pytest.raises(BadParameters):
        lift_certificate(nonprim, 6)


def test_certificate_json_round_trip():
    cert = construct_qt_family(3, 1, 3)
    data = cert.to_json_dict()
    again = load_certificate(data)
    assert again.to_json_dict() == data
    assert again.digest() == cert.digest()
    assert len(cert.digest()) == 64


def test_load_certificate_rejects_tampering():
    cert = construct_qt_family(2, 2, 4)
    data = cert.to_json_dict()
    data["weight"] = 4
    with pytest.raises(CertificateError):
        load_certificate(data)


def test_verify_detects_mutation():
    cert = construct_small_delta(5, 2, 3)
    assert cert.verify()
    cert.s_values = (cert.s_values[0], cert.s_values[0])
    with pytest.raises(CertificateError):
        cert.verify()
