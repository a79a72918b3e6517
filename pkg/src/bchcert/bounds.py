"""Sphere-packing bound and distance-optimality labels.

All arithmetic is exact big-integer; the classification is always
relative to the sphere-packing bound (ruling codes out, never proving
better ones exist).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import BadParameters

CLASS_LABELS = {
    0: "sphere-packing-optimal",
    1: "almost-distance-optimal",
    2: "near-distance-optimal",
}
INCONCLUSIVE = "inconclusive"


def sphere_packing_holds(n: int, k: int, d: int, q: int) -> bool:
    """Whether sum_{i<=floor((d-1)/2)} (q-1)^i C(n,i) <= q^(n-k)."""
    if not 1 <= d <= n:
        raise BadParameters(f"need 1 <= d <= n, got d={d}, n={n}")
    if not 0 <= k <= n:
        raise BadParameters(f"need 0 <= k <= n, got k={k}, n={n}")
    radius = (d - 1) // 2
    volume = sum(comb(n, i) * (q - 1)**i for i in range(radius + 1))
    return volume <= q**(n - k)


def max_distance_allowed(n: int, k: int, q: int) -> int:
    """Largest d in 1..n that the sphere-packing inequality permits."""
    if not 0 <= k <= n:
        raise BadParameters(f"need 0 <= k <= n, got k={k}, n={n}")
    rhs = q**(n - k)
    volume = 1
    radius = 0
    best = 0
    for d in range(1, n + 1):
        r = (d - 1) // 2
        if r > radius:
            volume += comb(n, r) * (q - 1)**r
            radius = r
        if volume <= rhs:
            best = d
        else:
            break
    return best


@dataclass(frozen=True)
class OptimalityReport:
    n: int
    k: int
    d: int
    q: int
    max_d_allowed: int
    classification: str

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "q": self.q,
            "max_d_allowed": self.max_d_allowed,
            "class": self.classification,
        }


def classify(n: int, k: int, d: int, q: int) -> OptimalityReport:
    """Label (n,k,d)_q by the gap max_d_allowed - d: 0, 1, 2 map to the
    optimality labels, anything larger is inconclusive."""
    if not 1 <= d <= n:
        raise BadParameters(f"need 1 <= d <= n, got d={d}, n={n}")
    ceiling = max_distance_allowed(n, k, q)
    gap = ceiling - d
    if gap < 0:
        raise BadParameters(
            f"no [{n},{k},{d}]_{q} code exists: sphere packing allows d <= {ceiling}")
    return OptimalityReport(n, k, d, q, ceiling,
                            CLASS_LABELS.get(gap, INCONCLUSIVE))
