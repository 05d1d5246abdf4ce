"""Closed-form thickness values for K_n, K_n x P_2 and K_n x P_m.

Exact integer arithmetic throughout.  Where the value is not known the report
is an honest interval with ``exact=False``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

# provenance labels
KN_FORMULA = "thickness(K_n) = floor((n+7)/6), K9 and K10 excepted (Alekseev-Gonchakov, Beineke-Harary)"
KN_P2_PRIOR = "thickness(K_n x P2) = floor((n+8)/6) for n != 6p+4, K9 x P2 = 3 (Chen-Kohonen-Yang)"
KN_P2_6P4 = "thickness(K_{6p+4} x P2) = p+2: face-counting lower bound with K_{6p+5} upper bound"
YC_P2_SUBGRAPH = "thickness(K_n x P2) <= thickness(K_{n+1}) (Yang-Chen subgraph inequality for P2)"
YC_PM_SUBGRAPH = "thickness(K_n x Pm) <= thickness(K_{n+2}) (Yang-Chen subgraph inequality for Pm)"
KN_PM_PRIOR = "thickness(K_n x Pm) = floor((n+9)/6), m >= 3 (Chen-Kohonen-Yang)"
K3_PM = "K3 x Pm is planar"
K8_PM = "thickness(K8 x Pm) = 2 via the recursive biplanar construction"
OPEN_6P3 = "open: thickness(K_{6p+3} x Pm) in {p+1, p+2} for p >= 2, m >= 3"
TRIVIAL_PLANAR = "planar graph"
SUBGRAPH_MONOTONE = "thickness is monotone under subgraphs"


@dataclass
class BoundReport:
    lower: int
    upper: int
    provenance: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not 1 <= self.lower <= self.upper:
            raise ValueError(f"invalid bound interval [{self.lower}, {self.upper}]")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "provenance": list(self.provenance),
        }


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def thickness_complete(n: int) -> int:
    _require(n >= 1, "n must be >= 1")
    if n in (9, 10):
        return 3
    return (n + 7) // 6


def thickness_kn_p2(n: int) -> BoundReport:
    _require(n >= 1, "n must be >= 1")
    if n == 9:
        return BoundReport(3, 3, [KN_P2_PRIOR])
    value = (n + 8) // 6
    if n == 1:
        return BoundReport(1, 1, [TRIVIAL_PLANAR])
    if n % 6 == 4:
        return BoundReport(value, value, [KN_P2_6P4, YC_P2_SUBGRAPH, KN_FORMULA])
    prov = [KN_P2_PRIOR]
    if n == 8:
        prov.append(K8_PM)
    return BoundReport(value, value, prov)


def thickness_kn_pm(n: int, m: int) -> BoundReport:
    _require(n >= 1, "n must be >= 1")
    _require(m >= 3, "m must be >= 3; use thickness_kn_p2 or thickness_complete")
    if n == 1:
        return BoundReport(1, 1, [TRIVIAL_PLANAR])
    if n == 3:
        return BoundReport(1, 1, [K3_PM])
    if n == 8:
        return BoundReport(2, 2, [K8_PM])
    if n % 6 == 3 and n >= 15:
        p = (n - 3) // 6
        return BoundReport(p + 1, p + 2, [OPEN_6P3, KN_PM_PRIOR])
    value = (n + 9) // 6
    if n % 6 == 4:
        return BoundReport(
            value, value, [YC_PM_SUBGRAPH, KN_FORMULA, KN_P2_6P4, SUBGRAPH_MONOTONE]
        )
    return BoundReport(value, value, [KN_PM_PRIOR])


def thickness_bounds(n: int, m: Optional[int] = None) -> BoundReport:
    """Dispatch on the path length: none or 1 (K_n), 2, or at least 3."""
    if m is None or m == 1:
        v = thickness_complete(n)
        return BoundReport(v, v, [KN_FORMULA])
    _require(m >= 1, "m must be >= 1")
    if m == 2:
        return thickness_kn_p2(n)
    return thickness_kn_pm(n, m)


def euler_ratio_kn_p2(n: int) -> Fraction:
    """n(n+1) / (6(n-1)), the face-counting lower bound for K_n x P_2."""
    _require(n >= 2, "n must be >= 2")
    return Fraction(n * (n + 1), 6 * (n - 1))


def euler_lower_bound_kn_p2(n: int) -> int:
    """Smallest integer not below ``euler_ratio_kn_p2(n)``."""
    r = euler_ratio_kn_p2(n)
    return -((-r.numerator) // r.denominator)


def face_upper_bound(n: int) -> int:
    """Maximum total face count over a planar decomposition of K_n x P_2."""
    _require(n >= 2, "n must be >= 2")
    return (2 * n * n - n) // 3
