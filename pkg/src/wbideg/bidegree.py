"""Decision procedures for the achievable weighted-bidegree sets.

Z(w) is the set of weighted bidegrees of plane automorphisms under the
weight w = (w1, w2).  Writing wt = max(w1, w2) and wb = min(w1, w2), it is
the union of

  * the w1-lattice branch: (d1, d2) in (w1 N+)^2 with d1|d2 or d2|d1,
    max(d1, d2) >= wt, and min(d1, d2) < wt implying min(d1, d2) = wb;
  * the same with w2 in place of w1;
  * the exceptional triple (w1, w2), (w2, w1), (wt, wt).

The length-stratified subsets (maps of length <= 1, respectively >= 2)
are decided by in_le1_set and in_ge2_set; their union recovers Z(w).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Set

from .decompose import NormalForm
from .maps import Bidegree, wmdeg_map
from .poly import Weight, check_weight, total_deg, wdeg

COND_LATTICE = "lattice"
COND_DIVISIBILITY = "divisibility"
COND_MAX_GE_WTILDE = "max_ge_wtilde"
COND_MIN_RULE = "min_rule"


class InvalidBidegree(ValueError):
    """Bidegree components must be positive integers."""


def _check_bidegree(d: Bidegree) -> tuple:
    d1, d2 = d
    if not (isinstance(d1, int) and isinstance(d2, int) and d1 >= 1 and d2 >= 1):
        raise InvalidBidegree(
            f"bidegree components must be positive integers, got {d!r}"
        )
    return (d1, d2)


@dataclass(frozen=True)
class MembershipWitness:
    verdict: str  # "member" | "non-member"
    branch: Optional[str]  # "exceptional" | "w1" | "w2" | None
    failed_conditions: tuple = ()

    @property
    def is_member(self) -> bool:
        return self.verdict == "member"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "branch": self.branch,
            "failed": list(self.failed_conditions),
        }


def _divides(a: int, b: int) -> bool:
    return b % a == 0


def _lattice_branch_ok(u: int, w: Weight, d: tuple) -> bool:
    d1, d2 = d
    wt = max(w)
    wb = min(w)
    if d1 % u or d2 % u:
        return False
    if not (_divides(d1, d2) or _divides(d2, d1)):
        return False
    if max(d1, d2) < wt:
        return False
    if min(d1, d2) < wt and min(d1, d2) != wb:
        return False
    return True


def member(w: Weight, d: Bidegree) -> MembershipWitness:
    """Decide d in Z(w), with the matching branch (exceptional first, then
    the w1 lattice, then the w2 lattice) or the list of failed conditions."""
    w1, w2 = check_weight(w)
    d1, d2 = _check_bidegree(d)
    wt = max(w1, w2)
    if (d1, d2) in {(w1, w2), (w2, w1), (wt, wt)}:
        return MembershipWitness("member", "exceptional")
    if _lattice_branch_ok(w1, (w1, w2), (d1, d2)):
        return MembershipWitness("member", "w1")
    if _lattice_branch_ok(w2, (w1, w2), (d1, d2)):
        return MembershipWitness("member", "w2")
    failed: List[str] = []
    if (d1 % w1 or d2 % w1) and (d1 % w2 or d2 % w2):
        failed.append(COND_LATTICE)
    if not (_divides(d1, d2) or _divides(d2, d1)):
        failed.append(COND_DIVISIBILITY)
    if max(d1, d2) < wt:
        failed.append(COND_MAX_GE_WTILDE)
    if min(d1, d2) < wt and min(d1, d2) != min(w1, w2):
        failed.append(COND_MIN_RULE)
    return MembershipWitness("non-member", None, tuple(failed))


def enumerate_Z(w: Weight, bound: int) -> Set[tuple]:
    """All members of Z(w) with both components <= bound."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    check_weight(w)
    out = set()
    for d1 in range(1, bound + 1):
        for d2 in range(1, bound + 1):
            if member(w, (d1, d2)).is_member:
                out.add((d1, d2))
    return out


def _in_le1_family(u: int, other: int, d: tuple) -> bool:
    # {(u, k u), (k u, u), (k u, k u) : k >= 1, k u >= other}
    d1, d2 = d
    if d1 == u and d2 % u == 0 and d2 >= u and d2 >= other:
        return True
    if d2 == u and d1 % u == 0 and d1 >= u and d1 >= other:
        return True
    if d1 == d2 and d1 % u == 0 and d1 >= u and d1 >= other:
        return True
    return False


def in_le1_set(w: Weight, d: Bidegree) -> bool:
    """Weighted bidegrees reachable by automorphisms of length <= 1."""
    w1, w2 = check_weight(w)
    d1, d2 = _check_bidegree(d)
    wt = max(w1, w2)
    if (d1, d2) in {(w1, w2), (w2, w1), (wt, wt)}:
        return True
    return _in_le1_family(w1, w2, (d1, d2)) or _in_le1_family(w2, w1, (d1, d2))


def in_ge2_set(w: Weight, d: Bidegree) -> bool:
    """Weighted bidegrees reachable by automorphisms of length >= 2."""
    w1, w2 = check_weight(w)
    d1, d2 = _check_bidegree(d)
    wt = max(w1, w2)
    in_lattice = (d1 % w1 == 0 and d2 % w1 == 0) or (d1 % w2 == 0 and d2 % w2 == 0)
    return (
        in_lattice
        and min(d1, d2) >= wt
        and (_divides(d1, d2) or _divides(d2, d1))
    )


def propagate_wmdeg(nf: NormalForm, w: Weight) -> Bidegree:
    """Weighted bidegree of a normal form without expanding the composition.

    Starts from the weighted bidegree of L1 (affine, cheap to expand);
    each shear of degree n on axis y updates (k1, k2) to
    (k1, max(n * k1, k2)) and symmetrically on axis x; L2 then propagates
    the max of the running degrees selected by its nonzero matrix entries.
    This is exact on normal forms because the two running degrees are
    distinct whenever at least one shear is present, so no weighted
    leading-form cancellation can occur.  Length-0 forms fall back to
    full expansion.
    """
    check_weight(w)
    if nf.length == 0:
        return wmdeg_map(nf.evaluate(), w)
    k1, k2 = wmdeg_map(nf.l1.to_polymap(), w)
    for t in nf.triangulars:
        n = total_deg(t.f)
        if t.axis == "y":
            k2 = max(n * k1, k2)
        else:
            k1 = max(n * k2, k1)
    (a, b), (c, d) = nf.l2.matrix
    d1 = max(([k1] if a != 0 else []) + ([k2] if b != 0 else []))
    d2 = max(([k1] if c != 0 else []) + ([k2] if d != 0 else []))
    return (d1, d2)
