"""Brute-force enumeration oracle and end-to-end verification suites.

The harness enumerates all generator words over a finite pool, computes
their weighted bidegrees by full expansion, and checks them against the
predicted characterization set (soundness), realizes every predicted
bidegree (completeness), and stratifies the achieved bidegrees by the
normalized length of each word.  The round-trip suite replays seeded
random normal-form words through decomposition and inversion.

All failure records carry the offending word's JSON rendering, so any
reported failure is independently replayable.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from .bidegree import enumerate_Z, in_ge2_set, in_le1_set, member, propagate_wmdeg
from .decompose import NormalForm, decompose, invert_map, normalize_word
from .maps import (
    AffineMap,
    ElementaryMap,
    Factor,
    IDENTITY_MAP,
    PolyMap,
    compose,
    evaluate_word,
    invert_word,
    map_equal,
    wmdeg_map,
    word_to_json,
)
from .poly import DegreeOverflow, Poly, Weight, total_deg
from .realize import NotRealizable, realize


@dataclass(frozen=True)
class GeneratorPool:
    """Finite alphabet of invertible factors for exhaustive enumeration."""

    affines: Tuple[AffineMap, ...]
    shear_exponents: Tuple[int, ...]
    shear_coefficients: Tuple[object, ...]
    max_word_length: int
    max_total_degree: int

    def __post_init__(self):
        if not self.affines or not self.shear_exponents or not self.shear_coefficients:
            raise ValueError("pool affine, exponent, and coefficient sets must be nonempty")
        if any(e < 2 for e in self.shear_exponents):
            raise ValueError("pool shear exponents must be >= 2")

    def generators(self) -> List[Factor]:
        gens: List[Factor] = list(self.affines)
        for axis in ("y", "x"):
            for exp in self.shear_exponents:
                for coeff in self.shear_coefficients:
                    if axis == "y":
                        gens.append(ElementaryMap("y", Poly.monomial(coeff, exp, 0)))
                    else:
                        gens.append(ElementaryMap("x", Poly.monomial(coeff, 0, exp)))
        return gens


def desk_pool(max_word_length: int = 3, max_total_degree: int = 64) -> GeneratorPool:
    """Small default pool that exercises all affine degree patterns."""
    return GeneratorPool(
        affines=(
            AffineMap.identity(),
            AffineMap.swap(),
            AffineMap(((1, 1), (0, 1))),  # (x + y, y)
            AffineMap(((1, 0), (1, 1))),  # (x, y + x)
            AffineMap(((2, 0), (0, 1))),  # (2x, y)
        ),
        shear_exponents=(2, 3),
        shear_coefficients=(1, -1),
        max_word_length=max_word_length,
        max_total_degree=max_total_degree,
    )


@dataclass
class VerificationReport:
    weight: Optional[Weight]
    bound: Optional[int]
    achieved: Set[tuple] = field(default_factory=set)
    predicted: Set[tuple] = field(default_factory=set)
    missing: Set[tuple] = field(default_factory=set)
    extraneous: Set[tuple] = field(default_factory=set)
    words_checked: int = 0
    words_skipped: int = 0
    failures: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.missing and not self.extraneous and not self.failures

    def to_json(self) -> dict:
        def sorted_pairs(s):
            return [list(d) for d in sorted(s)]

        return {
            "weight": list(self.weight) if self.weight else None,
            "bound": self.bound,
            "achieved": sorted_pairs(self.achieved),
            "predicted": sorted_pairs(self.predicted),
            "missing": sorted_pairs(self.missing),
            "extraneous": sorted_pairs(self.extraneous),
            "words_checked": self.words_checked,
            "words_skipped": self.words_skipped,
            "failures": self.failures,
            "pass": self.passed,
        }


def enumerate_words(pool: GeneratorPool) -> Iterator[Tuple[List[Factor], PolyMap]]:
    """All words over the pool up to max_word_length whose evaluation stays
    under max_total_degree, with their composites, in deterministic order.

    Words whose evaluation overflows the degree budget are skipped.
    """
    gens = pool.generators()
    for n in range(pool.max_word_length + 1):
        for combo in itertools.product(gens, repeat=n):
            word = list(combo)
            try:
                m = evaluate_word(word)
            except DegreeOverflow:
                continue
            if max(total_deg(m.f1), total_deg(m.f2)) > pool.max_total_degree:
                continue
            yield word, m


def verify_theorem_main(
    w: Weight, pool: GeneratorPool, bound: int
) -> VerificationReport:
    """Exhaustive check of the characterization set under the weight w.

    Soundness: every enumerated word's weighted bidegree is a member.
    Completeness: every predicted bidegree up to the bound is realized
    exactly.  Each word is also checked against the length <= 1 /
    length >= 2 stratification of the achieved set.
    """
    report = VerificationReport(weight=w, bound=bound)
    report.predicted = enumerate_Z(w, bound)
    gens = pool.generators()
    total = sum(len(gens) ** n for n in range(pool.max_word_length + 1))
    for word, m in enumerate_words(pool):
        report.words_checked += 1
        d = wmdeg_map(m, w)
        witness = member(w, d)
        if not witness.is_member:
            report.failures.append(
                {
                    "kind": "soundness",
                    "word": word_to_json(word),
                    "bidegree": list(d),
                    "failed": list(witness.failed_conditions),
                }
            )
            continue
        if d[0] <= bound and d[1] <= bound:
            report.achieved.add(d)
        nf = decompose(m)
        stratum_ok = in_le1_set(w, d) if nf.length <= 1 else in_ge2_set(w, d)
        if not stratum_ok:
            report.failures.append(
                {
                    "kind": "stratification",
                    "word": word_to_json(word),
                    "length": nf.length,
                    "bidegree": list(d),
                }
            )
        if nf.length >= 2 and d[0] + d[1] <= w[0] + w[1]:
            report.failures.append(
                {
                    "kind": "norm_bound",
                    "word": word_to_json(word),
                    "length": nf.length,
                    "bidegree": list(d),
                }
            )
    report.words_skipped = total - report.words_checked
    report.extraneous = report.achieved - report.predicted
    for d in sorted(report.predicted):
        try:
            word = realize(w, d)
        except NotRealizable:
            report.missing.add(d)
            continue
        if wmdeg_map(evaluate_word(word), w) != d:
            report.missing.add(d)
            report.failures.append(
                {
                    "kind": "realization",
                    "word": word_to_json(word),
                    "bidegree": list(d),
                }
            )
    return report


def random_normal_word(
    rng: random.Random, pool: GeneratorPool, length: Optional[int] = None
) -> List[Factor]:
    """A random word in normal-form shape: affine, alternating strict
    shears with exponents from the pool, affine."""
    if length is None:
        length = rng.randint(0, pool.max_word_length)
    factors: List[Factor] = [rng.choice(pool.affines)]
    axis = rng.choice(("x", "y"))
    for _ in range(length):
        exp = rng.choice(pool.shear_exponents)
        coeff = rng.choice(pool.shear_coefficients)
        f = Poly.monomial(coeff, exp, 0) if axis == "y" else Poly.monomial(coeff, 0, exp)
        # occasionally add a second, lower-degree monomial
        if exp > 2 and rng.random() < 0.5:
            low = rng.randrange(1, exp)
            c2 = rng.choice(pool.shear_coefficients)
            f = f + (Poly.monomial(c2, low, 0) if axis == "y" else Poly.monomial(c2, 0, low))
        factors.append(ElementaryMap(axis, f))
        axis = "x" if axis == "y" else "y"
    factors.append(rng.choice(pool.affines))
    return factors


def _normalized_length_of_shape(word: Sequence[Factor]) -> int:
    return sum(1 for f in word if isinstance(f, ElementaryMap))


def roundtrip_suite(
    pool: GeneratorPool,
    samples: int,
    seed: int,
    weights: Sequence[Weight] = ((1, 1), (2, 3), (3, 5)),
) -> VerificationReport:
    """Seeded random normal-form words: decompose/recompose, length
    recovery, inverse round-trip, and degree propagation checks."""
    report = VerificationReport(weight=None, bound=None)
    rng = random.Random(seed)
    for _ in range(samples):
        word = random_normal_word(rng, pool)
        report.words_checked += 1
        record = {"word": word_to_json(word)}
        try:
            m = evaluate_word(word)
            nf = decompose(m)
        except Exception as exc:  # noqa: BLE001 - recorded, not thrown
            report.failures.append({"kind": "decompose", "error": repr(exc), **record})
            continue
        if not map_equal(nf.evaluate(), m):
            report.failures.append({"kind": "recompose", **record})
            continue
        expected_length = _normalized_length_of_shape(word)
        if nf.length != expected_length:
            report.failures.append(
                {
                    "kind": "length",
                    "expected": expected_length,
                    "got": nf.length,
                    **record,
                }
            )
        inv = invert_map(m)
        if not map_equal(invert_map(inv), m):
            report.failures.append({"kind": "inverse_involution", **record})
        # composing m with its inverse multiplies the degrees of both, and
        # the intermediate powers can be dense even when the composite
        # collapses to the identity, so the direct check is reserved for
        # genuinely small pairs
        deg_m = max(total_deg(m.f1), total_deg(m.f2))
        deg_inv = max(total_deg(inv.f1), total_deg(inv.f2))
        if deg_m * deg_inv <= 64:
            if not map_equal(compose(inv, m), IDENTITY_MAP) or not map_equal(
                compose(m, inv), IDENTITY_MAP
            ):
                report.failures.append({"kind": "inverse", **record})
        for w in weights:
            if propagate_wmdeg(nf, w) != wmdeg_map(m, w):
                report.failures.append(
                    {"kind": "propagation", "weight": list(w), **record}
                )
    return report
