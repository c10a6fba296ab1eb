"""Upper bounds on s in terms of t for pseudo-generalized quadrangles.

Two families of necessary conditions are implemented exactly:

* Neumaier's claw bound, s <= t(t+1)(t+2)/2, cubic in t.

* A four-term bound derived from a case analysis of claw numbers and
  maximal cliques in the graph: for any integers theta >= t+2 and
  2 <= beta <= t+1,

      s <= max{ t/(theta-t) * C(theta+1, 2),
                t(2 theta - 1),
                C(beta, 2) t,
                (t+1)^2 theta / C(beta, 2) }.

  Optimizing the choice of (theta, beta) yields the closed form
  s <= t * floor(8t/3 + 1), quadratic in t.

All comparisons are exact (integers and fractions.Fraction); bounds such
as t(theta+1)theta / (2(theta-t)) are never rounded before a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, floor, isqrt

from .params import FAIL, PASS, GQParams, SrgParams, Verdict

#: Descriptive tag for each term of the four-term bound, in order.
TERM_TAGS = (
    "claw-inequality",    # some vertex centers a (theta+1)-claw
    "uncovered-neighbor", # a neighbor escapes all associated maximal cliques
    "many-full-cliques",  # some high-claw vertex lies in > t+1-beta cliques of order s+1
    "few-full-cliques",   # every high-claw vertex lies in <= t+1-beta such cliques
)


def _require_t(t: int) -> None:
    if not isinstance(t, int) or isinstance(t, bool) or t < 2:
        raise ValueError(f"require integer t >= 2, got {t!r}")


def neumaier_bound(t: int) -> int:
    """Neumaier's claw bound: s <= t(t+1)(t+2)/2 (always an integer)."""
    _require_t(t)
    return t * (t + 1) * (t + 2) // 2


def claw_inequality_check(q: SrgParams, r: int) -> Verdict:
    """Claw inequality for strongly regular graphs.

    A vertex of an srg(v,k,lam,mu) can only center an induced r-claw if
    (mu - 1) C(r,2) >= r(lam + 1) - k.  Pass means an r-claw is not
    excluded; fail means no vertex has an r-claw.
    """
    if not isinstance(r, int) or isinstance(r, bool) or r < 2:
        raise ValueError(f"require integer r >= 2, got {r!r}")
    lhs = (q.mu - 1) * comb(r, 2)
    rhs = r * (q.lam + 1) - q.k
    if lhs >= rhs:
        return Verdict(
            "claw-inequality", PASS,
            f"(mu-1)C(r,2)={lhs} >= r(lam+1)-k={rhs}: an {r}-claw is not excluded",
        )
    return Verdict(
        "claw-inequality", FAIL,
        f"(mu-1)C(r,2)={lhs} < r(lam+1)-k={rhs}: no vertex centers an {r}-claw",
    )


@dataclass(frozen=True)
class BoundChoice:
    """A choice of the free parameters (theta, beta) of the four-term bound.

    Validity is relative to the t under test: theta >= t+2 and
    2 <= beta <= t+1 (claw_bound_terms enforces this).
    """

    theta: int
    beta: int


@dataclass(frozen=True)
class BoundResult:
    """The four terms of the bound and their maximum, all exact."""

    term1: Fraction
    term2: Fraction
    term3: Fraction
    term4: Fraction
    bound: Fraction

    @property
    def terms(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.term1, self.term2, self.term3, self.term4)

    def tagged_terms(self) -> tuple[tuple[str, Fraction], ...]:
        return tuple(zip(TERM_TAGS, self.terms))


def claw_bound_terms(t: int, choice: BoundChoice) -> BoundResult:
    """Evaluate the four-term bound at one (theta, beta).

    term2 and term3 are integers by construction; term1 and term4 are
    kept as exact rationals.
    """
    _require_t(t)
    theta, beta = choice.theta, choice.beta
    if not isinstance(theta, int) or theta < t + 2:
        raise ValueError(f"require theta >= t+2 = {t + 2}, got {theta!r}")
    if not isinstance(beta, int) or not 2 <= beta <= t + 1:
        raise ValueError(f"require 2 <= beta <= t+1 = {t + 1}, got {beta!r}")
    term1 = Fraction(t, theta - t) * comb(theta + 1, 2)
    term2 = Fraction(t * (2 * theta - 1))
    term3 = Fraction(comb(beta, 2) * t)
    term4 = Fraction((t + 1) ** 2 * theta, comb(beta, 2))
    return BoundResult(term1, term2, term3, term4, max(term1, term2, term3, term4))


def quadratic_claw_bound(t: int) -> int:
    """Closed-form optimized bound: s <= t * floor(8t/3 + 1)."""
    _require_t(t)
    return t * ((8 * t + 3) // 3)


def quadratic_bound_witness(t: int) -> BoundChoice:
    """The (theta, beta) choice certifying the closed form for t >= 3:
    theta = floor(4t/3 + 1), beta = ceil(2 sqrt(t)).

    beta is computed by integer square root, never floating point.
    """
    if t < 3:
        # floor(4t/3 + 1) < t + 2 for t < 3, so no witness exists there.
        raise ValueError(f"witness choice requires t >= 3, got {t!r}")
    theta = (4 * t + 3) // 3
    root = isqrt(4 * t)
    beta = root if root * root == 4 * t else root + 1
    return BoundChoice(theta, beta)


@dataclass(frozen=True)
class OptimalBound:
    """Best four-term bound over all valid (theta, beta) for a given t.

    A parameter s is ruled out iff s > threshold (strict); threshold is
    floor(exact), which is equivalent for integer s.
    """

    threshold: int
    exact: Fraction
    choice: BoundChoice
    terms: BoundResult


@lru_cache(maxsize=None)
def optimal_claw_bound(t: int) -> OptimalBound:
    """Minimize the four-term bound over theta in [t+2, 4t], beta in [2, t+1].

    The sweep is exhaustive over that rectangle; ties go to the smallest
    theta, then the smallest beta.  Capping theta at 4t loses nothing:
    for theta > 4t the second term alone is t(2*theta - 1) >= t(8t + 1),
    which exceeds the maximum already achieved inside the cap (at most
    t*floor(8t/3 + 1) for t >= 3 via quadratic_bound_witness, and 14 at
    t = 2), so no larger theta can lower the minimum.
    """
    _require_t(t)
    best: tuple[Fraction, BoundChoice, BoundResult] | None = None
    for theta in range(t + 2, 4 * t + 1):
        for beta in range(2, t + 2):
            choice = BoundChoice(theta, beta)
            result = claw_bound_terms(t, choice)
            if best is None or result.bound < best[0]:
                best = (result.bound, choice, result)
    assert best is not None
    exact, choice, result = best
    return OptimalBound(floor(exact), exact, choice, result)


@dataclass(frozen=True)
class RuleOut:
    """Composite nonexistence verdict for one (s, t).

    ruled_out is True iff both a genuine GQ and a pseudo-GQ are excluded:
    s > t^2 and s > the optimal four-term bound.
    """

    ruled_out: bool
    gq_excluded: bool
    pgq_excluded: bool
    threshold: int
    reasons: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ruled_out


def pgq_ruled_out(p: GQParams) -> RuleOut:
    """Decide whether no srg with parameters derive_srg(p) can exist,
    combining the duality bound (GQ side) with the optimized four-term
    bound (PGQ side)."""
    if p.is_trivial:
        raise ValueError("rule-out verdict requires s >= 2 and t >= 2")
    s, t = p.s, p.t
    opt = optimal_claw_bound(t)
    gq_excluded = s > t * t
    pgq_excluded = s > opt.threshold
    reasons = []
    if gq_excluded:
        reasons.append(f"s={s} > t^2={t * t}: no generalized quadrangle")
    else:
        reasons.append(f"s={s} <= t^2={t * t}: a generalized quadrangle is not excluded")
    if pgq_excluded:
        reasons.append(
            f"s={s} > {opt.threshold} (four-term bound at theta={opt.choice.theta},"
            f" beta={opt.choice.beta}): no pseudo-GQ"
        )
    else:
        reasons.append(
            f"s={s} <= {opt.threshold} (four-term bound): a pseudo-GQ is not excluded"
        )
    return RuleOut(
        ruled_out=gq_excluded and pgq_excluded,
        gq_excluded=gq_excluded,
        pgq_excluded=pgq_excluded,
        threshold=opt.threshold,
        reasons=tuple(reasons),
    )
