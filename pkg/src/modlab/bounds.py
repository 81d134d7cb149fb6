"""Closed-form bounds for the family clusterings and a numeric witness search.

For family G the natural clustering's modularity has an exact closed form;
for family H only a strict upper bound is available.  For the balanced
clusterings both families have closed-form lower bounds.  Together with the
two scale thresholds 1 - 1/(2K) and 1 - 4/(Kx) these values form the
ordered chain that the comparison tables display.

All closed forms are evaluated as exact rationals; convert to float only
for display.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FamilyParameterError, MalformedInputError, WitnessNotFoundError
from .families import (
    FAMILY_G,
    FAMILY_H,
    FamilyParams,
    balanced_clustering,
    build_graph,
    natural_clustering,
    witness_params,
)
from .quality import modularity_exact, relation_jaccard_exact


def _check(family: str, k: int, n1: int, n2: int, j: int | None = None) -> None:
    # reuse the generator's parameter validation
    p = FamilyParams(family, k, n1, n2)
    if j is not None:
        if not 1 <= j <= p.n:
            raise FamilyParameterError(f"balanced cluster count {j} outside 1..{p.n}")
        if p.n % j > p.n // j:
            # the lower-bound derivations assume every range has at most n/J
            # nodes; a remainder range wider than the base width breaks that
            raise FamilyParameterError(
                f"J={j} leaves a remainder range of {p.n % j} > {p.n // j} nodes;"
                " the balanced lower bound does not apply"
            )


def natural_value_g(k: int, n1: int, n2: int) -> Fraction:
    """Exact modularity of family G under its natural clustering.

    1 - ((N1-1)^2 + (N2-1)^2) / (K * (N1+N2-2)^2); all edges are internal,
    so only the null term contributes.
    """
    _check(FAMILY_G, k, n1, n2)
    return 1 - Fraction((n1 - 1) ** 2 + (n2 - 1) ** 2, k * (n1 + n2 - 2) ** 2)


def balanced_lower_g(k: int, n1: int, n2: int, j: int) -> Fraction:
    """Lower bound on family G's modularity under the J-range balanced clustering.

    1 - J/(K*(N1+N2-2)) - 2*(N1+N2)^2 / ((N1+N2-2)^2 * J): the first
    correction charges one cut edge per range boundary, the second bounds
    the null term via the maximum range degree.  Requires the remainder
    range to be no wider than the J base ranges (n mod J <= n//J), which
    always holds for the scaled instances J = x*K.
    """
    _check(FAMILY_G, k, n1, n2, j)
    s = n1 + n2
    return 1 - Fraction(j, k * (s - 2)) - Fraction(2 * s * s, (s - 2) ** 2 * j)


def natural_upper_h(k: int, n1: int, n2: int) -> Fraction:
    """Strict upper bound on family H's modularity under its natural clustering.

    1 - K*((4*N1-8)^2 + (4*N2-8)^2) / (4*K*(N1+N2-2))^2, from the minimum
    per-cluster degree sums and the maximum edge count.
    """
    _check(FAMILY_H, k, n1, n2)
    num = k * ((4 * n1 - 8) ** 2 + (4 * n2 - 8) ** 2)
    den = (4 * k * (n1 + n2 - 2)) ** 2
    return 1 - Fraction(num, den)


def balanced_lower_h(k: int, n1: int, n2: int, j: int) -> Fraction:
    """Strict lower bound on family H's modularity under the balanced clustering.

    1 - 3*J/(2*K*(N1+N2-4)) - 2*(N1+N2)^2 / ((N1+N2-4)^2 * J); each range
    boundary cuts at most three edges.  Same remainder-width requirement
    as the family-G bound.
    """
    _check(FAMILY_H, k, n1, n2, j)
    s = n1 + n2
    return 1 - Fraction(3 * j, 2 * k * (s - 4)) - Fraction(2 * s * s, (s - 4) ** 2 * j)


def threshold_half_k(k: int) -> Fraction:
    if k < 1:
        raise MalformedInputError(f"copy count must be >= 1, got {k}")
    return 1 - Fraction(1, 2 * k)


def threshold_four_kx(k: int, x: int) -> Fraction:
    if k < 1 or x < 1:
        raise MalformedInputError(f"need K >= 1 and x >= 1, got ({k}, {x})")
    return 1 - Fraction(4, k * x)


@dataclass(frozen=True)
class BoundSet:
    """The four closed-form quantities for one witness-scaled instance.

    For scale x large enough they order as
    natural <= half_k <= four_kx <= balanced_lower.
    """

    natural: Fraction
    balanced_lower: Fraction
    half_k: Fraction
    four_kx: Fraction


def bound_set(family: str, k: int, n1: int, n2: int, j: int, x: int) -> BoundSet:
    if family == FAMILY_G:
        natural = natural_value_g(k, n1, n2)
        lower = balanced_lower_g(k, n1, n2, j)
    elif family == FAMILY_H:
        natural = natural_upper_h(k, n1, n2)
        lower = balanced_lower_h(k, n1, n2, j)
    else:
        raise FamilyParameterError(f"unknown family {family!r}; use G or H")
    return BoundSet(
        natural=natural,
        balanced_lower=lower,
        half_k=threshold_half_k(k),
        four_kx=threshold_four_kx(k, x),
    )


def sufficient_condition(family: str, k: int, n1: int, n2: int, j: int) -> bool:
    """True iff the balanced lower bound strictly beats the natural value (G)
    or the natural upper bound (H).

    True guarantees that the balanced clustering out-scores the natural one
    on the generated instance; False is inconclusive (the strict inequality
    between the exact scores frequently holds anyway).
    """
    if family == FAMILY_G:
        return balanced_lower_g(k, n1, n2, j) > natural_value_g(k, n1, n2)
    if family == FAMILY_H:
        return balanced_lower_h(k, n1, n2, j) > natural_upper_h(k, n1, n2)
    raise FamilyParameterError(f"unknown family {family!r}; use G or H")


@dataclass(frozen=True)
class Witness:
    """A verified instance where the balanced clustering dominates.

    All three defining inequalities were checked by direct evaluation:
    qn_natural < 1 - 1/(2K) < 1 - epsilon < qn_balanced and
    similarity < epsilon.
    """

    x: int
    params: FamilyParams
    j: int
    qn_natural: Fraction
    qn_balanced: Fraction
    similarity: Fraction


def _evaluate_witness(k: int, x: int, family: str, epsilon: Fraction) -> Witness | None:
    try:
        params, j = witness_params(k, x, family)
    except FamilyParameterError:
        # scales too small for the family's part-size floor (e.g. x=2, K=1, H)
        return None
    g = build_graph(params)
    natural = natural_clustering(params)
    balanced = balanced_clustering(params.n, j)
    qn_v = modularity_exact(g, natural)
    qn_u = modularity_exact(g, balanced)
    sim = relation_jaccard_exact(natural, balanced)
    ok = qn_v < threshold_half_k(k) and qn_u > 1 - epsilon and sim < epsilon
    if not ok:
        return None
    return Witness(x=x, params=params, j=j, qn_natural=qn_v, qn_balanced=qn_u, similarity=sim)


def find_witness(k: int, epsilon, family: str, x_cap: int = 10**6) -> Witness:
    """Smallest scale x (doubling then bisection) whose instance satisfies
    all three witness inequalities by direct evaluation.

    epsilon must lie in (0, 1/(2K)).  The scores improve monotonically with
    x, so the search terminates for every valid epsilon; exceeding x_cap
    therefore raises WitnessNotFoundError as a bug signal.
    """
    if k < 1:
        raise MalformedInputError(f"copy count must be >= 1, got {k}")
    eps = Fraction(epsilon)
    if not 0 < eps < Fraction(1, 2 * k):
        raise MalformedInputError(
            f"epsilon must lie in (0, 1/(2K)) = (0, {Fraction(1, 2 * k)}), got {epsilon}"
        )
    cache: dict[int, Witness | None] = {}

    def probe(x: int) -> Witness | None:
        if x not in cache:
            cache[x] = _evaluate_witness(k, x, family, eps)
        return cache[x]

    x = 2
    while probe(x) is None:
        x *= 2
        if x > x_cap:
            raise WitnessNotFoundError(
                f"no witness up to x = {x_cap} for K={k}, epsilon={epsilon}, family={family}"
            )
    lo, hi = x // 2, x  # probe(hi) holds; x//2 failed (or is the invalid x=1)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if probe(mid) is not None:
            hi = mid
        else:
            lo = mid
    witness = probe(hi)
    assert witness is not None
    return witness
