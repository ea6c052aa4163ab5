"""Brute-force oracles: literal iterated sums and explicit subset listings.

Everything here recomputes termirial values the slow, obviously-correct
way, so the closed forms in `core` can be checked against an independent
path.  Calls that would grind forever raise BudgetExceededError instead
of hanging; the budget is a per-call argument, never global state.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .budget import DEFAULT_STEP_BUDGET, check_budget
from .core import binomial

MAX_ENUM_N = 20


def nested_sum(n: int, p: int, budget: int = DEFAULT_STEP_BUDGET) -> int:
    """Iterated sum with exactly p sigma levels; p = 0 is n itself.

    Runs the summation literally, one sigma level per recursion step, so
    it shares no code with the closed forms.  Projected work is bounded
    above by n**p and must stay within budget.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if p < 0:
        raise ValueError(f"nested_sum needs p >= 0 sigma levels, got {p}")
    check_budget(n**p, budget, f"nested_sum({n}, {p})")

    def sigma(bound: int, levels: int) -> int:
        if levels == 0:
            return bound
        if levels == 1:
            return sum(range(1, bound + 1))
        return sum(sigma(k, levels - 1) for k in range(1, bound + 1))

    return sigma(n, p)


def subsets(n: int, p: int, budget: int = DEFAULT_STEP_BUDGET) -> list[tuple[int, ...]]:
    """All p-element subsets of {1..n} in lexicographic order.

    Each subset is an ascending tuple; the list length is C(n, p).
    Materialized eagerly, so n is capped at MAX_ENUM_N.
    """
    if n < 0 or p < 0:
        raise ValueError(f"subsets needs n >= 0 and p >= 0, got ({n}, {p})")
    check_budget(n, MAX_ENUM_N, "eager subset enumeration (n is capped)")
    check_budget(binomial(n, p), budget, f"subsets({n}, {p})")
    return list(combinations(range(1, n + 1), p))


@dataclass(frozen=True)
class Decomposition:
    """p-subsets of {1..n} grouped by smallest element.

    groups holds (leading element, count) pairs in ascending leading
    order; the count for leading element s is C(n-s, p-1), because fixing
    s leaves a (p-1)-subset of the n-s larger values.
    """

    n: int
    p: int
    groups: tuple[tuple[int, int], ...]

    @property
    def counts(self) -> list[int]:
        return [count for _, count in self.groups]

    @property
    def total(self) -> int:
        return sum(self.counts)


def decompose_by_leading(n: int, p: int, budget: int = DEFAULT_STEP_BUDGET) -> Decomposition:
    """Group the p-subsets of {1..n} by smallest element.

    For p = 2 the counts read n-1, n-2, ..., 1 (a triangular cascade);
    for p = 3 they are the triangular numbers in descending order, so
    each binomial coefficient decomposes into lower-order termirials.
    """
    if not 1 <= p <= n:
        raise ValueError(f"decompose_by_leading needs 1 <= p <= n, got ({n}, {p})")
    tally: dict[int, int] = {}
    for subset in subsets(n, p, budget=budget):
        leading = subset[0]
        tally[leading] = tally.get(leading, 0) + 1
    return Decomposition(n=n, p=p, groups=tuple(sorted(tally.items())))
