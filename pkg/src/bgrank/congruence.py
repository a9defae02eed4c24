"""Exhaustive checks of the mod-5 congruences for pp(n) and p_j(n).

Each ``verify_*`` function sweeps a range and returns a
:class:`CongruenceReport` listing every counterexample instead of stopping
at the first one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from bgrank import counting
from bgrank.counting import DEFAULT_ENUMERATION_BOUND, pj_enumerate, pj_formula, rank_range
from bgrank.series import expand_product, jacobi_cube, series_mul, verify_mod5_factor_identity

__all__ = [
    "CongruenceReport",
    "Failure",
    "REFINED_CASES",
    "ResiduePair",
    "fifteen_pairs",
    "ramanujan_check",
    "residue_rhs",
    "triangular_residue_analysis",
    "verify_fifteen_pairs",
    "verify_jacobi_cube",
    "verify_mod5_factor",
    "verify_pp_mod5",
    "verify_reduction_identity",
    "verify_refined_congruences",
]

# residues of n mod 5 where pp(n) vanishes mod 5
PP_ZERO_RESIDUES = frozenset({2, 3, 4})

# n mod 5 -> residues of j mod 5 for which p_j(n) vanishes mod 5
REFINED_CASES = {
    0: frozenset({1, 2}),
    1: frozenset({0, 3, 4}),
    2: frozenset({1, 2, 4}),
    3: frozenset({0, 3}),
    4: frozenset({0, 1, 2, 3, 4}),
}


@dataclass(frozen=True)
class Failure:
    n: int
    j: Optional[int]
    value: int
    note: str = ""

    def to_dict(self) -> dict:
        d = {"n": self.n, "j": self.j, "value": str(self.value)}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class CongruenceReport:
    family: str
    range: int
    failures: list = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, n: int, j: Optional[int], value: int, note: str = "") -> None:
        self.failures.append(Failure(n, j, value, note))

    def merge(self, other: "CongruenceReport") -> "CongruenceReport":
        """Combine reports for disjoint sweeps of the same family."""
        return CongruenceReport(
            self.family,
            max(self.range, other.range),
            self.failures + other.failures,
            self.checked + other.checked,
        )

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "range": self.range,
            "passed": self.passed,
            "checked": self.checked,
            "failures": [f.to_dict() for f in self.failures],
        }


@dataclass(frozen=True)
class ResiduePair:
    n_residue: int
    j_residue: int

    def __post_init__(self) -> None:
        if not (0 <= self.n_residue < 5 and 0 <= self.j_residue < 5):
            raise ValueError(f"residues must lie in [0, 5): {self}")


def residue_rhs(pair: ResiduePair) -> int:
    """(3j' - 2n' - j'^2) mod 5, the residue of (n - j(2j-1))/2."""
    j, n = pair.j_residue, pair.n_residue
    return (3 * j - 2 * n - j * j) % 5


def fifteen_pairs() -> list[ResiduePair]:
    listed = [(0, 1), (0, 2), (1, 0), (1, 3), (1, 4), (2, 1), (2, 2), (2, 4), (3, 0), (3, 3)]
    pairs = [ResiduePair(n, j) for n, j in listed]
    pairs += [ResiduePair(4, j) for j in range(5)]
    assert len(pairs) == 15
    return pairs


def _pp_argument(n: int, j: int) -> Optional[int]:
    shifted = n - j * (2 * j - 1)
    return shifted // 2 if shifted % 2 == 0 else None


def _j_span(n: int) -> range:
    ranks = rank_range(n)
    return range(ranks[0] - 1, ranks[-1] + 2)


def verify_fifteen_pairs() -> CongruenceReport:
    report = CongruenceReport("fifteen-pairs", 15)
    for pair in fifteen_pairs():
        report.checked += 1
        rhs = residue_rhs(pair)
        if rhs not in PP_ZERO_RESIDUES:
            report.fail(pair.n_residue, pair.j_residue, rhs, "residue outside {2,3,4}")
    # the table must agree with the refined congruence cases
    table = {(p.n_residue, p.j_residue) for p in fifteen_pairs()}
    cases = {(n, j) for n, js in REFINED_CASES.items() for j in js}
    for n, j in sorted(table ^ cases):
        report.fail(n, j, 0, "pair table and congruence cases disagree")
    return report


def verify_reduction_identity(bound: int) -> CongruenceReport:
    """Check ((n - j(2j-1))/2) mod 5 == residue_rhs for all same-parity (n, j)."""
    report = CongruenceReport("reduction", bound)
    for n in range(bound + 1):
        for j in _j_span(n):
            arg = _pp_argument(n, j)
            if arg is None:
                continue
            report.checked += 1
            rhs = residue_rhs(ResiduePair(n % 5, j % 5))
            if arg % 5 != rhs:
                report.fail(n, j, arg, f"expected residue {rhs}")
    return report


def _pp_mod5_by_series(bound: int) -> list[int]:
    # pp's generating function is congruent to the Jacobi cube series times P(x^5)
    cube = jacobi_cube(bound, 5)
    fifth = expand_product([(5, -1)], bound, 5)
    return list(series_mul(cube, fifth).coeffs)


def verify_pp_mod5(bound: int) -> CongruenceReport:
    """pp(k) == 0 mod 5 for k == 2, 3, 4 mod 5, by convolution and by series."""
    report = CongruenceReport("pp-mod5", bound)
    exact = counting.pair_counts_upto(bound)
    by_series = _pp_mod5_by_series(bound)
    direct = expand_product([(1, -2)], bound, 5).coeffs
    for k in range(bound + 1):
        if exact[k] % 5 != by_series[k] or by_series[k] != direct[k]:
            report.fail(k, None, exact[k], "convolution and series paths disagree")
        if k % 5 not in PP_ZERO_RESIDUES:
            continue
        report.checked += 1
        if exact[k] % 5:
            report.fail(k, None, exact[k], "pp (convolution) not divisible by 5")
        if by_series[k]:
            report.fail(k, None, by_series[k], "pp (mod-5 series) not divisible by 5")
    return report


def triangular_residue_analysis(bound: int) -> CongruenceReport:
    report = CongruenceReport("triangular", bound)
    for n in range(bound + 1):
        report.checked += 1
        t = n * (n + 1) // 2
        if t % 5 not in (0, 1, 3):
            report.fail(n, None, t, "triangular residue outside {0,1,3}")
        elif t % 5 == 3 and (n % 5 != 2 or (2 * n + 1) % 5):
            report.fail(n, None, t, "residue 3 without 2n+1 == 0 mod 5")
    return report


def refined_case_applies(n: int, j: int) -> bool:
    return j % 5 in REFINED_CASES[n % 5]


def verify_refined_congruences(
    bound: int,
    enum_bound: int = 30,
    enumeration_limit: int = DEFAULT_ENUMERATION_BOUND,
) -> CongruenceReport:
    """p_j(n) == 0 mod 5 on every covered (n mod 5, j mod 5) case.

    The formula path runs for ``n <= bound``; for ``n <= enum_bound`` the
    value is also recounted by enumeration. Each covered case must also map
    to a pp-argument residue in {2, 3, 4} or be parity-excluded.
    """
    if enum_bound > enumeration_limit:
        raise counting.EnumerationBoundError(
            f"enum_bound {enum_bound} exceeds the enumeration limit {enumeration_limit}"
        )
    report = CongruenceReport("refined", bound)
    for n in range(bound + 1):
        for j in _j_span(n):
            if not refined_case_applies(n, j):
                continue
            report.checked += 1
            value = pj_formula(n, j)
            if value % 5:
                report.fail(n, j, value, "p_j(n) not divisible by 5")
            arg = _pp_argument(n, j)
            if arg is not None and arg % 5 not in PP_ZERO_RESIDUES:
                report.fail(n, j, arg, "pp argument residue outside {2,3,4}")
            if n <= enum_bound:
                counted = pj_enumerate(n, j, bound=enumeration_limit)
                if counted != value:
                    report.fail(n, j, counted, f"enumeration gives {counted}, formula {value}")
    return report


def ramanujan_check(bound: int) -> CongruenceReport:
    """p(5n + 4) == 0 mod 5 for n <= bound."""
    report = CongruenceReport("ramanujan", bound)
    for n in range(bound + 1):
        report.checked += 1
        value = counting.partition_count(5 * n + 4)
        if value % 5:
            report.fail(5 * n + 4, None, value, "p(5n+4) not divisible by 5")
    return report


def verify_jacobi_cube(bound: int) -> CongruenceReport:
    report = CongruenceReport("jacobi", bound)
    product = expand_product([(1, 3)], bound)
    closed = jacobi_cube(bound)
    for k, (a, b) in enumerate(zip(product.coeffs, closed.coeffs)):
        report.checked += 1
        if a != b:
            report.fail(k, None, a, f"closed form gives {b}")
    return report


def verify_mod5_factor(bound: int) -> CongruenceReport:
    report = CongruenceReport("mod5-factor", bound, checked=1)
    if not verify_mod5_factor_identity(bound):
        report.fail(bound, None, 0, "mod-5 factor identity fails")
    return report
