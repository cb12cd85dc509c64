"""Cross-method verification suites.

Each suite is a list of named, independent cases comparing two or more routes
to the same numbers (closed formula, exhaustive search, class algebra,
character series, matrix moments).  Cases may run concurrently; reports are
always sorted by case key so output is deterministic.

Suites: minimal (closed formulas vs exhaustive search), jm (class-algebra
evaluations), character (character tables and generating functions), matrix
(Haar-unitary correlators), or all of them.  max_n bounds the symmetric-group
degree a suite touches; hard caps keep the exhaustive cases inside their
search budgets no matter what max_n is given.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import brute, class_algebra, counting
from .characters import (
    Complete,
    Monomial,
    character,
    character_table,
    class_resolution_via_characters,
    hook_character,
    phi_full_cycle_closed,
    phi_rational,
    phi_series,
)
from .matrix_model import (
    verify_correlator_identity,
    weingarten_character,
    weingarten_gram,
)
from .partitions import Partition, class_size, partitions_of
from .perms import Permutation

SUITES = ("minimal", "jm", "character", "matrix")

__all__ = ["CaseResult", "SuiteReport", "run_suite", "SUITES"]


@dataclass(frozen=True)
class CaseResult:
    key: str
    passed: bool
    detail: str
    elapsed_ms: int


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    max_n: int
    cases: tuple[CaseResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def failed_keys(self) -> list[str]:
        return [c.key for c in self.cases if not c.passed]


Check = Callable[[], str]  # returns a failure detail, or "" when the case holds


def _case(key: str, check: Check) -> tuple[str, Check]:
    return key, check


def _minimal_cases(max_n: int) -> list[tuple[str, Check]]:
    cases = []
    for k in range(1, min(max_n + 2, 9)):

        def check_rc(k: int = k) -> str:
            by_type: dict[Partition, int] = {}
            for seq in counting.catalan_sequences(k):
                t = counting.sequence_type(seq)
                by_type[t] = by_type.get(t, 0) + 1
            if sum(by_type.values()) != counting.catalan(k):
                return f"enumeration size != Cat_{k}"
            for lam in partitions_of(k):
                if counting.refined_catalan(lam) != by_type.get(lam, 0):
                    return f"refined_catalan({lam}) != enumeration count"
            return ""

        cases.append(_case(f"minimal/refined-catalan/k={k}", check_rc))

    for n in range(2, max_n + 1):
        for mu in partitions_of(n):

            def check_total(mu: Partition = mu, n: int = n) -> str:
                rep = brute.standard_representative(mu)
                want = counting.minimal_primitive_total(mu)
                got = brute.count_primitive(rep, n - mu.length)
                return "" if got == want else f"brute {got} != formula {want}"

            cases.append(_case(f"minimal/total/n={n}/mu={mu}", check_total))

            def check_by_type(mu: Partition = mu, n: int = n) -> str:
                rep = brute.standard_representative(mu)
                reduced = mu.reduced()
                for lam in partitions_of(reduced.size):
                    want = counting.minimal_primitive_by_type(reduced, lam)
                    got = brute.count_primitive_by_type(rep, lam)
                    if got != want:
                        return f"type {lam}: brute {got} != formula {want}"
                return ""

            cases.append(_case(f"minimal/by-type/n={n}/mu={mu}", check_by_type))

    hurwitz_types = [mu for n in range(1, min(max_n, 4) + 1) for mu in partitions_of(n)]
    if max_n >= 5:
        hurwitz_types.append(Partition([5]))
    for mu in hurwitz_types:

        def check_hurwitz(mu: Partition = mu) -> str:
            want = counting.hurwitz_minimal_transitive(mu)
            got = brute.count_minimal_transitive(mu)
            return "" if got == want else f"brute {got} != formula {want}"

        cases.append(_case(f"minimal/hurwitz/mu={mu}", check_hurwitz))

    def check_transfer() -> str:
        got = brute.count_all_factorizations(
            brute.standard_representative(Partition([3])), 4
        )
        want = counting.hurwitz_full_cycle_genus(3, 1)
        return "" if got == want else f"transfer-matrix {got} != formula {want}"

    cases.append(_case("minimal/hurwitz/full-cycle-genus-3-1", check_transfer))

    for n in range(2, max_n + 1):

        def check_sinh(n: int = n) -> str:
            for g in range(0, 6):
                cf = counting.primitive_full_cycle(n, g)
                sinh = counting.primitive_full_cycle_sinh(n, g)
                if cf != sinh:
                    return f"g={g}: central-factorial {cf} != sinh {sinh}"
            return ""

        cases.append(_case(f"minimal/full-cycle-sinh/n={n}", check_sinh))

    return cases


def _jm_cases(max_n: int) -> list[tuple[str, Check]]:
    cases = []
    for n in range(2, min(max_n, 6) + 1):

        def check_central(n: int = n) -> str:
            for k in range(0, 9):
                class_algebra.resolve_to_classes(
                    class_algebra.complete_homogeneous_jm(k, n)
                )
            for size in range(1, 7):
                for lam in partitions_of(size):
                    class_algebra.resolve_to_classes(class_algebra.monomial_jm(lam, n))
            return ""

        cases.append(_case(f"jm/centrality/n={n}", check_central))

    for n in range(2, min(max_n, 5) + 1):

        def check_h_is_sum_of_m(n: int = n) -> str:
            for k in range(0, 6):
                total = class_algebra.GroupAlgebraVector.zero(n)
                for lam in partitions_of(k):
                    total = total + class_algebra.monomial_jm(lam, n)
                if total != class_algebra.complete_homogeneous_jm(k, n):
                    return f"h_{k} != sum of monomials at n={n}"
            return ""

        cases.append(_case(f"jm/h-equals-sum-m/n={n}", check_h_is_sum_of_m))

        def check_vs_brute(n: int = n) -> str:
            for mu in partitions_of(n):
                rep = brute.standard_representative(mu)
                for k in range(0, 7):
                    want = brute.count_primitive(rep, k)
                    got = class_algebra.primitive_count_by_length(k, mu)
                    if got != want:
                        return f"mu={mu}, k={k}: class-algebra {got} != brute {want}"
                for size in range(0, 6):
                    for lam in partitions_of(size):
                        want = brute.count_primitive_by_type(rep, lam)
                        got = class_algebra.primitive_count_by_type(lam, mu)
                        if got != want:
                            return f"mu={mu}, lam={lam}: {got} != brute {want}"
            return ""

        cases.append(_case(f"jm/vs-brute/n={n}", check_vs_brute))

        def check_commute(n: int = n) -> str:
            for i in range(1, n + 1):
                vi = class_algebra.jm_element(i, n)
                for j in range(i + 1, n + 1):
                    vj = class_algebra.jm_element(j, n)
                    if vi.mult_jm(j) != vj.mult_jm(i):
                        return f"J_{i} J_{j} != J_{j} J_{i} at n={n}"
            return ""

        cases.append(_case(f"jm/commuting/n={n}", check_commute))

    return cases


def _character_cases(max_n: int) -> list[tuple[str, Check]]:
    cases = []
    for n in range(2, min(max_n + 3, 8) + 1):

        def check_orthogonality(n: int = n) -> str:
            from math import factorial

            table = character_table(n)
            shapes = partitions_of(n)
            for a in shapes:
                for b in shapes:
                    total = sum(
                        class_size(mu) * table[a, mu] * table[b, mu] for mu in shapes
                    )
                    want = factorial(n) if a == b else 0
                    if total != want:
                        return f"rows {a},{b}: {total} != {want}"
            return ""

        cases.append(_case(f"character/orthogonality/n={n}", check_orthogonality))

        def check_hook_rule(n: int = n) -> str:
            full = Partition([n])
            hooks = {Partition([n - r] + [1] * r): r for r in range(n)}
            for lam in partitions_of(n):
                got = character(lam, full)
                want = (-1) ** hooks[lam] if lam in hooks else 0
                if got != want:
                    return f"chi^{lam}(full cycle) = {got} != {want}"
                if lam in hooks and hook_character(n, hooks[lam], full) != want:
                    return f"hook_character({n},{hooks[lam]}) != {want}"
            return ""

        cases.append(_case(f"character/hook-rule/n={n}", check_hook_rule))

        def check_closed_form(n: int = n) -> str:
            order = 2 * n + 6
            closed = phi_full_cycle_closed(n)
            if phi_series(Partition([n]), order).coeffs != closed.series(order).coeffs:
                return f"series vs closed form mismatch at n={n}"
            if phi_rational(Partition([n])) != closed:
                return f"assembled rational function differs at n={n}"
            return ""

        cases.append(_case(f"character/full-cycle-closed-form/n={n}", check_closed_form))

    for n in range(2, min(max_n, 6) + 1):

        def check_resolutions(n: int = n) -> str:
            for k in range(0, 9):
                via_chi = class_resolution_via_characters(Complete(k), n)
                via_jm = class_algebra.resolve_to_classes(
                    class_algebra.complete_homogeneous_jm(k, n)
                )
                if via_chi.coefficients != via_jm.coefficients:
                    return f"h_{k} resolutions disagree at n={n}"
            for size in range(1, 6):
                for lam in partitions_of(size):
                    via_chi = class_resolution_via_characters(Monomial(lam), n)
                    via_jm = class_algebra.resolve_to_classes(
                        class_algebra.monomial_jm(lam, n)
                    )
                    if via_chi.coefficients != via_jm.coefficients:
                        return f"m_{lam} resolutions disagree at n={n}"
            return ""

        cases.append(_case(f"character/vs-class-algebra/n={n}", check_resolutions))

        def check_phi_coefficients(n: int = n) -> str:
            for mu in partitions_of(n):
                series = phi_series(mu, 8)
                for k in range(0, 9):
                    want = class_algebra.primitive_count_by_length(k, mu)
                    if series[k] != want:
                        return f"mu={mu}, k={k}: series {series[k]} != {want}"
            return ""

        cases.append(_case(f"character/phi-vs-class-algebra/n={n}", check_phi_coefficients))

    return cases


def _matrix_cases(max_n: int) -> list[tuple[str, Check]]:
    cases = []

    def check_n2_closed_forms() -> str:
        for N in range(2, 7):
            table = weingarten_gram(2, N)
            if table[Partition([1, 1])] != Fraction(1, N * N - 1):
                return f"Wg[(1,1)] wrong at N={N}"
            if table[Partition([2])] != Fraction(-1, N * (N * N - 1)):
                return f"Wg[(2)] wrong at N={N}"
            # Row orthonormality of a Haar unitary contracted once against
            # |u_22|^2: N * Wg[(1,1)] + Wg[(2)] must equal <|u_22|^2> = 1/N.
            lhs = N * table[Partition([1, 1])] + table[Partition([2])]
            if lhs != Fraction(1, N):
                return f"row-sum contraction {lhs} != 1/{N}"
        return ""

    cases.append(_case("matrix/n2-closed-forms", check_n2_closed_forms))

    for n in range(1, min(max_n, 5) + 1):

        def check_methods_agree(n: int = n) -> str:
            for N in (n, n + 1, n + 2):
                gram = weingarten_gram(n, N)
                char = weingarten_character(n, N)
                if gram.values != char.values:
                    return f"methods disagree at n={n}, N={N}"
            return ""

        cases.append(_case(f"matrix/methods-agree/n={n}", check_methods_agree))

        def check_identity(n: int = n) -> str:
            for mu in partitions_of(n):
                for N in (n, n + 1, n + 2, 10):
                    if N < n:
                        continue
                    report = verify_correlator_identity(mu, N)
                    if not report.equal:
                        return (
                            f"mu={mu}, N={N}: left {report.left} != right {report.right}"
                        )
            return ""

        cases.append(_case(f"matrix/correlator-identity/n={n}", check_identity))

    for n in range(1, min(max_n, 4) + 1):

        def check_leading_order(n: int = n) -> str:
            N = 10**6
            table = weingarten_character(n, N)
            for mu in partitions_of(n):
                sign = (-1) ** (n - mu.length)
                scaled = sign * Fraction(N) ** (2 * n - mu.length) * table[mu]
                want = counting.minimal_primitive_total(mu)
                if abs(scaled - want) >= Fraction(1, 10**6):
                    return f"mu={mu}: {scaled} not within 1e-6 of {want}"
            return ""

        cases.append(_case(f"matrix/large-N-leading-order/n={n}", check_leading_order))

    return cases


_BUILDERS = {
    "minimal": _minimal_cases,
    "jm": _jm_cases,
    "character": _character_cases,
    "matrix": _matrix_cases,
}


def run_suite(suite: str, max_n: int = 4, jobs: int = 1) -> SuiteReport:
    """Run one suite (or "all"), at most ``jobs`` cases at a time."""
    if suite == "all":
        names = SUITES
    elif suite in _BUILDERS:
        names = (suite,)
    else:
        raise ValueError(f"unknown suite {suite!r}; pick from {('all',) + SUITES}")
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    pending = [case for name in names for case in _BUILDERS[name](max_n)]

    def run_one(item: tuple[str, Check]) -> CaseResult:
        key, check = item
        start = time.perf_counter_ns()
        try:
            detail = check()
        except Exception as exc:  # a crashed case is a failed case
            detail = f"raised {type(exc).__name__}: {exc}"
        elapsed = (time.perf_counter_ns() - start) // 1_000_000
        return CaseResult(key, detail == "", detail, int(elapsed))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_one, pending))
    else:
        results = [run_one(item) for item in pending]
    results.sort(key=lambda c: c.key)
    return SuiteReport(suite, max_n, tuple(results))
