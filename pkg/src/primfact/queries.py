"""Query execution shared by the CLI and the HTTP service.

Every public operation is exposed as a run_* function taking plain strings
and integers (the wire formats) and returning a QueryResult whose value is
rendered exactly: integers in decimal, rationals as "p/q", series as arrays
of such strings.  No floating point appears anywhere in the output.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import brute, class_algebra, counting
from .characters import phi_rational, phi_series
from .errors import UsageError
from .matrix_model import permutation_correlator
from .partitions import Partition, parse_partition
from .perms import parse_permutation
from .verify import SuiteReport, run_suite

AUTO_BRUTE_LEAF_LIMIT = 10**6

__all__ = [
    "QueryResult",
    "run_count",
    "run_minimal",
    "run_full_cycle",
    "run_hurwitz",
    "run_phi",
    "run_correlator",
    "run_verify",
    "verify_report_dict",
]


@dataclass(frozen=True)
class QueryResult:
    query: dict
    value: str | list[str]
    method: str
    elapsed_ms: int

    def to_dict(self) -> dict:
        return asdict(self)


class _Timer:
    def __enter__(self) -> "_Timer":
        self.start = time.perf_counter_ns()
        return self

    def __exit__(self, *exc) -> None:
        self.elapsed_ms = int((time.perf_counter_ns() - self.start) // 1_000_000)


def _finish(query: dict, value, method: str, timer: _Timer) -> QueryResult:
    if isinstance(value, list):
        rendered: str | list[str] = [str(v) for v in value]
    else:
        rendered = str(value)
    return QueryResult(query, rendered, method, timer.elapsed_ms)


def run_count(
    perm: str,
    length: int | None = None,
    type_: str | None = None,
    method: str = "auto",
) -> QueryResult:
    """Primitive factorizations of a permutation, by length or by type."""
    if (length is None) == (type_ is None):
        raise UsageError("give exactly one of length and type")
    pi = parse_permutation(perm)
    mu = pi.cycle_type()
    n = pi.degree
    if method not in ("auto", "brute", "jm", "character"):
        raise UsageError(f"unknown method {method!r}")

    if length is not None:
        if length < 0:
            raise UsageError("length must be nonnegative")
        query = {"op": "count", "perm": str(pi), "length": length, "method": method}
        if method == "auto":
            method = (
                "brute"
                if brute.primitive_leaf_count(n, length) <= AUTO_BRUTE_LEAF_LIMIT
                else "character"
            )
        with _Timer() as timer:
            if method == "brute":
                value = brute.count_primitive(pi, length)
            elif method == "jm":
                value = class_algebra.primitive_count_by_length(length, mu)
            else:
                value = int(phi_series(mu, length)[length])
        return _finish(query, value, method, timer)

    lam = parse_partition(type_)
    query = {"op": "count", "perm": str(pi), "type": str(lam), "method": method}
    if method == "auto":
        method = (
            "brute"
            if brute.primitive_leaf_count(n, lam.size) <= AUTO_BRUTE_LEAF_LIMIT
            else "jm"
        )
    with _Timer() as timer:
        if method == "brute":
            value = brute.count_primitive_by_type(pi, lam)
        elif method == "jm":
            value = class_algebra.primitive_count_by_type(lam, mu)
        else:
            from .characters import Monomial, class_resolution_via_characters

            value = class_resolution_via_characters(Monomial(lam), n)[mu]
    return _finish(query, value, method, timer)


def run_minimal(cycle_type: str, type_: str | None = None) -> QueryResult:
    """Minimal primitive factorization counts from the closed formulas."""
    mu = parse_partition(cycle_type)
    if not mu:
        raise UsageError("cycle type must be a partition of n >= 1")
    if type_ is None:
        query = {"op": "minimal", "cycle_type": str(mu)}
        with _Timer() as timer:
            value = counting.minimal_primitive_total(mu)
        return _finish(query, value, "catalan-product", timer)
    lam = parse_partition(type_)
    reduced = mu.reduced()
    if lam.size != reduced.size:
        raise UsageError(
            f"type must be a partition of n - len(mu) = {reduced.size}, "
            f"got |{lam}| = {lam.size}"
        )
    query = {"op": "minimal", "cycle_type": str(mu), "type": str(lam)}
    with _Timer() as timer:
        value = counting.minimal_primitive_by_type(reduced, lam)
    return _finish(query, value, "refinement-sum", timer)


def run_full_cycle(n: int, genus: int, method: str = "cf") -> QueryResult:
    """Primitive factorizations of an n-cycle into n-1+2g transpositions."""
    if n < 1:
        raise UsageError("n must be at least 1")
    if genus < 0:
        raise UsageError("genus must be nonnegative")
    query = {"op": "full-cycle", "n": n, "genus": genus, "method": method}
    with _Timer() as timer:
        if method == "cf":
            value = counting.primitive_full_cycle(n, genus)
        elif method == "sinh":
            value = counting.primitive_full_cycle_sinh(n, genus)
        elif method == "brute":
            cycle = Partition([n])
            value = brute.count_primitive(
                brute.standard_representative(cycle), n - 1 + 2 * genus
            )
        else:
            raise UsageError(f"unknown method {method!r}")
    return _finish(query, value, method, timer)


def run_hurwitz(cycle_type: str, genus: int | None = None) -> QueryResult:
    """Minimal transitive factorization count; with a genus, the transitive
    count of a full cycle at that genus (single-part cycle types only)."""
    mu = parse_partition(cycle_type)
    if not mu:
        raise UsageError("cycle type must be a partition of n >= 1")
    if genus is None:
        query = {"op": "hurwitz", "cycle_type": str(mu)}
        with _Timer() as timer:
            value = counting.hurwitz_minimal_transitive(mu)
        return _finish(query, value, "hurwitz-formula", timer)
    if mu.length != 1:
        raise UsageError("genus counts are implemented for full cycles only")
    if genus < 0:
        raise UsageError("genus must be nonnegative")
    query = {"op": "hurwitz", "cycle_type": str(mu), "genus": genus}
    with _Timer() as timer:
        value = counting.hurwitz_full_cycle_genus(mu[0], genus)
    return _finish(query, value, "sinh-formula", timer)


def run_phi(cycle_type: str, order: int, closed_form: bool = False) -> QueryResult:
    """Generating function of primitive counts by length: series coefficients
    up to the given order, or the normalized rational closed form."""
    mu = parse_partition(cycle_type)
    if not mu:
        raise UsageError("cycle type must be a partition of n >= 1")
    if closed_form:
        query = {"op": "phi", "cycle_type": str(mu), "closed_form": True}
        with _Timer() as timer:
            value = str(phi_rational(mu))
        return _finish(query, value, "rational-function", timer)
    if order < 0:
        raise UsageError("order must be nonnegative")
    query = {"op": "phi", "cycle_type": str(mu), "order": order}
    with _Timer() as timer:
        series = phi_series(mu, order)
    return _finish(query, list(series.coeffs), "character-series", timer)


def run_correlator(perm: str, dim: int, method: str = "gram") -> QueryResult:
    """Haar-unitary permutation correlator at integer dimension dim."""
    pi = parse_permutation(perm)
    if method not in ("gram", "character"):
        raise UsageError(f"unknown method {method!r}")
    if dim < pi.degree:
        raise UsageError(f"need dim >= degree, got dim={dim} < {pi.degree}")
    query = {"op": "correlator", "perm": str(pi), "dim": dim, "method": method}
    with _Timer() as timer:
        value = permutation_correlator(pi, dim, method)
    return _finish(query, value, method, timer)


def run_verify(suite: str = "all", max_n: int = 4, jobs: int = 1) -> SuiteReport:
    """Run a verification suite; see the verify module."""
    try:
        return run_suite(suite, max_n=max_n, jobs=jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def verify_report_dict(report: SuiteReport) -> dict:
    return {
        "suite": report.suite,
        "max_n": report.max_n,
        "passed": report.passed,
        "cases": [
            {
                "key": c.key,
                "passed": c.passed,
                "detail": c.detail,
                "elapsed_ms": c.elapsed_ms,
            }
            for c in report.cases
        ],
    }
