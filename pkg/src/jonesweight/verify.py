"""Cross-verification harness tying the three methods together.

Every diagram value can be computed three ways (permanent, state sum,
coloring sum); the harness runs any subset, compares the results exactly,
and checks the two coefficient identities: the λ^n coefficient equals the
permanent of the intersection matrix, and the deg4-graded census matches
the coefficients in the shifted basis d = λ + 2.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from .caps import SizeCapError, SizeCaps
from .diagrams import ChordDiagram, enumerate_diagrams, four_term_quadruples
from .permanent import wj_via_permanent, wjj_via_permanent
from .polynomials import IntPoly, to_d_basis
from .recursion import wj_via_recursion
from .statesum import assemble_state_sum, build_lid, deg4_signed_sums

METHODS = ("permanent", "statesum", "recursion")


@dataclass
class MethodResult:
    method: str
    poly: IntPoly | None
    seconds: float
    error: str | None = None


@dataclass
class VerificationReport:
    """Outcome of running selected methods on one diagram."""

    diagram: str
    n: int
    results: dict[str, MethodResult]
    agreement: bool
    leading_matches_im_permanent: bool | None
    d_basis_census_matches: bool | None

    @property
    def ok(self) -> bool:
        if any(r.error is not None for r in self.results.values()):
            return False
        if not self.agreement:
            return False
        return (
            self.leading_matches_im_permanent is not False
            and self.d_basis_census_matches is not False
        )

    def value(self) -> IntPoly | None:
        for r in self.results.values():
            if r.poly is not None:
                return r.poly
        return None


def verify_diagram(
    d: ChordDiagram,
    methods: Iterable[str] = METHODS,
    caps: SizeCaps = SizeCaps(),
) -> VerificationReport:
    """Run the selected methods and the coefficient identity checks.

    A method whose size cap is exceeded is reported as an error without
    aborting the others; agreement compares the methods that did run.
    """
    selected = tuple(methods)
    if not selected:
        raise ValueError("at least one method must be selected")
    unknown = [m for m in selected if m not in METHODS]
    if unknown:
        raise ValueError(f"unknown methods {unknown!r}")

    results: dict[str, MethodResult] = {}
    census_sums: list[int] | None = None
    for name in selected:
        start = time.perf_counter()
        try:
            if name == "permanent":
                poly = wj_via_permanent(d, chord_cap=caps.permanent_chords)
            elif name == "statesum":
                if d.n > caps.statesum_chords:
                    raise SizeCapError(
                        f"chord count {d.n} exceeds state-sum cap {caps.statesum_chords}"
                    )
                census_sums = deg4_signed_sums(build_lid(d))
                poly = assemble_state_sum(census_sums)
            else:
                poly = wj_via_recursion(d, chord_cap=caps.recursion_chords)
            results[name] = MethodResult(name, poly, time.perf_counter() - start)
        except SizeCapError as exc:
            results[name] = MethodResult(name, None, time.perf_counter() - start, str(exc))

    computed = [r.poly for r in results.values() if r.poly is not None]
    agreement = bool(computed) and all(p == computed[0] for p in computed)

    leading: bool | None = None
    if computed and d.n <= caps.permanent_chords:
        leading = computed[0].coefficient(d.n) == wjj_via_permanent(
            d, chord_cap=caps.permanent_chords
        )

    census_ok: bool | None = None
    if census_sums is not None and results["statesum"].poly is not None:
        shifted = to_d_basis(results["statesum"].poly)
        census_ok = all(
            (census_sums[k] << k) == shifted.coefficient(d.n - k)
            for k in range(d.n + 1)
        )

    return VerificationReport(
        diagram=d.to_cdp(),
        n=d.n,
        results=results,
        agreement=agreement,
        leading_matches_im_permanent=leading,
        d_basis_census_matches=census_ok,
    )


@dataclass
class ExhaustiveSummary:
    """Totals of verify_diagram over every diagram with a given chord count."""

    chords: int
    diagrams: int = 0
    agreements: int = 0
    failures: list[str] = field(default_factory=list)
    isolated_zero_diagrams: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_exhaustive(
    n: int,
    methods: Iterable[str] = METHODS,
    caps: SizeCaps = SizeCaps(),
) -> ExhaustiveSummary:
    """Cross-verify all (2n-1)!! diagrams; isolated-chord diagrams must vanish."""
    summary = ExhaustiveSummary(chords=n)
    selected = tuple(methods)
    for d in enumerate_diagrams(n):
        report = verify_diagram(d, selected, caps)
        summary.diagrams += 1
        bad = not report.ok
        if d.has_isolated_chord():
            summary.isolated_zero_diagrams += 1
            value = report.value()
            if value is None or value != IntPoly():
                bad = True
        if bad:
            summary.failures.append(report.diagram)
        else:
            summary.agreements += 1
    return summary


@dataclass
class RelationSummary:
    """Isolated-chord and four-term relation checks at one chord count."""

    chords: int
    isolated_diagrams: int = 0
    one_term_violations: list[str] = field(default_factory=list)
    quadruples: int = 0
    four_term_violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.one_term_violations and not self.four_term_violations


def _memoized_wj(caps: SizeCaps) -> Callable[[ChordDiagram], IntPoly]:
    cache: dict[tuple, IntPoly] = {}

    def wj(d: ChordDiagram) -> IntPoly:
        val = cache.get(d.chords)
        if val is None:
            val = wj_via_recursion(d, chord_cap=caps.recursion_chords)
            cache[d.chords] = val
        return val

    return wj


def verify_relations(n: int, caps: SizeCaps = SizeCaps()) -> RelationSummary:
    """Check the weight-system relations at chord count n.

    One-term: every diagram with an isolated chord evaluates to 0.
    Four-term: (after_left - before_left) + (after_right - before_right) = 0
    for every generated quadruple.
    """
    if n < 1:
        raise ValueError("relation checks need at least one chord")
    summary = RelationSummary(chords=n)
    wj = _memoized_wj(caps)
    zero = IntPoly()
    for d in enumerate_diagrams(n):
        if d.has_isolated_chord():
            summary.isolated_diagrams += 1
            if wj(d) != zero:
                summary.one_term_violations.append(d.to_cdp())
    if n >= 2:
        for quad in four_term_quadruples(n):
            summary.quadruples += 1
            total = (
                wj(quad.after_left)
                - wj(quad.before_left)
                + wj(quad.after_right)
                - wj(quad.before_right)
            )
            if total != zero:
                summary.four_term_violations.append(
                    " vs ".join(m.to_cdp() for m in quad.members())
                )
    return summary
