"""Claim-checking harness over exhaustive small-order enumerations.

Every check returns a VerificationReport whose JSON form is the unit of
regression: claim, parameters, number of graphs examined, a claim-specific
`observed` payload, witness and mismatch graph6 lists, and a verdict.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache, partial
from multiprocessing import Pool
from typing import Any, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from core.classify import BlockType, classify_block, structural_k_cactus
from core.config import Config
from core.construct import (
    SMALL_CASES,
    ThetaSpec,
    build_complete,
    build_cycle,
    build_theta,
    extremal_recipes,
    max_edges,
    realize_recipe,
    realize_recipe_all,
    stated_recipes,
    theta_prime_realizations,
    theta_specs,
    theta_tilde,
)
from core.cycles import cactus_number, is_k_cactus, is_nice_k_cactus
from core.decompose import is_two_connected
from core.enumeration import enumerate_graphs
from core.graph import CanonicalForm, Graph, canonical_form, is_connected, parse_graph6, write_graph6

CLAIMS = (
    'bounds',
    'characterization',
    'extremal-sets',
    'two-connected',
    'recipe-arithmetic',
    'theta-prime-rule',
    'ear-bound',
    'nice-cacti',
)


class Verdict(Enum):
    PASS = "pass"
    FAIL = "fail"
    DISCREPANCY = "discrepancy-noted"


@dataclass
class VerificationReport:
    claim: str
    params: Dict[str, Optional[int]]
    graphs_examined: int
    observed: Dict[str, Any]
    witnesses: List[str] = field(default_factory=list)
    mismatches: List[str] = field(default_factory=list)
    verdict: Verdict = Verdict.PASS
    elapsed_s: float = 0.0

    def __post_init__(self) -> None:
        if self.verdict == Verdict.PASS and self.mismatches:
            raise ValueError(f"Report for {self.claim} cannot pass with mismatches")

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        """JSON-ready form with a stable field order."""
        return {
            'claim': self.claim,
            'params': {'n': self.params.get('n'), 'k': self.params.get('k')},
            'graphs_examined': self.graphs_examined,
            'observed': self.observed,
            'witnesses': list(self.witnesses),
            'mismatches': list(self.mismatches),
            'verdict': self.verdict.value,
            'elapsed_s': round(self.elapsed_s, 3) if include_timing else 0.0,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> VerificationReport:
        return cls(
            claim=data['claim'],
            params=dict(data['params']),
            graphs_examined=data['graphs_examined'],
            observed=data['observed'],
            witnesses=list(data['witnesses']),
            mismatches=list(data['mismatches']),
            verdict=Verdict(data['verdict']),
            elapsed_s=data.get('elapsed_s', 0.0),
        )


def exit_code(reports: Iterable[VerificationReport]) -> int:
    """0 when everything passes, 2 on any failure, otherwise 3 for discrepancies."""
    verdicts = {report.verdict for report in reports}
    if Verdict.FAIL in verdicts:
        return 2
    if Verdict.DISCREPANCY in verdicts:
        return 3
    return 0


# per-graph oracle work

@lru_cache(maxsize=None)
def _capped_cactus_number(g: Graph, ceiling: int, cap: Optional[int]) -> int:
    return cactus_number(g, cap=cap, ceiling=ceiling)


def _census_task(g: Graph, ceiling: int, cap: Optional[int]) -> int:
    return cactus_number(g, cap=cap, ceiling=ceiling)


def census(graphs: Sequence[Graph], ceiling: int, jobs: int = 1,
           cap: Optional[int] = None) -> List[int]:
    """Cactus numbers clipped at ceiling + 1, in input order.

    With jobs > 1 the graphs are spread over a process pool.
    """
    if jobs <= 1 or len(graphs) < 2:
        return [_capped_cactus_number(g, ceiling, cap) for g in graphs]
    worker = partial(_census_task, ceiling=ceiling, cap=cap)
    with Pool(processes=jobs) as pool:
        return list(pool.imap(worker, graphs, chunksize=64))


def _graphs_of_order(n: int, graphs: Optional[Sequence[Graph]], connected_only: bool) -> List[Graph]:
    if graphs is None:
        return list(enumerate_graphs(n, connected_only))
    return [g for g in graphs if g.n == n and (not connected_only or is_connected(g))]


def _ceiling(k: int) -> int:
    return max(k, Config.CENSUS_CEILING)


def _labels(graphs: Iterable[Graph]) -> Dict[CanonicalForm, Graph]:
    return {canonical_form(g): g for g in graphs}


def _graph6_sorted(found: Dict[CanonicalForm, Graph], keys: Iterable[CanonicalForm]) -> List[str]:
    return [write_graph6(found[key]) for key in sorted(keys)]


# claims

def verify_bounds(n_max: int, k: int, *, graphs: Optional[Sequence[Graph]] = None,
                  jobs: int = 1, cap: Optional[int] = None) -> VerificationReport:
    """Largest connected k-cactus on n vertices equals max_edges(n, k) for n <= n_max.

    An external graph stream is only checked against the upper bound, since
    it is not trusted to be complete.
    """
    start = time.perf_counter()
    complete = graphs is None
    per_n = []
    witnesses: List[str] = []
    mismatches: List[str] = []
    examined = 0
    for n in range(1, n_max + 1):
        pool = _graphs_of_order(n, graphs, connected_only=True)
        if not pool and not complete:
            continue
        examined += len(pool)
        numbers = census(pool, _ceiling(k), jobs, cap)
        cacti = [g for g, number in zip(pool, numbers) if number <= k]
        expected = max_edges(n, k)
        best = max((g.size for g in cacti), default=None)
        maximizers = [g for g in cacti if g.size == best]
        per_n.append({'n': n, 'expected': expected, 'observed': best, 'maximizers': len(maximizers)})
        witnesses.extend(write_graph6(g) for g in maximizers)
        mismatches.extend(write_graph6(g) for g in cacti if g.size > expected)
        if complete and best is not None and best < expected:
            mismatches.append(write_graph6(realize_recipe(extremal_recipes(n, k)[0])))
    return VerificationReport(
        claim='bounds',
        params={'n': n_max, 'k': k},
        graphs_examined=examined,
        observed={'complete': complete, 'per_n': per_n},
        witnesses=witnesses,
        mismatches=mismatches,
        verdict=Verdict.FAIL if mismatches else Verdict.PASS,
        elapsed_s=time.perf_counter() - start,
    )


def verify_characterization(n_max: int, k: int, *, endpoints: Optional[str] = None,
                            graphs: Optional[Sequence[Graph]] = None, jobs: int = 1,
                            cap: Optional[int] = None) -> VerificationReport:
    """Structural recognition agrees with the cycle-count oracle on every connected graph."""
    start = time.perf_counter()
    rule = endpoints or Config.THETA_PRIME_ENDPOINTS
    examined = 0
    per_n = []
    mismatches: List[str] = []
    for n in range(1, n_max + 1):
        pool = _graphs_of_order(n, graphs, connected_only=True)
        if not pool and graphs is not None:
            continue
        examined += len(pool)
        row = {'n': n, 'accepted': 0, 'rejected': 0}
        for g, number in zip(pool, census(pool, _ceiling(k), jobs, cap)):
            oracle = number <= k
            if structural_k_cactus(g, k, endpoints=rule) != oracle:
                mismatches.append(write_graph6(g))
            elif oracle:
                row['accepted'] += 1
            else:
                row['rejected'] += 1
        per_n.append(row)
    return VerificationReport(
        claim='characterization',
        params={'n': n_max, 'k': k},
        graphs_examined=examined,
        observed={'endpoint_rule': rule,
                  'accepted': sum(row['accepted'] for row in per_n),
                  'rejected': sum(row['rejected'] for row in per_n),
                  'disagreements': len(mismatches),
                  'per_n': per_n},
        mismatches=mismatches,
        verdict=Verdict.FAIL if mismatches else Verdict.PASS,
        elapsed_s=time.perf_counter() - start,
    )


def verify_theta_prime_rule(n_max: int, *, graphs: Optional[Sequence[Graph]] = None,
                            jobs: int = 1, cap: Optional[int] = None) -> VerificationReport:
    """Compare the strict and relaxed theta-prime endpoint rules against the oracle at k = 4.

    Graphs that only the relaxed rule classifies correctly are reported as
    witnesses of a discrepancy-noted verdict.
    """
    start = time.perf_counter()
    examined = 0
    strict_errors: List[str] = []
    relaxed_errors: List[str] = []
    for n in range(1, n_max + 1):
        pool = _graphs_of_order(n, graphs, connected_only=True)
        examined += len(pool)
        for g, number in zip(pool, census(pool, _ceiling(4), jobs, cap)):
            oracle = number <= 4
            if structural_k_cactus(g, 4, endpoints='strict') != oracle:
                strict_errors.append(write_graph6(g))
            if structural_k_cactus(g, 4, endpoints='relaxed') != oracle:
                relaxed_errors.append(write_graph6(g))
    if relaxed_errors:
        verdict = Verdict.FAIL
    elif strict_errors:
        verdict = Verdict.DISCREPANCY
    else:
        verdict = Verdict.PASS
    resolved = 'strict' if not strict_errors else ('relaxed' if not relaxed_errors else None)
    return VerificationReport(
        claim='theta-prime-rule',
        params={'n': n_max, 'k': 4},
        graphs_examined=examined,
        observed={'strict_disagreements': len(strict_errors),
                  'relaxed_disagreements': len(relaxed_errors),
                  'resolved_rule': resolved},
        witnesses=strict_errors if not relaxed_errors else [],
        mismatches=relaxed_errors,
        verdict=verdict,
        elapsed_s=time.perf_counter() - start,
    )


def _realizations(recipes: Iterable) -> Dict[CanonicalForm, Graph]:
    found: Dict[CanonicalForm, Graph] = {}
    for recipe in recipes:
        for g in realize_recipe_all(recipe):
            found.setdefault(canonical_form(g), g)
    return found


def verify_extremal_sets(n: int, k: int, *, graphs: Optional[Sequence[Graph]] = None,
                         jobs: int = 1, cap: Optional[int] = None) -> VerificationReport:
    """Enumerated maximizers coincide with the realizations of the extremal recipes.

    A match that needs amended recipes is discrepancy-noted; its witnesses
    are the maximizers no literally stated recipe produces.

    An external graph stream is not trusted to be complete: only its own
    graphs of order n are checked. Those above max_edges, and those at
    max_edges that no recipe realizes, are mismatches. Recipe realizations
    absent from the stream are not.
    """
    start = time.perf_counter()
    complete = graphs is None
    pool = _graphs_of_order(n, graphs, connected_only=True)
    numbers = census(pool, _ceiling(k), jobs, cap)
    cacti = [g for g, number in zip(pool, numbers) if number <= k]
    best = max((g.size for g in cacti), default=None)
    expected = max_edges(n, k)
    if complete:
        maximizers = _labels(g for g in cacti if g.size == best)
        oversized: Dict[CanonicalForm, Graph] = {}
    else:
        maximizers = _labels(g for g in cacti if g.size == expected)
        oversized = _labels(g for g in cacti if g.size > expected)

    recipes = extremal_recipes(n, k)
    consistent_stated = [r for r in stated_recipes(n, k) if r.order == n and r.edge_total == expected]
    supplemented = [r for r in recipes if r.origin == 'supplemented']
    # an external stream with no graphs of this order has nothing to match
    realized = _realizations(recipes) if complete or pool else {}
    explained = _realizations(consistent_stated + supplemented) if complete or pool else {}
    stated_signatures = {r.signature() for r in consistent_stated}

    everything = {**realized, **maximizers, **oversized}
    missing = set(realized) - set(maximizers) if complete else set()
    unexpected = set(maximizers) - set(realized)
    mismatches = _graph6_sorted(everything, missing | unexpected | set(oversized))
    observed: Dict[str, Any] = {
        'complete': complete,
        'max_edges': best,
        'expected': expected,
        'maximizers': len(maximizers),
        'realizations': len(realized),
        'amended_recipes': [r.to_dict() for r in recipes
                            if r.origin == 'amended' and r.signature() not in stated_signatures],
        'inconsistent_stated_recipes': [
            {'rule': r.rule, 'parts': r.describe(), 'order': r.order, 'edges': r.edge_total}
            for r in stated_recipes(n, k) if r.order != n or r.edge_total != expected
        ],
    }
    unexplained = set(maximizers) - set(explained)
    if mismatches:
        verdict = Verdict.FAIL
        witnesses: List[str] = []
    elif unexplained:
        verdict = Verdict.DISCREPANCY
        witnesses = _graph6_sorted(maximizers, unexplained)
    else:
        verdict = Verdict.PASS
        witnesses = _graph6_sorted(maximizers, maximizers)
    return VerificationReport(
        claim='extremal-sets',
        params={'n': n, 'k': k},
        graphs_examined=len(pool),
        observed=observed,
        witnesses=witnesses,
        mismatches=mismatches,
        verdict=verdict,
        elapsed_s=time.perf_counter() - start,
    )


def _named_graph(name: str) -> Graph:
    if name.startswith('theta~'):
        return theta_tilde()[int(name[-1]) - 1]
    if name.startswith('theta('):
        return build_theta(ThetaSpec.parse(name))
    if name.startswith('C'):
        return build_cycle(int(name[1:]))
    return build_complete(int(name[1:]))


def _expected_theta_witness(n: int, k: int) -> Graph:
    """A graph with k+1 internally disjoint paths on n >= k+2 vertices (a cycle when k = 1)."""
    if k == 1:
        return build_cycle(n)
    return build_theta(ThetaSpec(tuple([1] + [2] * (k - 1) + [n - k])))


def _is_tight_witness(g: Graph, k: int) -> bool:
    kind = classify_block(g)
    if k == 1:
        return kind.type == BlockType.CYCLE
    return kind.type == BlockType.THETA and kind.theta.t == k + 1


def verify_two_connected(n_max: int, k_max: int, *, graphs: Optional[Sequence[Graph]] = None,
                         jobs: int = 1, cap: Optional[int] = None) -> VerificationReport:
    """2-connected k-cacti have at most n + k - 1 edges, attained by theta graphs when n >= k + 2.

    Orders 3 to 5 are also compared against the small-case table; any
    difference in the maximum or in the maximizers is discrepancy-noted.

    With an external graph stream only the upper bound is checked; tightness
    and the small-case table need every graph of the order.
    """
    start = time.perf_counter()
    complete = graphs is None
    rows: List[Dict[str, Any]] = []
    notes: List[Dict[str, Any]] = []
    witnesses: List[str] = []
    mismatches: List[str] = []
    examined = 0
    for n in range(3, n_max + 1):
        pool = [g for g in _graphs_of_order(n, graphs, connected_only=True) if is_two_connected(g)]
        if not pool and not complete:
            continue
        examined += len(pool)
        numbers = census(pool, _ceiling(k_max), jobs, cap)
        for k in range(1, k_max + 1):
            cacti = [g for g, number in zip(pool, numbers) if number <= k]
            best = max((g.size for g in cacti), default=None)
            maximizers = [g for g in cacti if g.size == best]
            bound = n + k - 1
            tight_required = n >= k + 2
            rows.append({'n': n, 'k': k, 'bound': bound, 'observed': best,
                         'tight_required': tight_required, 'maximizers': len(maximizers)})
            for g in maximizers:
                line = write_graph6(g)
                if line not in witnesses:
                    witnesses.append(line)
            mismatches.extend(write_graph6(g) for g in cacti if g.size > bound)
            if complete and tight_required and (best != bound or not any(_is_tight_witness(g, k) for g in maximizers)):
                mismatches.append(write_graph6(_expected_theta_witness(n, k)))

            if complete and (n, k) in SMALL_CASES:
                value, names = SMALL_CASES[(n, k)]
                listed = _labels(_named_graph(name) for name in names)
                found = _labels(maximizers)
                if best != value or set(listed) != set(found):
                    notes.append({
                        'n': n, 'k': k, 'listed_max': value, 'observed_max': best,
                        'listed': list(names),
                        'observed': _graph6_sorted(found, found),
                    })
    if mismatches:
        verdict = Verdict.FAIL
    elif notes:
        verdict = Verdict.DISCREPANCY
    else:
        verdict = Verdict.PASS
    return VerificationReport(
        claim='two-connected',
        params={'n': n_max, 'k': k_max},
        graphs_examined=examined,
        observed={'complete': complete, 'rows': rows, 'small_case_notes': notes},
        witnesses=witnesses,
        mismatches=mismatches,
        verdict=verdict,
        elapsed_s=time.perf_counter() - start,
    )


def verify_recipe_arithmetic(n_max: int, k: int) -> VerificationReport:
    """Check every literally stated recipe against the vertex identity and the edge target.

    Consistent recipes with no stated counterpart are listed as well.
    """
    start = time.perf_counter()
    entries: List[Dict[str, Any]] = []
    witnesses: List[str] = []
    for n in range(1, n_max + 1):
        expected = max_edges(n, k)
        stated = stated_recipes(n, k)
        signatures = {r.signature() for r in stated}
        for recipe in stated:
            if recipe.order != n or recipe.edge_total != expected:
                entries.append({
                    'n': n, 'rule': recipe.rule, 'stated': recipe.describe(),
                    'order': recipe.order, 'edges': recipe.edge_total, 'expected_edges': expected,
                })
                witnesses.append(write_graph6(realize_recipe(recipe)))
        for recipe in extremal_recipes(n, k):
            if recipe.origin == 'amended' and recipe.signature() not in signatures:
                entries.append({
                    'n': n, 'rule': recipe.rule, 'amended': recipe.describe(), 'note': recipe.note,
                })
    return VerificationReport(
        claim='recipe-arithmetic',
        params={'n': n_max, 'k': k},
        graphs_examined=0,
        observed={'entries': entries},
        witnesses=witnesses,
        verdict=Verdict.DISCREPANCY if entries else Verdict.PASS,
        elapsed_s=time.perf_counter() - start,
    )


def verify_ear_bound(n_max: int, *, graphs: Optional[Sequence[Graph]] = None,
                     cap: Optional[int] = None) -> VerificationReport:
    """A 2-connected graph with l ears has cactus number at least l + 1."""
    start = time.perf_counter()
    examined = 0
    mismatches: List[str] = []
    for n in range(3, n_max + 1):
        for g in _graphs_of_order(n, graphs, connected_only=True):
            if not is_two_connected(g):
                continue
            examined += 1
            ears = g.size - g.n
            if cactus_number(g, cap=cap, ceiling=ears) < ears + 1:
                mismatches.append(write_graph6(g))
    return VerificationReport(
        claim='ear-bound',
        params={'n': n_max, 'k': None},
        graphs_examined=examined,
        observed={'violations': len(mismatches)},
        mismatches=mismatches,
        verdict=Verdict.FAIL if mismatches else Verdict.PASS,
        elapsed_s=time.perf_counter() - start,
    )


def verify_nice_cacti(max_order: int, *, cap: Optional[int] = None) -> VerificationReport:
    """Cycles are nice 1-cacti, theta graphs with t paths nice (t-1)-cacti, theta-primes nice 4-cacti.

    Also checks the size identities |E| = |V| + t - 2 and |E| = |V| + 2.
    """
    start = time.perf_counter()
    mismatches: List[str] = []
    counts = {'cycles': 0, 'thetas': 0, 'theta_primes': 0}
    for n in range(3, max_order + 1):
        counts['cycles'] += 1
        if not is_nice_k_cactus(build_cycle(n), 1, cap=cap):
            mismatches.append(write_graph6(build_cycle(n)))
    for spec in theta_specs(max_order):
        counts['thetas'] += 1
        g = build_theta(spec)
        if g.size != g.n + spec.t - 2 or g.n < spec.t + 1 or not is_nice_k_cactus(g, spec.t - 1, cap=cap):
            mismatches.append(write_graph6(g))
    for realization in theta_prime_realizations(max_order, endpoints='relaxed'):
        counts['theta_primes'] += 1
        g = realization.graph
        if g.size != g.n + 2 or not is_nice_k_cactus(g, 4, cap=cap):
            mismatches.append(write_graph6(g))
    return VerificationReport(
        claim='nice-cacti',
        params={'n': max_order, 'k': None},
        graphs_examined=sum(counts.values()),
        observed=counts,
        mismatches=mismatches,
        verdict=Verdict.FAIL if mismatches else Verdict.PASS,
        elapsed_s=time.perf_counter() - start,
    )


def derive_theta_tilde() -> Tuple[Graph, ...]:
    """2-connected 4-cacti with 5 vertices and 7 edges other than theta(1,2,2,2), canonical order."""
    excluded = canonical_form(build_theta(ThetaSpec.of(1, 2, 2, 2)))
    found = [
        g for g in enumerate_graphs(5, connected_only=True)
        if g.size == 7 and is_two_connected(g) and is_k_cactus(g, 4) and canonical_form(g) != excluded
    ]
    return tuple(sorted(found, key=canonical_form))


def recheck_witnesses(report: Dict[str, Any]) -> List[str]:
    """Re-verify a loaded report's witnesses with the oracle; returns the problems found."""
    problems: List[str] = []
    graphs: List[Tuple[str, Graph]] = []
    for line in list(report.get('witnesses', [])) + list(report.get('mismatches', [])):
        try:
            g = parse_graph6(line)
        except ValueError as e:
            problems.append(f"{line}: {e}")
            continue
        if write_graph6(g) != line:
            problems.append(f"{line}: does not round-trip through graph6")
        graphs.append((line, g))

    claim = report.get('claim')
    k = report.get('params', {}).get('k')
    witnesses = set(report.get('witnesses', []))
    for line, g in graphs:
        if line not in witnesses:
            continue
        if claim == 'bounds':
            best = {row['n']: row['observed'] for row in report['observed']['per_n']}
            if not is_k_cactus(g, k) or g.size != best.get(g.n):
                problems.append(f"{line}: not a {k}-cactus of maximum size")
        elif claim == 'extremal-sets':
            if not is_k_cactus(g, k) or g.size != max_edges(g.n, k):
                problems.append(f"{line}: not an extremal {k}-cactus")
        elif claim == 'two-connected':
            if not is_two_connected(g) or cactus_number(g, ceiling=k) > k:
                problems.append(f"{line}: not a 2-connected {k}-cactus")
        elif claim == 'theta-prime-rule':
            if not is_k_cactus(g, 4):
                problems.append(f"{line}: not a 4-cactus")
    return problems


def _extremal_orders(n_max: int, graphs: Optional[Sequence[Graph]]) -> List[int]:
    """Orders the extremal-set check runs over; an external stream only contributes the orders it holds."""
    if graphs is None:
        return list(range(1, n_max + 1))
    present = {g.n for g in graphs}
    return [n for n in range(1, min(n_max, Config.CANONICAL_CAP) + 1) if n in present]


def run_claims(claims: Sequence[str], n_max: int, ks: Sequence[int], *,
               graphs: Optional[Sequence[Graph]] = None, endpoints: Optional[str] = None,
               jobs: int = 1, cap: Optional[int] = None, k_max: int = 6,
               arithmetic_n_max: int = 30, nice_order: int = 9) -> List[VerificationReport]:
    """Run the selected claims in a fixed order and collect their reports."""
    unknown: Set[str] = set(claims) - set(CLAIMS)
    if unknown:
        raise ValueError(f"Unknown claims: {', '.join(sorted(unknown))}")
    ks = sorted(set(ks))
    reports: List[VerificationReport] = []
    for claim in CLAIMS:
        if claim not in claims:
            continue
        if claim == 'bounds':
            reports.extend(verify_bounds(n_max, k, graphs=graphs, jobs=jobs, cap=cap) for k in ks)
        elif claim == 'characterization':
            reports.extend(verify_characterization(n_max, k, endpoints=endpoints, graphs=graphs,
                                                   jobs=jobs, cap=cap) for k in ks)
        elif claim == 'extremal-sets':
            reports.extend(verify_extremal_sets(n, k, graphs=graphs, jobs=jobs, cap=cap)
                           for k in ks for n in _extremal_orders(n_max, graphs))
        elif claim == 'two-connected':
            reports.append(verify_two_connected(n_max, k_max, graphs=graphs, jobs=jobs, cap=cap))
        elif claim == 'recipe-arithmetic':
            reports.extend(verify_recipe_arithmetic(max(n_max, arithmetic_n_max), k) for k in ks)
        elif claim == 'theta-prime-rule':
            if 4 in ks:
                reports.append(verify_theta_prime_rule(n_max, graphs=graphs, jobs=jobs, cap=cap))
        elif claim == 'ear-bound':
            reports.append(verify_ear_bound(n_max, graphs=graphs, cap=cap))
        elif claim == 'nice-cacti':
            reports.append(verify_nice_cacti(nice_order, cap=cap))
    return reports
