"""Invariant sweeps over the monomial core, small graphs, lexsegment powers and anti-d-path powers

Date -- 19.10.2026
"""


from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

import networkx as nx
import numpy as np

from edgepowers.families import FamilyDescriptor, FamilyKind, QuotientOrder
from edgepowers.graph import (
    Graph,
    all_graphs_up_to_isomorphism,
    anti_d_path,
    complement,
    edge_ideal,
    is_bipartite,
    is_chordal,
    minimal_vertex_cover_primes,
    squarefree_quadrics,
)
from edgepowers.monomial import (
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    colon_by_ideal,
    colon_by_monomial,
    contains,
    intersect,
    lex_cmp,
    localize,
    power,
    product,
    revlex_cmp,
)
from edgepowers.primes import (
    antipath_minimal_primes,
    ass_chain,
    ass_primes,
    two_method_mismatches,
    verify_antipath_ass_theorem,
)
from edgepowers.quotients import (
    antipath_power_generators,
    betti_table_from_certificate,
    certificate_for,
    closed_form_set_size,
    closed_form_sets,
    family_power,
    lq_certificate,
)
from edgepowers.taylor import compare_betti, is_linear_resolution, taylor_betti
from edgepowers.utils import DEFAULT_CHAIN_DEPTH, DEFAULT_SEED, MAX_TAYLOR_GENERATORS, GuardError, NotLinearQuotients
from edgepowers.verification.audits import audit_power_betti_corollaries, audit_remark_closed_form
from edgepowers.verification.order_search import linear_quotients_order
from edgepowers.verification.report import (
    CheckResult,
    CheckStatus,
    SuiteReport,
    check,
    guarded,
    run_instances,
    skipped,
)


@dataclass
class SweepConfig:
    n_max: int = 8
    d_max: int = 3
    k_max: int = 3
    t_max: int = 3
    lexseg_n_max: int = 7
    K: int = DEFAULT_CHAIN_DEPTH
    pd_n_max: int = 10
    pd_d_max: int = 4
    dichotomy_n_max: int = 10
    graphs_n_max: int = 6
    oracle_max_gens: int = MAX_TAYLOR_GENERATORS
    core_instances: int = 200
    seed: int = DEFAULT_SEED
    jobs: int = 1
    audit_family: Optional[FamilyDescriptor] = None
    audit_t: int = 2


def _oracle_checks(suite: str, instance: str, ideal: MonomialIdeal, cert, config: SweepConfig) -> List[CheckResult]:
    if len(ideal) > config.oracle_max_gens:
        return [skipped(suite, "betti_oracle", instance, f"{len(ideal)} generators > {config.oracle_max_gens}")]

    try:
        oracle = taylor_betti(ideal)
    except GuardError as e:
        return [skipped(suite, "betti_oracle", instance, str(e))]

    diff = compare_betti(betti_table_from_certificate(cert), oracle)
    linear = all(j == cert.degree + i for i, j in oracle.graded)
    return [
        check(suite, "betti_oracle", instance, diff is None, first_difference=diff),
        check(suite, "linear_resolution", instance, linear),
    ]


# core

def _random_ideal(rng: np.random.Generator, n: int) -> MonomialIdeal:
    rows = rng.integers(0, 4, size=(int(rng.integers(1, 6)), n))
    return MonomialIdeal.from_rows(n, rows)


def core_instances(config: SweepConfig) -> List[Dict]:
    rng = np.random.default_rng(config.seed)
    instances = []
    for _ in range(config.core_instances):
        n = int(rng.integers(2, 6))
        instances.append({
            "I": _random_ideal(rng, n).to_json(),
            "J": _random_ideal(rng, n).to_json(),
            "f": rng.integers(0, 4, size=n).tolist(),
        })
    return instances


def core_checks(instance: Dict) -> List[CheckResult]:
    I = MonomialIdeal.from_json(instance["I"])
    J = MonomialIdeal.from_json(instance["J"])
    f = Monomial.from_json(instance["f"])
    name = f"I={I},J={J},f={f}"
    results = []

    antichain = all(not a.divides(b) for a, b in itertools.permutations(I.gens, 2))
    results.append(check("core", "minimal_antichain", name, antichain))

    colon = colon_by_monomial(I, f)
    sound = all(contains(I, g * f) for g in colon)
    complete = all(contains(colon, g / g.gcd(f)) for g in I)
    results.append(check("core", "colon_by_monomial", name, sound and complete))

    expected = None
    for g in J:
        expected = colon_by_monomial(I, g) if expected is None else intersect(expected, colon_by_monomial(I, g))
    results.append(check("core", "colon_by_ideal", name, colon_by_ideal(I, J) == expected))

    results.append(check("core", "power_is_product", name, power(I, 2) == product(I, I)))
    results.append(check("core", "localize_full", name, localize(I, PrimeSupport.full(I.n)) == I))

    g, h = I.gens[0], J.gens[0]
    orders = lex_cmp(g, h) == -lex_cmp(h, g) and revlex_cmp(g, h) == -revlex_cmp(h, g)
    results.append(check("core", "order_antisymmetry", name, orders))
    return results


def run_core(config: SweepConfig) -> List[CheckResult]:
    return run_instances(core_checks, core_instances(config), "core", config.jobs)


# graphs

def dichotomy_checks(args) -> List[CheckResult]:
    n, d, K = args
    G = anti_d_path(n, d)
    instance = str(FamilyDescriptor.anti_d_path(n, d))

    def checks():
        bipartite = bool(is_bipartite(G))
        chain = ass_chain(edge_ideal(G), K)
        return [
            check("graphs", "bipartite_networkx", instance, bipartite == nx.is_bipartite(G.to_networkx())),
            check("graphs", "chain_ascending", instance, chain.is_ascending),
            check(
                "graphs", "bipartite_dichotomy", instance,
                chain.is_constant == bipartite == (d + 2 > n - d - 1),
                constant=chain.is_constant, bipartite=bipartite,
            ),
        ]

    return guarded("graphs", "bipartite_dichotomy", instance, checks)


def small_graph_checks(args) -> List[CheckResult]:
    G: Graph = Graph.from_json(args[0])
    oracle_max_gens = args[1]
    instance = f"graph(n={G.n},edges={G.sorted_edges})"
    results = [check("graphs", "chordal_networkx", instance, is_chordal(G) == nx.is_chordal(G.to_networkx()))]
    if not G.edges:
        return results

    ideal = edge_ideal(G)
    results.append(check(
        "graphs", "squarefree_ass", instance, ass_primes(ideal) == minimal_vertex_cover_primes(G),
    ))

    order = linear_quotients_order(G)
    chordal = is_chordal(complement(G))
    results.append(check("graphs", "froberg", instance, (order is not None) == chordal, chordal_complement=chordal))

    if order is not None:
        try:
            lq_certificate(order)
            results.append(check("graphs", "search_certificate", instance, True))
        except NotLinearQuotients as e:
            results.append(check("graphs", "search_certificate", instance, False, error=str(e)))

    if len(ideal) <= oracle_max_gens:
        results.append(check("graphs", "froberg_oracle", instance, is_linear_resolution(ideal) == chordal))
    return results


def run_graphs(config: SweepConfig) -> List[CheckResult]:
    dichotomy = [
        (n, d, config.K)
        for n in range(3, config.dichotomy_n_max + 1)
        for d in range(1, config.pd_d_max + 1)
        if n >= d + 2
    ]
    small = [
        (G.to_json(), config.oracle_max_gens)
        for n in range(1, config.graphs_n_max + 1)
        for G in all_graphs_up_to_isomorphism(n)
    ]
    return (
        run_instances(dichotomy_checks, dichotomy, "bipartite dichotomy", config.jobs)
        + run_instances(small_graph_checks, small, "small graphs", config.jobs)
    )


# lexsegments

OTHER_ORDER = {
    QuotientOrder.DECREASING_LEX: QuotientOrder.INCREASING_REVLEX,
    QuotientOrder.INCREASING_REVLEX: QuotientOrder.DECREASING_LEX,
}


def family_checks(family: FamilyDescriptor, t: int, config: SweepConfig, suite: str) -> List[CheckResult]:
    instance = f"{family},t={t}"
    ideal = family_power(family, t)
    cert = certificate_for(ideal, family.default_order)
    results = [check(suite, "linear_quotients", instance, True)]

    closed = closed_form_sets(family, t, cert.order)
    mismatches = [
        {"position": p + 1, "generator": str(u), "closed_form": sorted(c), "colon": sorted(s)}
        for p, (u, c, s) in enumerate(zip(cert.order, closed, cert.sets))
        if p > 0 and c != s
    ]
    results.append(check(suite, "closed_form_sets", instance, not mismatches, mismatches=mismatches[:3]))

    if family.is_lexsegment:
        sizes = all(closed_form_set_size(family, t, u) == len(s) for u, s in zip(cert.order[1:], cert.sets[1:]))
        results.append(check(suite, "set_size_corollary", instance, sizes))

    other_order = OTHER_ORDER.get(family.default_order)
    if other_order is not None:
        try:
            other = certificate_for(ideal, other_order)
            diff = compare_betti(betti_table_from_certificate(cert), betti_table_from_certificate(other))
            results.append(check(suite, "order_independence", instance, diff is None, first_difference=diff))
        except NotLinearQuotients as e:
            reason = f"no linear quotients in {other_order.value}: {e}"
            results.append(skipped(suite, "order_independence", instance, reason))

    return results + _oracle_checks(suite, instance, ideal, cert, config)


def lexseg_checks(args) -> List[CheckResult]:
    kind, bound, n, t, config = args
    v = Monomial.from_json(bound)
    family = FamilyDescriptor.lexseg_init(v) if kind == FamilyKind.LEXSEG_INIT.value else FamilyDescriptor.lexseg_final(v)
    return guarded("lexseg", "family", f"{family},t={t}", lambda: family_checks(family, t, config, "lexseg"))


def run_lexseg(config: SweepConfig) -> List[CheckResult]:
    instances = [
        (kind.value, v.to_json(), n, t, config)
        for n in range(3, config.lexseg_n_max + 1)
        for kind in (FamilyKind.LEXSEG_INIT, FamilyKind.LEXSEG_FINAL)
        for v in squarefree_quadrics(n)
        for t in range(1, config.t_max + 1)
    ]
    return run_instances(lexseg_checks, instances, "lexsegments", config.jobs)


# anti-d-paths

def antipath_power_checks(args) -> List[CheckResult]:
    n, d, k, config = args
    family = FamilyDescriptor.anti_d_path(n, d)
    instance = f"{family},k={k}"

    def checks():
        enumerated = antipath_power_generators(n, d, k)
        results = [check("antipath", "generators", instance, enumerated == power(edge_ideal(family.graph()), k))]
        if enumerated.is_zero:
            return results
        return results + family_checks(family, k, config, "antipath")

    return guarded("antipath", "power", instance, checks)


def antipath_decomposition_checks(args) -> List[CheckResult]:
    n, d, config = args
    family = FamilyDescriptor.anti_d_path(n, d)
    instance = str(family)

    def checks():
        G = family.graph()
        ideal = edge_ideal(G)
        expected = antipath_minimal_primes(n, d)
        ass = ass_primes(ideal)
        height = min(p.height for p in ass)
        cert = certificate_for(ideal, QuotientOrder.DECREASING_LEX)
        pd_quotient = max(cert.set_sizes) + 1

        results = [
            check("antipath", "primary_decomposition", instance, ass == expected == minimal_vertex_cover_primes(G)),
            check("antipath", "height", instance, height == n - d - 1, height=height),
            check("antipath", "cohen_macaulay", instance, pd_quotient == height, pd=pd_quotient, height=height),
        ]
        if len(ideal) <= config.oracle_max_gens:
            oracle_pd = taylor_betti(ideal).projective_dimension + 1
            results.append(check("antipath", "cohen_macaulay_oracle", instance, oracle_pd == pd_quotient, pd=oracle_pd))
        return results

    return guarded("antipath", "primary_decomposition", instance, checks)


def antipath_ass_checks(args) -> List[CheckResult]:
    n, d, K = args
    instance = f"{FamilyDescriptor.anti_d_path(n, d)},K={K}"

    def checks():
        report = verify_antipath_ass_theorem(n, d, K)
        results = [check("antipath", "ass_theorem", instance, report.passed, report=report.to_json())]

        G = anti_d_path(n, d)
        minimal = set(minimal_vertex_cover_primes(G))
        for row in report.rows:
            J = antipath_power_generators(n, d, row.k)
            power_instance = f"{instance},k={row.k}"
            results.append(check("antipath", "min_primes_contained", power_instance, minimal <= set(row.actual)))
            mismatches = two_method_mismatches(J, row.actual)
            results.append(check(
                "antipath", "two_method_agreement", power_instance, not mismatches,
                mismatches=[{"support": A.to_json(), "socle": a, "witness": str(m)} for A, a, m in mismatches],
            ))
        return results

    return guarded("antipath", "ass_theorem", instance, checks)


def run_antipath(config: SweepConfig) -> List[CheckResult]:
    powers = [
        (n, d, k, config)
        for n in range(3, config.n_max + 1)
        for d in range(1, config.d_max + 1)
        for k in range(1, config.k_max + 1)
    ]
    decompositions = [
        (n, d, config)
        for n in range(3, config.pd_n_max + 1)
        for d in range(1, config.pd_d_max + 1)
        if n >= d + 2
    ]
    chains = [
        (n, d, config.K)
        for n in range(3, config.n_max + 1)
        for d in range(1, config.d_max + 1)
        if n >= d + 2
    ]
    return (
        run_instances(antipath_power_checks, powers, "anti-d-path powers", config.jobs)
        + run_instances(antipath_decomposition_checks, decompositions, "primary decompositions", config.jobs)
        + run_instances(antipath_ass_checks, chains, "Ass chains", config.jobs)
    )


# audits

def _audit_result(report) -> CheckResult:
    if not report.consistent:
        return check("audits", report.name, report.instance, False, report=report.to_json())
    status = CheckStatus.PASS if report.verdict == "agreement" else CheckStatus.DOCUMENTED_DISCREPANCY
    return CheckResult("audits", report.name, report.instance, status, report.to_json())


def run_audits(config: SweepConfig) -> List[CheckResult]:
    family = config.audit_family or FamilyDescriptor.star(3)
    t = config.audit_t
    results = []
    if family.kind == FamilyKind.STAR:
        results.append(_audit_result(audit_remark_closed_form(family.n, t, config.oracle_max_gens)))
    results.append(_audit_result(audit_power_betti_corollaries(family, t, config.oracle_max_gens)))
    return results


SUITES: Dict[str, Callable[[SweepConfig], List[CheckResult]]] = {
    "core": run_core,
    "graphs": run_graphs,
    "lexseg": run_lexseg,
    "antipath": run_antipath,
    "audits": run_audits,
}


def run_suite(name: str, config: SweepConfig) -> SuiteReport:
    report = SuiteReport()
    names = list(SUITES) if name == "all" else [name]
    for suite in names:
        report.extend(SUITES[suite](config))
    return report
