"""Associated primes of monomial ideals and their powers, normally torsion-free verdicts, witnesses for the maximal ideal

Date -- 19.10.2026
"""


from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from edgepowers.graph import Graph, anti_d_path, edge_ideal, is_bipartite
from edgepowers.monomial import (
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    _in_ideal,
    colon_by_ideal,
    colon_by_monomial,
    contains,
    localize,
    product,
    sorted_supports,
)
from edgepowers.quotients import antipath_power_generators
from edgepowers.utils import MAX_ASS_VARIABLES, MAX_WITNESS_GRID, WitnessError, check_guard


def _check_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise ValueError("Associated primes of the zero ideal are not computed")
    if ideal.is_unit:
        raise ValueError("The unit ideal has no associated primes")
    check_guard("variables", MAX_ASS_VARIABLES, ideal.n)


def _candidate_supports(ideal: MonomialIdeal) -> List[PrimeSupport]:
    """Nonempty subsets of supp(J), smallest first."""
    support = sorted(ideal.support)
    return [
        PrimeSupport(ideal.n, frozenset(A))
        for size in range(1, len(support) + 1)
        for A in itertools.combinations(support, size)
    ]


def _localization(ideal: MonomialIdeal, prime: PrimeSupport) -> Optional[MonomialIdeal]:
    """J_A, or None when P_A cannot be associated (J_A is the unit ideal or misses a variable of A)."""
    local = localize(ideal, prime)
    if local.is_unit or not prime.vars <= local.support:
        return None
    return local


def is_associated(ideal: MonomialIdeal, prime: PrimeSupport) -> bool:
    """Socle test: P_A is associated iff (J_A : P_A) strictly contains J_A."""
    local = _localization(ideal, prime)
    if local is None:
        return False
    return colon_by_ideal(local, prime.ideal()) != local


def ass_primes(ideal: MonomialIdeal) -> List[PrimeSupport]:
    _check_proper(ideal)
    start = time.perf_counter()
    result = sorted_supports(A for A in _candidate_supports(ideal) if is_associated(ideal, A))
    logging.debug(f"Ass over {len(ideal)} generators in {ideal.n} variables took {time.perf_counter() - start:.3f}s")
    return result


def witness_search(ideal: MonomialIdeal, prime: PrimeSupport) -> Optional[Monomial]:
    """A monomial m dividing lcm(G(J)) with J : m = P_A, or None.

    The search runs over the A-part of m in the localization J_A; the variables
    outside A are then raised to their exponent in the lcm, which turns J into J_A.
    """
    _check_proper(ideal)
    local = _localization(ideal, prime)
    if local is None:
        return None

    A = [i - 1 for i in prime.key]
    bounds = [int(b) for b in ideal.lcm.exps]
    # x_i c stays outside J_A once c_i reaches the lcm exponent
    shape = tuple(bounds[i] for i in A)
    check_guard("witness grid", MAX_WITNESS_GRID, int(np.prod(shape, dtype=np.int64)))

    grid = np.zeros((int(np.prod(shape)), ideal.n), dtype=np.int64)
    grid[:, A] = np.indices(shape).reshape(len(A), -1).T
    gens = local.matrix

    candidates = ~_in_ideal(grid, gens)
    for i in A:
        if not candidates.any():
            break
        step = grid[candidates].copy()
        step[:, i] += 1
        candidates[np.flatnonzero(candidates)[~_in_ideal(step, gens)]] = False

    hits = np.flatnonzero(candidates)
    if len(hits) == 0:
        return None

    exps = grid[hits[0]]
    outside = [j for j in range(ideal.n) if j not in A]
    exps[outside] = [bounds[j] for j in outside]
    m = Monomial(tuple(int(e) for e in exps))

    if colon_by_monomial(ideal, m) != prime.ideal():
        raise WitnessError(f"Lifted witness {m} does not give {prime} as colon")
    return m


def check_witness(ideal: MonomialIdeal, m: Monomial) -> Dict[str, bool]:
    """The two conditions J : m = maximal ideal reduces to."""
    return {
        "outside": not contains(ideal, m),
        "socle": all(contains(ideal, m.times_variable(i)) for i in range(1, ideal.n + 1)),
    }


def theorem_witness(n: int, d: int, k: int) -> Monomial:
    """Explicit monomial m with I^k : m = (x_1, ..., x_n) for the anti-d-path edge ideal."""
    if not d + 2 <= n - d - 1:
        raise ValueError(f"Maximal ideal is associated only when d+2 <= n-d-1, got n={n}, d={d}")
    if k < 2:
        raise ValueError(f"Witnesses exist from the second power on, got k={k}")

    if k <= d + 2:
        indices = [1] * (k - 1) + list(range(d + 2, d + k + 1)) + [n]
    else:
        if 2 * k - 1 > n:
            raise ValueError(f"x1...x{2 * k - 1} does not live in {n} variables")
        indices = list(range(1, 2 * k))

    m = Monomial.from_indices(n, indices)
    checks = check_witness(antipath_power_generators(n, d, k), m)
    if not all(checks.values()):
        raise WitnessError(f"{m} fails {[name for name, ok in checks.items() if not ok]} for n={n}, d={d}, k={k}")
    return m


@dataclass
class AssChain:
    ideal: MonomialIdeal
    entries: List[List[PrimeSupport]] = field(default_factory=list)

    @property
    def K(self) -> int:
        return len(self.entries)

    def entry(self, k: int) -> List[PrimeSupport]:
        return self.entries[k - 1]

    @property
    def is_ascending(self) -> bool:
        return all(set(a) <= set(b) for a, b in zip(self.entries, self.entries[1:]))

    @property
    def is_constant(self) -> bool:
        return all(e == self.entries[0] for e in self.entries)

    @property
    def stabilization(self) -> int:
        """First k from which the computed entries no longer change."""
        k = self.K
        while k > 1 and self.entries[k - 2] == self.entries[-1]:
            k -= 1
        return k

    def first_change(self) -> Optional[int]:
        for k in range(2, self.K + 1):
            if self.entry(k) != self.entry(1):
                return k
        return None

    def new_primes(self, k: int) -> List[PrimeSupport]:
        return sorted_supports(set(self.entry(k)) - set(self.entry(1)))

    def to_json(self) -> Dict:
        return {
            "chain": {str(k + 1): [p.to_json() for p in e] for k, e in enumerate(self.entries)},
            "ascending": self.is_ascending,
            "constant": self.is_constant,
            "stabilization": self.stabilization,
        }


def ass_chain(ideal: MonomialIdeal, K: int) -> AssChain:
    if K < 1:
        raise ValueError(f"Chain depth must be positive, got K={K}")

    chain = AssChain(ideal)
    current = ideal
    for k in range(1, K + 1):
        if k > 1:
            current = product(current, ideal)
        chain.entries.append(ass_primes(current))
        logging.info(f"Ass(S/I^{k}): {len(chain.entries[-1])} primes over {len(current)} generators")
    return chain


class NtfStatus(Enum):
    TORSION_FREE_UP_TO_K = "torsion_free_up_to_K"
    FAILS_AT_K = "fails_at_k"
    CERTIFIED_BY_BIPARTITE = "certified_by_bipartite"


@dataclass
class NtfVerdict:
    status: NtfStatus
    K: int
    k: Optional[int] = None
    evidence: Dict = field(default_factory=dict)
    chain: Optional[AssChain] = None

    @property
    def is_certified(self) -> bool:
        return self.status == NtfStatus.CERTIFIED_BY_BIPARTITE

    def to_json(self) -> Dict:
        data = {"status": self.status.value, "K": self.K, "evidence": self.evidence}
        if self.k is not None:
            data["k"] = self.k
        if self.chain is not None:
            data["chain"] = self.chain.to_json()
        return data


def is_normally_torsion_free(ideal: MonomialIdeal, K: int, graph: Optional[Graph] = None) -> NtfVerdict:
    """Bipartite edge ideals are certified exactly; everything else is checked on the chain up to K."""
    odd_walk = None
    if graph is not None and edge_ideal(graph) == ideal:
        check = is_bipartite(graph)
        if check:
            return NtfVerdict(NtfStatus.CERTIFIED_BY_BIPARTITE, K, evidence=check.to_json())
        odd_walk = list(check.odd_walk)

    chain = ass_chain(ideal, K)
    k = chain.first_change()
    if k is not None:
        evidence = {"offending": [p.to_json() for p in chain.new_primes(k)]}
        if odd_walk is not None:
            evidence["odd_walk"] = odd_walk
        return NtfVerdict(NtfStatus.FAILS_AT_K, K, k=k, evidence=evidence, chain=chain)

    evidence = {}
    if odd_walk is not None:
        logging.warning(f"Odd closed walk {odd_walk} present but Ass(S/I^k) constant for k <= {K}")
        evidence["odd_walk"] = odd_walk
    return NtfVerdict(NtfStatus.TORSION_FREE_UP_TO_K, K, evidence=evidence, chain=chain)


def antipath_minimal_primes(n: int, d: int) -> List[PrimeSupport]:
    """[n] minus the windows {t, ..., t+d}."""
    full = frozenset(range(1, n + 1))
    return sorted_supports(PrimeSupport(n, full - frozenset(range(t, t + d + 1))) for t in range(1, n - d + 1))


def two_method_mismatches(ideal: MonomialIdeal, primes: Optional[List[PrimeSupport]] = None) -> List[Tuple[PrimeSupport, bool, Optional[Monomial]]]:
    """Supports on which the socle test and the witness search disagree."""
    associated = set(primes if primes is not None else ass_primes(ideal))
    mismatches = []
    for A in _candidate_supports(ideal):
        m = witness_search(ideal, A)
        if (A in associated) != (m is not None):
            mismatches.append((A, A in associated, m))
    return mismatches


@dataclass
class AssTheoremRow:
    k: int
    expected: List[PrimeSupport]
    actual: List[PrimeSupport]

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> Dict:
        return {
            "k": self.k,
            "expected": [p.to_json() for p in self.expected],
            "actual": [p.to_json() for p in self.actual],
            "passed": self.passed,
        }


@dataclass
class AssTheoremReport:
    n: int
    d: int
    K: int
    bipartite: bool
    rows: List[AssTheoremRow] = field(default_factory=list)
    witnesses: Dict[int, Dict] = field(default_factory=dict)
    ascending: bool = True

    @property
    def branch(self) -> str:
        return "bipartite" if self.bipartite else "maximal-ideal"

    @property
    def passed(self) -> bool:
        witnesses_ok = all(w.get("passed", True) for w in self.witnesses.values())
        return self.ascending and witnesses_ok and all(row.passed for row in self.rows)

    def to_json(self) -> Dict:
        return {
            "n": self.n,
            "d": self.d,
            "K": self.K,
            "branch": self.branch,
            "passed": self.passed,
            "rows": [row.to_json() for row in self.rows],
            "witnesses": {str(k): w for k, w in self.witnesses.items()},
        }


def verify_antipath_ass_theorem(n: int, d: int, K: int) -> AssTheoremReport:
    """Ass(S/I^k) is Ass(S/I) plus the maximal ideal from k = 2 on exactly when d+2 <= n-d-1."""
    if n < d + 2:
        raise ValueError(f"Anti-{d}-path on {n} vertices has no edges")

    ideal = edge_ideal(anti_d_path(n, d))
    minimal = antipath_minimal_primes(n, d)
    bipartite = d + 2 > n - d - 1
    chain = ass_chain(ideal, K)

    report = AssTheoremReport(n, d, K, bipartite, ascending=chain.is_ascending)
    with_maximal = sorted_supports(minimal + [PrimeSupport.full(n)])
    for k in range(1, K + 1):
        expected = minimal if k == 1 or bipartite else with_maximal
        report.rows.append(AssTheoremRow(k, expected, chain.entry(k)))

    if not bipartite:
        for k in range(2, K + 1):
            if k > d + 2 and 2 * k - 1 > n:
                continue
            try:
                m = theorem_witness(n, d, k)
                report.witnesses[k] = {"witness": str(m), "passed": True}
            except WitnessError as e:
                report.witnesses[k] = {"witness": None, "passed": False, "error": str(e)}

    return report
