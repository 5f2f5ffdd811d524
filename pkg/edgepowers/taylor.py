"""Betti numbers of monomial ideals from the Taylor complex over GF(2)

Date -- 19.10.2026
"""


from __future__ import annotations

import logging
import time
from functools import reduce
from operator import and_
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from edgepowers.monomial import Monomial, MonomialIdeal
from edgepowers.quotients import BettiTable
from edgepowers.utils import MAX_LCM_LATTICE, MAX_STRAND_FACES, MAX_TAYLOR_GENERATORS, check_guard


Multidegree = Tuple[int, ...]


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of a matrix whose rows are int bitsets."""
    pivots: Dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                break
            row ^= pivots[top]
    return len(pivots)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _mask(bits: np.ndarray) -> int:
    return sum(1 << int(i) for i in np.flatnonzero(bits))


def _maximal_facets(facets: Iterable[int]) -> List[int]:
    kept: List[int] = []
    for f in sorted(set(facets), key=_popcount, reverse=True):
        if not any(f & k == f for k in kept):
            kept.append(f)
    return kept


def reduced_homology(facets: Sequence[int]) -> Dict[int, int]:
    """Reduced GF(2) homology, by dimension, of the simplicial complex generated by bitmask facets.

    The empty face is always present: no facets (or only the empty one) gives
    the complex {0} with a single class in dimension -1.
    """
    facets = _maximal_facets(facets) or [0]
    if reduce(and_, facets):
        return {}  # cone
    check_guard("strand faces", MAX_STRAND_FACES, sum(1 << _popcount(f) for f in facets))

    faces = set()
    for f in facets:
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f

    by_size: Dict[int, List[int]] = {}
    for face in sorted(faces):
        by_size.setdefault(_popcount(face), []).append(face)
    position = {s: {face: c for c, face in enumerate(fs)} for s, fs in by_size.items()}

    ranks = {0: 0}
    for s, fs in by_size.items():
        if s == 0:
            continue
        columns = position[s - 1]
        rows = []
        for face in fs:
            row = 0
            rest = face
            while rest:
                bit = rest & -rest
                rest ^= bit
                row |= 1 << columns[face ^ bit]
            rows.append(row)
        ranks[s] = gf2_rank(rows)

    homology = {}
    for s, fs in by_size.items():
        h = len(fs) - ranks[s] - ranks.get(s + 1, 0)
        if h:
            homology[s - 1] = h
    return homology


class TaylorComplex:
    """Taylor complex of a generator sequence, split into strands by multidegree.

    The strand at a is spanned by the subsets T with lcm(T) = a. It is the
    relative complex of the full simplex on G_a (generators dividing a) modulo
    D_a = {T : lcm(T) != a}, so beta_{i,a} = dim H~_{i-1}(D_a). D_a is the union
    of the simplices on V_j = {g : nu_j(g) < a_j}, j in supp(a); its nerve has
    the variables as vertices. The strand is never listed: whichever of D_a
    and its nerve has fewer vertices is reduced instead.
    """

    def __init__(self, gens: Sequence[Monomial]):
        self.gens = list(gens)
        check_guard("generators", MAX_TAYLOR_GENERATORS, len(self.gens))
        if not self.gens:
            raise ValueError("Taylor complex of the zero ideal is empty")
        self.n = self.gens[0].n
        self.exps = np.array([g.exps for g in self.gens], dtype=np.int64)
        self.multidegrees = self._lcm_lattice()

    def _lcm_lattice(self) -> np.ndarray:
        """lcm of every nonempty generator subset, one row per distinct value."""
        lattice = np.zeros((0, self.n), dtype=np.int64)
        for row in self.exps:
            lattice = np.unique(np.vstack([lattice, np.maximum(lattice, row), row[None, :]]), axis=0)
            check_guard("lcm lattice", MAX_LCM_LATTICE, len(lattice))
        return lattice

    def _below(self, a: np.ndarray) -> np.ndarray:
        """Rows g in G_a, columns j in supp(a): nu_j(g) < a_j."""
        dividing = self.exps[np.all(self.exps <= a, axis=1)]
        support = np.flatnonzero(a)
        return dividing[:, support] < a[support]

    def strand_facets(self, a: np.ndarray) -> List[int]:
        below = self._below(a)
        if below.shape[0] <= below.shape[1]:
            return [_mask(column) for column in below.T if column.any()]
        return [_mask(row) for row in below]

    def strand_chain_euler(self, a: np.ndarray) -> int:
        """Sum of (-1)^(|T|-1) over subsets with lcm(T) = a, by inclusion-exclusion over supp(a)."""
        below = self._below(a)
        check_guard("strand faces", MAX_STRAND_FACES, 1 << below.shape[1])
        rows = [_mask(row) for row in below]
        chi = 0
        for J in range(1 << below.shape[1]):
            if any(r & J == J for r in rows):
                chi += -1 if _popcount(J) % 2 else 1
        return chi

    def multigraded_betti(self) -> Dict[Tuple[int, Multidegree], int]:
        result = {}
        for a in self.multidegrees:
            key = tuple(a.tolist())
            for k, b in reduced_homology(self.strand_facets(a)).items():
                result[(k + 1, key)] = b
        return result

    def euler_characteristics(self) -> Dict[Multidegree, Tuple[int, int]]:
        """Per multidegree: alternating subset count against alternating Betti sum."""
        homology: Dict[Multidegree, int] = {}
        for (i, a), b in self.multigraded_betti().items():
            homology[a] = homology.get(a, 0) + (-1) ** i * b

        result = {}
        for a in self.multidegrees:
            key = tuple(a.tolist())
            result[key] = (self.strand_chain_euler(a), homology.get(key, 0))
        return result

    def betti(self) -> BettiTable:
        total: Dict[int, int] = {}
        graded: Dict[Tuple[int, int], int] = {}
        for (i, a), b in self.multigraded_betti().items():
            total[i] = total.get(i, 0) + b
            graded[(i, sum(a))] = graded.get((i, sum(a)), 0) + b
        return BettiTable(total, graded)


def taylor_betti(ideal: MonomialIdeal) -> BettiTable:
    if ideal.is_zero:
        return BettiTable({})

    start = time.perf_counter()
    table = TaylorComplex(ideal.gens).betti()
    logging.debug(f"Taylor oracle on {len(ideal)} generators took {time.perf_counter() - start:.3f}s")
    return table


def multidegree_euler_characteristic(ideal: MonomialIdeal) -> Dict[Multidegree, Tuple[int, int]]:
    if ideal.is_zero:
        return {}
    return TaylorComplex(ideal.gens).euler_characteristics()


def projective_dimension(ideal: MonomialIdeal) -> int:
    return taylor_betti(ideal).projective_dimension


def quotient_projective_dimension(ideal: MonomialIdeal) -> int:
    """pd(S/I) = pd(I) + 1; pd(S/0) = 0."""
    if ideal.is_zero:
        return 0
    return projective_dimension(ideal) + 1


def is_linear_resolution(ideal: MonomialIdeal) -> bool:
    if not ideal.is_zero and not ideal.is_equigenerated:
        raise ValueError(f"Linear resolution needs a single generator degree, got degrees {ideal.degrees}")
    if ideal.is_zero:
        return True

    delta = ideal.degrees[0]
    return all(j == delta + i for i, j in taylor_betti(ideal).graded)


def compare_betti(left: BettiTable, right: BettiTable) -> Optional[Tuple[str, int, int]]:
    """First disagreement as (key, left value, right value), totals before graded entries."""
    for i in sorted(set(left.total) | set(right.total)):
        if left.beta(i) != right.beta(i):
            return f"beta_{i}", left.beta(i), right.beta(i)

    if left.graded and right.graded:
        for ij in sorted(set(left.graded) | set(right.graded)):
            a, b = left.graded.get(ij, 0), right.graded.get(ij, 0)
            if a != b:
                return f"beta_{ij[0]},{ij[1]}", a, b
    return None
