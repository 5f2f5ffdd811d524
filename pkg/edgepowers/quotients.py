"""Linear quotients: certificates, closed-form set(u) for the lexsegment and anti-d-path families, Betti numbers from set sizes

Date -- 19.10.2026
"""


from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Sequence, Tuple

import numpy as np
import pandas as pd
from tabulate import tabulate

from edgepowers.families import FamilyDescriptor, FamilyKind, QuotientOrder
from edgepowers.monomial import Monomial, MonomialIdeal, colon_variable_part, lex_key, power, revlex_key
from edgepowers.utils import NotLinearQuotients, binom, str_keys


@dataclass(frozen=True)
class QuotientCertificate:
    order: Tuple[Monomial, ...]
    sets: Tuple[FrozenSet[int], ...]

    @property
    def set_sizes(self) -> List[int]:
        return [len(s) for s in self.sets]

    @property
    def degree(self) -> int:
        return self.order[0].degree if self.order else 0

    def to_json(self) -> Dict:
        return {"order": [u.to_json() for u in self.order], "sets": [sorted(s) for s in self.sets]}


@dataclass
class BettiTable:
    total: Dict[int, int]
    graded: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.total = {i: b for i, b in sorted(self.total.items()) if b}
        self.graded = {ij: b for ij, b in sorted(self.graded.items()) if b}

    def beta(self, i: int) -> int:
        return self.total.get(i, 0)

    @property
    def projective_dimension(self) -> int:
        """pd(I); -1 for the zero ideal."""
        return max(self.total, default=-1)

    def as_vector(self) -> List[int]:
        return [self.beta(i) for i in range(self.projective_dimension + 1)]

    def to_json(self) -> Dict:
        return {"total": str_keys(self.total), "graded": str_keys(self.graded)}

    def to_frame(self) -> pd.DataFrame:
        if self.graded:
            rows = [{"i": i, "j": j, "beta": b} for (i, j), b in self.graded.items()]
        else:
            rows = [{"i": i, "j": None, "beta": b} for i, b in self.total.items()]
        return pd.DataFrame(rows, columns=["i", "j", "beta"])

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False)

    def to_table(self) -> str:
        return tabulate(self.to_frame(), headers="keys", showindex=False)


def ordered_generators(ideal: MonomialIdeal, order: QuotientOrder) -> List[Monomial]:
    match order:
        case QuotientOrder.DECREASING_LEX:
            return sorted(ideal.gens, key=lex_key, reverse=True)
        case QuotientOrder.INCREASING_REVLEX:
            return sorted(ideal.gens, key=revlex_key)
        case _:
            return list(ideal.gens)


def lq_certificate(gens: Sequence[Monomial]) -> QuotientCertificate:
    """Colon ideals (u_1, ..., u_{i-1}) : u_i along the given order, each required to be generated by variables."""
    gens = list(gens)
    if not gens:
        return QuotientCertificate((), ())

    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("Generators live in different ambient rings")
    if len({g.degree for g in gens}) != 1:
        raise ValueError("Linear quotients certificates need generators of a single degree")
    if len(set(gens)) != len(gens):
        raise ValueError("Generator sequence repeats a monomial")

    matrix = np.array([g.exps for g in gens], dtype=np.int64)
    sets = [frozenset()]
    for i in range(1, len(gens)):
        variables, offending = colon_variable_part(gens[:i], gens[i], matrix=matrix[:i])
        if offending is not None:
            raise NotLinearQuotients(i + 1, offending)
        sets.append(frozenset(variables))

    return QuotientCertificate(tuple(gens), tuple(sets))


def certificate_for(ideal: MonomialIdeal, order: QuotientOrder) -> QuotientCertificate:
    return lq_certificate(ordered_generators(ideal, order))


def betti_from_sets(cert: QuotientCertificate, i: int) -> int:
    return sum(binom(size, i) for size in cert.set_sizes)


def betti_table_from_certificate(cert: QuotientCertificate) -> BettiTable:
    """Linear resolution: beta_{i, delta+i} = sum_u binom(|set(u)|, i)."""
    top = max(cert.set_sizes, default=-1)
    total = {i: betti_from_sets(cert, i) for i in range(top + 1)}
    graded = {(i, cert.degree + i): b for i, b in total.items()}
    return BettiTable(total, graded)


def initial_lex_set(u: Monomial, t: int) -> FrozenSet[int]:
    """{r : 1 <= r <= max(u)-1, nu_r(x_r u) <= t} for u in G(I^t), I an initial lexsegment edge ideal."""
    return frozenset(r for r in range(1, u.max_index) if u.nu(r) + 1 <= t)


def initial_lex_set_size(u: Monomial, t: int) -> int:
    top = u.max_index
    if any(u.nu(j) == t for j in range(1, top)):
        return top - 2
    return top - 1


def final_lex_set(u: Monomial, t: int, n: int) -> FrozenSet[int]:
    """{r : r >= min(u)+1, nu_r(x_r u) <= t}; generators taken in increasing revlex order."""
    if u.n != n:
        raise ValueError(f"{u} lives in {u.n} variables, expected {n}")
    return frozenset(r for r in range(u.min_index + 1, n + 1) if u.nu(r) + 1 <= t)


def final_lex_set_size(u: Monomial, t: int, n: int) -> int:
    low = u.min_index
    if any(u.nu(j) == t for j in range(low + 1, n + 1)):
        return n - low - 1
    return n - low


@dataclass(frozen=True)
class AntipathGenerator:
    """u = x_{i_1} ... x_{i_k} x_{j_1} ... x_{j_k} with i_1 <= ... <= i_k <= j_1 <= ... <= j_k."""
    n: int
    i: Tuple[int, ...]
    j: Tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.i)

    @property
    def monomial(self) -> Monomial:
        return Monomial.from_indices(self.n, self.i + self.j)

    def is_valid(self, d: int) -> bool:
        return all(a + d < b for a, b in zip(self.i, self.j))


def decompose_antipath_generator(u: Monomial, k: int) -> AntipathGenerator:
    indices = u.indices()
    if len(indices) != 2 * k:
        raise ValueError(f"{u} has degree {len(indices)}, expected {2 * k}")
    return AntipathGenerator(u.n, tuple(indices[:k]), tuple(indices[k:]))


def antipath_power_generators(n: int, d: int, k: int) -> MonomialIdeal:
    """G(I^k) for the anti-d-path edge ideal, enumerated from the index conditions i_r + d < j_r."""
    if n < 1 or d < 1 or k < 1:
        raise ValueError(f"Need n, d, k >= 1, got n={n}, d={d}, k={k}")

    gens = []
    for indices in itertools.combinations_with_replacement(range(1, n + 1), 2 * k):
        gen = AntipathGenerator(n, indices[:k], indices[k:])
        if gen.is_valid(d):
            gens.append(gen.monomial)

    logging.debug(f"anti-{d}-path n={n}: |G(I^{k})| = {len(gens)}")
    return MonomialIdeal(n, gens)


def antipath_set(gen: AntipathGenerator, d: int) -> FrozenSet[int]:
    """{x_1, ..., x_{i_k - 1}} together with {x_s : i_r + d < s < j_r} for every r."""
    variables = set(range(1, gen.i[-1]))
    for a, b in zip(gen.i, gen.j):
        variables.update(range(a + d + 1, b))
    return frozenset(variables)


def closed_form_sets(family: FamilyDescriptor, t: int, order: Sequence[Monomial]) -> List[FrozenSet[int]]:
    """Closed-form set(u) at every position of the family's processing order; position 1 is empty."""
    sets = [frozenset()]
    for u in order[1:]:
        match family.kind:
            case FamilyKind.STAR | FamilyKind.LEXSEG_INIT:
                sets.append(initial_lex_set(u, t))
            case FamilyKind.LEXSEG_FINAL:
                sets.append(final_lex_set(u, t, family.n))
            case FamilyKind.ANTI_D_PATH:
                sets.append(antipath_set(decompose_antipath_generator(u, t), family.d))
            case _:
                raise ValueError(f"No closed form for {family}")
    return sets


def closed_form_set_size(family: FamilyDescriptor, t: int, u: Monomial) -> int:
    match family.kind:
        case FamilyKind.STAR | FamilyKind.LEXSEG_INIT:
            return initial_lex_set_size(u, t)
        case FamilyKind.LEXSEG_FINAL:
            return final_lex_set_size(u, t, family.n)
        case _:
            raise ValueError(f"No set-size corollary for {family}")


def star_power_generators(n: int, t: int) -> List[Monomial]:
    """x_1^t w over the monomials w of degree t in x_2, ..., x_n."""
    head = (t,)
    return [
        Monomial(head + tuple(sum(1 for c in combo if c == v) for v in range(2, n + 1)))
        for combo in itertools.combinations_with_replacement(range(2, n + 1), t)
    ]


def star_power_betti(n: int, t: int, i: int) -> int:
    """beta_i(I^t) = sum over u in G(I^t) of binom(max(u) - 2, i) for the star on [n]."""
    if n < 2 or t < 1:
        raise ValueError(f"Star powers need n >= 2 and t >= 1, got n={n}, t={t}")
    return sum(binom(u.max_index - 2, i) for u in star_power_generators(n, t))


def family_power(family: FamilyDescriptor, t: int) -> MonomialIdeal:
    if family.kind == FamilyKind.ANTI_D_PATH and t >= 1:
        return antipath_power_generators(family.n, family.d, t)
    return power(family.ideal(), t)
