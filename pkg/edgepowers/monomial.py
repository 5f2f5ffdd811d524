"""Monomials and monomial ideals

Exponent vectors over x_1..x_n, minimal generating sets, powers, colons and
localization. Bulk work (products, lcms, membership) runs on numpy exponent
matrices with one row per generator.

Date -- 19.10.2026
"""


from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from edgepowers.utils import MAX_VARIABLES, MAX_DEGREE, DimensionError, check_guard


MEMBERSHIP_CHUNK = 2**22  # broadcast cells per membership block

_FACTOR_RE = re.compile(r"x(\d+)(?:\^(\d+))?")


@dataclass(frozen=True)
class Monomial:
    exps: Tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        object.__setattr__(self, "exps", exps)

        if not exps:
            raise ValueError("Monomial needs an ambient ring with at least one variable")
        check_guard("n", MAX_VARIABLES, len(exps))
        if any(e < 0 for e in exps):
            raise ValueError(f"Negative exponent in {exps}")
        check_guard("degree", MAX_DEGREE, sum(exps))

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, i: int) -> Monomial:
        return cls.from_indices(n, [i])

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> Monomial:
        """Product of x_i over the given multiset of 1-based indices."""
        exps = [0] * n
        for i in indices:
            if not 1 <= i <= n:
                raise DimensionError(f"Variable x{i} outside x1..x{n}")
            exps[i - 1] += 1
        return cls(tuple(exps))

    @classmethod
    def parse(cls, text: str, n: int) -> Monomial:
        """Read "x1^2x3", "x2*x5" or "1"."""
        text = text.replace("*", "").replace(" ", "")
        if text == "1":
            return cls.one(n)

        pos = 0
        exps = [0] * n
        for match in _FACTOR_RE.finditer(text):
            if match.start() != pos:
                break
            i = int(match.group(1))
            if not 1 <= i <= n:
                raise DimensionError(f"Variable x{i} outside x1..x{n}")
            exps[i - 1] += int(match.group(2)) if match.group(2) else 1
            pos = match.end()

        if pos != len(text) or not text:
            raise ValueError(f"Cannot parse monomial '{text}'")
        return cls(tuple(exps))

    @classmethod
    def from_json(cls, data: Sequence[int]) -> Monomial:
        return cls(tuple(data))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(i + 1 for i, e in enumerate(self.exps) if e > 0)

    @property
    def max_index(self) -> int:
        if self.degree == 0:
            raise ValueError("max(u) is undefined for the monomial 1")
        return max(self.support)

    @property
    def min_index(self) -> int:
        if self.degree == 0:
            raise ValueError("min(u) is undefined for the monomial 1")
        return min(self.support)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def nu(self, s: int) -> int:
        return self.exps[s - 1]

    def indices(self) -> List[int]:
        """Sorted multiset of variable indices, e.g. x1^2x3 -> [1, 1, 3]."""
        return [i + 1 for i, e in enumerate(self.exps) for _ in range(e)]

    def divides(self, other: Monomial) -> bool:
        _check_same_n(self, other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def gcd(self, other: Monomial) -> Monomial:
        _check_same_n(self, other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def lcm(self, other: Monomial) -> Monomial:
        _check_same_n(self, other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def times_variable(self, i: int) -> Monomial:
        exps = list(self.exps)
        exps[i - 1] += 1
        return Monomial(tuple(exps))

    def __mul__(self, other: Monomial) -> Monomial:
        _check_same_n(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def to_json(self) -> List[int]:
        return list(self.exps)

    def __str__(self) -> str:
        if self.degree == 0:
            return "1"
        return "".join(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(self.exps) if e > 0)


def _check_same_n(a, b) -> None:
    if a.n != b.n:
        raise DimensionError(f"Ambient dimensions differ: {a.n} != {b.n}")


def lex_cmp(a: Monomial, b: Monomial) -> int:
    """-1, 0, 1 as a <_lex b, a = b, a >_lex b (x1 > x2 > ... > xn, pure lex on exponents)."""
    _check_same_n(a, b)
    return (a.exps > b.exps) - (a.exps < b.exps)


def revlex_cmp(a: Monomial, b: Monomial) -> int:
    """a <_revlex b iff at the largest index where they differ, a has the larger exponent."""
    _check_same_n(a, b)
    for ea, eb in zip(reversed(a.exps), reversed(b.exps)):
        if ea != eb:
            return -1 if ea > eb else 1
    return 0


def lex_key(m: Monomial) -> Tuple[int, ...]:
    return m.exps


def revlex_key(m: Monomial) -> Tuple[int, ...]:
    return tuple(-e for e in reversed(m.exps))


@dataclass(frozen=True)
class PrimeSupport:
    n: int
    vars: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "vars", frozenset(int(i) for i in self.vars))
        if any(not 1 <= i <= self.n for i in self.vars):
            raise DimensionError(f"Prime support {sorted(self.vars)} outside 1..{self.n}")

    @classmethod
    def full(cls, n: int) -> PrimeSupport:
        return cls(n, frozenset(range(1, n + 1)))

    @property
    def height(self) -> int:
        return len(self.vars)

    @property
    def key(self) -> Tuple[int, ...]:
        return tuple(sorted(self.vars))

    def complement(self) -> PrimeSupport:
        return PrimeSupport(self.n, frozenset(range(1, self.n + 1)) - self.vars)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, [Monomial.variable(self.n, i) for i in sorted(self.vars)])

    def to_json(self) -> List[int]:
        return list(self.key)

    def __str__(self) -> str:
        return "(" + ",".join(f"x{i}" for i in self.key) + ")"


def sorted_supports(supports: Iterable[PrimeSupport]) -> List[PrimeSupport]:
    return sorted(set(supports), key=lambda p: p.key)


def _in_ideal(rows: np.ndarray, gens: np.ndarray) -> np.ndarray:
    """Row-wise membership of exponent vectors in the ideal generated by `gens`."""
    result = np.zeros(len(rows), dtype=bool)
    if len(gens) == 0 or len(rows) == 0:
        return result

    chunk = max(1, MEMBERSHIP_CHUNK // max(1, gens.size))
    for start in range(0, len(rows), chunk):
        block = rows[start:start + chunk]
        result[start:start + chunk] = np.all(gens[None, :, :] <= block[:, None, :], axis=2).any(axis=1)
    return result


def _minimal_rows(rows: np.ndarray) -> np.ndarray:
    """Antichain of the divisibility-minimal rows, processed degree by degree."""
    if len(rows) == 0:
        return rows

    rows = np.unique(rows, axis=0)
    degrees = rows.sum(axis=1)
    kept = rows[:0]
    for d in np.unique(degrees):
        block = rows[degrees == d]
        if len(kept):
            block = block[~_in_ideal(block, kept)]
        kept = np.vstack([kept, block])
    return kept


def _pairwise(a: np.ndarray, b: np.ndarray, op) -> np.ndarray:
    return op(a[:, None, :], b[None, :, :]).reshape(-1, a.shape[1])


class MonomialIdeal:
    """Monomial ideal in x_1..x_n held by its minimal generators in decreasing lex order."""

    def __init__(self, n: int, gens: Iterable[Monomial] = ()):
        self.n = n
        gens = list(gens)
        for g in gens:
            if g.n != n:
                raise DimensionError(f"Generator {g} lives in {g.n} variables, ideal in {n}")
        rows = np.array([g.exps for g in gens], dtype=np.int64).reshape(-1, n)
        self._set_rows(_minimal_rows(rows))

    @classmethod
    def from_rows(cls, n: int, rows: np.ndarray, minimal: bool = False) -> MonomialIdeal:
        ideal = cls.__new__(cls)
        ideal.n = n
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, n)
        ideal._set_rows(rows if minimal else _minimal_rows(rows))
        return ideal

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> MonomialIdeal:
        return cls(n, [Monomial.one(n)])

    @classmethod
    def from_json(cls, data: Dict) -> MonomialIdeal:
        n = int(data["n"])
        return cls(n, [Monomial.from_json(g) for g in data["gens"]])

    def _set_rows(self, rows: np.ndarray) -> None:
        ordered = sorted({tuple(r) for r in rows.tolist()}, reverse=True)
        self.gens: Tuple[Monomial, ...] = tuple(Monomial(r) for r in ordered)
        matrix = np.array(ordered, dtype=np.int64).reshape(-1, self.n)
        matrix.setflags(write=False)
        self.matrix = matrix

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].degree == 0

    @cached_property
    def degrees(self) -> List[int]:
        return sorted({g.degree for g in self.gens})

    @property
    def is_equigenerated(self) -> bool:
        return len(self.degrees) == 1

    @cached_property
    def lcm(self) -> Monomial:
        if self.is_zero:
            return Monomial.one(self.n)
        return Monomial(tuple(self.matrix.max(axis=0).tolist()))

    @cached_property
    def support(self) -> FrozenSet[int]:
        return frozenset(i + 1 for i in np.flatnonzero(self.matrix.sum(axis=0)))

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def to_json(self) -> Dict:
        return {"n": self.n, "gens": [g.to_json() for g in self.gens]}

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.n}, gens={self})"


def minimalize(gens: Iterable[Monomial], n: int) -> MonomialIdeal:
    return MonomialIdeal(n, gens)


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    _check_same_n(ideal, m)
    return any(g.divides(m) for g in ideal.gens)


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """Minimal generators of I^k by iterated products, minimalizing after every step."""
    if k < 0:
        raise ValueError(f"Power must be non-negative, got {k}")
    if k == 0:
        return MonomialIdeal.unit(ideal.n)
    if ideal.is_zero:
        return ideal

    base = ideal.matrix
    rows = base
    for _ in range(k - 1):
        rows = _minimal_rows(_pairwise(rows, base, np.add))
    check_guard("degree", MAX_DEGREE, int(rows.sum(axis=1).max()))
    return MonomialIdeal.from_rows(ideal.n, rows, minimal=True)


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_n(a, b)
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero(a.n)
    return MonomialIdeal.from_rows(a.n, _pairwise(a.matrix, b.matrix, np.add))


def sum_ideals(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_n(a, b)
    return MonomialIdeal.from_rows(a.n, np.vstack([a.matrix, b.matrix]))


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Generated by the pairwise lcms of the generators."""
    _check_same_n(a, b)
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero(a.n)
    return MonomialIdeal.from_rows(a.n, _pairwise(a.matrix, b.matrix, np.maximum))


def colon_by_monomial(ideal: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    """I : f, generated by g / gcd(g, f) for g in G(I)."""
    _check_same_n(ideal, f)
    if ideal.is_zero:
        return ideal
    f_row = np.array(f.exps, dtype=np.int64)
    return MonomialIdeal.from_rows(ideal.n, np.maximum(ideal.matrix - f_row, 0))


def colon_by_ideal(ideal: MonomialIdeal, other: MonomialIdeal) -> MonomialIdeal:
    """I : J as the intersection of I : g over g in G(J).

    Every I : g contains I, so the intersection is I + (M_1 ∩ ... ∩ M_r) where
    M_g collects the generators of I : g outside I. Lcms falling into I are
    dropped after each step.
    """
    _check_same_n(ideal, other)
    if other.is_zero:
        raise ValueError("Colon by the zero ideal is undefined")
    if ideal.is_zero:
        return ideal

    base = ideal.matrix
    extra: Optional[np.ndarray] = None
    for g in other.gens:
        quotient = _minimal_rows(np.maximum(base - np.array(g.exps, dtype=np.int64), 0))
        quotient = quotient[~_in_ideal(quotient, base)]
        if extra is None:
            extra = quotient
        elif len(extra) and len(quotient):
            extra = _minimal_rows(_pairwise(extra, quotient, np.maximum))
            extra = extra[~_in_ideal(extra, base)]
        else:
            extra = quotient[:0]

        if len(extra) == 0:
            break

    return MonomialIdeal.from_rows(ideal.n, np.vstack([base, extra]))


def localize(ideal: MonomialIdeal, support: PrimeSupport) -> MonomialIdeal:
    """Set x_j = 1 for every j outside the support."""
    _check_same_n(ideal, support)
    rows = np.array(ideal.matrix)
    outside = [j - 1 for j in range(1, ideal.n + 1) if j not in support.vars]
    rows[:, outside] = 0
    return MonomialIdeal.from_rows(ideal.n, rows)


def colon_variable_part(
    gens: Sequence[Monomial],
    f: Monomial,
    matrix: Optional[np.ndarray] = None,
) -> Tuple[List[int], Optional[Monomial]]:
    """Split (gens) : f into its variable generators and one non-variable minimal generator.

    Returns the sorted indices r with x_r in the colon and, when the colon is
    not generated by variables, its lex-largest minimal generator of degree != 1.
    """
    n = f.n
    if matrix is None:
        matrix = np.array([g.exps for g in gens], dtype=np.int64).reshape(-1, n)
    if len(matrix) == 0:
        return [], None

    quotients = np.maximum(matrix - np.array(f.exps, dtype=np.int64), 0)
    degrees = quotients.sum(axis=1)
    if np.any(degrees == 0):
        return [], Monomial.one(n)

    variables = sorted({int(np.flatnonzero(q)[0]) + 1 for q in quotients[degrees == 1]})
    rest = quotients[degrees >= 2]
    if variables:
        rest = rest[~rest[:, [v - 1 for v in variables]].any(axis=1)]
    if len(rest) == 0:
        return variables, None

    offending = max(tuple(r) for r in _minimal_rows(rest).tolist())
    return variables, Monomial(offending)
