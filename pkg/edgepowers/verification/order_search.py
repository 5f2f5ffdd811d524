"""Linear quotients order search for small edge ideals

Exhaustive over generator subsets, memoized. Only used to cross-check the
chordal-complement criterion on small graphs.

Date -- 19.10.2026
"""


from __future__ import annotations

from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from edgepowers.graph import Graph
from edgepowers.monomial import Monomial, colon_variable_part
from edgepowers.utils import GuardError


MAX_SEARCH_GENERATORS = 15


def _colon_is_linear(placed: Sequence[Monomial], u: Monomial) -> bool:
    return colon_variable_part(placed, u)[1] is None


def linear_quotients_order(G: Graph) -> Optional[List[Monomial]]:
    """An order of G(I(G)) with linear quotients, or None if there is none."""
    gens = [Monomial.from_indices(G.n, e) for e in G.sorted_edges]
    m = len(gens)
    if m > MAX_SEARCH_GENERATORS:
        raise GuardError("search generators", MAX_SEARCH_GENERATORS, m)
    full = (1 << m) - 1

    @lru_cache(maxsize=None)
    def extend(mask: int) -> Optional[Tuple[int, ...]]:
        if mask == full:
            return ()
        placed = [gens[i] for i in range(m) if mask >> i & 1]
        for i in range(m):
            if mask >> i & 1 or not _colon_is_linear(placed, gens[i]):
                continue
            rest = extend(mask | 1 << i)
            if rest is not None:
                return (i,) + rest
        return None

    found = extend(0)
    if found is None:
        return None
    return [gens[i] for i in found]
