"""Family descriptors: the named graph / ideal families the commands operate on

Date -- 19.10.2026
"""


from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

from edgepowers.graph import (
    Graph,
    anti_d_path,
    d_path,
    edge_ideal,
    graph_of_ideal,
    lexsegment_final,
    lexsegment_initial,
    star,
)
from edgepowers.monomial import Monomial, MonomialIdeal


_DESCRIPTOR_RE = re.compile(r"(\w+)\(([^()]*)\)")


class FamilyKind(Enum):
    D_PATH = "d_path"
    ANTI_D_PATH = "anti_d_path"
    STAR = "star"
    LEXSEG_INIT = "lexseg_init"
    LEXSEG_FINAL = "lexseg_final"
    JSON = "json"


class QuotientOrder(Enum):
    DECREASING_LEX = "decreasing-lex"
    INCREASING_REVLEX = "increasing-revlex"
    GIVEN = "given"


@dataclass(frozen=True)
class FamilyDescriptor:
    kind: FamilyKind
    n: int = 0
    d: int = 0
    bound: Optional[Monomial] = None  # v for lexseg_init, u for lexseg_final
    path: Optional[str] = None

    def __post_init__(self):
        if self.kind in (FamilyKind.D_PATH, FamilyKind.ANTI_D_PATH):
            if self.n < 1 or self.d < 1:
                raise ValueError(f"{self.kind.value} needs n >= 1 and d >= 1")
        elif self.kind == FamilyKind.STAR:
            if self.n < 2:
                raise ValueError("star needs n >= 2")
        elif self.kind in (FamilyKind.LEXSEG_INIT, FamilyKind.LEXSEG_FINAL):
            if self.bound is None:
                raise ValueError(f"{self.kind.value} needs its bounding monomial")
        elif self.kind == FamilyKind.JSON and self.path is None:
            raise ValueError("json family needs --path")

    @classmethod
    def anti_d_path(cls, n: int, d: int) -> FamilyDescriptor:
        return cls(FamilyKind.ANTI_D_PATH, n=n, d=d)

    @classmethod
    def star(cls, n: int) -> FamilyDescriptor:
        return cls(FamilyKind.STAR, n=n)

    @classmethod
    def lexseg_init(cls, v: Monomial) -> FamilyDescriptor:
        return cls(FamilyKind.LEXSEG_INIT, n=v.n, bound=v)

    @classmethod
    def lexseg_final(cls, u: Monomial) -> FamilyDescriptor:
        return cls(FamilyKind.LEXSEG_FINAL, n=u.n, bound=u)

    @classmethod
    def from_arguments(cls, args) -> FamilyDescriptor:
        kind = FamilyKind(args.family)
        bound = None
        if kind == FamilyKind.LEXSEG_INIT and args.v:
            bound = Monomial.parse(args.v, args.n)
        if kind == FamilyKind.LEXSEG_FINAL and args.u:
            bound = Monomial.parse(args.u, args.n)
        return cls(kind, n=args.n or 0, d=args.d or 0, bound=bound, path=getattr(args, "path", None))

    @classmethod
    def parse(cls, text: str) -> FamilyDescriptor:
        """Inverse of str(): 'anti_d_path(n=7,d=2)', 'lexseg_init(v=x1x4,n=4)', 'json(path=ideal.json)'."""
        found = _DESCRIPTOR_RE.fullmatch(text.strip())
        if found is None:
            raise ValueError(f"Cannot parse family descriptor '{text}'")

        kind = FamilyKind(found.group(1))
        params = dict(p.split("=", 1) for p in found.group(2).split(",") if p)
        n = int(params.get("n", 0))
        match kind:
            case FamilyKind.LEXSEG_INIT:
                return cls.lexseg_init(Monomial.parse(params["v"], n))
            case FamilyKind.LEXSEG_FINAL:
                return cls.lexseg_final(Monomial.parse(params["u"], n))
            case FamilyKind.JSON:
                return cls(kind, path=params.get("path"))
            case _:
                return cls(kind, n=n, d=int(params.get("d", 0)))

    @property
    def is_lexsegment(self) -> bool:
        return self.kind in (FamilyKind.STAR, FamilyKind.LEXSEG_INIT, FamilyKind.LEXSEG_FINAL)

    @property
    def default_order(self) -> QuotientOrder:
        """Processing order under which the family's closed forms are stated."""
        if self.kind == FamilyKind.LEXSEG_FINAL:
            return QuotientOrder.INCREASING_REVLEX
        if self.kind == FamilyKind.JSON:
            return QuotientOrder.GIVEN
        return QuotientOrder.DECREASING_LEX

    def _load_json(self) -> Dict:
        with open(self.path, "r") as f:
            return json.load(f)

    def ideal(self) -> MonomialIdeal:
        match self.kind:
            case FamilyKind.LEXSEG_INIT:
                return lexsegment_initial(self.bound, self.n)
            case FamilyKind.LEXSEG_FINAL:
                return lexsegment_final(self.bound, self.n)
            case FamilyKind.JSON:
                return MonomialIdeal.from_json(self._load_json())
            case _:
                return edge_ideal(self.graph())

    def given_generators(self):
        """Generators in the order the JSON file lists them."""
        data = self._load_json()
        return [Monomial.from_json(g) for g in data["gens"]]

    def graph(self) -> Graph:
        match self.kind:
            case FamilyKind.D_PATH:
                return d_path(self.n, self.d)
            case FamilyKind.ANTI_D_PATH:
                return anti_d_path(self.n, self.d)
            case FamilyKind.STAR:
                return star(self.n)
            case _:
                return graph_of_ideal(self.ideal())

    def __str__(self) -> str:
        match self.kind:
            case FamilyKind.D_PATH | FamilyKind.ANTI_D_PATH:
                return f"{self.kind.value}(n={self.n},d={self.d})"
            case FamilyKind.STAR:
                return f"star(n={self.n})"
            case FamilyKind.LEXSEG_INIT:
                return f"lexseg_init(v={self.bound},n={self.n})"
            case FamilyKind.LEXSEG_FINAL:
                return f"lexseg_final(u={self.bound},n={self.n})"
            case _:
                return f"json(path={self.path})"
