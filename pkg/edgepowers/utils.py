"""Utilities

Date -- 19.10.2026
"""


import json
import logging
from enum import Enum
from math import comb
from typing import Any, Dict, Optional


MAX_VARIABLES = 64
MAX_DEGREE = 2**16
MAX_TAYLOR_GENERATORS = 22
MAX_LCM_LATTICE = 2**16
MAX_STRAND_FACES = 2**20
MAX_ASS_VARIABLES = 20
MAX_MIS_VERTICES = 24
MAX_WITNESS_GRID = 2**22

DEFAULT_CHAIN_DEPTH = 3
DEFAULT_SEED = 0

LOGGING_LEVELS = ['ERROR', 'WARNING', 'INFO', 'DEBUG']


class ExitCode(Enum):
    OK = 0
    VERIFICATION_FAILURE = 1
    USAGE_ERROR = 2


class DimensionError(ValueError):
    pass


class GuardError(RuntimeError):
    def __init__(self, bound: str, limit: int, value: int):
        super().__init__(f"Resource guard exceeded: {bound} = {value} > {limit}")
        self.bound = bound
        self.limit = limit
        self.value = value


class NotLinearQuotients(Exception):
    def __init__(self, position: int, offending):
        super().__init__(f"Colon ideal at position {position} has non-variable generator {offending}")
        self.position = position
        self.offending = offending


class WitnessError(Exception):
    pass


def check_guard(bound: str, limit: int, value: int) -> None:
    if value > limit:
        raise GuardError(bound, limit, value)


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def dump_json(data: Any, path: Optional[str] = None) -> str:
    text = json.dumps(data, indent=4, ensure_ascii=False)
    if path is None:
        print(text)
    else:
        with open(path, "w") as f:
            print(text, file=f)
        logging.info(f"Output written to {path}")
    return text


def str_keys(mapping: Dict) -> Dict[str, Any]:
    return {",".join(map(str, k)) if isinstance(k, tuple) else str(k): v for k, v in mapping.items()}
