"""Check results, suite reports and the instance fan-out shared by every verification suite

Date -- 19.10.2026
"""


from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, List, Sequence

import pandas as pd
from joblib import Parallel, delayed
from tabulate import tabulate
from tqdm import tqdm

from edgepowers.utils import GuardError, NotLinearQuotients, WitnessError


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    DOCUMENTED_DISCREPANCY = "documented-discrepancy"
    SKIPPED = "skipped"


@dataclass
class CheckResult:
    suite: str
    name: str
    instance: str
    status: CheckStatus
    detail: Dict = field(default_factory=dict)

    def to_json(self) -> Dict:
        data = {"suite": self.suite, "check": self.name, "instance": self.instance, "status": self.status.value}
        if self.detail:
            data["detail"] = self.detail
        return data


def check(suite: str, name: str, instance: str, ok: bool, **detail) -> CheckResult:
    status = CheckStatus.PASS if ok else CheckStatus.FAIL
    if not ok:
        logging.error(f"[{suite}] {name} failed on {instance}: {detail}")
    return CheckResult(suite, name, instance, status, detail)


def skipped(suite: str, name: str, instance: str, reason: str) -> CheckResult:
    logging.warning(f"[{suite}] {name} skipped on {instance}: {reason}")
    return CheckResult(suite, name, instance, CheckStatus.SKIPPED, {"reason": reason})


@dataclass
class SuiteReport:
    results: List[CheckResult] = field(default_factory=list)

    def extend(self, results: Iterable[CheckResult]) -> None:
        self.results.extend(results)

    def count(self, status: CheckStatus) -> int:
        return sum(1 for r in self.results if r.status == status)

    @property
    def passed(self) -> bool:
        return self.count(CheckStatus.FAIL) == 0

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if r.status == CheckStatus.FAIL]

    def summary(self) -> Dict[str, int]:
        return {status.value: self.count(status) for status in CheckStatus}

    def to_json(self) -> Dict:
        return {
            "passed": self.passed,
            "summary": self.summary(),
            "failures": [r.to_json() for r in self.failures],
            "results": [r.to_json() for r in self.results],
        }

    def to_frame(self) -> pd.DataFrame:
        rows = [{"suite": r.suite, "check": r.name, "instance": r.instance, "status": r.status.value} for r in self.results]
        return pd.DataFrame(rows, columns=["suite", "check", "instance", "status"])

    def to_table(self) -> str:
        return tabulate(self.to_frame(), headers="keys", showindex=False)


def guarded(suite: str, name: str, instance: str, fn: Callable[[], List[CheckResult]]) -> List[CheckResult]:
    """Run one instance's checks, turning guard hits into skips and algebra errors into failures."""
    try:
        return fn()
    except GuardError as e:
        return [skipped(suite, name, instance, str(e))]
    except (NotLinearQuotients, WitnessError) as e:
        return [check(suite, name, instance, False, error=str(e))]


def run_instances(
    fn: Callable[[object], List[CheckResult]],
    instances: Sequence,
    desc: str,
    jobs: int = 1,
) -> List[CheckResult]:
    """Apply fn to every instance; the flattened results keep instance order for any jobs count."""
    start = time.perf_counter()
    disable = logging.getLogger().getEffectiveLevel() > logging.INFO
    progress = tqdm(instances, desc=desc, disable=disable)

    if jobs == 1:
        per_instance = [fn(x) for x in progress]
    else:
        per_instance = Parallel(n_jobs=jobs)(delayed(fn)(x) for x in progress)

    logging.info(f"{desc}: {len(instances)} instances in {time.perf_counter() - start:.2f}s")
    return [r for results in per_instance for r in results]
