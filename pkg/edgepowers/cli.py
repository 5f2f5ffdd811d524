"""Command line front-end: families, powers, Betti tables, Ass chains, torsion-freeness, witnesses, verification sweeps

Date -- 19.10.2026
"""


import argparse
import logging
import sys
from typing import Dict, Optional

import pandas as pd
from tabulate import tabulate

from edgepowers.families import FamilyDescriptor, FamilyKind, QuotientOrder
from edgepowers.monomial import power
from edgepowers.primes import ass_chain, check_witness, is_normally_torsion_free, theorem_witness
from edgepowers.quotients import (
    antipath_power_generators,
    betti_table_from_certificate,
    family_power,
    lq_certificate,
    ordered_generators,
)
from edgepowers.taylor import compare_betti, taylor_betti
from edgepowers.utils import (
    DEFAULT_CHAIN_DEPTH,
    DEFAULT_SEED,
    LOGGING_LEVELS,
    ExitCode,
    GuardError,
    NotLinearQuotients,
    WitnessError,
    dump_json,
)
from edgepowers.verification.suites import SUITES, SweepConfig, run_suite


FORMATS = ["json", "csv", "table"]


def add_family_arguments(parser: argparse.ArgumentParser, positional: bool = True) -> None:
    kinds = [kind.value for kind in FamilyKind]
    if positional:
        parser.add_argument("family", choices=kinds, help="Family of ideals.")
    else:
        parser.add_argument("--family", default=None, choices=kinds, help="Family of ideals.")
    parser.add_argument("--n", type=int, default=None, help="Number of variables / vertices.")
    parser.add_argument("--d", type=int, default=None, help="Window width of the (anti-)d-path.")
    parser.add_argument("--v", type=str, default=None, help="Bound of an initial lexsegment, e.g. x1x4.")
    parser.add_argument("--u", type=str, default=None, help="Bound of a final lexsegment, e.g. x2x4.")
    parser.add_argument("--path", type=str, default=None, help="Path to an ideal JSON {\"n\", \"gens\"}.")


def parse_arguments(argv=None):
    print(' '.join(sys.argv), file=sys.stderr)
    parser = argparse.ArgumentParser(prog="edgepowers")

    parser.add_argument("--logging-level", default='WARNING', choices=LOGGING_LEVELS)
    parser.add_argument("--format", default="json", choices=FORMATS, help="Output format.")
    parser.add_argument("--output", type=str, default=None, help="Output file, stdout when omitted.")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed of the property checks.")
    parser.add_argument("--jobs", type=int, default=1, help="Parallel workers of the verification sweeps.")

    subparsers = parser.add_subparsers(dest="command", required=True)

    family = subparsers.add_parser("family", help="Graph and edge ideal of a family.")
    add_family_arguments(family)

    power_parser = subparsers.add_parser("power", help="Minimal generators of a power.")
    add_family_arguments(power_parser)
    power_parser.add_argument("--k", "--t", dest="k", type=int, default=1, help="Exponent of the power.")

    betti = subparsers.add_parser("betti", help="Betti numbers of a power.")
    add_family_arguments(betti)
    betti.add_argument("--k", "--t", dest="k", type=int, default=1, help="Exponent of the power.")
    betti.add_argument("--method", default="formula", choices=["formula", "oracle", "both"])
    betti.add_argument("--order", default=None, choices=[o.value for o in QuotientOrder],
                       help="Processing order of the certificate, family default when omitted.")

    ass = subparsers.add_parser("ass", help="Chain Ass(S/I^k), k = 1..K.")
    add_family_arguments(ass)
    ass.add_argument("--K", type=int, default=DEFAULT_CHAIN_DEPTH, help="Depth of the chain.")

    ntf = subparsers.add_parser("ntf", help="Normally torsion-free verdict.")
    add_family_arguments(ntf)
    ntf.add_argument("--K", type=int, default=DEFAULT_CHAIN_DEPTH, help="Depth of the chain.")
    ntf.add_argument("--power", type=int, default=1, help="Test I^power instead of I.")

    witness = subparsers.add_parser("witness", help="Witness of the maximal ideal in Ass(S/I^k) for anti-d-paths.")
    witness.add_argument("--n", type=int, required=True)
    witness.add_argument("--d", type=int, required=True)
    witness.add_argument("--k", type=int, required=True)

    verify = subparsers.add_parser("verify", help="Run invariant sweeps.")
    verify.add_argument("suite", choices=["all"] + list(SUITES))
    verify.add_argument("--n-max", type=int, default=None, help="Largest n of the anti-d-path and lexsegment sweeps.")
    verify.add_argument("--d-max", type=int, default=None)
    verify.add_argument("--k-max", type=int, default=None)
    verify.add_argument("--t-max", type=int, default=None)
    verify.add_argument("--K", type=int, default=DEFAULT_CHAIN_DEPTH)
    verify.add_argument("--pd-n-max", type=int, default=None, help="Largest n of the primary decomposition sweep.")
    verify.add_argument("--pd-d-max", type=int, default=None)
    verify.add_argument("--dichotomy-n-max", type=int, default=None)
    verify.add_argument("--graphs-n-max", type=int, default=None, help="Largest n of the exhaustive small-graph sweep.")
    verify.add_argument("--oracle-max-gens", type=int, default=None,
                        help="Skip the Taylor oracle above this many generators, 22 when omitted.")
    verify.add_argument("--core-instances", type=int, default=None)
    add_family_arguments(verify, positional=False)
    verify.add_argument("--t", type=int, default=2, help="Power audited by the audits suite.")

    return parser.parse_args(argv)


def emit(args, data: Dict, frame: Optional[pd.DataFrame] = None) -> None:
    if args.format == "json" or frame is None:
        if args.format != "json":
            logging.warning(f"No {args.format} rendering for '{args.command}', writing JSON")
        dump_json(data, args.output)
        return

    text = frame.to_csv(index=False) if args.format == "csv" else tabulate(frame, headers="keys", showindex=False)
    if args.output is None:
        print(text)
    else:
        with open(args.output, "w") as f:
            print(text, file=f)
        logging.info(f"Output written to {args.output}")


def cmd_family(args) -> ExitCode:
    family = FamilyDescriptor.from_arguments(args)
    ideal = family.ideal()
    try:
        graph = family.graph().to_json()
    except ValueError:
        graph = None
    emit(args, {"family": str(family), "graph": graph, "ideal": ideal.to_json(), "generators": [str(g) for g in ideal]})
    return ExitCode.OK


def cmd_power(args) -> ExitCode:
    family = FamilyDescriptor.from_arguments(args)
    ideal = family_power(family, args.k)
    emit(args, {"family": str(family), "k": args.k, "count": len(ideal), "ideal": ideal.to_json()})
    return ExitCode.OK


def cmd_betti(args) -> ExitCode:
    family = FamilyDescriptor.from_arguments(args)
    ideal = family_power(family, args.k)
    order = QuotientOrder(args.order) if args.order else family.default_order
    data = {"family": str(family), "k": args.k, "method": args.method}

    formula = oracle = None
    if args.method in ("formula", "both"):
        if order == QuotientOrder.GIVEN and family.kind == FamilyKind.JSON and args.k == 1:
            gens = family.given_generators()
        else:
            gens = ordered_generators(ideal, order)
        cert = lq_certificate(gens)
        formula = betti_table_from_certificate(cert)
        data["order"] = order.value
        data["certificate"] = cert.to_json()
        data["betti"] = formula.to_json()

    if args.method in ("oracle", "both"):
        oracle = taylor_betti(ideal)
        data["oracle"] = oracle.to_json()

    code = ExitCode.OK
    if formula is not None and oracle is not None:
        diff = compare_betti(formula, oracle)
        data["agree"] = diff is None
        if diff is not None:
            key, left, right = diff
            data["first_difference"] = {"entry": key, "formula": left, "oracle": right}
            print(f"Formula and oracle disagree at {key}: {left} != {right}", file=sys.stderr)
            code = ExitCode.VERIFICATION_FAILURE

    table = formula if formula is not None else oracle
    emit(args, data, table.to_frame())
    return code


def cmd_ass(args) -> ExitCode:
    family = FamilyDescriptor.from_arguments(args)
    chain = ass_chain(family.ideal(), args.K)
    data = {"family": str(family), "K": args.K, **chain.to_json()}
    rows = [{"k": k, "primes": " ".join(str(p) for p in chain.entry(k))} for k in range(1, chain.K + 1)]
    emit(args, data, pd.DataFrame(rows, columns=["k", "primes"]))
    return ExitCode.OK


def cmd_ntf(args) -> ExitCode:
    family = FamilyDescriptor.from_arguments(args)
    ideal = family.ideal()
    graph = None
    if args.power == 1 and family.kind != FamilyKind.JSON:
        graph = family.graph()
    if args.power > 1:
        ideal = power(ideal, args.power)

    verdict = is_normally_torsion_free(ideal, args.K, graph)
    emit(args, {"family": str(family), "power": args.power, **verdict.to_json()})
    return ExitCode.OK


def cmd_witness(args) -> ExitCode:
    m = theorem_witness(args.n, args.d, args.k)
    checks = check_witness(antipath_power_generators(args.n, args.d, args.k), m)
    emit(args, {"n": args.n, "d": args.d, "k": args.k, "witness": str(m), "exponents": m.to_json(), "checks": checks})
    return ExitCode.OK


def sweep_config(args) -> SweepConfig:
    config = SweepConfig(seed=args.seed, jobs=args.jobs, K=args.K, audit_t=args.t)
    overrides = {
        "n_max": args.n_max,
        "lexseg_n_max": args.n_max,
        "d_max": args.d_max,
        "k_max": args.k_max,
        "t_max": args.t_max,
        "pd_n_max": args.pd_n_max,
        "pd_d_max": args.pd_d_max,
        "dichotomy_n_max": args.dichotomy_n_max,
        "graphs_n_max": args.graphs_n_max,
        "oracle_max_gens": args.oracle_max_gens,
        "core_instances": args.core_instances,
    }
    for name, value in overrides.items():
        if value is not None:
            setattr(config, name, value)

    if args.family is not None:
        config.audit_family = FamilyDescriptor.from_arguments(args)
    return config


def cmd_verify(args) -> ExitCode:
    report = run_suite(args.suite, sweep_config(args))
    for failure in report.failures:
        print(f"FAIL [{failure.suite}] {failure.name}: {failure.instance}", file=sys.stderr)
    emit(args, report.to_json(), report.to_frame())
    return ExitCode.OK if report.passed else ExitCode.VERIFICATION_FAILURE


COMMANDS = {
    "family": cmd_family,
    "power": cmd_power,
    "betti": cmd_betti,
    "ass": cmd_ass,
    "ntf": cmd_ntf,
    "witness": cmd_witness,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = parse_arguments(argv)
    logging.basicConfig(level=args.logging_level, force=True)

    try:
        code = COMMANDS[args.command](args)
    except NotLinearQuotients as e:
        logging.error(e)
        print(f"NotLinearQuotients at position {e.position}: {e.offending}", file=sys.stderr)
        code = ExitCode.VERIFICATION_FAILURE
    except WitnessError as e:
        logging.error(e)
        code = ExitCode.VERIFICATION_FAILURE
    except GuardError as e:
        logging.error(e)
        code = ExitCode.USAGE_ERROR
    except (ValueError, KeyError, OSError) as e:
        logging.error(e)
        code = ExitCode.USAGE_ERROR

    return code.value


if __name__ == "__main__":
    sys.exit(main())
