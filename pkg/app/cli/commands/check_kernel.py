"""check-kernel: sampled kernel-axiom check and poset-limit test"""

import argparse
import sys

from app.cli.arguments import add_seed, make_rng, positive_int
from app.cli.output import emit_csv
from app.kernels.axioms import check_axioms
from app.kernels.criteria import poset_limit_test
from app.kernels.registry import parse_kernel

CRITERION_COLUMNS = ("statistic", "value", "stderr", "samples")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "check-kernel",
        help="check the kernel axioms by sampling",
        description="Print PASS or FAIL with violation counts; FAIL exits with 1.",
    )
    parser.add_argument("--kernel", required=True, help="kernel as name:params")
    parser.add_argument(
        "--triples", type=positive_int, default=10**5, help="sampled triples"
    )
    parser.add_argument(
        "--tol", type=float, default=None, help="tolerance (default: 0 for built-ins)"
    )
    parser.add_argument(
        "--criterion",
        action="store_true",
        help="also run the D1/D2/D3 poset-limit test on the same number of triples",
    )
    add_seed(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    W = parse_kernel(args.kernel)
    rng = make_rng(args.seed)
    report = check_axioms(W, args.triples, rng, tol=args.tol)
    passed = report.passed
    verdict = "PASS" if passed else "FAIL"
    print(verdict)
    print(
        f"triples={report.triples_checked} w1={report.w1_violations} "
        f"w2={report.w2_violations} order={report.order_violations}"
    )
    if args.criterion:
        limit = poset_limit_test(W, args.triples, rng)
        stats = {
            "d1": limit.d1,
            "d2": limit.d2,
            "d1_minus_d2": limit.d1_minus_d2,
            "d3": limit.d3,
        }
        rows = [{"statistic": name, **s.model_dump()} for name, s in stats.items()]
        emit_csv(rows, CRITERION_COLUMNS)
        print("POSET-LIMIT" if limit.passed else "NOT-POSET-LIMIT")
        passed = passed and limit.passed
    sys.stdout.flush()
    return 0 if passed else 1
