"""Command-line entry point.

Exit codes: 0 success, 1 domain or I/O failure (message on stderr), 2 usage.
Every command prints its resolved configuration on stdout before doing work
so a run can be reproduced from its own log.
"""

from __future__ import annotations

import argparse
import os
import sys

from .codegen import (
    CodeSpec,
    construct_dual_containing_ldpc,
    matrix_diagnostics,
    read_alist,
    write_alist,
)
from .decoder import DEFAULT_MAX_ITERS, build_tanner, sum_product_decode
from .estimator import estimate_noise
from .gf2core import BitVector
from .harness import Scenario, run_bler_experiment, run_mse_experiment, write_csv

DEFAULT_P_GRID = "0.0175,0.02,0.0225,0.025,0.0275,0.03,0.0325"
DEFAULT_SCENARIOS = "fixed:0.02,perfect,estimated"


def _parse_p_list(text: str) -> list[float]:
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            p = float(token)
        except ValueError:
            raise ValueError(f"bad probability {token!r} in p list") from None
        if not 0.0 <= p < 0.5:
            raise ValueError(f"probability {p!r} outside [0, 1/2)")
        values.append(p)
    return values


def _parse_scenarios(text: str) -> list[Scenario]:
    scenarios = [Scenario.parse(tok) for tok in text.split(",") if tok.strip()]
    if not scenarios:
        raise ValueError("scenario list is empty")
    return scenarios


def _parse_bit_file(path: str) -> list[int]:
    with open(path) as fh:
        text = fh.read()
    bits = []
    for token in text.split():
        for ch in token:
            if ch not in "01":
                raise ValueError(f"syndrome file {path}: unexpected character {ch!r}")
            bits.append(int(ch))
    return bits


def _resolve_workers(args) -> int:
    if args.workers is not None:
        workers = args.workers
    else:
        env = os.environ.get("QCE_WORKERS", "").strip()
        if env:
            try:
                workers = int(env)
            except ValueError:
                raise ValueError(f"QCE_WORKERS={env!r} is not an integer") from None
        else:
            workers = 1
    if workers < 1:
        raise ValueError("worker count must be >= 1")
    return workers


def _print_config(command: str, **settings) -> None:
    parts = " ".join(f"{key}={value}" for key, value in settings.items())
    print(f"config: command={command} {parts}")


def _uniform_row_weight_of(h) -> int:
    diag = matrix_diagnostics(h)
    if len(diag.row_weights) != 1:
        raise ValueError("matrix row weight is not uniform; estimator undefined")
    return next(iter(diag.row_weights))


def _cmd_construct(args) -> int:
    spec = CodeSpec(n=args.n, m_target=args.rows, row_weight=args.row_weight,
                    seed=args.seed)
    _print_config("construct", n=args.n, rows=args.rows,
                  row_weight=args.row_weight, seed=args.seed, out=args.out)
    h = construct_dual_containing_ldpc(spec)
    write_alist(h, args.out)
    diag = matrix_diagnostics(h)
    print(f"wrote {args.out}: {h.rows} x {h.cols}, rank {diag.rank}, "
          f"self_orthogonal {diag.self_orthogonal}")
    return 0


def _cmd_validate(args) -> int:
    _print_config("validate", matrix=args.matrix)
    h = read_alist(args.matrix)
    diag = matrix_diagnostics(h)
    print(f"rows = {h.rows}")
    print(f"cols = {h.cols}")
    print(f"rank = {diag.rank}")
    print(f"row_weights = {dict(sorted(diag.row_weights.items()))}")
    print(f"col_weights = {dict(sorted(diag.col_weights.items()))}")
    print(f"mean_col_weight = {diag.mean_col_weight!r}")
    print(f"max_pairwise_row_overlap = {diag.max_pairwise_row_overlap}")
    print(f"num_overlapping_row_pairs = {diag.num_overlapping_row_pairs}")
    print(f"self_orthogonal = {diag.self_orthogonal}")
    ok = diag.self_orthogonal and diag.rank == h.rows
    if not ok:
        print("matrix is not a full-rank self-orthogonal check matrix",
              file=sys.stderr)
    return 0 if ok else 1


def _cmd_estimate(args) -> int:
    _print_config("estimate", matrix=args.matrix,
                  syndrome_weight=args.syndrome_weight)
    h = read_alist(args.matrix)
    r = _uniform_row_weight_of(h)
    est = estimate_noise(args.syndrome_weight, h.rows, r)
    print(f"p_hat = {est.p_hat!r}")
    print(f"estimated_error_count = {est.error_count(h.cols)}")
    return 0


def _cmd_decode(args) -> int:
    _print_config("decode", matrix=args.matrix, syndrome=args.syndrome,
                  p=args.p, max_iters=args.max_iters)
    h = read_alist(args.matrix)
    bits = _parse_bit_file(args.syndrome)
    if len(bits) != h.rows:
        raise ValueError(
            f"syndrome has {len(bits)} bits but the matrix has {h.rows} rows")
    result = sum_product_decode(build_tanner(h), BitVector.from_bits(bits),
                                args.p, args.max_iters)
    support = [i for i in range(len(result.error_estimate))
               if result.error_estimate[i]]
    print(f"converged = {result.converged}")
    print(f"iterations_used = {result.iterations_used}")
    print(f"error_weight = {len(support)}")
    print(f"error_support = {' '.join(map(str, support))}")
    return 0


def _cmd_mse(args) -> int:
    workers = _resolve_workers(args)
    p_list = _parse_p_list(args.p_list)
    _print_config("mse", matrix=args.matrix, p_list=args.p_list,
                  trials=args.trials, master_seed=args.seed,
                  stream_tag="mse", workers=workers, out=args.out)
    h = read_alist(args.matrix)
    report = run_mse_experiment(h, p_list, args.trials, args.seed,
                                workers=workers)
    write_csv(report, args.out)
    print(f"wrote {args.out}: {len(report.rows)} rows")
    return 0


def _cmd_bler(args) -> int:
    workers = _resolve_workers(args)
    p_list = _parse_p_list(args.p_list)
    scenarios = _parse_scenarios(args.scenarios)
    _print_config("bler", matrix=args.matrix, p_list=args.p_list,
                  scenarios=args.scenarios, trials=args.trials,
                  max_iters=args.max_iters, master_seed=args.seed,
                  stream_tag="bler", workers=workers, out=args.out)
    h = read_alist(args.matrix)
    report = run_bler_experiment(h, p_list, scenarios, args.trials,
                                 args.max_iters, args.seed, workers=workers)
    write_csv(report, args.out)
    print(f"wrote {args.out}: {len(report.rows)} rows")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qce",
        description="Construct self-orthogonal LDPC codes, estimate channel "
                    "noise from syndrome weights, and run decoding experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser(
        "construct", help="build a self-orthogonal LDPC matrix, write alist")
    p_construct.add_argument("--n", type=int, required=True,
                             help="code length (number of columns)")
    p_construct.add_argument("--rows", type=int, required=True,
                             help="number of check rows to keep")
    p_construct.add_argument("--row-weight", type=int, required=True,
                             help="uniform row weight (even)")
    p_construct.add_argument("--seed", type=int, default=1)
    p_construct.add_argument("--out", required=True)
    p_construct.set_defaults(handler=_cmd_construct)

    p_validate = sub.add_parser(
        "validate", help="print matrix diagnostics, exit 1 unless full-rank "
                         "and self-orthogonal")
    p_validate.add_argument("matrix")
    p_validate.set_defaults(handler=_cmd_validate)

    p_estimate = sub.add_parser(
        "estimate", help="estimate channel p from a syndrome weight")
    p_estimate.add_argument("--matrix", required=True)
    p_estimate.add_argument("--syndrome-weight", type=int, required=True)
    p_estimate.set_defaults(handler=_cmd_estimate)

    p_decode = sub.add_parser(
        "decode", help="run sum-product decoding on a syndrome file")
    p_decode.add_argument("--matrix", required=True)
    p_decode.add_argument("--syndrome", required=True,
                          help="text file of 0/1 syndrome bits")
    p_decode.add_argument("--p", type=float, required=True,
                          help="assumed error probability (prior)")
    p_decode.add_argument("--max-iters", type=int, default=DEFAULT_MAX_ITERS)
    p_decode.set_defaults(handler=_cmd_decode)

    p_mse = sub.add_parser(
        "mse", help="estimator-quality experiment, CSV output")
    p_mse.add_argument("--matrix", required=True)
    p_mse.add_argument("--p-list", default=DEFAULT_P_GRID,
                       help="comma-separated probabilities")
    p_mse.add_argument("--trials", type=int, default=10_000)
    p_mse.add_argument("--seed", type=int, default=1)
    p_mse.add_argument("--workers", type=int, default=None,
                       help="parallel workers (default: QCE_WORKERS or 1)")
    p_mse.add_argument("--out", required=True)
    p_mse.set_defaults(handler=_cmd_mse)

    p_bler = sub.add_parser(
        "bler", help="block-error-rate experiment across decoder knowledge "
                     "scenarios, CSV output")
    p_bler.add_argument("--matrix", required=True)
    p_bler.add_argument("--p-list", default=DEFAULT_P_GRID)
    p_bler.add_argument("--scenarios", default=DEFAULT_SCENARIOS,
                        help="comma-separated: fixed:<p>, perfect, estimated")
    p_bler.add_argument("--trials", type=int, default=1000)
    p_bler.add_argument("--max-iters", type=int, default=DEFAULT_MAX_ITERS)
    p_bler.add_argument("--seed", type=int, default=1)
    p_bler.add_argument("--workers", type=int, default=None,
                        help="parallel workers (default: QCE_WORKERS or 1)")
    p_bler.add_argument("--out", required=True)
    p_bler.set_defaults(handler=_cmd_bler)
    return parser


def dispatch(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
