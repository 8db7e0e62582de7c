"""Command line front end.

    halmos-kit analyze P.json Q.json [--verify]
    halmos-kit verify P.json Q.json
    halmos-kit element P.json Q.json --word "P*Q+Q" [--ops spectrum,norm]
    halmos-kit random --dims 1,0,0,1 --h 0.3,0.7 --seed 42 --out fixtures/

Reports go to stdout as JSON, diagnostics to stderr. Exit codes: 0 success,
1 unreadable or malformed input file, 2 validation failure, 3 oracle
mismatch in verify mode, 4 word syntax error.
"""

import argparse
import math
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from loguru import logger

from .algebra import (
    assemble,
    drazin,
    is_cor,
    is_invertible,
    kernel_basis,
    moore_penrose,
    operator_norm,
    parse_word,
    range_basis,
    spectrum,
    symbol_of_word,
    trace,
)
from .canonical import (
    HalmosDecomposition,
    ProjectionPair,
    RandomPairSpec,
    check_supersymmetry,
    generate_pair,
    halmos_decompose,
    projection_residuals,
    validate_pair,
)
from .errors import HalmosError, InvalidSpec, MatrixFileError, WordSyntaxError
from .io import dump_report, matrix_to_dict, read_matrix_file, write_json, write_matrix_file
from .linalg import DEFAULT_TOLERANCES, TOLERANCE_ENV_VAR, Tolerances, set_distance
from .oracle import (
    brute_distance,
    brute_index,
    brute_intertwiner_search,
    brute_spectrum,
    brute_subspaces,
    intertwining_residuals,
)
from .pairs import PairReport, analyze_pair, build_intertwiner
from .version import REPORT_VERSION, __version__

EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_MISMATCH = 3
EXIT_WORD = 4

ELEMENT_OPS = (
    "spectrum",
    "norm",
    "kernel",
    "range",
    "pinv",
    "drazin",
    "cor",
    "trace",
    "invertible",
)

# oracle agreement thresholds of verify mode, before the --tol scale
VERIFY_TOLERANCES = {
    "dims": 0.0,
    "hValues": 1e-8,
    "diffSpectrum": 1e-8,
    "anticommutatorSpectrum": 1e-8,
    "anticommutatorNorm": 1e-9,
    "pqNorm": 1e-9,
    "index": 0.0,
    "tracePowers": 1e-8,
    "distance": 1e-4,
    "intertwiner": 1e-8,
}
NO_INTERTWINER_FLOOR = 1e-3


def setup_logging(verbose: bool = False):
    level = "DEBUG" if verbose else "INFO"
    format_str = "<level>{level: <8}</level> | {message}"
    if verbose:
        format_str = (
            "{time:HH:mm:ss.SSS} | <level>{level: <8}</level> | "
            "{name}:{function}:{line} - {message}"
        )
    logger.remove()
    logger.add(sys.stderr, level=level, format=format_str)
    logger.enable("halmos_kit")
    return logger


def _ops_list(text: str) -> List[str]:
    ops = [op.strip() for op in text.split(",") if op.strip()]
    unknown = sorted(set(ops) - set(ELEMENT_OPS))
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown ops {unknown}; choose from {', '.join(ELEMENT_OPS)}"
        )
    return ops


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    defaults = ", ".join(f"{k}={v:g}" for k, v in DEFAULT_TOLERANCES.to_dict().items())
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tol",
        type=float,
        default=None,
        help=f"Scale factor for the tolerance family ({defaults}); "
        f"defaults to ${TOLERANCE_ENV_VAR} or 1",
    )
    common.add_argument(
        "--verbose", action="store_true", help="Debug logging on stderr"
    )
    common.add_argument(
        "--indent", type=int, default=2, help="Indentation of the JSON report"
    )

    parser = argparse.ArgumentParser(
        prog="halmos-kit",
        description="Canonical decomposition and analysis of a pair of "
        "orthogonal projections.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    for name, text in (
        ("analyze", "Decompose a pair and report its invariants"),
        ("verify", "Same as analyze --verify"),
    ):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument("p_path", metavar="P", help="Matrix file of P")
        sub.add_argument("q_path", metavar="Q", help="Matrix file of Q")
        if name == "analyze":
            sub.add_argument(
                "--verify",
                action="store_true",
                help="Compare every formula against the brute-force oracle",
            )

    element = commands.add_parser(
        "element", parents=[common], help="Evaluate a word in P and Q"
    )
    element.add_argument("p_path", metavar="P", help="Matrix file of P")
    element.add_argument("q_path", metavar="Q", help="Matrix file of Q")
    element.add_argument("--word", required=True, help='Word in P, Q, I, e.g. "P*Q+Q"')
    element.add_argument(
        "--ops",
        type=_ops_list,
        default=list(ELEMENT_OPS),
        help=f"Comma separated subset of {','.join(ELEMENT_OPS)} (default: all)",
    )

    random = commands.add_parser(
        "random", parents=[common], help="Write a seeded random pair and its ground truth"
    )
    random.add_argument("--dims", default="0,0,0,0", help="d00,d01,d10,d11")
    random.add_argument(
        "--m", type=int, default=None, help="Generic dimension (default: number of --h)"
    )
    random.add_argument("--h", default="", help="Comma separated H-eigenvalues in (0, 1)")
    random.add_argument("--seed", type=int, default=0, help="Random seed")
    random.add_argument("--out", required=True, help="Output directory")

    args = parser.parse_args(argv)
    if args.command == "verify":
        args.verify = True
    return args


def resolve_tolerances(scale: Optional[float]) -> Tolerances:
    if scale is None:
        return Tolerances.from_env()
    return DEFAULT_TOLERANCES.scaled(scale)


def load_pair(p_path: str, q_path: str, tol: Tolerances) -> ProjectionPair:
    P = read_matrix_file(p_path)
    Q = read_matrix_file(q_path)
    return validate_pair(P, Q, tol)


def validation_section(P: np.ndarray, Q: np.ndarray, pair: ProjectionPair) -> Dict:
    square, anticommutator = check_supersymmetry(pair)
    return {
        "ok": True,
        "P": projection_residuals(P),
        "Q": projection_residuals(Q),
        "supersymmetry": {"square": square, "anticommutator": anticommutator},
    }


def pair_report(summary: PairReport) -> Dict[str, Any]:
    anticommutator = summary.anticommutator
    distance = summary.distance
    return {
        "dims": summary.dims.as_dict(),
        "hValues": summary.h_values,
        "diffSpectrum": summary.diff_spectrum,
        "anticommutator": {
            "spectrum": anticommutator.spectrum,
            "norm": anticommutator.norm,
            "pqNorm": anticommutator.pq_norm,
            "invertible": anticommutator.invertible,
        },
        "index": summary.fredholm_index,
        "invertibilityMargin": summary.invertibility_margin,
        "tracePowers": {str(k): v for k, v in summary.trace_powers.items()},
        "distance": {
            "x": distance.x,
            "value": distance.value,
            "regime": distance.regime,
        },
        "intertwiner": {
            "exists": summary.intertwiner_exists,
            "residuals": summary.intertwiner_residuals,
        },
    }


def oracle_checks(
    pair: ProjectionPair,
    dec: HalmosDecomposition,
    summary: PairReport,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> Dict[str, Dict[str, Any]]:
    """Delta between every formula item and its brute-force counterpart."""
    P, Q = pair.P, pair.Q
    scale = tol.gap / DEFAULT_TOLERANCES.gap
    A = P - Q
    S = P @ Q + Q @ P
    checks = {}

    def check(name: str, delta: float, limit: Optional[float] = None):
        limit = VERIFY_TOLERANCES[name] * scale if limit is None else limit
        delta = float(delta)
        # an infinite set distance means the oracle found a different count
        checks[name] = {
            "delta": delta if math.isfinite(delta) else None,
            "tolerance": limit,
            "ok": delta <= limit,
        }

    found = brute_subspaces(P, Q, tol)
    check("dims", max(abs(a - b) for a, b in zip(found["dims"], summary.dims)))
    check("hValues", set_distance(summary.h_values, found["h_values"]))
    check("diffSpectrum", set_distance(summary.diff_spectrum, brute_spectrum(A)))
    check(
        "anticommutatorSpectrum",
        set_distance(summary.anticommutator.spectrum, brute_spectrum(S)),
    )
    pq = float(np.linalg.norm(P @ Q, 2)) if pair.size else 0.0
    s_norm = float(np.linalg.norm(S, 2)) if pair.size else 0.0
    check("anticommutatorNorm", abs(summary.anticommutator.norm - s_norm))
    check("pqNorm", abs(summary.anticommutator.pq_norm - pq))
    check("index", abs(summary.fredholm_index - brute_index(P, Q, tol.gap)))
    check(
        "tracePowers",
        max(
            abs(np.trace(np.linalg.matrix_power(A, k)).real - value)
            for k, value in summary.trace_powers.items()
        ),
    )
    check("distance", abs(summary.distance.value - brute_distance(P, Q, tol=tol)))

    if summary.intertwiner_exists:
        U = build_intertwiner(dec)
        residual = max(intertwining_residuals(U, P, Q).values())
        limit = VERIFY_TOLERANCES["intertwiner"] * scale * max(1, pair.size)
        check("intertwiner", residual, limit)
    else:
        # no unitary may come close; the oracle residual is a lower bound
        best = brute_intertwiner_search(P, Q)
        checks["intertwiner"] = {
            "delta": best,
            "tolerance": NO_INTERTWINER_FLOOR,
            "ok": best > NO_INTERTWINER_FLOOR,
        }

    for name, item in checks.items():
        if not item["ok"]:
            delta = "inf" if item["delta"] is None else f"{item['delta']:.3e}"
            logger.error(
                f"oracle mismatch on {name}: delta {delta} "
                f"against tolerance {item['tolerance']:.1e}"
            )
    return checks


def cmd_analyze(args: argparse.Namespace, tol: Tolerances) -> int:
    P = read_matrix_file(args.p_path)
    Q = read_matrix_file(args.q_path)
    pair = validate_pair(P, Q, tol)
    dec = halmos_decompose(pair, tol)
    summary = analyze_pair(dec)

    report = {"version": REPORT_VERSION, "validation": validation_section(P, Q, pair)}
    report.update(pair_report(summary))
    code = EXIT_OK
    if args.verify:
        checks = oracle_checks(pair, dec, summary, tol)
        report["oracle"] = checks
        if not all(item["ok"] for item in checks.values()):
            code = EXIT_MISMATCH
    print(dump_report(report, args.indent))
    return code


def _subspace_answer(basis) -> Dict[str, Any]:
    return {"dim": basis.dim, "basis": matrix_to_dict(basis.columns)}


def cmd_element(args: argparse.Namespace, tol: Tolerances) -> int:
    expression = parse_word(args.word)
    pair = load_pair(args.p_path, args.q_path, tol)
    dec = halmos_decompose(pair, tol)
    x = symbol_of_word(expression, dec)

    results = {}
    for op in args.ops:
        if op == "spectrum":
            results[op] = np.asarray(spectrum(x), dtype=np.complex128)
        elif op == "norm":
            results[op] = operator_norm(x)
        elif op == "kernel":
            results[op] = _subspace_answer(kernel_basis(x, tol))
        elif op == "range":
            results[op] = _subspace_answer(range_basis(x, tol))
        elif op == "pinv":
            results[op] = matrix_to_dict(assemble(moore_penrose(x, tol)))
        elif op == "drazin":
            result = drazin(x, tol)
            results[op] = {
                "index": result.index,
                "matrix": matrix_to_dict(assemble(result.inverse)),
                "coincidesWithMoorePenrose": result.coincides_with_moore_penrose,
                "detMargin": result.det_margin,
                "traceMargin": result.trace_margin,
            }
        elif op == "cor":
            result = is_cor(x, tol)
            results[op] = {
                "holds": result.holds,
                "coefficientsReal": result.coefficients_real,
                "verdicts": list(result.verdicts),
                "indeterminate": result.indeterminate,
            }
        elif op == "trace":
            results[op] = trace(x)
        elif op == "invertible":
            results[op] = is_invertible(x, tol)

    report = {
        "version": REPORT_VERSION,
        "word": args.word,
        "dims": dec.dims.as_dict(),
        "hValues": dec.h_values,
        "coefficients": {k: complex(v) for k, v in x.coefficients.items()},
        "results": results,
    }
    print(dump_report(report, args.indent))
    return EXIT_OK


def _parse_list(text: str, kind, name: str) -> List:
    try:
        return [kind(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise InvalidSpec(f"{name} must be a comma separated list, got {text!r}")


def cmd_random(args: argparse.Namespace, tol: Tolerances) -> int:
    dims = _parse_list(args.dims, int, "--dims")
    if len(dims) != 4:
        raise InvalidSpec(
            f"--dims needs four values d00,d01,d10,d11, got {args.dims!r}",
            invariant="four subspace dimensions",
        )
    h_values = _parse_list(args.h, float, "--h")
    m = len(h_values) if args.m is None else args.m
    spec = RandomPairSpec(*dims, m=m, h_values=h_values, seed=args.seed)
    pair, truth = generate_pair(spec)

    out = Path(args.out)
    files = {"P": out / "P.json", "Q": out / "Q.json", "truth": out / "truth.json"}
    write_matrix_file(files["P"], pair.P, args.indent)
    write_matrix_file(files["Q"], pair.Q, args.indent)
    truth_doc = {
        "version": REPORT_VERSION,
        "dims": truth.dims.as_dict(),
        "hValues": [float(h) for h in truth.h_values],
        "seed": args.seed,
    }
    write_json(files["truth"], truth_doc, args.indent)
    logger.info(f"Wrote a pair of size {truth.n} to {out}")

    summary = dict(truth_doc, files={k: str(v) for k, v in files.items()})
    print(dump_report(summary, args.indent))
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "verify": cmd_analyze,
    "element": cmd_element,
    "random": cmd_random,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = parse_args(argv)
    setup_logging(args.verbose)
    try:
        tol = resolve_tolerances(args.tol)
        return COMMANDS[args.command](args, tol)
    except WordSyntaxError as e:
        logger.error(str(e))
        return EXIT_WORD
    except MatrixFileError as e:
        logger.error(str(e))
        return EXIT_IO
    except HalmosError as e:
        suffix = f" [violated: {e.invariant}]" if e.invariant else ""
        logger.error(f"{e}{suffix}")
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
