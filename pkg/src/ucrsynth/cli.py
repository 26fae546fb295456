"""Command-line front end.

Subcommands: synth, verify, export-qasm, bench. Exit codes are fixed for
scripting: 0 success, 1 verification failure, 2 parse failure, 3 dimension
mismatch, 4 export failure.
"""

from __future__ import annotations

import argparse
import cmath
import sys
import time
from dataclasses import asdict
from pathlib import Path

import numpy as np

from .circuit import gate_counts, simplify
from .errors import DimensionError, ExportError, ParseError
from .formats import dump_circuit, export_qasm, load_circuit, load_state
from .sim import apply_circuit
from .state import StateVector, random_state
from .synth import SynthesisResult, prepare

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_EXPORT = 4


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror or e}") from e


def _load_state_file(path: str, normalize: bool) -> StateVector:
    return load_state(_read(path), label=path, normalize=normalize)


def _metadata(result: SynthesisResult) -> dict:
    return {
        "residual_phase": result.residual_phase,
        "counts": dict(result.counts),
        "bounds": asdict(result.bounds),
    }


def _print_report(result: SynthesisResult) -> None:
    counts, limits = result.counts, result.bounds
    print(f"n = {limits.n}")
    print(
        f"CNOT {counts['cnot']}/{limits.upper_cnot} (upper), "
        f"ROT {counts['rot']}/{limits.upper_rot} (upper)"
    )
    print(f"lower bounds: CNOT {limits.lower_cnot}, ROT {limits.lower_rot}")
    print(f"residual phase {result.residual_phase!r}")


def cmd_synth(args: argparse.Namespace) -> int:
    a = _load_state_file(args.input_a, args.normalize)
    b = _load_state_file(args.input_b, args.normalize)
    result = prepare(a, b, mirrored=args.mirror)
    if args.prune_epsilon is not None:
        pruned = simplify(result.circuit, prune_atol=args.prune_epsilon, prune=True)
        result = SynthesisResult(
            circuit=pruned,
            residual_phase=result.residual_phase,
            counts=gate_counts(pruned),
            bounds=result.bounds,
        )
    _print_report(result)
    overlap = complex(np.vdot(b.amplitudes, apply_circuit(a, result.circuit).amplitudes))
    print(f"fidelity {abs(overlap)!r}")
    if args.json:
        Path(args.json).write_text(dump_circuit(result.circuit, _metadata(result)))
    if args.qasm:
        Path(args.qasm).write_text(export_qasm(result.circuit))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    circuit, _ = load_circuit(_read(args.circuit), label=args.circuit)
    a = _load_state_file(args.input_a, args.normalize)
    b = _load_state_file(args.input_b, args.normalize)
    out = apply_circuit(a, circuit)
    overlap = complex(np.vdot(b.amplitudes, out.amplitudes))
    fidelity = abs(overlap)
    threshold = 1.0 - args.tolerance
    passed = fidelity >= threshold
    print(f"fidelity {fidelity!r}")
    print(f"residual phase {cmath.phase(overlap)!r}")
    print(f"{'PASS' if passed else 'FAIL'} (threshold {threshold!r})")
    return EXIT_OK if passed else EXIT_VERIFY


def cmd_export_qasm(args: argparse.Namespace) -> int:
    circuit, _ = load_circuit(_read(args.circuit), label=args.circuit)
    text = export_qasm(circuit)
    if args.qasm:
        Path(args.qasm).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    header = (
        f"{'n':>3} {'cnot':>7} {'rot':>7} {'cnot_up':>8} {'rot_up':>7} "
        f"{'cnot_lo':>8} {'rot_lo':>7} {'qr_cnot':>8} {'time_s':>8}"
    )
    print(header)
    for n in range(1, args.n_max + 1):
        a = random_state(n, args.seed + 2 * n)
        b = random_state(n, args.seed + 2 * n + 1)
        start = time.perf_counter()
        result = prepare(a, b)
        elapsed = time.perf_counter() - start
        counts, limits = result.counts, result.bounds
        print(
            f"{n:>3} {counts['cnot']:>7} {counts['rot']:>7} "
            f"{limits.upper_cnot:>8} {limits.upper_rot:>7} "
            f"{limits.lower_cnot:>8} {limits.lower_rot:>7} "
            f"{int(limits.qr_comparison_cnot):>8} {elapsed:>8.3f}"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ucrsynth",
        description="Synthesize exact CNOT + y/z-rotation circuits mapping one "
        "n-qubit state onto another.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    synth = sub.add_parser("synth", help="compile a circuit taking state A to state B")
    synth.add_argument("input_a", help="path to the source state file")
    synth.add_argument("input_b", help="path to the target state file")
    synth.add_argument("--normalize", action="store_true", help="rescale input states")
    synth.add_argument(
        "--prune-epsilon",
        type=float,
        default=None,
        metavar="EPS",
        help="drop rotations with |angle| <= EPS after synthesis",
    )
    synth.add_argument(
        "--mirror",
        action="store_true",
        help="lower every uniformly controlled rotation with the mirrored "
        "ladder (same rotations, forgoes the boundary-CNOT cancellations)",
    )
    synth.add_argument("--json", metavar="PATH", help="write the circuit file here")
    synth.add_argument("--qasm", metavar="PATH", help="also export OpenQASM 2.0 here")
    synth.set_defaults(func=cmd_synth)

    verify = sub.add_parser("verify", help="check a circuit file against two states")
    verify.add_argument("circuit", help="path to the circuit file")
    verify.add_argument("input_a", help="path to the source state file")
    verify.add_argument("input_b", help="path to the target state file")
    verify.add_argument("--normalize", action="store_true", help="rescale input states")
    verify.add_argument(
        "--tolerance",
        type=float,
        default=1e-9,
        help="allowed infidelity; pass iff fidelity >= 1 - tolerance",
    )
    verify.set_defaults(func=cmd_verify)

    export = sub.add_parser("export-qasm", help="emit OpenQASM 2.0 for a circuit file")
    export.add_argument("circuit", help="path to the circuit file")
    export.add_argument("--qasm", metavar="PATH", help="output path (default stdout)")
    export.set_defaults(func=cmd_export_qasm)

    bench = sub.add_parser("bench", help="synthesize random pairs and tabulate counts")
    bench.add_argument("--n-max", type=int, default=8, help="largest qubit count")
    bench.add_argument("--seed", type=int, default=0, help="random state seed")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bench" and not 1 <= args.n_max <= 20:
        parser.error("--n-max must be in [1, 20]")
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except DimensionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DIMENSION
    except ExportError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_EXPORT


if __name__ == "__main__":
    sys.exit(main())
