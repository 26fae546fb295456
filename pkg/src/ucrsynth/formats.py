"""File formats: JSON state and circuit documents, OpenQASM 2.0 export.

Floats are serialized with Python's shortest round-trip repr, so a parsed
document reproduces the original doubles bit for bit. Syntax errors carry
line:column anchors; structural errors carry the offending field path.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .circuit import AXIS_Y, AXIS_Z, Axis, Circuit, Cnot, Gate, Rot
from .errors import DimensionError, ExportError, ParseError
from .state import StateVector, make_state

__all__ = [
    "dump_state",
    "load_state",
    "dump_circuit",
    "load_circuit",
    "export_qasm",
]


def _parse_json(text: str, label: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{label}:{e.lineno}:{e.colno}: {e.msg}") from e


def _get(data: dict, field: str, kind: type, label: str, path: str = ""):
    where = f"{label}: {path or field}"
    if not isinstance(data, dict):
        raise ParseError(f"{where}: expected an object")
    if field not in data:
        raise ParseError(f"{where}: missing required field {field!r}")
    value = data[field]
    if kind is float and isinstance(value, int) and not isinstance(value, bool):
        value = float(value)
    if not isinstance(value, kind) or isinstance(value, bool) and kind is int:
        raise ParseError(f"{where}: expected {kind.__name__}, got {type(value).__name__}")
    return value


def dump_state(x: StateVector) -> str:
    pairs = [[float(a.real), float(a.imag)] for a in x.amplitudes]
    return json.dumps({"n": x.n, "amplitudes": pairs}, indent=2) + "\n"


def load_state(text: str, *, label: str = "<state>", normalize: bool = False) -> StateVector:
    """Parse a state document: n, amplitudes as [re, im] pairs, optional
    normalize flag (the keyword argument forces normalization either way)."""
    data = _parse_json(text, label)
    n = _get(data, "n", int, label)
    raw = _get(data, "amplitudes", list, label)
    amps = np.empty(len(raw), dtype=np.complex128)
    for i, entry in enumerate(raw):
        ok = (
            isinstance(entry, list)
            and len(entry) == 2
            and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry)
        )
        if not ok:
            raise ParseError(
                f"{label}: amplitudes[{i}]: expected a [re, im] number pair, got {entry!r}"
            )
        amps[i] = complex(entry[0], entry[1])
    if "normalize" in data:
        flag = data["normalize"]
        if not isinstance(flag, bool):
            raise ParseError(f"{label}: normalize: expected a boolean, got {flag!r}")
        normalize = normalize or flag
    try:
        return make_state(n, amps, normalize=normalize)
    except (DimensionError, ValueError) as e:
        # A self-inconsistent or unnormalized document is a parse failure.
        raise ParseError(f"{label}: {e}") from e


def _axis_json(axis: Axis):
    if axis == AXIS_Y:
        return "y"
    if axis == AXIS_Z:
        return "z"
    return [0, axis.ay, axis.az]


def _axis_from_json(value, label: str, path: str) -> Axis:
    if value == "y":
        return AXIS_Y
    if value == "z":
        return AXIS_Z
    ok = (
        isinstance(value, list)
        and len(value) == 3
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
        and value[0] == 0
    )
    if not ok:
        raise ParseError(
            f'{label}: {path}: expected "y", "z", or [0, ay, az], got {value!r}'
        )
    try:
        return Axis(float(value[1]), float(value[2]))
    except ValueError as e:
        raise ParseError(f"{label}: {path}: {e}") from e


def dump_circuit(c: Circuit, metadata: dict | None = None) -> str:
    records = []
    for g in c.gates:
        if isinstance(g, Cnot):
            records.append({"type": "cnot", "control": g.control, "target": g.target})
        else:
            records.append(
                {
                    "type": "rot",
                    "axis": _axis_json(g.axis),
                    "target": g.target,
                    "angle": g.angle,
                }
            )
    doc: dict[str, Any] = {"n": c.n, "gates": records}
    if metadata is not None:
        doc["metadata"] = metadata
    return json.dumps(doc, indent=2) + "\n"


def load_circuit(text: str, *, label: str = "<circuit>") -> tuple[Circuit, dict]:
    """Parse a circuit document back into (Circuit, metadata dict)."""
    data = _parse_json(text, label)
    n = _get(data, "n", int, label)
    records = _get(data, "gates", list, label)
    gates: list[Gate] = []
    for i, rec in enumerate(records):
        path = f"gates[{i}]"
        kind = _get(rec, "type", str, label, f"{path}.type")
        if kind == "cnot":
            control = _get(rec, "control", int, label, f"{path}.control")
            target = _get(rec, "target", int, label, f"{path}.target")
            try:
                gates.append(Cnot(control, target))
            except ValueError as e:
                raise ParseError(f"{label}: {path}: {e}") from e
        elif kind == "rot":
            axis = _axis_from_json(rec.get("axis"), label, f"{path}.axis")
            target = _get(rec, "target", int, label, f"{path}.target")
            angle = _get(rec, "angle", float, label, f"{path}.angle")
            gates.append(Rot(axis, target, angle))
        else:
            raise ParseError(f"{label}: {path}.type: unknown gate type {kind!r}")
    metadata = data.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ParseError(f"{label}: metadata: expected an object")
    try:
        return Circuit(n, tuple(gates)), metadata
    except ValueError as e:
        raise ParseError(f"{label}: {e}") from e


def export_qasm(c: Circuit) -> str:
    """OpenQASM 2.0 text using the {qreg, ry, rz, cx} subset.

    Register qubit j (1-based, most significant first) maps to wire
    q[n - j]. Rotations are emitted with negated angles because qasm's
    ry/rz use the exp(-i angle sigma / 2) sign convention while the
    in-memory gates use exp(+i angle sigma / 2). Only exact y and z axes
    are exportable; intermediate y-z axes have no gate in the subset.
    """
    lines = [
        f"// wire q[{c.n}-j] carries register qubit j; q[0] is the least significant",
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        f"qreg q[{c.n}];",
    ]
    for g in c.gates:
        if isinstance(g, Cnot):
            lines.append(f"cx q[{c.n - g.control}],q[{c.n - g.target}];")
            continue
        if g.axis == AXIS_Y:
            name = "ry"
        elif g.axis == AXIS_Z:
            name = "rz"
        else:
            raise ExportError(
                f"axis ({g.axis.ay}, {g.axis.az}) is not exactly y or z; "
                f"general y-z rotations have no OpenQASM 2.0 gate in this subset"
            )
        angle = -g.angle or 0.0
        lines.append(f"{name}({angle!r}) q[{c.n - g.target}];")
    return "\n".join(lines) + "\n"
