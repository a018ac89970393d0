"""State files and JSON emission.

Two interchangeable state formats:

    {"format": "density", "matrix": [[[re, im], ...4], ...4]}
    {"format": "bloch", "u": [3], "v": [3], "C": [[3], [3], [3]]}

Numbers are IEEE-754 doubles; emission uses 17 significant digits so that
every double round-trips exactly and output is byte-identical across runs.
"""

import json
import math

import numpy as np

from .errors import StateFormatError
from .states import BlochMatrix, validate_density


def format_float(x):
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("cannot serialize non-finite numbers")
    if x == int(x) and abs(x) < 1e16:
        return f"{x:.1f}"
    return f"{x:.17g}"


def dumps(obj):
    """Serialize to JSON with deterministic float formatting."""
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, np.ndarray):
        return dumps(obj.tolist())
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(x) for x in obj) + "]"
    if isinstance(obj, dict):
        parts = []
        for k, val in obj.items():
            if not isinstance(k, str):
                raise TypeError("JSON object keys must be strings")
            parts.append(json.dumps(k) + ": " + dumps(val))
        return "{" + ", ".join(parts) + "}"
    raise TypeError(f"cannot serialize object of type {type(obj).__name__}")


def density_document(rho):
    rho = np.asarray(rho, dtype=complex)
    matrix = [[[rho[i, j].real, rho[i, j].imag] for j in range(4)] for i in range(4)]
    return {"format": "density", "matrix": matrix}


def bloch_document(bloch):
    return {
        "format": "bloch",
        "u": [float(x) for x in bloch.u],
        "v": [float(x) for x in bloch.v],
        "C": [[float(bloch.C[i, j]) for j in range(3)] for i in range(3)],
    }


def _real(value, path):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise StateFormatError(f"{path}: expected a number, got {value!r}")
    if not math.isfinite(float(value)):
        raise StateFormatError(f"{path}: non-finite number")
    return float(value)


def _vector3(value, path):
    if not isinstance(value, list) or len(value) != 3:
        raise StateFormatError(f"{path}: expected a list of 3 numbers")
    return np.array([_real(value[i], f"{path}[{i}]") for i in range(3)])


def _matrix3(value, path):
    if not isinstance(value, list) or len(value) != 3:
        raise StateFormatError(f"{path}: expected a 3x3 array")
    return np.array([_vector3(value[i], f"{path}[{i}]") for i in range(3)])


def _complex_entry(value, path):
    if not isinstance(value, list) or len(value) != 2:
        raise StateFormatError(f"{path}: expected an [re, im] pair")
    return complex(_real(value[0], f"{path}[0]"), _real(value[1], f"{path}[1]"))


def parse_state_document(doc):
    """Parse a state document into ('density', rho) or ('bloch', BlochMatrix).

    Raises StateFormatError with the offending path on any schema problem.
    """
    if not isinstance(doc, dict):
        raise StateFormatError("$: expected a JSON object")
    fmt = doc.get("format")
    if fmt == "density":
        raw = doc.get("matrix")
        if not isinstance(raw, list) or len(raw) != 4:
            raise StateFormatError("matrix: expected a 4x4 array")
        rho = np.empty((4, 4), dtype=complex)
        for i in range(4):
            row = raw[i]
            if not isinstance(row, list) or len(row) != 4:
                raise StateFormatError(f"matrix[{i}]: expected a row of 4 entries")
            for j in range(4):
                rho[i, j] = _complex_entry(row[j], f"matrix[{i}][{j}]")
        try:
            validate_density(rho)
        except Exception as exc:
            raise StateFormatError(f"matrix: {exc}") from exc
        return "density", rho
    if fmt == "bloch":
        bloch = BlochMatrix(
            u=_vector3(doc.get("u"), "u"),
            v=_vector3(doc.get("v"), "v"),
            C=_matrix3(doc.get("C"), "C"),
        )
        return "bloch", bloch
    raise StateFormatError("format: expected 'density' or 'bloch'")


def loads_state(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFormatError(f"invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    return parse_state_document(doc)


def load_state_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise StateFormatError(f"cannot read {path}: {exc}") from exc
    try:
        return loads_state(text)
    except StateFormatError as exc:
        raise StateFormatError(f"{path}: {exc}") from exc
