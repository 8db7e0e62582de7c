"""JSON artifacts of the command line: matrix files and reports.

A matrix file is ``{"rows": R, "cols": C, "entries": [[re, im], ...]}`` with
entries in row-major order. Reports are plain dicts dumped with sorted keys
and floats rounded to ``REPORT_DECIMALS`` so that they are byte-stable.
"""

import json
import math
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np
from loguru import logger

from .errors import MatrixFileError
from .linalg import CMatrix

REPORT_DECIMALS = 12

PathLike = Union[str, Path]


def _reject_constant(name: str):
    raise MatrixFileError(f"non-finite number {name} in matrix file")


def matrix_to_dict(M: np.ndarray) -> Dict[str, Any]:
    M = np.asarray(M, dtype=np.complex128)
    rows, cols = M.shape
    return {
        "rows": rows,
        "cols": cols,
        "entries": [[float(z.real), float(z.imag)] for z in M.ravel()],
    }


def matrix_from_dict(doc: Any, source: str = "matrix file") -> CMatrix:
    if not isinstance(doc, dict):
        raise MatrixFileError(f"{source}: top level must be an object")
    missing = [key for key in ("rows", "cols", "entries") if key not in doc]
    if missing:
        raise MatrixFileError(f"{source}: missing keys {missing}")

    rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
    for name, value in (("rows", rows), ("cols", cols)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise MatrixFileError(f"{source}: {name} must be a non-negative integer")
    if not isinstance(entries, list) or len(entries) != rows * cols:
        raise MatrixFileError(
            f"{source}: expected {rows * cols} entries for a {rows}x{cols} matrix"
        )

    values = []
    for k, pair in enumerate(entries):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(
                isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair
            )
        ):
            raise MatrixFileError(f"{source}: entry {k} is not a [re, im] pair")
        if not all(math.isfinite(v) for v in pair):
            raise MatrixFileError(f"{source}: entry {k} is not finite")
        values.append(complex(pair[0], pair[1]))
    return np.array(values, dtype=np.complex128).reshape(rows, cols)


def read_matrix_file(path: PathLike) -> CMatrix:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise MatrixFileError(f"cannot read {path}: {e.strerror or e}")
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise MatrixFileError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})")
    M = matrix_from_dict(doc, str(path))
    logger.debug(f"Read {M.shape[0]}x{M.shape[1]} matrix from {path}")
    return M


def write_json(path: PathLike, doc: Dict[str, Any], indent: int = 2) -> None:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(
            json.dumps(doc, indent=indent, sort_keys=True) + "\n", encoding="utf-8"
        )
    except OSError as e:
        raise MatrixFileError(f"cannot write {path}: {e.strerror or e}")


def write_matrix_file(path: PathLike, M: np.ndarray, indent: int = 2) -> None:
    write_json(path, matrix_to_dict(M), indent)


def _round(x: float) -> float:
    value = round(float(x), REPORT_DECIMALS)
    # -0.0 is falsy
    return value if value else 0.0


def clean(value: Any) -> Any:
    """Convert numpy values to JSON types; floats rounded, complex as [re, im]."""
    if isinstance(value, dict):
        return {str(k): clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [clean(v) for v in value]
    if isinstance(value, np.ndarray):
        return [clean(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        if not math.isfinite(value):
            raise ValueError(f"non-finite value {value} in report")
        return _round(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [clean(float(value.real)), clean(float(value.imag))]
    return value


def dump_report(report: Dict[str, Any], indent: int = 2) -> str:
    return json.dumps(clean(report), indent=indent, sort_keys=True)
