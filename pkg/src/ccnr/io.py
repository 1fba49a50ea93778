"""State files and number formatting for the command line.

A state file is JSON of the form::

    {"dimA": 2, "dimB": 2, "matrix": [[[re, im], ...], ...]}

with rows outermost. Writers emit 17 significant digits so that doubles
round-trip exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .states import DensityMatrix, validate_density


class StateFormatError(ValueError):
    """The file is unreadable or does not follow the state schema."""


def fmt17(x: float) -> str:
    return format(float(x), ".17g")


def fmt15(x: float) -> str:
    return format(float(x), ".15g")


def parse_state(text: str) -> tuple[np.ndarray, int, int]:
    """Parse state JSON into ``(matrix, dimA, dimB)`` without density checks."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise StateFormatError("state file must hold a JSON object")
    for key in ("dimA", "dimB", "matrix"):
        if key not in doc:
            raise StateFormatError(f"missing key {key!r}")
    dim_a, dim_b = doc["dimA"], doc["dimB"]
    if not all(isinstance(d, int) and not isinstance(d, bool) for d in (dim_a, dim_b)):
        raise StateFormatError("dimA and dimB must be integers")
    rows = doc["matrix"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise StateFormatError("matrix must be a non-empty list of rows")
    width = len(rows[0])
    out = np.empty((len(rows), width), dtype=np.complex128)
    for i, row in enumerate(rows):
        if len(row) != width:
            raise StateFormatError(f"row {i} has {len(row)} entries, expected {width}")
        for j, entry in enumerate(row):
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry)
            ):
                raise StateFormatError(f"entry [{i}][{j}] must be a [re, im] pair of numbers")
            out[i, j] = complex(entry[0], entry[1])
    if not np.all(np.isfinite(out)):
        raise StateFormatError("matrix entries must be finite")
    return out, dim_a, dim_b


def read_state(path) -> DensityMatrix:
    """Load and validate a state file.

    Raises ``StateFormatError`` (or ``OSError``) for unreadable input and
    ``ValidationError`` when the matrix is not a density matrix.
    """
    text = Path(path).read_text()
    mat, dim_a, dim_b = parse_state(text)
    return validate_density(mat, dim_a, dim_b)


def dumps_state(rho: DensityMatrix) -> str:
    rows = ", ".join(
        "[" + ", ".join(f"[{fmt17(z.real)}, {fmt17(z.imag)}]" for z in row) + "]"
        for row in rho.mat
    )
    return f'{{"dimA": {rho.dim_a}, "dimB": {rho.dim_b}, "matrix": [{rows}]}}\n'


def write_state(rho: DensityMatrix, path) -> None:
    Path(path).write_text(dumps_state(rho))
