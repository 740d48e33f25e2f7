"""Matrix JSON interchange.

The wire format is {"rows": n, "cols": n, "re": [[...]], "im": [[...]]}
with row-major real and imaginary parts.  Readers used in operator roles
reject non-square input.
"""

from __future__ import annotations

import json

import numpy as np

from .linalg import NotSquare


def matrix_to_json(M) -> dict:
    """Encode a complex matrix as a JSON-ready dict."""
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2:
        raise ValueError(f"expected a 2-d array, got shape {M.shape}")
    return {
        "rows": int(M.shape[0]),
        "cols": int(M.shape[1]),
        "re": M.real.tolist(),
        "im": M.imag.tolist(),
    }


def matrix_from_json(obj: dict, require_square: bool = True) -> np.ndarray:
    """Decode the matrix JSON object; validates shape and finiteness."""
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix JSON: {exc}") from exc
    if re.shape != (rows, cols) or im.shape != (rows, cols):
        raise ValueError(
            f"matrix JSON shape mismatch: declared {rows}x{cols}, "
            f"re {re.shape}, im {im.shape}"
        )
    if require_square and rows != cols:
        raise NotSquare(f"operator input must be square, got {rows}x{cols}")
    M = re + 1j * im
    if not np.all(np.isfinite(M.view(float))):
        raise ValueError("matrix JSON entries must be finite")
    return M


def load_matrix(path, require_square: bool = True) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        return matrix_from_json(json.load(fh), require_square=require_square)


def save_matrix(path, M) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_json(M), fh)
        fh.write("\n")
