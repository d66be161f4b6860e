"""Matrix file format and complex literals used by the CLI and tests.

A matrix file is a JSON object ``{"n": N, "entries": [[re, im], ...]}`` with
the entries row-major and of length N^2. Complex scalars on the command line
use the ``a+bi`` / ``a-bi`` form without spaces.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import MatrixFormatError
from .matcore import ensure_matrix


def matrix_to_obj(a) -> dict:
    m = ensure_matrix(a)
    n = m.shape[0]
    entries = [[float(v.real), float(v.imag)] for v in m.ravel()]
    return {"n": n, "entries": entries}


def obj_to_matrix(obj) -> np.ndarray:
    if not isinstance(obj, dict) or "n" not in obj or "entries" not in obj:
        raise MatrixFormatError('matrix object must have keys "n" and "entries"')
    n = obj["n"]
    entries = obj["entries"]
    if not isinstance(n, int) or n < 1:
        raise MatrixFormatError(f"n must be a positive integer, got {n!r}")
    if not isinstance(entries, list) or len(entries) != n * n:
        raise MatrixFormatError(f"entries must be a list of length n^2 = {n * n}")
    try:
        flat = np.array([complex(re, im) for re, im in entries], dtype=complex)
    except (TypeError, ValueError) as exc:
        raise MatrixFormatError(f"entries must be [re, im] pairs: {exc}") from exc
    m = flat.reshape(n, n)
    try:
        return ensure_matrix(m)
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from exc


def save_matrix(path, a) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_obj(a), fh)
        fh.write("\n")


def load_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(f"{path}: not valid JSON ({exc})") from exc
    return obj_to_matrix(obj)


def parse_complex(text: str) -> complex:
    """Parse ``a+bi`` / ``a-bi`` (also plain reals and pure imaginaries)."""
    s = text.strip().replace(" ", "")
    if not s:
        raise MatrixFormatError("empty complex literal")
    try:
        return complex(s.replace("i", "j").replace("I", "j"))
    except ValueError as exc:
        raise MatrixFormatError(f"cannot parse complex literal {text!r}") from exc


def format_complex(z: complex) -> str:
    re, im = float(z.real), float(z.imag)
    return f"{re!r}{'+' if im >= 0 else '-'}{abs(im)!r}i"
