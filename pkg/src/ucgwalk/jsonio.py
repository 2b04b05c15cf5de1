"""Deterministic JSON and CSV encoding.

Identical inputs must produce byte-identical output: keys are sorted,
floats are printed with 17 significant digits (always keeping a decimal
point so types survive a round trip), and complex values appear as
[re, im] pairs. No locale-dependent formatting anywhere.
"""

from __future__ import annotations

import json
import os
import tempfile

import numpy as np


def format_float(x: float) -> str:
    """17-significant-digit decimal form of a float."""
    text = format(float(x), ".17g")
    if not any(c in text for c in ".eE"):
        text += ".0"
    return text


def complex_pair(z: complex) -> list[float]:
    """[re, im] form used for all complex values on the wire."""
    z = complex(z)
    return [float(z.real), float(z.imag)]


def canonical_json(obj) -> str:
    """Serialize with sorted keys and fixed float formatting."""
    return _encode(obj)


def _encode(obj) -> str:
    if isinstance(obj, (np.integer,)):
        obj = int(obj)
    if isinstance(obj, (np.floating,)):
        obj = float(obj)
    if obj is None or isinstance(obj, (bool, str, int)):
        # json handles escaping and the true/false/null spellings
        return json.dumps(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, complex):
        return _encode(complex_pair(obj))
    if isinstance(obj, dict):
        items = ",".join(
            f"{json.dumps(str(k))}:{_encode(v)}" for k, v in sorted(obj.items())
        )
        return "{" + items + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ",".join(_encode(v) for v in obj) + "]"
    raise TypeError(f"cannot canonically encode {type(obj).__name__}")


def csv_text(header: list[str], rows: list[list]) -> str:
    """Plain comma-separated text with canonical float formatting."""
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for value in row:
            if isinstance(value, (float, np.floating)):
                cells.append(format_float(float(value)))
            else:
                cells.append(str(value))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def write_text_atomic(path: str, text: str) -> None:
    """Write via a temp file in the same directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise
