"""Byte-stable JSON rendering for experiment reports.

Reports must be diffable: the same (config, version) pair has to produce
the same bytes on every platform and run.  The stock json module formats
floats with repr, which is stable but not what we pin; this renderer emits
every float with 17 significant digits (enough to round-trip a double
exactly), keeps dict insertion order, and indents with two spaces.   The
output is plain JSON, loadable with json.loads.
"""

from __future__ import annotations

import json
import math

import numpy as np


def _render_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"reports must not contain {x!r}")
    return format(x, ".17g")


def render_json(value, indent: int = 0) -> str:
    """Render a report tree (dict/list/str/float/int/bool/None) as JSON."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, (np.floating, np.integer, np.bool_)):
        value = value.item()
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _render_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = []
        for key, item in value.items():
            if not isinstance(key, str):
                raise TypeError(f"report keys must be strings, got {key!r}")
            items.append(f"{inner}{json.dumps(key)}: {render_json(item, indent + 1)}")
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(value, (list, tuple, np.ndarray)):
        seq = list(value)
        if not seq:
            return "[]"
        items = [f"{inner}{render_json(item, indent + 1)}" for item in seq]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    raise TypeError(f"cannot render {type(value).__name__} in a report")
