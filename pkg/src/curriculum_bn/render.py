"""Deterministic JSON rendering for CLI and service output.

Probabilities (floats) are rendered with a fixed number of decimal places
(default 6) so identical requests produce byte-identical documents. Key order
is insertion order, which the engine keeps deterministic. Infinite impact
levels are rendered as the strings "Infinity"/"-Infinity" to stay inside
standard JSON.
"""

import json
import math


def render_json(value, precision=6):
    out = []
    _emit(value, precision, out)
    return "".join(out)


def _emit(value, precision, out):
    if isinstance(value, dict):
        out.append("{")
        for i, (k, v) in enumerate(value.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(k)))
            out.append(":")
            _emit(v, precision, out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, v in enumerate(value):
            if i:
                out.append(",")
            _emit(v, precision, out)
        out.append("]")
    elif isinstance(value, bool) or value is None:
        out.append(json.dumps(value))
    elif isinstance(value, float):
        if math.isinf(value):
            out.append(json.dumps("Infinity" if value > 0 else "-Infinity"))
        else:
            out.append(f"{value:.{precision}f}")
    elif isinstance(value, int):
        out.append(str(value))
    else:
        out.append(json.dumps(str(value)))
