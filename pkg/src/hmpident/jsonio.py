"""JSON writing with fixed float formatting.

Floats are rendered with 17 significant digits so every IEEE double round
trips exactly through the files the tools exchange.  Reading uses the stdlib
parser unchanged.
"""
from __future__ import annotations

import numpy as np


def _render(obj, pieces: list, indent: int):
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            pieces.append("{}")
            return
        pieces.append("{\n")
        for i, (key, value) in enumerate(obj.items()):
            pieces.append(f'{pad}  "{key}": ')
            _render(value, pieces, indent + 1)
            pieces.append(",\n" if i < len(obj) - 1 else "\n")
        pieces.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            pieces.append("[]")
            return
        pieces.append("[")
        for i, value in enumerate(obj):
            _render(value, pieces, indent)
            if i < len(obj) - 1:
                pieces.append(", ")
        pieces.append("]")
    elif isinstance(obj, bool) or isinstance(obj, np.bool_):
        pieces.append("true" if obj else "false")
    elif obj is None:
        pieces.append("null")
    elif isinstance(obj, (int, np.integer)):
        pieces.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        pieces.append(format(float(obj), ".17g"))
    elif isinstance(obj, str):
        import json
        pieces.append(json.dumps(obj))
    else:
        raise TypeError(f"cannot serialize {type(obj)!r}")


def dumps(obj) -> str:
    pieces: list = []
    _render(obj, pieces, 0)
    return "".join(pieces)


def write_json(obj, path):
    with open(path, "w") as fh:
        fh.write(dumps(obj))
        fh.write("\n")
